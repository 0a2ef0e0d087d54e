#pragma once

// Exact arithmetic in Z[Q] and in its fraction field Q(Q).

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>
#include <concepts>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "partalg/errors.hpp"

namespace partalg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// n/d for any nonzero d; the two-argument constructor rejects negative d.
inline Rational make_rational(BigInt n, BigInt d) {
    if (d == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    return Rational(n, d);
}

inline std::string to_string(const Rational& r) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Dense polynomial in the indeterminate Q with arbitrary-precision integer
/// coefficients. coeffs()[k] is the coefficient of Q^k; the leading stored
/// coefficient is never zero, and the zero polynomial has no coefficients.
class IntPoly {
  public:
    IntPoly() = default;

    template <std::integral T>
    IntPoly(T c) : IntPoly(BigInt(c)) {}

    IntPoly(BigInt c) {
        if (c != 0) coeffs_.push_back(std::move(c));
    }

    explicit IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static IntPoly q() { return monomial(1, 1); }

    static IntPoly monomial(BigInt c, std::size_t degree) {
        std::vector<BigInt> cs(degree + 1);
        cs[degree] = std::move(c);
        return IntPoly(std::move(cs));
    }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    std::span<const BigInt> coeffs() const { return coeffs_; }

    BigInt coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }

    const BigInt& lead() const { return coeffs_.back(); }

    std::size_t term_count() const {
        return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(),
                                                      [](const BigInt& c) { return c != 0; }));
    }

    /// Nonnegative gcd of the coefficients; zero for the zero polynomial.
    BigInt content() const {
        BigInt g = 0;
        for (const auto& c : coeffs_) {
            g = boost::multiprecision::gcd(g, c);
            if (g == 1) break;
        }
        return boost::multiprecision::abs(g);
    }

    IntPoly primitive_part() const {
        if (is_zero()) return {};
        BigInt g = content();
        if (lead() < 0) g = -g;
        return divide_coeffs(g);
    }

    /// Divides every coefficient by d; d must divide each of them exactly.
    IntPoly divide_coeffs(const BigInt& d) const {
        IntPoly r = *this;
        for (auto& c : r.coeffs_) c /= d;
        return r;
    }

    Rational eval(const Rational& x) const {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
        return acc;
    }

    IntPoly pow(unsigned e) const {
        IntPoly result(1);
        IntPoly base = *this;
        while (e != 0) {
            if (e & 1U) result = result * base;
            e >>= 1U;
            if (e != 0) base = base * base;
        }
        return result;
    }

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<BigInt> cs(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t k = 0; k < a.coeffs_.size(); ++k) cs[k] += a.coeffs_[k];
        for (std::size_t k = 0; k < b.coeffs_.size(); ++k) cs[k] += b.coeffs_[k];
        return IntPoly(std::move(cs));
    }

    friend IntPoly operator-(const IntPoly& a) {
        IntPoly r = a;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> cs(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return IntPoly(std::move(cs));
    }

    IntPoly& operator+=(const IntPoly& o) { return *this = *this + o; }
    IntPoly& operator-=(const IntPoly& o) { return *this = *this - o; }
    IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }

    /// Human-readable form, e.g. "Q^2 - 3*Q + 4".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        bool first = true;
        for (int k = degree(); k >= 0; --k) {
            const BigInt& c = coeffs_[static_cast<std::size_t>(k)];
            if (c == 0) continue;
            BigInt mag = boost::multiprecision::abs(c);
            if (first) {
                if (c < 0) out += "-";
            } else {
                out += c < 0 ? " - " : " + ";
            }
            first = false;
            if (k == 0) {
                out += mag.str();
                continue;
            }
            if (mag != 1) out += mag.str() + "*";
            out += "Q";
            if (k > 1) out += "^" + std::to_string(k);
        }
        return out;
    }

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<BigInt> coeffs_;
};

/// lead(b)^(deg a - deg b + 1) * a  mod  b, computed without fractions.
inline IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "pseudo-remainder by zero polynomial");
    if (a.degree() < b.degree()) return a;
    IntPoly r = a;
    int e = a.degree() - b.degree() + 1;
    const BigInt lb = b.lead();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        IntPoly s = IntPoly::monomial(r.lead(), static_cast<std::size_t>(r.degree() - b.degree()));
        r = IntPoly(lb) * r - s * b;
        --e;
    }
    if (e > 0) r = IntPoly(boost::multiprecision::pow(lb, static_cast<unsigned>(e))) * r;
    return r;
}

/// a / b in Z[Q]; the division must be exact.
inline IntPoly exact_quotient(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw std::logic_error("exact_quotient: division is not exact");
    std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    IntPoly r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        if (r.lead() % b.lead() != 0) throw std::logic_error("exact_quotient: division is not exact");
        BigInt c = r.lead() / b.lead();
        auto shift = static_cast<std::size_t>(r.degree() - b.degree());
        r = r - IntPoly::monomial(c, shift) * b;
        q[shift] = std::move(c);
    }
    if (!r.is_zero()) throw std::logic_error("exact_quotient: division is not exact");
    return IntPoly(std::move(q));
}

/// Polynomial gcd by the subresultant remainder sequence. The result has a
/// positive leading coefficient and integer content gcd(content(a), content(b)).
inline IntPoly gcd(IntPoly a, IntPoly b) {
    if (a.degree() < b.degree()) std::swap(a, b);
    if (b.is_zero()) return a.is_zero() ? a : (a.lead() < 0 ? -a : a);
    const BigInt d = boost::multiprecision::gcd(a.content(), b.content());
    a = a.primitive_part();
    b = b.primitive_part();
    BigInt g = 1;
    BigInt h = 1;
    while (true) {
        const int delta = a.degree() - b.degree();
        IntPoly r = pseudo_remainder(a, b);
        if (r.is_zero()) break;
        if (r.degree() == 0) {
            b = IntPoly(1);
            break;
        }
        a = b;
        BigInt divisor = g * boost::multiprecision::pow(h, static_cast<unsigned>(delta));
        b = r.divide_coeffs(divisor);
        g = a.lead();
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            h = boost::multiprecision::pow(g, static_cast<unsigned>(delta)) /
                boost::multiprecision::pow(h, static_cast<unsigned>(delta - 1));
        }
    }
    return IntPoly(d) * b.primitive_part();
}

/// Element of the rational function field Q(Q).
///
/// Canonical form: num/den with gcd(num, den) a unit in Q[Q], the integer
/// contents of num and den coprime, and a positive leading coefficient on den.
/// Equal field elements therefore have identical representations.
class RatFunc {
  public:
    RatFunc() : den_(1) {}

    template <std::integral T>
    RatFunc(T c) : num_(c), den_(1) {}

    RatFunc(BigInt c) : num_(std::move(c)), den_(1) {}

    RatFunc(IntPoly p) : num_(std::move(p)), den_(1) {}

    RatFunc(const Rational& r)
        : num_(boost::multiprecision::numerator(r)), den_(boost::multiprecision::denominator(r)) {}

    RatFunc(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static RatFunc q() { return RatFunc(IntPoly::q()); }

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == IntPoly(1); }

    friend bool operator==(const RatFunc&, const RatFunc&) = default;

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }

    friend RatFunc operator-(const RatFunc& a) {
        RatFunc r = a;
        r.num_ = -r.num_;
        return r;
    }

    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ * b.num_);
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }

    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc inverse() const {
        if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero rational function");
        return RatFunc(den_, num_);
    }

    RatFunc pow(int e) const {
        if (e < 0) return inverse().pow(-e);
        RatFunc r(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
        return r;
    }

    /// Value at Q = q0. Throws PoleAtPoint if the denominator vanishes there.
    Rational eval_at(const Rational& q0) const {
        Rational d = den_.eval(q0);
        if (d == 0) throw Error(ErrorCode::PoleAtPoint, "denominator vanishes at Q = " + partalg::to_string(q0));
        return num_.eval(q0) / d;
    }

    /// "Q / (Q - 1)"; the denominator is always parenthesized.
    std::string to_string() const {
        if (is_polynomial()) return num_.to_string();
        std::string n = num_.term_count() > 1 ? "(" + num_.to_string() + ")" : num_.to_string();
        return n + " / (" + den_.to_string() + ")";
    }

    static RatFunc parse(std::string_view text);

  private:
    void normalize() {
        if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero denominator");
        if (num_.is_zero()) {
            den_ = IntPoly(1);
            return;
        }
        if (den_.degree() > 0 && num_.degree() >= 0) {
            IntPoly g = gcd(num_, den_).primitive_part();
            if (g.degree() > 0) {
                num_ = exact_quotient(num_, g);
                den_ = exact_quotient(den_, g);
            }
        }
        BigInt k = boost::multiprecision::gcd(num_.content(), den_.content());
        if (den_.lead() < 0) k = -k;
        if (k != 1) {
            num_ = num_.divide_coeffs(k);
            den_ = den_.divide_coeffs(k);
        }
    }

    IntPoly num_;
    IntPoly den_;
};

inline RatFunc inverse(const RatFunc& a) { return a.inverse(); }
inline Rational eval_at(const RatFunc& a, const Rational& q0) { return a.eval_at(q0); }
inline std::string to_string(const IntPoly& p) { return p.to_string(); }
inline std::string to_string(const RatFunc& a) { return a.to_string(); }

namespace detail {

// Recursive-descent parser over: integers, Q, + - * / ^, parentheses, unary minus.
class RatFuncParser {
  public:
    explicit RatFuncParser(std::string_view text) : text_(text) {}

    RatFunc parse_all() {
        RatFunc r = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return r;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    RatFunc expr() {
        RatFunc acc = term();
        while (true) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    RatFunc term() {
        RatFunc acc = unary();
        while (true) {
            if (accept('*')) {
                acc *= unary();
            } else if (accept('/')) {
                std::size_t at = pos_;
                RatFunc d = unary();
                if (d.is_zero()) throw ParseError(at, "division by zero");
                acc /= d;
            } else {
                return acc;
            }
        }
    }

    RatFunc unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    RatFunc power() {
        RatFunc base = primary();
        if (accept('^')) {
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("expected nonnegative integer exponent");
            std::string_view digits = text_.substr(start, pos_ - start);
            if (digits.size() > 6) throw ParseError(start, "exponent too large");
            return base.pow(std::stoi(std::string(digits)));
        }
        return base;
    }

    RatFunc primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            RatFunc inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (c == 'Q') {
            ++pos_;
            return RatFunc::q();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return RatFunc(BigInt(std::string(text_.substr(start, pos_ - start))));
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline RatFunc RatFunc::parse(std::string_view text) { return detail::RatFuncParser(text).parse_all(); }

inline RatFunc parse_ratfunc(std::string_view text) { return RatFunc::parse(text); }

/// Parses an exact rational literal such as "101", "-7/3".
inline Rational parse_rational(std::string_view text) {
    RatFunc r = RatFunc::parse(text);
    if (!r.num().is_constant() || !r.den().is_constant())
        throw ParseError(0, "expected a rational constant, got '" + std::string(text) + "'");
    return make_rational(r.num().coeff(0), r.den().coeff(0));
}

}  // namespace partalg
