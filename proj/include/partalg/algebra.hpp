#pragma once

// Z[Q]-linear combinations of seat-plans and machine checks of the defining
// relations.

#include <cctype>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "partalg/errors.hpp"
#include "partalg/exactratio.hpp"
#include "partalg/relations.hpp"
#include "partalg/report.hpp"
#include "partalg/seatplan.hpp"
#include "partalg/word.hpp"

namespace partalg {

class AlgElement {
  public:
    using Terms = std::map<SeatPlan, IntPoly>;

    explicit AlgElement(int n) : n_(n) {}

    AlgElement(const SeatPlan& w, IntPoly coeff = IntPoly(1)) : n_(w.n()) {
        if (!coeff.is_zero()) terms_.emplace(w, std::move(coeff));
    }

    static AlgElement zero(int n) { return AlgElement(n); }
    static AlgElement one(int n) { return AlgElement(SeatPlan::identity(n)); }

    int n() const { return n_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    IntPoly coeff(const SeatPlan& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? IntPoly() : it->second;
    }

    void add_term(const SeatPlan& w, const IntPoly& c) {
        check_size(w.n());
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend bool operator==(const AlgElement&, const AlgElement&) = default;

    AlgElement& operator+=(const AlgElement& o) {
        check_size(o.n_);
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }

    AlgElement& operator-=(const AlgElement& o) {
        check_size(o.n_);
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }

    friend AlgElement operator+(AlgElement a, const AlgElement& b) { return a += b; }
    friend AlgElement operator-(AlgElement a, const AlgElement& b) { return a -= b; }

    friend AlgElement operator*(const IntPoly& s, const AlgElement& a) {
        AlgElement out(a.n_);
        for (const auto& [w, c] : a.terms_) out.add_term(w, s * c);
        return out;
    }

    friend AlgElement operator*(const AlgElement& a, const AlgElement& b) {
        a.check_size(b.n_);
        AlgElement out(a.n_);
        for (const auto& [wa, ca] : a.terms_) {
            for (const auto& [wb, cb] : b.terms_) {
                auto r = compose(wa, wb);
                out.add_term(r.diagram, ca * cb * IntPoly::monomial(1, static_cast<std::size_t>(r.removed)));
            }
        }
        return out;
    }

    /// "Q^2 * {{...}} + (Q - 1) * {{...}}"; zero prints as "0".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [w, c] : terms_) {
            std::string coeff = c.to_string();
            bool negative = false;
            if (c.term_count() == 1 && c.lead() < 0) {
                negative = true;
                coeff = (-c).to_string();
            }
            if (out.empty()) out += negative ? "-" : "";
            else out += negative ? " - " : " + ";
            if (coeff == "1") {
                out += w.to_string();
                continue;
            }
            if (c.term_count() > 1) coeff = "(" + coeff + ")";
            out += coeff + " * " + w.to_string();
        }
        return out;
    }

    static AlgElement parse(std::string_view text, std::optional<int> n = std::nullopt);

  private:
    void check_size(int other) const {
        if (other != n_)
            throw Error(ErrorCode::SizeMismatch,
                        "strand counts " + std::to_string(n_) + " and " + std::to_string(other));
    }

    int n_;
    Terms terms_;
};

inline AlgElement star(const AlgElement& a) {
    AlgElement out(a.n());
    for (const auto& [w, c] : a.terms()) out.add_term(involution_star(w), c);
    return out;
}

inline AlgElement AlgElement::parse(std::string_view text, std::optional<int> n) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    std::string_view body = trim(text);
    if (body == "0") {
        if (!n) throw ParseError(0, "zero element needs an explicit strand count");
        return AlgElement(*n);
    }
    std::vector<std::pair<IntPoly, SeatPlan>> parsed;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t open = text.find('{', pos);
        if (open == std::string_view::npos) {
            if (!trim(text.substr(pos)).empty()) throw ParseError(pos, "trailing text after last diagram");
            break;
        }
        // Outer braces close at the first "}}" after the opening.
        std::size_t close = text.find("}}", open);
        if (close == std::string_view::npos) throw ParseError(open, "unterminated seat-plan");
        if (text.substr(open, 2) == "{}") close = open;  // empty diagram never valid, let the parser report it
        std::string_view prefix = trim(text.substr(pos, open - pos));
        int sign = 1;
        if (!parsed.empty() || (!prefix.empty() && (prefix[0] == '+' || prefix[0] == '-'))) {
            if (prefix.empty() || (prefix[0] != '+' && prefix[0] != '-'))
                throw ParseError(pos, "expected '+' or '-' between terms");
            sign = prefix[0] == '-' ? -1 : 1;
            prefix = trim(prefix.substr(1));
        }
        IntPoly coeff(sign);
        if (!prefix.empty()) {
            if (prefix.back() != '*') throw ParseError(open, "expected '*' before seat-plan");
            RatFunc c = RatFunc::parse(trim(prefix.substr(0, prefix.size() - 1)));
            if (!c.is_polynomial()) throw ParseError(pos, "coefficient is not a polynomial in Q");
            coeff = c.num() * IntPoly(sign);
        }
        std::size_t end = close + 2;
        SeatPlan w = SeatPlan::parse(text.substr(open, end - open), n);
        if (!n) n = w.n();
        parsed.emplace_back(std::move(coeff), std::move(w));
        pos = end;
    }
    if (parsed.empty()) throw ParseError(0, "expected at least one term");
    AlgElement out(*n);
    for (const auto& [c, w] : parsed) out.add_term(w, c);
    return out;
}

/// Q^power · [diagram]
inline AlgElement word_to_element(const Word& word, int n) {
    auto v = eval_word(word, n);
    return AlgElement(v.diagram, IntPoly::monomial(1, static_cast<std::size_t>(v.power)));
}

/// Breadth-first closure of the identity under right multiplication by the
/// given letters. Each diagram maps to a shortest word reaching it; with
/// power_zero_only, only products free of closed components are followed.
inline std::map<SeatPlan, Word> reachable_diagrams(int n, const std::vector<Letter>& alphabet,
                                                   bool power_zero_only = false) {
    std::vector<SeatPlan> gens;
    for (const auto& l : alphabet) gens.push_back(generator(n, l));
    std::map<SeatPlan, Word> seen;
    std::deque<SeatPlan> queue;
    seen.emplace(SeatPlan::identity(n), Word{});
    queue.push_back(SeatPlan::identity(n));
    while (!queue.empty()) {
        SeatPlan w = std::move(queue.front());
        queue.pop_front();
        const Word base = seen.at(w);
        for (std::size_t k = 0; k < gens.size(); ++k) {
            auto r = compose(w, gens[k]);
            if (power_zero_only && r.removed != 0) continue;
            if (seen.count(r.diagram)) continue;
            Word next = base;
            next.push_back(alphabet[k]);
            seen.emplace(r.diagram, std::move(next));
            queue.push_back(std::move(r.diagram));
        }
    }
    return seen;
}

inline void check_suite_range(int n) {
    if (n < 2 || n > 5)
        throw Error(ErrorCode::BoundExceeded, "relation suites cover 2 <= n <= 5, got n = " + std::to_string(n));
}

/// Checks each instance by multiplying out both sides in A_n.
inline Report check_relations(std::string_view suite, const std::vector<RelationInstance>& rels, int n) {
    Report report;
    for (const auto& r : rels) {
        AlgElement lhs = word_to_element(r.lhs, n);
        AlgElement rhs = IntPoly::monomial(1, static_cast<std::size_t>(r.rhs_q_power)) * word_to_element(r.rhs, n);
        report.add({std::string(suite), r.rule, r.label, r.to_string(), lhs == rhs});
    }
    return report;
}

inline Report relation_suite(int n) {
    check_suite_range(n);
    const auto a = Alphabet::full(n);
    Report report = check_relations("diagram", basic_relations(a), n);
    report.append(check_relations("diagram", primed_relations(a), n));
    report.append(check_relations("diagram", derived_relations(a), n));
    return report;
}

inline Report half_relation_suite(int n) {
    check_suite_range(n);
    Report report = check_relations("half-diagram", half_relations(n), n);
    auto reached = reachable_diagrams(n, Alphabet::half(n).letters());
    bool closed = true;
    for (const auto& kv : reached) closed = closed && has_fixed_last_strand(kv.first);
    report.add({"half-diagram", "closure", "n=" + std::to_string(n),
                std::to_string(reached.size()) + " products keep n and n' together", closed});
    return report;
}

}  // namespace partalg
