#pragma once

// Catalogs of defining relations as pairs of words, instantiated for every
// index that the available generators allow.

#include <algorithm>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "partalg/word.hpp"

namespace partalg {

/// lhs = Q^rhs_q_power · rhs
struct RelationInstance {
    std::string rule;
    std::string label;
    Word lhs;
    Word rhs;
    int rhs_q_power = 0;

    std::string to_string() const {
        std::string r = word_to_string(rhs);
        if (rhs_q_power == 1) r = "Q " + r;
        else if (rhs_q_power > 1) r = "Q^" + std::to_string(rhs_q_power) + " " + r;
        return word_to_string(lhs) + " = " + r;
    }
};

/// Largest usable index of each generator family.
struct Alphabet {
    int max_s = 0;
    int max_f = 0;
    int max_e = 0;

    /// Generators of A_n.
    static Alphabet full(int n) { return {n - 1, n - 1, n}; }
    /// Generators of A_{n-1/2}: the strand n is never touched.
    static Alphabet half(int n) { return {n - 2, n - 1, n - 1}; }
    /// Generators with matrices at the doubled level l2.
    static Alphabet at_level(int l2) { return {(l2 - 2) / 2, (l2 - 1) / 2, l2 / 2}; }

    bool contains(const Letter& l) const {
        int bound = l.tag == Letter::Tag::S ? max_s : l.tag == Letter::Tag::F ? max_f : max_e;
        return l.index >= 1 && l.index <= bound;
    }

    bool contains(const Word& w) const {
        return std::all_of(w.begin(), w.end(), [this](const Letter& l) { return contains(l); });
    }

    std::vector<Letter> letters() const {
        std::vector<Letter> out;
        for (int i = 1; i <= max_s; ++i) out.push_back(Letter::s(i));
        for (int i = 1; i <= max_f; ++i) out.push_back(Letter::f(i));
        for (int i = 1; i <= max_e; ++i) out.push_back(Letter::e(i));
        return out;
    }
};

namespace detail {

class RelationSink {
  public:
    explicit RelationSink(const Alphabet& a) : alphabet_(a) {}

    // Instances that mention an unavailable generator are dropped.
    void add(std::string rule, std::string label, Word lhs, Word rhs, int power = 0) {
        if (!alphabet_.contains(lhs) || !alphabet_.contains(rhs)) return;
        out_.push_back({std::move(rule), std::move(label), std::move(lhs), std::move(rhs), power});
    }

    std::vector<RelationInstance> take() { return std::move(out_); }

  private:
    Alphabet alphabet_;
    std::vector<RelationInstance> out_;
};

inline std::string idx(int i) { return "i=" + std::to_string(i); }
inline std::string idx(int i, int j) { return "i=" + std::to_string(i) + ",j=" + std::to_string(j); }

// Upper bound on any index an alphabet can name.
inline int span(const Alphabet& a) { return std::max({a.max_s, a.max_f, a.max_e}) + 1; }

}  // namespace detail

/// (R0)-(R4), (E1)-(E5) with explicit indices.
inline std::vector<RelationInstance> basic_relations(const Alphabet& a) {
    using L = Letter;
    detail::RelationSink out(a);
    const int top = detail::span(a);
    for (int i = 1; i <= top; ++i) {
        out.add("R0", detail::idx(i), {L::s(i), L::s(i + 1), L::f(i), L::s(i + 1), L::s(i)}, {L::f(i + 1)});
        out.add("R0", detail::idx(i), {L::s(i), L::e(i), L::s(i)}, {L::e(i + 1)});
    }
    for (int i = 1; i <= top; ++i) {
        out.add("R1", detail::idx(i), {L::s(i), L::s(i)}, {});
        out.add("R1", detail::idx(i), {L::s(i), L::s(i + 1), L::s(i)}, {L::s(i + 1), L::s(i), L::s(i + 1)});
        for (int j = i + 2; j <= top; ++j) out.add("R1", detail::idx(i, j), {L::s(i), L::s(j)}, {L::s(j), L::s(i)});
    }
    for (int i = 1; i <= top; ++i) {
        out.add("R2", detail::idx(i), {L::f(i), L::f(i)}, {L::f(i)});
        for (int j = i + 1; j <= top; ++j) out.add("R2", detail::idx(i, j), {L::f(i), L::f(j)}, {L::f(j), L::f(i)});
    }
    for (int i = 1; i <= top; ++i) {
        out.add("R3", detail::idx(i), {L::f(i), L::s(i)}, {L::f(i)});
        out.add("R3", detail::idx(i), {L::s(i), L::f(i)}, {L::f(i)});
    }
    for (int i = 1; i <= top; ++i)
        for (int j = 1; j <= top; ++j)
            if (std::abs(i - j) >= 2) out.add("R4", detail::idx(i, j), {L::f(i), L::s(j)}, {L::s(j), L::f(i)});
    for (int i = 1; i <= top; ++i) out.add("E1", detail::idx(i), {L::e(i), L::e(i)}, {L::e(i)}, 1);
    for (int i = 1; i <= top; ++i) {
        out.add("E2", detail::idx(i), {L::s(i), L::e(i), L::e(i + 1)}, {L::e(i), L::e(i + 1)});
        out.add("E2", detail::idx(i), {L::e(i), L::e(i + 1), L::s(i)}, {L::e(i), L::e(i + 1)});
    }
    for (int i = 1; i <= top; ++i) {
        for (int j = 1; j <= top; ++j) {
            if (j >= i + 1 || j <= i - 2) out.add("E3", detail::idx(i, j), {L::e(i), L::s(j)}, {L::s(j), L::e(i)});
            if (j > i) out.add("E3", detail::idx(i, j), {L::e(i), L::e(j)}, {L::e(j), L::e(i)});
        }
    }
    for (int i = 1; i <= top; ++i) {
        out.add("E4", detail::idx(i), {L::e(i), L::f(i), L::e(i)}, {L::e(i)});
        out.add("E4", detail::idx(i), {L::e(i + 1), L::f(i), L::e(i + 1)}, {L::e(i + 1)});
        out.add("E4", detail::idx(i), {L::f(i), L::e(i), L::f(i)}, {L::f(i)});
        out.add("E4", detail::idx(i), {L::f(i), L::e(i + 1), L::f(i)}, {L::f(i)});
    }
    for (int i = 1; i <= top; ++i)
        for (int j = 1; j <= top; ++j)
            if (j >= i + 1 || j <= i - 2) out.add("E5", detail::idx(i, j), {L::e(i), L::f(j)}, {L::f(j), L::e(i)});
    return out.take();
}

/// The presentation on s_i, f = f_1, e = e_1: (R1), (R2')-(R4'), (E1')-(E5').
inline std::vector<RelationInstance> primed_relations(const Alphabet& a) {
    using L = Letter;
    detail::RelationSink out(a);
    const int top = detail::span(a);
    const Letter f = L::f(1);
    const Letter e = L::e(1);
    for (int i = 1; i <= top; ++i) {
        out.add("R1", detail::idx(i), {L::s(i), L::s(i)}, {});
        out.add("R1", detail::idx(i), {L::s(i), L::s(i + 1), L::s(i)}, {L::s(i + 1), L::s(i), L::s(i + 1)});
        for (int j = i + 2; j <= top; ++j) out.add("R1", detail::idx(i, j), {L::s(i), L::s(j)}, {L::s(j), L::s(i)});
    }
    out.add("R2'", "f^2", {f, f}, {f});
    out.add("R2'", "fs2fs2", {f, L::s(2), f, L::s(2)}, {L::s(2), f, L::s(2), f});
    {
        Word w{L::s(2), L::s(1), L::s(3), L::s(2)};
        out.add("R2'", "fwfw", concat(concat({f}, w), concat({f}, w)), concat(concat(w, {f}), concat(w, {f})));
    }
    out.add("R3'", "fs1", {f, L::s(1)}, {f});
    out.add("R3'", "s1f", {L::s(1), f}, {f});
    for (int i = 3; i <= top; ++i) out.add("R4'", detail::idx(i), {f, L::s(i)}, {L::s(i), f});
    out.add("E1'", "e^2", {e, e}, {e}, 1);
    out.add("E2'", "es1es1", {e, L::s(1), e, L::s(1)}, {e, L::s(1), e});
    out.add("E2'", "s1es1e", {L::s(1), e, L::s(1), e}, {e, L::s(1), e});
    for (int i = 2; i <= top; ++i) out.add("E3'", detail::idx(i), {e, L::s(i)}, {L::s(i), e});
    out.add("E4'", "efe", {e, f, e}, {e});
    out.add("E4'", "fef", {f, e, f}, {f});
    {
        Word w{L::s(2), L::s(1), e, L::s(1), L::s(2)};
        out.add("E5'", "fw", concat({f}, w), concat(w, {f}));
    }
    return out.take();
}

/// Frequently used consequences: (R0) in its short form, (R2''), (E4'').
inline std::vector<RelationInstance> derived_relations(const Alphabet& a) {
    using L = Letter;
    detail::RelationSink out(a);
    const int top = detail::span(a);
    for (int i = 1; i <= top; ++i) {
        out.add("R0", detail::idx(i), {L::f(i + 1), L::s(i), L::s(i + 1)}, {L::s(i), L::s(i + 1), L::f(i)});
        out.add("R2''", detail::idx(i), {L::f(i), L::s(i + 1), L::f(i)}, {L::f(i), L::f(i + 1)});
        out.add("E4''", detail::idx(i), {L::e(i), L::s(i)}, {L::e(i), L::f(i), L::e(i + 1)});
        out.add("E4''", detail::idx(i), {L::e(i), L::f(i), L::e(i + 1)}, {L::s(i), L::e(i + 1)});
    }
    return out.take();
}

/// (R2*), (R4*), (E4*) for A_{n-1/2} with f_* = f_{n-1}, f = f_1, e = e_1.
inline std::vector<RelationInstance> half_relations(int n) {
    using L = Letter;
    detail::RelationSink out(Alphabet::half(n));
    if (n < 2) return out.take();
    if (n == 2) {
        // Only e and f remain; f_* coincides with f.
        out.add("E1'", "e^2", {L::e(1), L::e(1)}, {L::e(1)}, 1);
        out.add("R2'", "f^2", {L::f(1), L::f(1)}, {L::f(1)});
        out.add("E4'", "efe", {L::e(1), L::f(1), L::e(1)}, {L::e(1)});
        out.add("E4'", "fef", {L::f(1), L::e(1), L::f(1)}, {L::f(1)});
        return out.take();
    }
    const Letter fs = L::f(n - 1);
    const Letter f = L::f(1);
    const Letter e = L::e(1);
    Word down;  // s_{n-2} ... s_1
    for (int i = n - 2; i >= 1; --i) down.push_back(L::s(i));
    Word up = star(down);  // s_1 ... s_{n-2}
    {
        // C = s_{n-2}..s_2 s_1 s_2..s_{n-2}; C_f has f in place of s_1.
        Word c = down;
        Word c_f(down.begin(), down.end() - 1);
        c_f.push_back(f);
        for (int i = 2; i <= n - 2; ++i) {
            c.push_back(L::s(i));
            c_f.push_back(L::s(i));
        }
        Word lhs = concat(concat({fs}, c), {fs});
        out.add("R2*", "f*Cf*=f*C_f", lhs, concat({fs}, c_f));
        out.add("R2*", "f*Cf*=C_ff*", lhs, concat(c_f, {fs}));
    }
    out.add("R4*", "ff*", {f, fs}, {fs, f});
    out.add("R4*", "ef*", {e, fs}, {fs, e});
    for (int i = 1; i <= n - 3; ++i) out.add("R4*", detail::idx(i), {fs, L::s(i)}, {L::s(i), fs});
    out.add("E4*", "f*", concat(concat(concat({fs}, down), concat({e}, up)), {fs}), {fs});
    out.add("E4*", "e", concat(concat(concat({e}, up), concat({fs}, down)), {e}), {e});
    return out.take();
}

}  // namespace partalg
