#pragma once

// Part orderings of a seat-plan and a canonical generator word for it.

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "partalg/algebra.hpp"
#include "partalg/errors.hpp"
#include "partalg/relations.hpp"
#include "partalg/seatplan.hpp"
#include "partalg/word.hpp"

namespace partalg {

struct PartData {
    std::vector<SeatPlan::Block> mseq;  // upper parts, propagating ones first
    std::vector<SeatPlan::Block> fseq;  // lower parts, propagating ones first
    int p = 0;
    std::vector<int> sigma;  // F_k is joined to M_{sigma[k-1]}, 1-based
};

namespace detail {

inline int block_min_label(const SeatPlan::Block& b) {
    int m = std::abs(b.front());
    for (Point x : b) m = std::min(m, std::abs(x));
    return m;
}

inline void sort_by_min(std::vector<SeatPlan::Block>& parts) {
    std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
        return block_min_label(a) < block_min_label(b);
    });
}

}  // namespace detail

inline PartData part_data(const SeatPlan& w) {
    PartData d;
    std::vector<SeatPlan::Block> m_prop, m_def, f_prop, f_def;
    for (const auto& block : w.blocks()) {
        SeatPlan::Block up, low;
        for (Point x : block) (x > 0 ? up : low).push_back(x);
        if (!up.empty() && !low.empty()) {
            m_prop.push_back(up);
            f_prop.push_back(low);
        } else if (!up.empty()) {
            m_def.push_back(up);
        } else {
            f_def.push_back(low);
        }
    }
    // Keep the pairing before sorting the lower side independently.
    std::vector<std::pair<SeatPlan::Block, SeatPlan::Block>> pairs;
    for (std::size_t k = 0; k < m_prop.size(); ++k) pairs.emplace_back(m_prop[k], f_prop[k]);
    detail::sort_by_min(m_prop);
    detail::sort_by_min(f_prop);
    detail::sort_by_min(m_def);
    detail::sort_by_min(f_def);
    d.p = static_cast<int>(m_prop.size());
    for (const auto& f : f_prop) {
        auto it = std::find_if(pairs.begin(), pairs.end(), [&](const auto& pr) { return pr.second == f; });
        auto jt = std::find(m_prop.begin(), m_prop.end(), it->first);
        d.sigma.push_back(static_cast<int>(jt - m_prop.begin()) + 1);
    }
    d.mseq = std::move(m_prop);
    d.mseq.insert(d.mseq.end(), m_def.begin(), m_def.end());
    d.fseq = std::move(f_prop);
    d.fseq.insert(d.fseq.end(), f_def.begin(), f_def.end());
    return d;
}

/// Diagram joining top j to bottom perm[j-1].
inline SeatPlan permutation_diagram(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    std::vector<SeatPlan::Block> blocks;
    for (int j = 1; j <= n; ++j) blocks.push_back({j, -perm[static_cast<std::size_t>(j - 1)]});
    return SeatPlan::make(n, std::move(blocks));
}

/// S-word for the permutation diagram, by repeatedly clearing the leftmost descent.
inline Word permutation_word(std::vector<int> perm) {
    std::vector<int> sorted(perm.size());
    std::iota(sorted.begin(), sorted.end(), 1);
    if (!std::is_permutation(perm.begin(), perm.end(), sorted.begin()))
        throw Error(ErrorCode::IndexOutOfRange, "not a permutation of 1..n");
    Word out;
    while (true) {
        std::size_t i = 0;
        while (i + 1 < perm.size() && perm[i] < perm[i + 1]) ++i;
        if (i + 1 >= perm.size()) break;
        out.push_back(Letter::s(static_cast<int>(i) + 1));
        std::swap(perm[i], perm[i + 1]);
    }
    return out;
}

namespace detail {

// Places consecutive parts in consecutive slots; returns the permutation and
// the first slot of each part.
inline std::vector<int> slot_permutation(int n, const std::vector<SeatPlan::Block>& parts,
                                         std::vector<int>& first_slot) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    int next = 1;
    first_slot.clear();
    for (const auto& part : parts) {
        first_slot.push_back(next);
        std::vector<int> labels;
        for (Point x : part) labels.push_back(std::abs(x));
        std::sort(labels.begin(), labels.end());
        for (int j : labels) perm[static_cast<std::size_t>(j - 1)] = next++;
    }
    return perm;
}

inline void fuse_runs(Word& out, const std::vector<SeatPlan::Block>& parts, const std::vector<int>& first_slot) {
    for (std::size_t k = 0; k < parts.size(); ++k) {
        int a = first_slot[k];
        int m = static_cast<int>(parts[k].size());
        for (int t = a; t <= a + m - 2; ++t) out.push_back(Letter::f(t));
    }
}

}  // namespace detail

/// Word w with eval_word(w) = (diagram, 0).
///
/// Layout: gather upper parts into consecutive slots and fuse them, route one
/// slot of each propagating part to its lower partner, then the mirror image of
/// the same construction for the lower parts, where every slot other than the
/// partner strand is cut.
inline Word standard_word(const SeatPlan& w) {
    const int n = w.n();
    const PartData d = part_data(w);

    std::vector<int> a, b;
    std::vector<int> x_m = detail::slot_permutation(n, d.mseq, a);
    std::vector<int> x_f = detail::slot_permutation(n, d.fseq, b);

    Word out = permutation_word(x_m);
    detail::fuse_runs(out, d.mseq, a);

    // Middle permutation: slot a_{sigma(k)} -> b_k, remaining slots in order.
    std::vector<int> mid(static_cast<std::size_t>(n), 0);
    std::vector<char> target_used(static_cast<std::size_t>(n) + 1, 0);
    for (int k = 1; k <= d.p; ++k) {
        int from = a[static_cast<std::size_t>(d.sigma[static_cast<std::size_t>(k - 1)] - 1)];
        int to = b[static_cast<std::size_t>(k - 1)];
        mid[static_cast<std::size_t>(from - 1)] = to;
        target_used[static_cast<std::size_t>(to)] = 1;
    }
    int next_target = 1;
    for (auto& m : mid) {
        if (m) continue;
        while (target_used[static_cast<std::size_t>(next_target)]) ++next_target;
        m = next_target++;
    }
    Word middle = permutation_word(mid);
    out.insert(out.end(), middle.begin(), middle.end());

    Word lower = permutation_word(x_f);
    detail::fuse_runs(lower, d.fseq, b);
    for (std::size_t k = 0; k < d.fseq.size(); ++k) {
        int first = b[k] + (static_cast<int>(k) < d.p ? 1 : 0);
        for (int t = first; t < b[k] + static_cast<int>(d.fseq[k].size()); ++t) lower.push_back(Letter::e(t));
    }
    Word tail = star(lower);
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
}

/// Shortest power-zero words over the generators of A_{n-1/2}, keyed by diagram.
class HalfWordTable {
  public:
    explicit HalfWordTable(int n) : n_(n), words_(reachable_diagrams(n, Alphabet::half(n).letters(), true)) {}

    int n() const { return n_; }
    std::size_t size() const { return words_.size(); }

    const Word& operator()(const SeatPlan& w) const {
        auto it = words_.find(w);
        if (it == words_.end())
            throw Error(ErrorCode::NotAPartition, w.to_string() + " is not reached by the half-level generators");
        return it->second;
    }

  private:
    int n_;
    std::map<SeatPlan, Word> words_;
};

inline Word half_word(const SeatPlan& w) { return HalfWordTable(w.n())(w); }

}  // namespace partalg
