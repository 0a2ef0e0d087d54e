#pragma once

// Seat-plans: set partitions of the 2n points {1..n} ∪ {1'..n'} and their
// stacking product.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "partalg/errors.hpp"

namespace partalg {

/// A marked point: j > 0 is the top point j, -j is the bottom point j'.
using Point = int;

/// Default strand bound for exhaustive enumeration.
inline constexpr int kDefaultEnumerationBound = 5;

namespace detail {

// Position of a point in the order 1 < 2 < ... < n < 1' < ... < n'.
inline int point_rank(Point p, int n) { return p > 0 ? p - 1 : n - p - 1; }

inline Point point_at_rank(int rank, int n) { return rank < n ? rank + 1 : -(rank - n + 1); }

class DisjointSets {
  public:
    explicit DisjointSets(std::size_t size) : parent_(size) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

  private:
    std::vector<std::size_t> parent_;
};

}  // namespace detail

class SeatPlan {
  public:
    using Block = std::vector<Point>;

    /// Validates and canonicalizes. Throws NotAPartition.
    static SeatPlan make(int n, std::vector<Block> blocks) {
        if (n < 1) throw Error(ErrorCode::NotAPartition, "strand count must be positive");
        std::vector<char> seen(static_cast<std::size_t>(2 * n), 0);
        for (const auto& block : blocks) {
            if (block.empty()) throw Error(ErrorCode::NotAPartition, "empty block");
            for (Point p : block) {
                if (p == 0 || p > n || p < -n)
                    throw Error(ErrorCode::NotAPartition, "point " + point_to_string(p) + " out of range");
                auto r = static_cast<std::size_t>(detail::point_rank(p, n));
                if (seen[r]) throw Error(ErrorCode::NotAPartition, "point " + point_to_string(p) + " repeated");
                seen[r] = 1;
            }
        }
        for (std::size_t r = 0; r < seen.size(); ++r) {
            if (!seen[r])
                throw Error(ErrorCode::NotAPartition,
                            "point " + point_to_string(detail::point_at_rank(static_cast<int>(r), n)) +
                                " uncovered");
        }
        return SeatPlan(n, std::move(blocks));
    }

    /// Builds from a block label per point rank (0..2n-1); labels need not be canonical.
    static SeatPlan from_labels(int n, std::span<const int> labels) {
        std::vector<Block> blocks;
        int max_label = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end());
        std::vector<int> slot(static_cast<std::size_t>(max_label) + 1, -1);
        for (std::size_t r = 0; r < labels.size(); ++r) {
            auto l = static_cast<std::size_t>(labels[r]);
            if (slot[l] < 0) {
                slot[l] = static_cast<int>(blocks.size());
                blocks.emplace_back();
            }
            blocks[static_cast<std::size_t>(slot[l])].push_back(detail::point_at_rank(static_cast<int>(r), n));
        }
        // Points were visited in rank order, so blocks are already canonical.
        SeatPlan w;
        w.n_ = n;
        w.blocks_ = std::move(blocks);
        return w;
    }

    static SeatPlan identity(int n) {
        std::vector<Block> blocks;
        for (int j = 1; j <= n; ++j) blocks.push_back({j, -j});
        return make(n, std::move(blocks));
    }

    int n() const { return n_; }
    const std::vector<Block>& blocks() const { return blocks_; }

    /// Block index of every point, indexed by point rank.
    std::vector<int> labels() const {
        std::vector<int> out(static_cast<std::size_t>(2 * n_));
        for (std::size_t b = 0; b < blocks_.size(); ++b)
            for (Point p : blocks_[b]) out[static_cast<std::size_t>(detail::point_rank(p, n_))] = static_cast<int>(b);
        return out;
    }

    /// Index of the block containing p.
    std::size_t block_of(Point p) const {
        for (std::size_t b = 0; b < blocks_.size(); ++b)
            if (std::find(blocks_[b].begin(), blocks_[b].end(), p) != blocks_[b].end()) return b;
        throw Error(ErrorCode::IndexOutOfRange, "point " + point_to_string(p) + " not in diagram");
    }

    friend bool operator==(const SeatPlan&, const SeatPlan&) = default;
    friend auto operator<=>(const SeatPlan&, const SeatPlan&) = default;

    static std::string point_to_string(Point p) {
        return p > 0 ? std::to_string(p) : std::to_string(-p) + "'";
    }

    /// "{{1,1',4'},{2,5},{3,4},{2'},{3',5'}}"
    std::string to_string() const {
        std::string out = "{";
        for (std::size_t b = 0; b < blocks_.size(); ++b) {
            if (b) out += ",";
            out += "{";
            for (std::size_t k = 0; k < blocks_[b].size(); ++k) {
                if (k) out += ",";
                out += point_to_string(blocks_[b][k]);
            }
            out += "}";
        }
        return out + "}";
    }

    /// Parses the brace notation. When n is omitted it is the largest label.
    static SeatPlan parse(std::string_view text, std::optional<int> n = std::nullopt);

  private:
    SeatPlan() = default;

    SeatPlan(int n, std::vector<Block> blocks) : n_(n), blocks_(std::move(blocks)) {
        auto key = [n](Point p) { return detail::point_rank(p, n); };
        for (auto& block : blocks_)
            std::sort(block.begin(), block.end(), [&](Point a, Point b) { return key(a) < key(b); });
        std::sort(blocks_.begin(), blocks_.end(),
                  [&](const Block& a, const Block& b) { return key(a.front()) < key(b.front()); });
    }

    int n_ = 0;
    std::vector<Block> blocks_;
};

inline SeatPlan SeatPlan::parse(std::string_view text, std::optional<int> n) {
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto expect = [&](char c) {
        skip();
        if (pos >= text.size() || text[pos] != c)
            throw ParseError(pos, std::string("expected '") + c + "' in seat-plan");
        ++pos;
    };
    auto peek = [&]() -> char {
        skip();
        return pos < text.size() ? text[pos] : '\0';
    };

    std::vector<Block> blocks;
    int max_label = 0;
    expect('{');
    if (peek() != '}') {
        while (true) {
            expect('{');
            Block block;
            if (peek() != '}') {
                while (true) {
                    skip();
                    std::size_t start = pos;
                    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
                    if (start == pos) throw ParseError(pos, "expected point label");
                    if (pos - start > 6) throw ParseError(start, "point label too large");
                    int j = std::stoi(std::string(text.substr(start, pos - start)));
                    if (j == 0) throw ParseError(start, "point labels start at 1");
                    bool primed = false;
                    skip();
                    if (pos < text.size() && (text[pos] == '\'' || text[pos] == '`')) {
                        primed = true;
                        ++pos;
                    }
                    max_label = std::max(max_label, j);
                    block.push_back(primed ? -j : j);
                    if (peek() == ',') {
                        ++pos;
                        continue;
                    }
                    break;
                }
            }
            expect('}');
            blocks.push_back(std::move(block));
            if (peek() == ',') {
                ++pos;
                continue;
            }
            break;
        }
    }
    expect('}');
    skip();
    if (pos != text.size()) throw ParseError(pos, "trailing characters after seat-plan");
    return make(n.value_or(max_label), std::move(blocks));
}

/// Product diagram and the number p of closed interior components removed.
struct ComposeResult {
    SeatPlan diagram;
    int removed = 0;
};

/// a placed on top of b: a's bottom row is glued to b's top row.
inline ComposeResult compose(const SeatPlan& a, const SeatPlan& b) {
    if (a.n() != b.n())
        throw Error(ErrorCode::SizeMismatch,
                    "compose: strand counts " + std::to_string(a.n()) + " and " + std::to_string(b.n()));
    const int n = a.n();
    const auto un = static_cast<std::size_t>(n);
    // Layers: [0,n) top of a, [n,2n) glued interface, [2n,3n) bottom of b.
    detail::DisjointSets sets(3 * un);
    auto node_a = [&](Point p) { return p > 0 ? static_cast<std::size_t>(p - 1) : un + static_cast<std::size_t>(-p - 1); };
    auto node_b = [&](Point p) {
        return p > 0 ? un + static_cast<std::size_t>(p - 1) : 2 * un + static_cast<std::size_t>(-p - 1);
    };
    for (const auto& block : a.blocks())
        for (std::size_t k = 1; k < block.size(); ++k) sets.unite(node_a(block[0]), node_a(block[k]));
    for (const auto& block : b.blocks())
        for (std::size_t k = 1; k < block.size(); ++k) sets.unite(node_b(block[0]), node_b(block[k]));

    std::vector<char> outer(3 * un, 0);
    std::vector<int> labels(2 * un);
    for (std::size_t j = 0; j < un; ++j) {
        std::size_t top = sets.find(j);
        std::size_t bottom = sets.find(2 * un + j);
        outer[top] = outer[bottom] = 1;
        labels[j] = static_cast<int>(top);
        labels[un + j] = static_cast<int>(bottom);
    }
    int removed = 0;
    for (std::size_t j = un; j < 2 * un; ++j) {
        std::size_t root = sets.find(j);
        if (!outer[root]) {
            outer[root] = 1;  // count each interior class once
            ++removed;
        }
    }
    return {SeatPlan::from_labels(n, labels), removed};
}

inline void check_generator_index(std::string_view name, int n, int i, int max_index) {
    if (i < 1 || i > max_index)
        throw Error(ErrorCode::IndexOutOfRange, std::string(name) + std::to_string(i) + " undefined for n = " +
                                                    std::to_string(n));
}

/// s_i: swaps strands i and i+1.
inline SeatPlan generator_s(int n, int i) {
    check_generator_index("s", n, i, n - 1);
    std::vector<SeatPlan::Block> blocks;
    for (int j = 1; j <= n; ++j)
        if (j != i && j != i + 1) blocks.push_back({j, -j});
    blocks.push_back({i, -(i + 1)});
    blocks.push_back({i + 1, -i});
    return SeatPlan::make(n, std::move(blocks));
}

/// f_i: joins strands i and i+1 into one block.
inline SeatPlan generator_f(int n, int i) {
    check_generator_index("f", n, i, n - 1);
    std::vector<SeatPlan::Block> blocks;
    for (int j = 1; j <= n; ++j)
        if (j != i && j != i + 1) blocks.push_back({j, -j});
    blocks.push_back({i, i + 1, -i, -(i + 1)});
    return SeatPlan::make(n, std::move(blocks));
}

/// e_i: cuts strand i into the singletons {i} and {i'}.
inline SeatPlan generator_e(int n, int i) {
    check_generator_index("e", n, i, n);
    std::vector<SeatPlan::Block> blocks;
    for (int j = 1; j <= n; ++j)
        if (j != i) blocks.push_back({j, -j});
    blocks.push_back({i});
    blocks.push_back({-i});
    return SeatPlan::make(n, std::move(blocks));
}

inline bool is_propagating(std::span<const Point> block) {
    bool top = false;
    bool bottom = false;
    for (Point p : block) (p > 0 ? top : bottom) = true;
    return top && bottom;
}

inline int propagating_number(const SeatPlan& w) {
    return static_cast<int>(std::count_if(w.blocks().begin(), w.blocks().end(),
                                          [](const auto& b) { return is_propagating(b); }));
}

/// Nonempty intersections of the blocks with the top row, in block order.
inline std::vector<SeatPlan::Block> upper_parts(const SeatPlan& w) {
    std::vector<SeatPlan::Block> out;
    for (const auto& block : w.blocks()) {
        SeatPlan::Block part;
        std::copy_if(block.begin(), block.end(), std::back_inserter(part), [](Point p) { return p > 0; });
        if (!part.empty()) out.push_back(std::move(part));
    }
    return out;
}

/// Nonempty intersections of the blocks with the bottom row, in block order.
inline std::vector<SeatPlan::Block> lower_parts(const SeatPlan& w) {
    std::vector<SeatPlan::Block> out;
    for (const auto& block : w.blocks()) {
        SeatPlan::Block part;
        std::copy_if(block.begin(), block.end(), std::back_inserter(part), [](Point p) { return p < 0; });
        if (!part.empty()) out.push_back(std::move(part));
    }
    return out;
}

/// Reflection in the horizontal axis: j <-> j'.
inline SeatPlan involution_star(const SeatPlan& w) {
    std::vector<SeatPlan::Block> blocks = w.blocks();
    for (auto& block : blocks)
        for (Point& p : block) p = -p;
    return SeatPlan::make(w.n(), std::move(blocks));
}

/// True iff n and n' share a block.
inline bool has_fixed_last_strand(const SeatPlan& w) {
    const int n = w.n();
    return w.block_of(n) == w.block_of(-n);
}

/// Streams every seat-plan on n strands exactly once, as restricted growth
/// strings over the points in the order 1..n, 1'..n'.
class SeatPlanEnumerator {
  public:
    explicit SeatPlanEnumerator(int n, int bound = kDefaultEnumerationBound) : n_(n) {
        if (n < 1) throw Error(ErrorCode::NotAPartition, "strand count must be positive");
        if (n > bound)
            throw Error(ErrorCode::BoundExceeded,
                        "enumeration for n = " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
        rgs_.assign(static_cast<std::size_t>(2 * n), 0);
        prefix_max_.assign(static_cast<std::size_t>(2 * n), 0);
    }

    std::optional<SeatPlan> next() {
        if (done_) return std::nullopt;
        if (started_ && !advance()) {
            done_ = true;
            return std::nullopt;
        }
        started_ = true;
        return SeatPlan::from_labels(n_, rgs_);
    }

  private:
    bool advance() {
        const std::size_t m = rgs_.size();
        for (std::size_t k = m; k-- > 1;) {
            if (rgs_[k] <= prefix_max_[k - 1]) {
                ++rgs_[k];
                prefix_max_[k] = std::max(prefix_max_[k - 1], rgs_[k]);
                for (std::size_t t = k + 1; t < m; ++t) {
                    rgs_[t] = 0;
                    prefix_max_[t] = prefix_max_[k];
                }
                return true;
            }
        }
        return false;
    }

    int n_;
    std::vector<int> rgs_;
    std::vector<int> prefix_max_;
    bool started_ = false;
    bool done_ = false;
};

inline std::vector<SeatPlan> enumerate_all(int n, int bound = kDefaultEnumerationBound) {
    SeatPlanEnumerator it(n, bound);
    std::vector<SeatPlan> out;
    while (auto w = it.next()) out.push_back(std::move(*w));
    return out;
}

}  // namespace partalg
