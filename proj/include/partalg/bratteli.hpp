#pragma once

// The level graph of augmented Young diagrams and its paths.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "partalg/errors.hpp"
#include "partalg/exactratio.hpp"

namespace partalg {

class Partition {
  public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t r = 0; r < parts_.size(); ++r) {
            if (parts_[r] <= 0 || (r > 0 && parts_[r] > parts_[r - 1]))
                throw Error(ErrorCode::NotAPartition, "parts must be positive and weakly decreasing");
        }
    }

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// Row length, zero past the last row.
    int row(int r) const { return r < length() ? parts_[static_cast<std::size_t>(r)] : 0; }

    /// Number of rows of length at least c (column height), 1-based c.
    int column(int c) const {
        return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [c](int x) { return x >= c; }));
    }

    std::vector<Partition> removable() const {
        std::vector<Partition> out;
        for (int r = 0; r < length(); ++r) {
            if (r == length() - 1 || row(r) > row(r + 1)) {
                auto q = parts_;
                --q[static_cast<std::size_t>(r)];
                if (q.back() == 0) q.pop_back();
                out.emplace_back(std::move(q));
            }
        }
        return out;
    }

    std::vector<Partition> addable() const {
        std::vector<Partition> out;
        for (int r = 0; r <= length(); ++r) {
            if (r == 0 || row(r - 1) > row(r)) {
                auto q = parts_;
                if (r == length()) q.push_back(1);
                else ++q[static_cast<std::size_t>(r)];
                out.emplace_back(std::move(q));
            }
        }
        return out;
    }

    /// All partitions of size k, larger first parts first.
    static std::vector<Partition> of_size(int k) {
        std::vector<Partition> out;
        std::vector<int> cur;
        auto rec = [&](auto&& self, int left, int max_part) -> void {
            if (left == 0) {
                out.emplace_back(cur);
                return;
            }
            for (int p = std::min(left, max_part); p >= 1; --p) {
                cur.push_back(p);
                self(self, left - p, p);
                cur.pop_back();
            }
        };
        rec(rec, k, k);
        return out;
    }

    friend bool operator==(const Partition&, const Partition&) = default;

    /// Size first, then larger parts first.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        if (auto c = a.size() <=> b.size(); c != 0) return c;
        return b.parts_ <=> a.parts_;
    }

    std::string to_string() const {
        std::string out = "[";
        for (std::size_t r = 0; r < parts_.size(); ++r) {
            if (r) out += ",";
            out += std::to_string(parts_[r]);
        }
        return out + "]";
    }

  private:
    std::vector<int> parts_;
};

/// Tilde shapes live at integer levels, Hat shapes at half-integer levels.
struct AugShape {
    enum class Kind { Tilde, Hat };

    Kind kind = Kind::Tilde;
    Partition core;

    static AugShape tilde(Partition p) { return {Kind::Tilde, std::move(p)}; }
    static AugShape hat(Partition p) { return {Kind::Hat, std::move(p)}; }

    bool is_tilde() const { return kind == Kind::Tilde; }

    friend bool operator==(const AugShape&, const AugShape&) = default;
    friend std::strong_ordering operator<=>(const AugShape& a, const AugShape& b) {
        if (auto c = a.kind <=> b.kind; c != 0) return c;
        return a.core <=> b.core;
    }

    /// "~[2,1]" or "^[]"
    std::string to_string() const { return (is_tilde() ? "~" : "^") + core.to_string(); }

    static AugShape parse(std::string_view text) {
        std::size_t pos = 0;
        auto skip = [&] {
            while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        };
        skip();
        if (pos >= text.size() || (text[pos] != '~' && text[pos] != '^'))
            throw ParseError(pos, "shape must start with '~' or '^'");
        Kind kind = text[pos] == '~' ? Kind::Tilde : Kind::Hat;
        ++pos;
        skip();
        if (pos >= text.size() || text[pos] != '[') throw ParseError(pos, "expected '['");
        ++pos;
        std::vector<int> parts;
        skip();
        if (pos < text.size() && text[pos] == ']') {
            ++pos;
        } else {
            while (true) {
                skip();
                std::size_t start = pos;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
                if (start == pos) throw ParseError(pos, "expected part");
                if (pos - start > 6) throw ParseError(start, "part too large");
                parts.push_back(std::stoi(std::string(text.substr(start, pos - start))));
                skip();
                if (pos < text.size() && text[pos] == ',') {
                    ++pos;
                    continue;
                }
                if (pos < text.size() && text[pos] == ']') {
                    ++pos;
                    break;
                }
                throw ParseError(pos, "expected ',' or ']'");
            }
        }
        skip();
        if (pos != text.size()) throw ParseError(pos, "trailing characters after shape");
        return {kind, Partition(std::move(parts))};
    }
};

/// Levels are stored doubled: 5/2 is 5.
struct Level {
    int doubled = 0;

    static Level from_doubled(int d) { return {d}; }
    static Level whole(int n) { return {2 * n}; }

    bool is_integer() const { return doubled % 2 == 0; }

    friend bool operator==(const Level&, const Level&) = default;
    friend auto operator<=>(const Level&, const Level&) = default;

    std::string to_string() const {
        return is_integer() ? std::to_string(doubled / 2) : std::to_string(doubled) + "/2";
    }

    /// Accepts "3", "5/2", "2.5".
    static Level parse(std::string_view text) {
        std::string s(text);
        auto digits = [](const std::string& t) {
            return !t.empty() && t.size() <= 6 && std::all_of(t.begin(), t.end(), [](char c) {
                return std::isdigit(static_cast<unsigned char>(c));
            });
        };
        if (auto slash = s.find('/'); slash != std::string::npos) {
            std::string a = s.substr(0, slash), b = s.substr(slash + 1);
            if (!digits(a) || b != "2") throw ParseError(slash, "level must be k or k/2");
            return {std::stoi(a)};
        }
        if (auto dot = s.find('.'); dot != std::string::npos) {
            std::string a = s.substr(0, dot), b = s.substr(dot + 1);
            if (!digits(a) || (b != "5" && b != "0")) throw ParseError(dot, "level must be a multiple of 1/2");
            return {2 * std::stoi(a) + (b == "5" ? 1 : 0)};
        }
        if (!digits(s)) throw ParseError(0, "level must be k or k/2");
        return {2 * std::stoi(s)};
    }
};

/// Shapes at a level, in canonical order.
inline std::vector<AugShape> vertices(Level level) {
    std::vector<AugShape> out;
    const int max_size = level.doubled / 2;
    for (int k = 0; k <= max_size; ++k)
        for (auto& p : Partition::of_size(k))
            out.push_back(level.is_integer() ? AugShape::tilde(std::move(p)) : AugShape::hat(std::move(p)));
    return out;
}

inline bool on_level(const AugShape& s, Level level) {
    return s.is_tilde() == level.is_integer() && s.core.size() <= level.doubled / 2;
}

enum class Direction { Up, Down };

/// Down from a tilde shape removes a box (or the first-row box); up from a
/// hat shape adds one. Any other pairing has no neighbors.
inline std::vector<AugShape> neighbors(const AugShape& s, Direction dir) {
    std::vector<AugShape> out;
    if (s.is_tilde() && dir == Direction::Down) {
        out.push_back(AugShape::hat(s.core));
        for (auto& p : s.core.removable()) out.push_back(AugShape::hat(std::move(p)));
    } else if (!s.is_tilde() && dir == Direction::Up) {
        out.push_back(AugShape::tilde(s.core));
        for (auto& p : s.core.addable()) out.push_back(AugShape::tilde(std::move(p)));
    }
    return out;
}

/// Shapes at the next level reachable from s at the current one.
inline std::vector<AugShape> successors(const AugShape& s) {
    return neighbors(s, s.is_tilde() ? Direction::Down : Direction::Up);
}

using Tableau = std::vector<AugShape>;

/// "~[] ^[] ~[1] ^[] ~[]"
inline std::string tableau_to_string(const Tableau& t) {
    std::string out;
    for (const auto& s : t) {
        if (!out.empty()) out += ' ';
        out += s.to_string();
    }
    return out;
}

inline Tableau parse_tableau(std::string_view text) {
    Tableau out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos >= text.size()) break;
        std::size_t end = text.find(']', pos);
        if (end == std::string_view::npos) throw ParseError(pos, "unterminated shape");
        out.push_back(AugShape::parse(text.substr(pos, end + 1 - pos)));
        pos = end + 1;
    }
    return out;
}

inline void check_on_level(const AugShape& target, Level level) {
    if (level.doubled < 0 || !on_level(target, level))
        throw Error(ErrorCode::ShapeNotAtLevel, target.to_string() + " is not a vertex at level " + level.to_string());
}

/// All paths from ~[] to target, sorted lexicographically by shape sequence.
inline std::vector<Tableau> tableaux(const AugShape& target, Level level) {
    check_on_level(target, level);
    std::vector<Tableau> out;
    Tableau path{AugShape::tilde(Partition())};
    const int steps = level.doubled;
    auto rec = [&](auto&& self) -> void {
        const int at = static_cast<int>(path.size()) - 1;
        if (at == steps) {
            if (path.back() == target) out.push_back(path);
            return;
        }
        // Prune: the core can shrink by at most one box per remaining step pair.
        for (auto& next : successors(path.back())) {
            int remaining = steps - at - 1;
            if (std::abs(next.core.size() - target.core.size()) > (remaining + 1) / 2) continue;
            path.push_back(std::move(next));
            self(self);
            path.pop_back();
        }
    };
    rec(rec);
    std::sort(out.begin(), out.end());
    return out;
}

/// Path counts for every vertex at the level.
inline std::map<AugShape, BigInt> dimensions(Level level) {
    std::map<AugShape, BigInt> cur{{AugShape::tilde(Partition()), BigInt(1)}};
    for (int d = 1; d <= level.doubled; ++d) {
        std::map<AugShape, BigInt> next;
        for (const auto& [s, count] : cur)
            for (const auto& t : successors(s)) next[t] += count;
        cur = std::move(next);
    }
    return cur;
}

inline BigInt dimension(const AugShape& target, Level level) {
    check_on_level(target, level);
    auto dims = dimensions(level);
    auto it = dims.find(target);
    return it == dims.end() ? BigInt(0) : it->second;
}

inline BigInt sum_of_squares(Level level) {
    BigInt total = 0;
    for (const auto& [s, d] : dimensions(level)) total += d * d;
    return total;
}

/// Graph through the given level in DOT form.
inline std::string graph_export(Level level) {
    std::string out = "graph bratteli {\n  rankdir=TB;\n";
    auto id = [](int d, const AugShape& s) { return "\"" + Level::from_doubled(d).to_string() + ":" + s.to_string() + "\""; };
    for (int d = 0; d <= level.doubled; ++d) {
        out += "  { rank=same;";
        for (const auto& s : vertices(Level::from_doubled(d))) out += " " + id(d, s) + ";";
        out += " }\n";
        for (const auto& s : vertices(Level::from_doubled(d)))
            out += "  " + id(d, s) + " [label=\"" + s.to_string() + "\"];\n";
    }
    for (int d = 0; d < level.doubled; ++d)
        for (const auto& s : vertices(Level::from_doubled(d)))
            for (const auto& t : successors(s)) out += "  " + id(d, s) + " -- " + id(d + 1, t) + ";\n";
    return out + "}\n";
}

}  // namespace partalg
