#pragma once

// Seminormal-form matrices of the generators on the path modules of the
// level graph.

#include <cctype>
#include <cstdlib>
#include <optional>
#include <fstream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "partalg/algebra.hpp"
#include "partalg/bratteli.hpp"
#include "partalg/errors.hpp"
#include "partalg/exactratio.hpp"
#include "partalg/matrix.hpp"
#include "partalg/relations.hpp"
#include "partalg/report.hpp"
#include "partalg/seatplan.hpp"
#include "partalg/standardform.hpp"
#include "partalg/word.hpp"
#include "partalg/reductive_tables_data.hpp"

namespace partalg {

/// h(big)/h(small) where small drops one box of big: the first-row box when
/// the cores agree, otherwise a removable core box.
inline RatFunc hook_ratio(const AugShape& big, const AugShape& small) {
    if (!big.is_tilde() || small.is_tilde())
        throw Error(ErrorCode::NotOneBoxApart, big.to_string() + " over " + small.to_string());
    const Partition& lam = big.core;
    const Partition& mu = small.core;
    const int n = lam.size();
    const RatFunc q = RatFunc::q();
    auto ratio = [](const RatFunc& h) { return h / (h - RatFunc(1)); };

    if (mu == lam) {
        const int l1 = lam.row(0);
        RatFunc r = q - RatFunc(n + l1);
        for (int j = 1; j <= l1; ++j) r *= ratio(q - RatFunc(n + j - lam.column(j) - 1));
        return r;
    }
    const auto rem = lam.removable();
    if (std::find(rem.begin(), rem.end(), mu) == rem.end())
        throw Error(ErrorCode::NotOneBoxApart, big.to_string() + " over " + small.to_string());

    int rr = 0;
    while (lam.row(rr) == mu.row(rr)) ++rr;
    const int c = lam.row(rr);
    Rational r = 1;
    // Same row, to the left of the removed box.
    for (int j = 1; j < c; ++j) {
        int h = (c - j) + (lam.column(j) - rr - 1) + 1;
        r *= make_rational(h, h - 1);
    }
    // Same column, core rows above.
    for (int i = 0; i < rr; ++i) {
        int h = (lam.row(i) - c) + (lam.column(c) - i - 1) + 1;
        r *= make_rational(h, h - 1);
    }
    // The first-row box above it: arm Q - n - c, leg = column height in the core.
    RatFunc h = q - RatFunc(n + c - lam.column(c) - 1);
    return RatFunc(r) * ratio(h);
}

/// d = (c1 - r1) - (c0 - r0) for the boxes added by nu -> mu -> lambda.
inline int axial_distance(const Partition& nu, const Partition& mu, const Partition& lambda) {
    auto added = [](const Partition& small, const Partition& large) {
        auto adds = small.addable();
        if (std::find(adds.begin(), adds.end(), large) == adds.end())
            throw Error(ErrorCode::NotACoveringChain, small.to_string() + " to " + large.to_string());
        int r = 0;
        while (small.row(r) == large.row(r)) ++r;
        return std::pair{r, large.row(r) - 1};
    };
    auto [r0, c0] = added(nu, mu);
    auto [r1, c1] = added(mu, lambda);
    return (c1 - r1) - (c0 - r0);
}

struct AxialData {
    int d = 0;
    RatFunc a;
    RatFunc b;
    RatFunc c;

    static AxialData make(int d, const RatFunc& c) {
        if (d == 0) throw Error(ErrorCode::NotACoveringChain, "axial distance 0");
        if (c.is_zero()) throw Error(ErrorCode::DivisionByZero, "configuration constant c = 0");
        RatFunc a(make_rational(1, d));
        return {d, a, RatFunc(1) - a * a, c};
    }
};

/// Printed matrices for the reductive windows of s_1 and s_2.
class ReductiveTables {
  public:
    struct Block {
        int generator = 0;
        std::vector<Tableau> keys;
        RepMatrix matrix;
    };

    static ReductiveTables parse(std::string_view text) {
        ReductiveTables out;
        std::istringstream in{std::string(text)};
        std::string line;
        std::size_t line_no = 0;
        std::optional<Block> cur;
        std::vector<std::vector<RatFunc>> rows;
        auto fail = [&](const std::string& what) { throw ParseError(line_no, "reductive tables line: " + what); };
        while (std::getline(in, line)) {
            ++line_no;
            if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
            std::istringstream ls(line);
            std::string head;
            if (!(ls >> head)) continue;
            std::string rest;
            std::getline(ls, rest);
            if (head == "table") {
                if (cur) fail("nested table");
                auto first = rest.find_first_not_of(" \t");
                if (first == std::string::npos) fail("table needs a generator name");
                std::string g = rest.substr(first);
                while (!g.empty() && std::isspace(static_cast<unsigned char>(g.back()))) g.pop_back();
                if (g.size() < 2 || g[0] != 's') fail("expected generator name like s2");
                cur = Block{};
                cur->generator = std::stoi(g.substr(1));
                rows.clear();
            } else if (head == "key") {
                if (!cur) fail("key outside table");
                Tableau key = parse_tableau(rest);
                if (key.size() != 5) fail("a window has five shapes");
                for (std::size_t k = 0; k + 1 < key.size(); ++k) {
                    auto next = successors(key[k]);
                    if (std::find(next.begin(), next.end(), key[k + 1]) == next.end())
                        fail(key[k].to_string() + " has no edge to " + key[k + 1].to_string());
                }
                cur->keys.push_back(std::move(key));
            } else if (head == "row") {
                if (!cur) fail("row outside table");
                std::vector<RatFunc> row;
                std::size_t start = 0;
                while (true) {
                    std::size_t semi = rest.find(';', start);
                    row.push_back(RatFunc::parse(rest.substr(start, semi == std::string::npos ? semi : semi - start)));
                    if (semi == std::string::npos) break;
                    start = semi + 1;
                }
                rows.push_back(std::move(row));
            } else if (head == "end") {
                if (!cur) fail("end outside table");
                const std::size_t k = cur->keys.size();
                if (rows.size() != k) fail("row count differs from key count");
                cur->matrix = RepMatrix(k, k);
                for (std::size_t r = 0; r < k; ++r) {
                    if (rows[r].size() != k) fail("row length differs from key count");
                    for (std::size_t col = 0; col < k; ++col) cur->matrix(r, col) = rows[r][col];
                }
                out.blocks_.push_back(std::move(*cur));
                cur.reset();
            } else {
                fail("unknown directive '" + head + "'");
            }
        }
        if (cur) throw ParseError(line_no, "reductive tables: missing 'end'");
        return out;
    }

    static ReductiveTables load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
        std::stringstream ss;
        ss << in.rdbuf();
        return parse(ss.str());
    }

    static const ReductiveTables& builtin() {
        static const ReductiveTables tables = parse(kReductiveTablesText);
        return tables;
    }

    const std::vector<Block>& blocks() const { return blocks_; }
    std::vector<Block>& blocks() { return blocks_; }

    /// Block of generator s_i whose keys contain the window, if any.
    const Block* find(int i, const Tableau& window) const {
        for (const auto& b : blocks_)
            if (b.generator == i && std::find(b.keys.begin(), b.keys.end(), window) != b.keys.end()) return &b;
        return nullptr;
    }

  private:
    std::vector<Block> blocks_;
};

/// Tableaux of one shape with their positions.
class PathBasis {
  public:
    PathBasis(AugShape target, Level level)
        : target_(std::move(target)), level_(level), tableaux_(partalg::tableaux(target_, level_)) {
        for (std::size_t k = 0; k < tableaux_.size(); ++k) index_.emplace(tableaux_[k], k);
    }

    const AugShape& target() const { return target_; }
    Level level() const { return level_; }
    std::size_t size() const { return tableaux_.size(); }
    const std::vector<Tableau>& tableaux() const { return tableaux_; }
    const Tableau& operator[](std::size_t k) const { return tableaux_[k]; }

    std::size_t index_of(const Tableau& t) const {
        auto it = index_.find(t);
        if (it == index_.end()) throw Error(ErrorCode::ShapeNotAtLevel, "not a tableau: " + tableau_to_string(t));
        return it->second;
    }

  private:
    AugShape target_;
    Level level_;
    std::vector<Tableau> tableaux_;
    std::map<Tableau, std::size_t> index_;
};

inline void check_coordinate(const Letter& l, Level level) {
    int need = l.tag == Letter::Tag::E ? 2 * l.index : l.tag == Letter::Tag::F ? 2 * l.index + 1 : 2 * l.index + 2;
    if (l.index < 1 || need > level.doubled)
        throw Error(ErrorCode::CoordinateOutOfRange,
                    l.to_string() + " has no matrix at level " + level.to_string());
}

class SeminormalModel {
  public:
    explicit SeminormalModel(RatFunc c = RatFunc(1), const ReductiveTables& tables = ReductiveTables::builtin())
        : c_(std::move(c)), tables_(tables) {
        if (c_.is_zero()) throw Error(ErrorCode::DivisionByZero, "configuration constant c = 0");
    }

    const RatFunc& c() const { return c_; }
    const ReductiveTables& tables() const { return tables_; }

    RepMatrix e_matrix(int i, const PathBasis& basis) const {
        check_coordinate(Letter::e(i), basis.level());
        const std::size_t a = static_cast<std::size_t>(2 * i - 2), b = a + 1, c = a + 2;
        RepMatrix m(basis.size(), basis.size());
        for (std::size_t col = 0; col < basis.size(); ++col) {
            const Tableau& p = basis[col];
            if (p[a] != p[c]) continue;
            for (const auto& h : successors(p[a])) {
                Tableau t = p;
                t[b] = h;
                m(basis.index_of(t), col) = hook_ratio(p[a], h);
            }
        }
        return m;
    }

    RepMatrix f_matrix(int i, const PathBasis& basis) const {
        check_coordinate(Letter::f(i), basis.level());
        const std::size_t a = static_cast<std::size_t>(2 * i - 1), b = a + 1, c = a + 2;
        RepMatrix m(basis.size(), basis.size());
        for (std::size_t col = 0; col < basis.size(); ++col) {
            const Tableau& p = basis[col];
            if (p[a] != p[c]) continue;
            const RatFunc entry = hook_ratio(p[b], p[a]).inverse();
            for (const auto& t_shape : successors(p[a])) {
                Tableau t = p;
                t[b] = t_shape;
                m(basis.index_of(t), col) = entry;
            }
        }
        return m;
    }

    RepMatrix s_matrix(int i, const PathBasis& basis) const {
        check_coordinate(Letter::s(i), basis.level());
        const std::size_t lo = static_cast<std::size_t>(2 * i - 2), hi = lo + 4;
        RepMatrix m(basis.size(), basis.size());
        std::vector<char> done(basis.size(), 0);
        for (std::size_t col = 0; col < basis.size(); ++col) {
            if (done[col]) continue;
            const Tableau& p = basis[col];
            const Partition& nu = p[lo].core;
            const Partition& mu = p[lo + 2].core;
            const Partition& lam = p[hi].core;
            if (covers(nu, mu) && covers(mu, lam)) {
                int d = axial_distance(nu, mu, lam);
                auto ax = AxialData::make(d, c_);
                if (std::abs(d) == 1) {
                    m(col, col) = ax.a;
                    done[col] = 1;
                    continue;
                }
                Partition other;
                for (auto& cand : nu.addable())
                    if (cand != mu && covers(cand, lam)) other = cand;
                Tableau q = p;
                q[lo + 2] = AugShape::tilde(other);
                q[lo + 3] = AugShape::hat(other);
                std::size_t first = col, second = basis.index_of(q);
                if (d > 0) {
                    std::swap(first, second);
                    ax = AxialData::make(-d, c_);
                }
                m(first, first) = ax.a;
                m(second, first) = ax.c;
                m(first, second) = ax.b / ax.c;
                m(second, second) = -ax.a;
                done[first] = done[second] = 1;
                continue;
            }
            Tableau window(p.begin() + static_cast<std::ptrdiff_t>(lo), p.begin() + static_cast<std::ptrdiff_t>(hi) + 1);
            const auto* block = tables_.find(i, window);
            if (!block)
                throw Error(ErrorCode::ReductiveUnsupported,
                            "s" + std::to_string(i) + " on window " + tableau_to_string(window));
            std::vector<std::pair<std::size_t, std::size_t>> members;  // (key index, basis index)
            for (std::size_t k = 0; k < block->keys.size(); ++k) {
                const Tableau& key = block->keys[k];
                if (key.front() != window.front() || key.back() != window.back()) continue;
                Tableau t = p;
                std::copy(key.begin(), key.end(), t.begin() + static_cast<std::ptrdiff_t>(lo));
                members.emplace_back(k, basis.index_of(t));
            }
            for (auto [ka, ia] : members) {
                for (auto [kb, ib] : members) m(ia, ib) = block->matrix(ka, kb);
                done[ia] = 1;
            }
        }
        return m;
    }

    RepMatrix generator_matrix(const Letter& l, const PathBasis& basis) const {
        switch (l.tag) {
            case Letter::Tag::E: return e_matrix(l.index, basis);
            case Letter::Tag::F: return f_matrix(l.index, basis);
            case Letter::Tag::S: return s_matrix(l.index, basis);
        }
        throw Error(ErrorCode::IndexOutOfRange, "bad letter");
    }

    /// Product of generator images in word order.
    RepMatrix rep_of_word(const Word& word, const PathBasis& basis) const {
        std::map<Letter, RepMatrix> cache;
        return rep_of_word(word, basis, cache);
    }

    RepMatrix rep_of_word(const Word& word, const PathBasis& basis, std::map<Letter, RepMatrix>& cache) const {
        RepMatrix acc = RepMatrix::identity(basis.size());
        for (const auto& l : word) {
            auto it = cache.find(l);
            if (it == cache.end()) it = cache.emplace(l, generator_matrix(l, basis)).first;
            acc = acc * it->second;
        }
        return acc;
    }

    std::map<AugShape, RatFunc> trace_of(const Word& word, Level level) const {
        std::map<AugShape, RatFunc> out;
        for (const auto& v : vertices(level)) {
            PathBasis basis(v, level);
            out.emplace(v, rep_of_word(word, basis).trace());
        }
        return out;
    }

    /// Relations of the algebra at this level, checked as matrix identities on every shape.
    Report verify_rep_relations(Level level) const {
        std::vector<RelationInstance> rels = relations_at(level);
        Report report;
        for (const auto& v : vertices(level)) {
            PathBasis basis(v, level);
            std::map<Letter, RepMatrix> cache;
            for (const auto& r : rels) {
                RepMatrix lhs = rep_of_word(r.lhs, basis, cache);
                RepMatrix rhs = rep_of_word(r.rhs, basis, cache);
                if (r.rhs_q_power > 0) rhs = RatFunc(IntPoly::monomial(1, static_cast<std::size_t>(r.rhs_q_power))) * rhs;
                report.add({"rep " + level.to_string() + " " + v.to_string(), r.rule, r.label, r.to_string(), lhs == rhs});
            }
        }
        return report;
    }

    /// Relations whose letters all have matrices at the level.
    static std::vector<RelationInstance> relations_at(Level level) {
        const Alphabet a = Alphabet::at_level(level.doubled);
        std::vector<RelationInstance> rels = basic_relations(a);
        auto add = [&](std::vector<RelationInstance> more) { rels.insert(rels.end(), more.begin(), more.end()); };
        add(primed_relations(a));
        add(derived_relations(a));
        if (!level.is_integer()) add(half_relations((level.doubled + 1) / 2));
        return rels;
    }

    /// Rank at Q = q0 of the matrix whose rows are the images of all basis
    /// diagrams in the direct sum over the shapes of the level.
    std::size_t faithfulness_rank(Level level, const Rational& q0) const {
        const int n = (level.doubled + 1) / 2;
        std::vector<Word> words;
        if (level.is_integer()) {
            for (const auto& w : enumerate_all(n, n)) words.push_back(standard_word(w));
        } else {
            HalfWordTable table(n);
            for (const auto& w : enumerate_all(n, n))
                if (has_fixed_last_strand(w)) words.push_back(table(w));
        }
        const Alphabet alphabet = Alphabet::at_level(level.doubled);
        std::vector<std::vector<RationalMatrix>> images(words.size());
        std::size_t width = 0;
        for (const auto& v : vertices(level)) {
            PathBasis basis(v, level);
            width += basis.size() * basis.size();
            std::map<Letter, RationalMatrix> gens;
            for (const auto& l : alphabet.letters())
                gens.emplace(l, generator_matrix(l, basis).map([&](const RatFunc& x) { return x.eval_at(q0); }));
            for (std::size_t k = 0; k < words.size(); ++k) {
                RationalMatrix acc = RationalMatrix::identity(basis.size());
                for (const auto& l : words[k]) acc = acc * gens.at(l);
                images[k].push_back(std::move(acc));
            }
        }
        RationalMatrix big(words.size(), width);
        for (std::size_t k = 0; k < words.size(); ++k) {
            std::size_t col = 0;
            for (const auto& m : images[k])
                for (std::size_t i = 0; i < m.rows(); ++i)
                    for (std::size_t j = 0; j < m.cols(); ++j) big(k, col++) = m(i, j);
        }
        return rank(std::move(big));
    }

  private:
    static bool covers(const Partition& small, const Partition& large) {
        if (large.size() != small.size() + 1) return false;
        auto adds = small.addable();
        return std::find(adds.begin(), adds.end(), large) != adds.end();
    }

    RatFunc c_;
    ReductiveTables tables_;
};

}  // namespace partalg
