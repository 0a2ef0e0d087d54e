#pragma once

// Command-line front end. Exit codes: 0 success, 1 domain error, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "partalg/partalg.hpp"

namespace partalg::cli {

namespace detail {

using nlohmann::json;

struct Options {
    bool json = false;
    std::uint64_t seed = 20240601;
    bool unsafe = false;
};

class Printer {
  public:
    Printer(std::ostream& out, bool as_json) : out_(out), json_(as_json) {}

    void line(const std::string& text, const json& record) {
        if (json_) out_ << record.dump() << "\n";
        else out_ << text << "\n";
    }

    /// Text only; JSON mode skips decoration.
    void note(const std::string& text) {
        if (!json_) out_ << text << "\n";
    }

  private:
    std::ostream& out_;
    bool json_;
};

inline json block_json(const SeatPlan& w) {
    json blocks = json::array();
    for (const auto& b : w.blocks()) blocks.push_back(b);
    return {{"n", w.n()}, {"blocks", blocks}};
}

inline std::string word_value_text(const WordValue& v) {
    return "Q^" + std::to_string(v.power) + " * " + v.diagram.to_string();
}

inline void require_bound(bool unsafe, bool ok, const std::string& what) {
    if (!unsafe && !ok) throw Error(ErrorCode::BoundExceeded, what + " (pass --unsafe-bounds to override)");
}

inline RatFunc parse_c(const std::string& text) {
    RatFunc c = RatFunc::parse(text);
    if (c.is_zero()) throw Error(ErrorCode::DivisionByZero, "configuration constant c must be nonzero");
    return c;
}

inline void print_report(Printer& p, const Report& r, bool verbose) {
    for (const auto& e : r.entries) {
        if (!verbose && e.passed) continue;
        p.line(std::string(e.passed ? "PASS " : "FAIL ") + e.suite + " " + e.rule + " [" + e.label + "] " +
                   e.statement,
               {{"suite", e.suite}, {"rule", e.rule}, {"label", e.label}, {"statement", e.statement},
                {"passed", e.passed}});
    }
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using detail::json;
    detail::Options opt;
    CLI::App app{"Exact computations in partition algebras"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", opt.json, "Emit one JSON record per result line");
    app.add_option("--seed", opt.seed, "Seed for randomized sweeps");
    app.add_flag("--unsafe-bounds", opt.unsafe, "Lift the default size bounds");

    int n = 0;
    std::string level_text;
    std::string c_text = "1";
    std::vector<std::string> positional;

    auto* multiply = app.add_subcommand("multiply", "Product of two elements of A_n(Q)");
    multiply->add_option("--n", n, "Strand count")->required();
    multiply->add_option("operands", positional, "Two elements")->expected(2)->required();

    auto* std_word = app.add_subcommand("standard-word", "Generator word of a seat-plan");
    std_word->add_option("--n", n, "Strand count");
    std_word->add_option("diagram", positional, "Seat-plan")->expected(1)->required();

    auto* eval = app.add_subcommand("eval-word", "Diagram and Q-power of a word");
    eval->add_option("--n", n, "Strand count")->required();
    eval->add_option("word", positional, "Word such as \"s1 f2 e3\"")->expected(1)->required();

    bool fixed_last = false;
    bool count_only = false;
    auto* enumerate = app.add_subcommand("enumerate", "List every seat-plan");
    enumerate->add_option("--n", n, "Strand count")->required();
    enumerate->add_flag("--fixed-last", fixed_last, "Only seat-plans joining n and n'");
    enumerate->add_flag("--count", count_only, "Print the count only");

    auto* dims = app.add_subcommand("dims", "Path counts of the level graph");
    auto* dims_n = dims->add_option("--n", n, "Integer level");
    auto* dims_level = dims->add_option("--level", level_text, "Level, e.g. 5/2");
    dims_n->excludes(dims_level);

    auto* dot = app.add_subcommand("bratteli-dot", "Level graph in DOT form");
    dot->add_option("--level", level_text, "Top level")->required();

    std::string shape_text;
    std::string gen_text;
    std::string tables_path;
    bool grid = false;
    auto* rep = app.add_subcommand("rep-matrix", "Matrix of a generator on one shape");
    rep->add_option("--level", level_text, "Level")->required();
    rep->add_option("--shape", shape_text, "Shape such as ~[1]")->required();
    rep->add_option("--gen", gen_text, "Generator such as s2, or a word")->required();
    rep->add_option("--c", c_text, "Nonzero constant of the 2x2 blocks");
    rep->add_option("--tables", tables_path, "Alternative reductive tables file");
    rep->add_flag("--grid", grid, "Dense grid instead of entry lines");

    std::string what = "diagram-relations,half-relations,round-trip,bratteli,hooks,rep-relations";
    bool verbose = false;
    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("--n", n, "Strand count / top level")->required();
    verify->add_option("--what", what, "Comma-separated suites");
    verify->add_option("--c", c_text, "Nonzero constant of the 2x2 blocks");
    verify->add_option("--tables", tables_path, "Alternative reductive tables file");
    verify->add_flag("--verbose", verbose, "Print passing checks too");

    std::string q0_text = "101";
    auto* rank_cmd = app.add_subcommand("rank", "Rank of the regular image at a specialization");
    rank_cmd->add_option("--level", level_text, "Level")->required();
    rank_cmd->add_option("--q0", q0_text, "Value substituted for Q");
    rank_cmd->add_option("--c", c_text, "Nonzero constant of the 2x2 blocks");

    auto* trace = app.add_subcommand("trace", "Trace of a word on every shape");
    trace->add_option("--level", level_text, "Level")->required();
    trace->add_option("--c", c_text, "Nonzero constant of the 2x2 blocks");
    trace->add_option("word", positional, "Word")->expected(1)->required();

    std::vector<std::string> argv_store;
    argv_store.emplace_back("partalg");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    detail::Printer p(out, opt.json);
    auto load_tables = [&]() {
        return tables_path.empty() ? ReductiveTables::builtin() : ReductiveTables::load(tables_path);
    };

    try {
        if (*multiply) {
            AlgElement a = AlgElement::parse(positional[0], n);
            AlgElement b = AlgElement::parse(positional[1], n);
            AlgElement prod = a * b;
            json terms = json::array();
            for (const auto& [w, c] : prod.terms())
                terms.push_back({{"coeff", c.to_string()}, {"diagram", w.to_string()}});
            p.line(prod.to_string(), {{"n", n}, {"product", prod.to_string()}, {"terms", terms}});
        } else if (*std_word) {
            std::optional<int> size;
            if (n > 0) size = n;
            SeatPlan w = SeatPlan::parse(positional[0], size);
            Word word = standard_word(w);
            p.line(word_to_string(word), {{"diagram", w.to_string()}, {"word", word_to_string(word)}});
        } else if (*eval) {
            Word word = parse_word(positional[0]);
            WordValue v = eval_word(word, n);
            p.line(detail::word_value_text(v),
                   {{"word", word_to_string(word)}, {"power", v.power}, {"diagram", v.diagram.to_string()}});
        } else if (*enumerate) {
            detail::require_bound(opt.unsafe, n <= 4, "enumeration is limited to n <= 4");
            SeatPlanEnumerator it(n, opt.unsafe ? n : 4);
            std::size_t count = 0;
            while (auto w = it.next()) {
                if (fixed_last && !has_fixed_last_strand(*w)) continue;
                ++count;
                if (!count_only) p.line(w->to_string(), detail::block_json(*w));
            }
            if (count_only) p.line("count = " + std::to_string(count), {{"n", n}, {"count", count}});
        } else if (*dims) {
            Level level = level_text.empty() ? Level::whole(n) : Level::parse(level_text);
            if (level_text.empty() && n <= 0) throw CLI::ValidationError("dims needs --n or --level");
            detail::require_bound(opt.unsafe, level.doubled <= 8, "dims is limited to level <= 4");
            auto table = dimensions(level);
            for (const auto& v : vertices(level)) {
                auto it = table.find(v);
                BigInt d = it == table.end() ? BigInt(0) : it->second;
                p.line(v.to_string() + " " + d.str(), {{"shape", v.to_string()}, {"dim", d.str()}});
            }
            BigInt total = sum_of_squares(level);
            p.line("sum_of_squares = " + total.str(), {{"level", level.to_string()}, {"sum_of_squares", total.str()}});
        } else if (*dot) {
            Level level = Level::parse(level_text);
            detail::require_bound(opt.unsafe, level.doubled <= 8, "bratteli-dot is limited to level <= 4");
            std::string text = graph_export(level);
            if (opt.json) p.line("", {{"level", level.to_string()}, {"dot", text}});
            else out << text;
        } else if (*rep) {
            Level level = Level::parse(level_text);
            detail::require_bound(opt.unsafe, level.doubled <= 6, "representations are limited to level <= 3");
            SeminormalModel model(detail::parse_c(c_text), load_tables());
            PathBasis basis(AugShape::parse(shape_text), level);
            Word word = parse_word(gen_text);
            RepMatrix m = model.rep_of_word(word, basis);
            p.note("# shape " + basis.target().to_string() + " level " + level.to_string() + " gen " +
                   word_to_string(word) + " c " + model.c().to_string());
            for (std::size_t k = 0; k < basis.size(); ++k)
                p.note("# " + std::to_string(k + 1) + ": " + tableau_to_string(basis[k]));
            if (grid && !opt.json) {
                for (std::size_t r = 0; r < m.rows(); ++r) {
                    std::string row;
                    for (std::size_t c = 0; c < m.cols(); ++c) row += (c ? " | " : "") + m(r, c).to_string();
                    out << row << "\n";
                }
            } else {
                for (std::size_t r = 0; r < m.rows(); ++r)
                    for (std::size_t c = 0; c < m.cols(); ++c)
                        if (!m(r, c).is_zero())
                            p.line(std::to_string(r + 1) + " " + std::to_string(c + 1) + " " + m(r, c).to_string(),
                                   {{"row", r + 1}, {"col", c + 1}, {"value", m(r, c).to_string()}});
            }
        } else if (*verify) {
            Report report;
            std::vector<std::string> suites = CLI::detail::split(what, ',');
            for (const auto& s : suites) {
                if (s == "diagram-relations") {
                    report.append(relation_suite(n));
                } else if (s == "half-relations") {
                    report.append(half_relation_suite(n));
                } else if (s == "round-trip") {
                    detail::require_bound(opt.unsafe, n <= 4, "round-trip is limited to n <= 4");
                    std::mt19937_64 rng(opt.seed);
                    std::size_t bad = 0, checked = 0;
                    for (const auto& w : enumerate_all(n, opt.unsafe ? n : 4)) {
                        if (n > 4 && std::uniform_int_distribution<int>(0, 99)(rng) != 0) continue;
                        ++checked;
                        WordValue v = eval_word(standard_word(w), n);
                        if (!(v.diagram == w && v.power == 0)) ++bad;
                    }
                    report.add({"standard-word", "round-trip", "n=" + std::to_string(n),
                                std::to_string(checked) + " seat-plans, " + std::to_string(bad) + " mismatches",
                                bad == 0});
                } else if (s == "bratteli") {
                    for (int d = 1; d <= 2 * n; ++d) {
                        Level level = Level::from_doubled(d);
                        BigInt sum = sum_of_squares(level);
                        std::size_t count = 0;
                        int strands = (d + 1) / 2;
                        for (const auto& w : enumerate_all(strands, opt.unsafe ? strands : 5))
                            if (level.is_integer() || has_fixed_last_strand(w)) ++count;
                        report.add({"bratteli", "sum-of-squares", "level=" + level.to_string(),
                                    sum.str() + " against " + std::to_string(count) + " seat-plans",
                                    sum == BigInt(count)});
                    }
                } else if (s == "hooks") {
                    for (int k = 0; k <= std::max(n, 1); ++k) {
                        for (const auto& lam : Partition::of_size(k)) {
                            RatFunc down_sum(0), up_sum(0);
                            for (const auto& h : successors(AugShape::tilde(lam)))
                                down_sum += hook_ratio(AugShape::tilde(lam), h);
                            for (const auto& t : successors(AugShape::hat(lam)))
                                up_sum += hook_ratio(t, AugShape::hat(lam)).inverse();
                            report.add({"hooks", "row-sum", lam.to_string(), "sum = " + down_sum.to_string(),
                                        down_sum == RatFunc::q()});
                            report.add({"hooks", "column-sum", lam.to_string(), "sum = " + up_sum.to_string(),
                                        up_sum == RatFunc(1)});
                        }
                    }
                } else if (s == "rep-relations") {
                    SeminormalModel model(detail::parse_c(c_text), load_tables());
                    int top = opt.unsafe ? 2 * n : std::min(2 * n, 6);
                    for (int d = 2; d <= top; ++d) report.append(model.verify_rep_relations(Level::from_doubled(d)));
                } else {
                    throw CLI::ValidationError("unknown suite '" + s + "'");
                }
            }
            detail::print_report(p, report, verbose);
            std::string summary = report.all_passed()
                                      ? "all passed"
                                      : std::to_string(report.failures()) + " of " +
                                            std::to_string(report.entries.size()) + " checks failed";
            p.line(summary, {{"checks", report.entries.size()}, {"failures", report.failures()}});
            return report.all_passed() ? 0 : 1;
        } else if (*rank_cmd) {
            Level level = Level::parse(level_text);
            detail::require_bound(opt.unsafe, level.doubled <= 6, "rank is limited to level <= 3");
            SeminormalModel model(detail::parse_c(c_text));
            Rational q0 = parse_rational(q0_text);
            std::size_t r = model.faithfulness_rank(level, q0);
            p.line("rank = " + std::to_string(r),
                   {{"level", level.to_string()}, {"q0", to_string(q0)}, {"rank", r}});
        } else if (*trace) {
            Level level = Level::parse(level_text);
            detail::require_bound(opt.unsafe, level.doubled <= 6, "traces are limited to level <= 3");
            SeminormalModel model(detail::parse_c(c_text));
            Word word = parse_word(positional[0]);
            for (const auto& [shape, t] : model.trace_of(word, level))
                p.line(shape.to_string() + " " + t.to_string(), {{"shape", shape.to_string()}, {"trace", t.to_string()}});
        }
    } catch (const CLI::ValidationError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace partalg::cli
