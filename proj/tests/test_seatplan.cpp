#include <gtest/gtest.h>

#include <functional>
#include <random>
#include <set>

#include "support.hpp"

using namespace partalg;
using testing_support::blocks_of;

TEST(SeatPlan, ParseAndPrintRoundTrip) {
    SeatPlan w = SeatPlan::parse("{{2,5},{1,1',3',4'},{3,4},{2',5'}}");
    EXPECT_EQ(w.n(), 5);
    EXPECT_EQ(w.to_string(), "{{1,1',3',4'},{2,5},{3,4},{2',5'}}");
    EXPECT_EQ(SeatPlan::parse(w.to_string()), w);
    EXPECT_EQ(SeatPlan::identity(2).to_string(), "{{1,1'},{2,2'}}");
}

TEST(SeatPlan, PrintedFormIsIndependentOfInputOrder) {
    EXPECT_EQ(SeatPlan::parse("{{1'},{2,2'},{1}}"), SeatPlan::parse("{{1},{1'},{2,2'}}"));
    EXPECT_EQ(generator_e(2, 1).to_string(), "{{1},{2,2'},{1'}}");
}

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorCode::ParseError;
}

}  // namespace

TEST(SeatPlan, ParseRejectsBadInput) {
    EXPECT_EQ(code_of([] { SeatPlan::parse("{{1,2}"); }), ErrorCode::ParseError);
    EXPECT_EQ(code_of([] { SeatPlan::parse("{{0}}"); }), ErrorCode::ParseError);
    EXPECT_EQ(code_of([] { SeatPlan::parse("{{1,1},{1'}}"); }), ErrorCode::NotAPartition);
    EXPECT_EQ(code_of([] { SeatPlan::parse("{{1,1'},{2,2'}}", 3); }), ErrorCode::NotAPartition);
}

TEST(SeatPlan, MakeValidates) {
    EXPECT_EQ(code_of([] { SeatPlan::make(2, {{1}, {2, -2}}); }), ErrorCode::NotAPartition);
    EXPECT_EQ(code_of([] { SeatPlan::make(2, {{1, -1}, {}, {2, -2}}); }), ErrorCode::NotAPartition);
    EXPECT_EQ(code_of([] { SeatPlan::make(1, {{1, -1, 2}}); }), ErrorCode::NotAPartition);
    EXPECT_EQ(SeatPlan::make(1, {{1, -1}}), SeatPlan::identity(1));
    SeatPlan w1 = SeatPlan::make(5, {{-4, 1, -1}, {5, 2}, {3, 4}, {-2}, {-5, -3}});
    EXPECT_EQ(w1.to_string(), "{{1,1',4'},{2,5},{3,4},{2'},{3',5'}}");
}

TEST(SeatPlan, GeneratorDiagrams) {
    EXPECT_EQ(blocks_of(generator_f(2, 1)), (oracle::Blocks{{1, 2, -1, -2}}));
    EXPECT_EQ(blocks_of(generator_e(2, 1)), (oracle::Blocks{{1}, {-1}, {2, -2}}));
    EXPECT_EQ(blocks_of(generator_s(3, 2)), (oracle::Blocks{{1, -1}, {2, -3}, {3, -2}}));
    for (int n = 1; n <= 4; ++n)
        for (int i = 1; i <= n; ++i) {
            EXPECT_EQ(propagating_number(generator_e(n, i)), n - 1);
            EXPECT_EQ(involution_star(generator_e(n, i)), generator_e(n, i));
            if (i < n) {
                EXPECT_EQ(involution_star(generator_s(n, i)), generator_s(n, i));
                EXPECT_EQ(involution_star(generator_f(n, i)), generator_f(n, i));
            }
        }
    EXPECT_FALSE(has_fixed_last_strand(generator_e(3, 3)));
}

TEST(SeatPlan, WorkedProduct) {
    SeatPlan a = SeatPlan::parse("{{1,1',4'}, {2,5},{3,4}, {2'},{3',5'}}");
    SeatPlan b = SeatPlan::parse("{{1,1',3',4'}, {2}, {3,5}, {4}, {2',5'}}");
    auto r = compose(a, b);
    EXPECT_EQ(r.removed, 2);
    EXPECT_EQ(r.diagram.to_string(), "{{1,1',3',4'},{2,5},{3,4},{2',5'}}");
}

TEST(SeatPlan, SizeMismatch) {
    try {
        compose(SeatPlan::identity(2), SeatPlan::identity(3));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::SizeMismatch);
    }
}

TEST(SeatPlan, GeneratorIndexChecks) {
    EXPECT_THROW(generator_s(3, 3), Error);
    EXPECT_THROW(generator_f(3, 0), Error);
    EXPECT_THROW(generator_e(3, 4), Error);
    EXPECT_NO_THROW(generator_e(3, 3));
}

TEST(SeatPlan, GeneratorSquares) {
    for (int i = 1; i < 4; ++i) {
        auto ss = compose(generator_s(4, i), generator_s(4, i));
        EXPECT_EQ(ss.diagram, SeatPlan::identity(4));
        EXPECT_EQ(ss.removed, 0);
        auto ff = compose(generator_f(4, i), generator_f(4, i));
        EXPECT_EQ(ff.diagram, generator_f(4, i));
        EXPECT_EQ(ff.removed, 0);
    }
    for (int i = 1; i <= 4; ++i) {
        auto ee = compose(generator_e(4, i), generator_e(4, i));
        EXPECT_EQ(ee.diagram, generator_e(4, i));
        EXPECT_EQ(ee.removed, 1);
    }
}

TEST(SeatPlan, PartsAndPropagatingNumber) {
    SeatPlan w = SeatPlan::parse("{{1,1',4'},{2,5},{3,4},{2'},{3',5'}}");
    EXPECT_EQ(propagating_number(w), 1);
    EXPECT_EQ(propagating_number(SeatPlan::identity(4)), 4);
    EXPECT_EQ(upper_parts(w).size(), 3u);
    EXPECT_EQ(lower_parts(w).size(), 3u);
    EXPECT_EQ(blocks_of(involution_star(w)), (oracle::Blocks{{1, 4, -1}, {-2, -5}, {-3, -4}, {2}, {3, 5}}));
    EXPECT_FALSE(has_fixed_last_strand(w));
    EXPECT_TRUE(has_fixed_last_strand(SeatPlan::identity(3)));
}

TEST(SeatPlan, EnumerationBound) {
    EXPECT_THROW(SeatPlanEnumerator(6), Error);
    EXPECT_NO_THROW(SeatPlanEnumerator(6, 6));
}

TEST(SeatPlan, EnumerationMatchesBellNumbers) {
    auto bell = oracle::bell_numbers(9);
    for (int n = 1; n <= 4; ++n) {
        auto all = enumerate_all(n);
        EXPECT_EQ(all.size(), bell[static_cast<std::size_t>(2 * n)]) << "n=" << n;
        std::set<SeatPlan> distinct(all.begin(), all.end());
        EXPECT_EQ(distinct.size(), all.size());
        std::size_t fixed = std::count_if(all.begin(), all.end(), has_fixed_last_strand);
        EXPECT_EQ(fixed, bell[static_cast<std::size_t>(2 * n - 1)]) << "n=" << n;
    }
}

// Random pairs against the depth-first-search oracle.
TEST(SeatPlanProperty, ComposeAgreesWithOracle) {
    std::mt19937_64 rng(testing_support::kSeed);
    for (int n = 1; n <= 4; ++n) {
        auto all = enumerate_all(n);
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        for (int trial = 0; trial < 300; ++trial) {
            const SeatPlan& a = all[pick(rng)];
            const SeatPlan& b = all[pick(rng)];
            auto r = compose(a, b);
            auto [blocks, removed] = oracle::stack(n, blocks_of(a), blocks_of(b));
            ASSERT_EQ(blocks_of(r.diagram), blocks) << a.to_string() << " * " << b.to_string();
            ASSERT_EQ(r.removed, removed);
        }
    }
}

namespace {

void expect_associative(const SeatPlan& a, const SeatPlan& b, const SeatPlan& c) {
    auto ab = compose(a, b);
    auto left = compose(ab.diagram, c);
    auto bc = compose(b, c);
    auto right = compose(a, bc.diagram);
    ASSERT_EQ(left.diagram, right.diagram);
    ASSERT_EQ(ab.removed + left.removed, bc.removed + right.removed);
}

}  // namespace

TEST(SeatPlanProperty, AssociativityExhaustiveSmall) {
    for (int n = 1; n <= 2; ++n) {
        auto all = enumerate_all(n);
        for (const auto& a : all)
            for (const auto& b : all)
                for (const auto& c : all) expect_associative(a, b, c);
    }
}

TEST(SeatPlanProperty, AssociativityRandom) {
    std::mt19937_64 rng(testing_support::kSeed + 1);
    for (int n = 3; n <= 4; ++n) {
        auto all = enumerate_all(n);
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        for (int trial = 0; trial < 500; ++trial) expect_associative(all[pick(rng)], all[pick(rng)], all[pick(rng)]);
    }
}

TEST(SeatPlanProperty, StarIsAnInvolutiveAntiHomomorphism) {
    std::mt19937_64 rng(testing_support::kSeed + 2);
    auto all = enumerate_all(3);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (const auto& w : all) {
        EXPECT_EQ(blocks_of(involution_star(w)), oracle::swap_rows(blocks_of(w)));
        EXPECT_EQ(involution_star(involution_star(w)), w);
    }
    for (int trial = 0; trial < 300; ++trial) {
        const SeatPlan &a = all[pick(rng)], &b = all[pick(rng)];
        auto ab = compose(a, b);
        auto ba = compose(involution_star(b), involution_star(a));
        ASSERT_EQ(involution_star(ab.diagram), ba.diagram);
        ASSERT_EQ(ab.removed, ba.removed);
    }
}

TEST(SeatPlanProperty, PropagatingNumberBound) {
    std::mt19937_64 rng(testing_support::kSeed + 3);
    auto all = enumerate_all(3);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int trial = 0; trial < 500; ++trial) {
        const SeatPlan &a = all[pick(rng)], &b = all[pick(rng)];
        int p = propagating_number(compose(a, b).diagram);
        ASSERT_LE(p, std::min(propagating_number(a), propagating_number(b)));
    }
}

TEST(SeatPlanProperty, IdentityIsNeutral) {
    for (const auto& w : enumerate_all(3)) {
        auto l = compose(SeatPlan::identity(3), w);
        auto r = compose(w, SeatPlan::identity(3));
        EXPECT_EQ(l.diagram, w);
        EXPECT_EQ(r.diagram, w);
        EXPECT_EQ(l.removed + r.removed, 0);
    }
}
