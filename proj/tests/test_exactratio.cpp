#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace partalg;
using testing_support::random_ratfunc;

namespace {

RatFunc rf(const char* text) { return RatFunc::parse(text); }

}  // namespace

TEST(IntPoly, ArithmeticAndPrinting) {
    IntPoly q = IntPoly::q();
    IntPoly p = (q - IntPoly(1)) * (q + IntPoly(2));
    EXPECT_EQ(p.to_string(), "Q^2 + Q - 2");
    EXPECT_EQ(p.degree(), 2);
    EXPECT_EQ(IntPoly().to_string(), "0");
    EXPECT_EQ((q - IntPoly(1)).pow(3).eval(3), 8);
}

TEST(IntPoly, GcdOfSharedFactor) {
    IntPoly q = IntPoly::q();
    IntPoly a = (q - IntPoly(2)) * (q - IntPoly(3)) * IntPoly(6);
    IntPoly b = (q - IntPoly(2)) * (q + IntPoly(5)) * IntPoly(4);
    IntPoly g = gcd(a, b);
    EXPECT_EQ(g.degree(), 1);
    EXPECT_EQ(g.eval(2), 0);
}

TEST(RatFunc, CanonicalForm) {
    EXPECT_EQ(rf("Q/(Q-1)").to_string(), "Q / (Q - 1)");
    EXPECT_EQ(rf("(2*Q-2)/(4*Q-4)").to_string(), "1 / (2)");
    EXPECT_EQ(rf("(Q^2-1)/(Q+1)").to_string(), "Q - 1");
    EXPECT_EQ(rf("1/(-Q)").to_string(), "-1 / (Q)");
    EXPECT_EQ(rf("3*(Q-1)/(2*(Q-2))"), rf("(3*Q-3)/(2*Q-4)"));
    EXPECT_EQ(rf("1/2") + rf("1/2"), RatFunc(1));
}

TEST(RatFunc, ParserGrammar) {
    EXPECT_EQ(rf("-(Q-2)/(Q-1)^2"), RatFunc(IntPoly(2) - IntPoly::q(), (IntPoly::q() - IntPoly(1)).pow(2)));
    EXPECT_EQ(rf("Q^0"), RatFunc(1));
    EXPECT_EQ(rf(" 2 * Q "), RatFunc(IntPoly::monomial(2, 1)));
    EXPECT_EQ(rf("((Q))"), RatFunc::q());
}

TEST(RatFunc, ParserRejectsMalformedInput) {
    EXPECT_THROW(rf("Q+"), ParseError);
    EXPECT_THROW(rf("(Q-1"), ParseError);
    EXPECT_THROW(rf("x"), ParseError);
    EXPECT_THROW(rf("1/0"), ParseError);
    EXPECT_THROW(rf(""), ParseError);
    try {
        rf("Q - * 2");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.code(), ErrorCode::ParseError);
        EXPECT_GT(e.position(), 0u);
    }
}

TEST(RatFunc, DivisionByZeroAndPoles) {
    EXPECT_THROW(RatFunc(0).inverse(), Error);
    try {
        RatFunc(1) / RatFunc(0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DivisionByZero);
    }
    try {
        rf("1/(Q-3)").eval_at(3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::PoleAtPoint);
    }
    EXPECT_EQ(rf("(Q-3)/(Q-3)").eval_at(3), 1);
}

TEST(RatFunc, ParseRationalHandlesSigns) {
    EXPECT_EQ(parse_rational("-3/4"), make_rational(-3, 4));
    EXPECT_EQ(parse_rational("3/-4"), make_rational(-3, 4));
    EXPECT_EQ(parse_rational("101"), Rational(101));
    EXPECT_THROW(parse_rational("1/0"), Error);
}

TEST(RatFuncProperty, FieldAxiomsOnRandomElements) {
    std::mt19937_64 rng(testing_support::kSeed);
    for (int trial = 0; trial < 150; ++trial) {
        RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng), c = random_ratfunc(rng);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a - b) + b, a);
        EXPECT_TRUE((a - a).is_zero());
        if (!b.is_zero()) {
            EXPECT_EQ((a / b) * b, a);
        }
        if (!a.is_zero()) {
            EXPECT_EQ(a * a.inverse(), RatFunc(1));
        }
        EXPECT_EQ(RatFunc::parse(a.to_string()), a);
    }
}

TEST(RatFuncProperty, EvaluationIsAHomomorphism) {
    std::mt19937_64 rng(testing_support::kSeed + 1);
    std::uniform_int_distribution<int> num(-30, 30), den(1, 7);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng);
        Rational x = make_rational(num(rng), den(rng));
        try {
            Rational ax = a.eval_at(x), bx = b.eval_at(x);
            EXPECT_EQ((a + b).eval_at(x), ax + bx);
            EXPECT_EQ((a * b).eval_at(x), ax * bx);
            ++checked;
        } catch (const Error& e) {
            ASSERT_EQ(e.code(), ErrorCode::PoleAtPoint);
        }
    }
    EXPECT_GT(checked, 100);
}

TEST(RatFuncProperty, EqualValuesHaveEqualStrings) {
    std::mt19937_64 rng(testing_support::kSeed + 2);
    for (int trial = 0; trial < 100; ++trial) {
        RatFunc a = random_ratfunc(rng);
        IntPoly k;
        while (k.is_zero()) k = testing_support::random_poly(rng, 2);
        RatFunc scaled(a.num() * k, a.den() * k);
        EXPECT_EQ(scaled.to_string(), a.to_string());
    }
}

TEST(RatFunc, WorkedExamples) {
    EXPECT_EQ(rf("1/Q") + rf("(Q-1)/Q"), RatFunc(1));
    EXPECT_TRUE((rf("Q/(Q-1)") + rf("-Q/(Q-1)")).is_zero());
    EXPECT_EQ(rf("Q/(Q-1)") * rf("(Q-1)/Q"), RatFunc(1));
    EXPECT_EQ(rf("(Q-2)*(Q-2)/(Q-1)^2"), RatFunc(rf("Q^2-4*Q+4").num(), rf("Q^2-2*Q+1").num()));
    EXPECT_EQ(rf("Q/(Q-1)").inverse(), rf("(Q-1)/Q"));
    EXPECT_EQ(RatFunc(1).inverse(), RatFunc(1));
    EXPECT_EQ(rf("(Q^2-Q)/(Q-1)").inverse().to_string(), "1 / (Q)");
    EXPECT_EQ(rf("Q/(Q-1)").eval_at(3), make_rational(3, 2));
    EXPECT_EQ(rf("Q*(Q-2)/(Q-1)").eval_at(2), 0);
    EXPECT_THROW(rf("1/(Q-1)").eval_at(1), Error);
    IntPoly p = rf("Q^2 - 3*Q + 4").num();
    EXPECT_EQ(std::vector<BigInt>(p.coeffs().begin(), p.coeffs().end()), (std::vector<BigInt>{4, -3, 1}));
    EXPECT_THROW(rf("(Q"), ParseError);
}

TEST(IntPoly, DegreeIsAdditive) {
    std::mt19937_64 rng(testing_support::kSeed + 3);
    for (int trial = 0; trial < 100; ++trial) {
        IntPoly a = testing_support::random_poly(rng, 4), b = testing_support::random_poly(rng, 4);
        if (a.is_zero() || b.is_zero()) continue;
        EXPECT_EQ((a * b).degree(), a.degree() + b.degree());
    }
}
