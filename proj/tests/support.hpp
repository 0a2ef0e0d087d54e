#pragma once

#include <random>
#include <set>

#include "oracles.hpp"
#include "partalg/partalg.hpp"

namespace testing_support {

inline constexpr std::uint64_t kSeed = 20240601;

inline oracle::Blocks blocks_of(const partalg::SeatPlan& w) {
    oracle::Blocks out;
    for (const auto& b : w.blocks()) out.insert(std::set<int>(b.begin(), b.end()));
    return out;
}

/// Uniform random word of the given length over an alphabet.
inline partalg::Word random_word(std::mt19937_64& rng, const std::vector<partalg::Letter>& letters, int length) {
    std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
    partalg::Word w;
    for (int k = 0; k < length; ++k) w.push_back(letters[pick(rng)]);
    return w;
}

/// Random polynomial with small integer coefficients.
inline partalg::IntPoly random_poly(std::mt19937_64& rng, int max_degree) {
    std::uniform_int_distribution<int> coeff(-4, 4), deg(0, max_degree);
    partalg::IntPoly p;
    for (int d = deg(rng); d >= 0; --d) p = p + partalg::IntPoly::monomial(coeff(rng), static_cast<std::size_t>(d));
    return p;
}

inline partalg::RatFunc random_ratfunc(std::mt19937_64& rng) {
    partalg::IntPoly den;
    while (den.is_zero()) den = random_poly(rng, 2);
    return partalg::RatFunc(random_poly(rng, 3), den);
}

}  // namespace testing_support
