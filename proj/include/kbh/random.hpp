#pragma once

#include "kbh/beta.hpp"
#include "kbh/mma.hpp"

#include <random>
#include <vector>

namespace kbh::random {

using Rng = std::mt19937_64;

/// Nonzero p/q with |p| <= 3, 1 <= q <= 3.
Q small_rational(Rng& rng);
/// A few Lyndon basis terms at every degree 1..D.
LieSeries random_lie(Rng& rng, const std::vector<Letter>& alphabet, int D, int per_degree = 2);
/// A few cyclic words at every degree 2..D.
CyclicSeries random_wheels(Rng& rng, const std::vector<Letter>& alphabet, int D, int per_degree = 2);
MMAElement random_mma(Rng& rng, const std::vector<Letter>& tails, const std::vector<Letter>& heads, int D);

/// Sum of one or two terms c (m - 1), m a monomial with exponents in {-1,0,1}:
/// a small Laurent polynomial vanishing at t = 1.
RatFun random_entry(Rng& rng, const std::vector<Letter>& tails);
/// Entries from random_entry (some zero), omega = 1 + random_entry.
BetaElement random_beta(Rng& rng, const std::vector<Letter>& tails, const std::vector<Letter>& heads);

}  // namespace kbh::random
