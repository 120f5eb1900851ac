#pragma once

// Seeded samplers for points of mixed-norm unit balls.
//
// Membership is guaranteed, uniformity is not: block directions and the outer
// profile are drawn with exponential-power densities exp(-|t|^p) and then
// normalized, and the result is scaled by u^{1/N}. Even-indexed samples are
// left on the unit sphere.

#include <cstdint>
#include <vector>

#include "mixwidth/norms.hpp"

namespace mixwidth {

/// x / ||x||_{q1,q2}. Throws std::invalid_argument for the zero matrix.
BlockMatrix normalize(const BlockMatrix& x, const MixedNormParams& params);

/// `count` points of B_{p1,p2}^{s,b}; deterministic for a given seed.
std::vector<BlockMatrix> sample_ball(const BlockShape& shape, const Exponent& p1,
                                     const Exponent& p2, std::uint64_t seed, std::size_t count);

/// Extreme points of B_{inf,1}: one nonzero column filled with random signs.
std::vector<BlockMatrix> extreme_points_inf1(const BlockShape& shape, std::uint64_t seed,
                                             std::size_t count);

}  // namespace mixwidth
