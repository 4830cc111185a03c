#pragma once

#include <cstdint>
#include <random>

#include "orlicz/sequence.hpp"

namespace orlicz {

using Rng = std::mt19937_64;

/// Random vector with random signs, heavy-tailed magnitudes and random
/// sparsity (at least one nonzero entry).
FiniteSequence random_vector(Rng& rng, std::size_t d);

/// Nonnegative point on the l_p unit sphere (sum |x_k|^p = 1), p > 0.
FiniteSequence random_lp_sphere(Rng& rng, double p, std::size_t d);

/// Point of the closed l_p unit ball: a sphere point scaled by r in (0, 1],
/// with r = 1 about a third of the time.
FiniteSequence random_lp_ball(Rng& rng, double p, std::size_t d);

/// Uniform draw in [lo, hi).
double uniform(Rng& rng, double lo, double hi);

}  // namespace orlicz
