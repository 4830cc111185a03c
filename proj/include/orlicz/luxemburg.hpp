#pragma once

#include "orlicz/orlicz_function.hpp"
#include "orlicz/sequence.hpp"

namespace orlicz {

/// sum_k M(|x_k| / alpha). Throws DomainError unless alpha > 0.
double modular(const OrliczFunction& M, const FiniteSequence& x, double alpha);

/// inf{alpha > 0 : modular(M, x, alpha) <= 1}; 0 for the zero sequence.
///
/// Bisection on the certified bracket
///   [max|x_k| * ||e||, sum|x_k| * ||e||],   ||e|| = unit_vector_norm(M),
/// run to floating-point resolution. The returned value always satisfies
/// modular <= 1.
double luxemburg_norm(const OrliczFunction& M, const FiniteSequence& x);

/// ||x - S_gamma(x)||: the norm of x with the entries in gamma zeroed. By the
/// interpolation identity this is also the best approximation of x by
/// combinations of {e_i : i in gamma}.
double tail_norm(const OrliczFunction& M, const FiniteSequence& x, const IndexSet& gamma);

/// Brute-force min over coefficients a_i of ||x - sum_{i in gamma} a_i e_i||
/// by coordinate descent on a grid refined three times. Test oracle only;
/// requires |gamma| <= 3 and d <= 8, else ScaleError.
double best_coeff_error_oracle(const OrliczFunction& M, const FiniteSequence& x, const IndexSet& gamma,
                               int grid_steps);

}  // namespace orlicz
