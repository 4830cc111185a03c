#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "orlicz/charseq.hpp"
#include "orlicz/orlicz_function.hpp"
#include "orlicz/sequence.hpp"

namespace orlicz {

enum class SearchMode {
  /// Stop once a provable envelope on all later xi_s drops to the best value
  /// found; the result is exact.
  certified_family,
  /// Stop after `patience` non-improving steps or at the cap; never certified.
  heuristic,
};

struct SearchPolicy {
  std::size_t s_cap = 0;  ///< largest s to scan; 0 means the truncation dimension d
  std::size_t patience = 1000;
  SearchMode mode = SearchMode::certified_family;
};

struct SigmaResult {
  double value = 0.0;
  std::size_t s_star = 0;
  std::vector<std::pair<std::size_t, double>> xi_trace;  ///< (s, xi_s) in scan order
  FiniteSequence extremal;
  bool certified = false;
};

/// xi_s = (sum_{k<=s} lambda_k^-p)^(-1/p) / M^{-1}(1/(s-n)) for n < s <= d.
/// lambda must be nonincreasing (HypothesisError otherwise); s > d raises
/// TruncationError.
double xi(const OrliczFunction& M, double p, const WeightSequence& lambda, std::size_t n, std::size_t s);

/// Best n-term approximation of the image of the l_p unit ball in l_M:
/// sup over s > n of xi_s, with the maximizing s* and extremal element.
///
/// Requires M(t^(1/p)) to be an Orlicz function and lambda nonincreasing;
/// both raise HypothesisError. n >= d raises TruncationError. Ties within a
/// relative 1e-12 keep the smaller s.
///
/// Certification: for s' >= s and nonincreasing lambda,
///   xi_{s'} <= max(xi_s, lambda_s (s-n)^(-1/p) / M^{-1}(1/(s-n))),
/// because sum_{k<=s'} lambda_k^-p >= sum_{k<=s} lambda_k^-p + (s'-s) lambda_s^-p
/// and u / M^{-1}(u)^p is nondecreasing when M(t^(1/p)) is convex. Past d the
/// declared tail bound replaces lambda_s.
SigmaResult sigma_exact(const OrliczFunction& M, double p, const WeightSequence& lambda, std::size_t n,
                        const SearchPolicy& policy = {});

/// x*_k = (lambda_k^p sum_{j<=s*} lambda_j^-p)^(-1/p) for k < s*, zero after;
/// a point of the l_p unit sphere of dimension d.
FiniteSequence extremal_sequence(double p, const WeightSequence& lambda, std::size_t s_star);

/// Best n-term approximation of x in l_M by enumerating all n-subsets of
/// positions. Needs d <= 20 or C(d, n) <= 1e6 (ScaleError otherwise).
double sigma_numeric(const OrliczFunction& M, const FiniteSequence& x, std::size_t n);

/// Same quantity by zeroing the n entries of largest magnitude.
double sigma_fast(const OrliczFunction& M, const FiniteSequence& x, std::size_t n);

/// Lower bound for the supremum of sigma_numeric(M, T x, n) over the l_p unit
/// ball, from `trials` random sphere points plus the candidates
/// extremal_sequence(p, lambda, s) for every n < s <= d (the maximizer x* is
/// the member s = s*).
double sigma_sup_oracle(const OrliczFunction& M, double p, const WeightSequence& lambda, std::size_t n, int trials,
                        std::uint64_t seed);

/// (s - n) M(lambda~_s / alpha) with lambda~_s = (sum_{k<=s} lambda_k^-p)^(-1/p).
double vanishing_trace_term(const OrliczFunction& M, double p, const WeightSequence& lambda, std::size_t n,
                            std::size_t s, double alpha);

}  // namespace orlicz
