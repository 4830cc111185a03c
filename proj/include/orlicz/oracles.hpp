#pragma once

#include <cstddef>
#include <vector>

#include "orlicz/charseq.hpp"
#include "orlicz/orlicz_function.hpp"
#include "orlicz/sampling.hpp"

namespace orlicz {

/// M(A t1) + M(B t2) <= M(A (t1 + t2)) + 1e-10.
/// Preconditions t2 > t1 >= 0, A >= B > 0, M strictly increasing with
/// M(0) <= 0; violations raise DomainError.
bool prop1_check(const OrliczFunction& M, double A, double B, double t1, double t2);

/// M(u)/u <= M(t)/t + 1e-12 for 0 < u <= t (DomainError otherwise).
bool slope_check(const OrliczFunction& M, double u, double t);

struct LemmaAInstance {
  OrliczFunction N;
  std::vector<double> a;  ///< nonincreasing, nonnegative
  std::vector<double> b;  ///< nonnegative
  std::vector<double> p;  ///< positive
};

struct LemmaAResult {
  double lhs;
  double rhs;
  bool holds;
};

/// lhs = sum_k p_k b_k N(a_k),
/// rhs = max_{1<=s<=l} N(sum_{k<=l} p_k a_k / sum_{k<=s} p_k) * sum_{k<=s} p_k b_k,
/// holds = lhs <= rhs + 1e-10. Throws DomainError on a malformed instance.
LemmaAResult lemmaA_check(const LemmaAInstance& inst);

/// Result of instantiating the Chebyshev-type inequality for the n-term
/// upper bound: N(t) = M(t^(1/p)), p_k = lambda_k^-p, a_k = lambda_k^p m_k / alpha^p,
/// b_k = 0 for k <= n and lambda_k^p after (so that p_k b_k is the indicator
/// of k > n).
struct NtermBoundResult {
  double tail_modular;  ///< F_n(m, alpha) = sum_{n<k<=l} M(lambda_k m_k^(1/p) / alpha)
  double envelope;      ///< max_{n<s<=l} (s-n) M(lambda~_s / alpha)
  LemmaAResult lemma;   ///< the same comparison through lemmaA_check
  bool holds;           ///< tail_modular <= envelope + 1e-10 and the lemma holds
};

/// m must be nonnegative with sum 1 and lambda_k m_k^(1/p) nonincreasing;
/// lambda nonincreasing; length of m at most d.
NtermBoundResult nterm_bound_check(const OrliczFunction& M, double p, const WeightSequence& lambda, std::size_t n,
                                   const std::vector<double>& m, double alpha);

// Random instance generators shared by the property tests and `verify`.

/// power (p in [1, 4]), exp, or power-log (p in [1, 3]), uniformly.
OrliczFunction random_builtin_gauge(Rng& rng);

/// A random built-in M and exponent p such that M(t^(1/p)) is an Orlicz
/// function; returns the composed gauge in `composed`.
struct ComposablePair {
  OrliczFunction M;
  double p;
  OrliczFunction composed;
};
ComposablePair random_composable_pair(Rng& rng);

/// Lemma instance with a sorted descending |normal| draws (random scale), b
/// and p from |normal| plus a small offset, and N = M(t^(1/p)) from
/// random_composable_pair.
LemmaAInstance random_lemmaA_instance(Rng& rng);

/// Weights m with sum 1 and lambda_k m_k^(1/p) nonincreasing, length l.
std::vector<double> random_admissible_m(Rng& rng, double p, const WeightSequence& lambda, std::size_t l);

}  // namespace orlicz
