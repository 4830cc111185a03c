#include "orlicz/nterm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "orlicz/compensated_sum.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/luxemburg.hpp"
#include "orlicz/sampling.hpp"

namespace orlicz {

namespace {

void require_nonincreasing(const WeightSequence& lambda) {
  if (!lambda.nonincreasing()) throw HypothesisError("weights must be nonincreasing");
}

void require_positive_p(double p) {
  if (!(p > 0.0) || !std::isfinite(p)) throw DomainError("p must be positive");
}

double inverse_power_sum(double p, const WeightSequence& lambda, std::size_t s) {
  CompensatedSum sum;
  for (std::size_t k = 0; k < s; ++k) sum += std::pow(lambda[k], -p);
  return sum.value();
}

double binomial(std::size_t d, std::size_t n) {
  double c = 1.0;
  for (std::size_t i = 0; i < n; ++i) c = c * static_cast<double>(d - i) / static_cast<double>(i + 1);
  return c;
}

FiniteSequence apply_weights(const WeightSequence& lambda, const FiniteSequence& x) {
  auto y = x;
  for (std::size_t k = 0; k < y.dim(); ++k) y[k] *= lambda[k];
  return y;
}

}  // namespace

double xi(const OrliczFunction& M, double p, const WeightSequence& lambda, std::size_t n, std::size_t s) {
  require_positive_p(p);
  if (s <= n) throw DomainError("xi needs s > n");
  if (s > lambda.dim()) throw TruncationError("xi needs s <= d");
  require_nonincreasing(lambda);
  const double tilde = std::pow(inverse_power_sum(p, lambda, s), -1.0 / p);
  return tilde / inverse(M, 1.0 / static_cast<double>(s - n));
}

SigmaResult sigma_exact(const OrliczFunction& M, double p, const WeightSequence& lambda, std::size_t n,
                        const SearchPolicy& policy) {
  require_positive_p(p);
  require_nonincreasing(lambda);
  compose_power(M, p);
  const std::size_t d = lambda.dim();
  if (n >= d) throw TruncationError("sigma needs n < d");
  const std::size_t cap = policy.s_cap == 0 ? d : std::min(policy.s_cap, d);
  if (cap <= n) throw TruncationError("search cap leaves no admissible s");

  SigmaResult result;
  CompensatedSum running;
  for (std::size_t k = 0; k < n; ++k) running += std::pow(lambda[k], -p);

  double best = -1.0;
  std::size_t since_improvement = 0;
  bool certified = false;
  for (std::size_t s = n + 1; s <= cap; ++s) {
    running += std::pow(lambda[s - 1], -p);
    const double m_inv = inverse(M, 1.0 / static_cast<double>(s - n));
    const double value = std::pow(running.value(), -1.0 / p) / m_inv;
    result.xi_trace.emplace_back(s, value);
    if (value > best * (1.0 + 1e-12)) {
      best = value;
      result.s_star = s;
      since_improvement = 0;
    } else {
      ++since_improvement;
    }

    if (policy.mode == SearchMode::certified_family) {
      const double envelope = lambda[s - 1] * std::pow(static_cast<double>(s - n), -1.0 / p) / m_inv;
      if (envelope <= best) {
        certified = true;
        break;
      }
      if (s == d) {
        // Every lambda_k with k > d is at most the tail bound.
        const double tail_env = lambda.tail_bound() * std::pow(static_cast<double>(d - n), -1.0 / p) / m_inv;
        certified = tail_env <= best;
      }
    } else if (since_improvement >= policy.patience) {
      break;
    }
  }

  result.value = best;
  result.certified = certified;
  result.extremal = extremal_sequence(p, lambda, result.s_star);
  return result;
}

FiniteSequence extremal_sequence(double p, const WeightSequence& lambda, std::size_t s_star) {
  require_positive_p(p);
  if (s_star == 0 || s_star > lambda.dim()) throw TruncationError("extremal sequence needs 1 <= s* <= d");
  const double tilde = std::pow(inverse_power_sum(p, lambda, s_star), -1.0 / p);
  auto x = FiniteSequence::zeros(lambda.dim());
  for (std::size_t k = 0; k < s_star; ++k) x[k] = tilde / lambda[k];
  return x;
}

double sigma_numeric(const OrliczFunction& M, const FiniteSequence& x, std::size_t n) {
  const std::size_t d = x.dim();
  if (n >= d) return 0.0;
  if (d > 20 && binomial(d, n) > 1e6) throw ScaleError("sigma_numeric needs d <= 20 or C(d, n) <= 1e6");

  // Lexicographic walk over n-subsets of {0, ..., d-1}.
  std::vector<std::size_t> pick(n);
  for (std::size_t i = 0; i < n; ++i) pick[i] = i;
  double best = std::numeric_limits<double>::infinity();
  while (true) {
    auto rest = x;
    for (std::size_t k : pick) rest[k] = 0.0;
    best = std::min(best, luxemburg_norm(M, rest));
    std::size_t i = n;
    while (i > 0 && pick[i - 1] == d - n + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  return best;
}

double sigma_fast(const OrliczFunction& M, const FiniteSequence& x, std::size_t n) {
  if (n >= x.dim()) return 0.0;
  std::vector<std::size_t> order(x.dim());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return std::abs(x[a]) > std::abs(x[b]); });
  auto rest = x;
  for (std::size_t i = 0; i < n; ++i) rest[order[i]] = 0.0;
  return luxemburg_norm(M, rest);
}

double sigma_sup_oracle(const OrliczFunction& M, double p, const WeightSequence& lambda, std::size_t n, int trials,
                        std::uint64_t seed) {
  require_positive_p(p);
  const std::size_t d = lambda.dim();
  if (d > 20 && binomial(d, n) > 1e6) throw ScaleError("sigma_sup_oracle needs d <= 20 or C(d, n) <= 1e6");
  double best = 0.0;
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    best = std::max(best, sigma_numeric(M, apply_weights(lambda, random_lp_sphere(rng, p, d)), n));
  }
  for (std::size_t s = n + 1; s <= d; ++s) {
    best = std::max(best, sigma_numeric(M, apply_weights(lambda, extremal_sequence(p, lambda, s)), n));
  }
  return best;
}

double vanishing_trace_term(const OrliczFunction& M, double p, const WeightSequence& lambda, std::size_t n,
                            std::size_t s, double alpha) {
  require_positive_p(p);
  if (s <= n || s > lambda.dim()) throw DomainError("trace term needs n < s <= d");
  if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
  const double tilde = std::pow(inverse_power_sum(p, lambda, s), -1.0 / p);
  return static_cast<double>(s - n) * M(tilde / alpha);
}

}  // namespace orlicz
