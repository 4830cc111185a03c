#include "orlicz/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "orlicz/compensated_sum.hpp"
#include "orlicz/errors.hpp"

namespace orlicz {

namespace {

bool within(double lhs, double rhs, double tol) { return lhs <= rhs + tol * std::max(1.0, std::abs(rhs)); }

}  // namespace

bool prop1_check(const OrliczFunction& M, double A, double B, double t1, double t2) {
  if (!(t2 > t1 && t1 >= 0.0)) throw DomainError("prop1_check needs t2 > t1 >= 0");
  if (!(A >= B && B > 0.0)) throw DomainError("prop1_check needs A >= B > 0");
  if (!M.strictly_increasing() || M(0.0) > 0.0) throw DomainError("prop1_check needs an increasing gauge with M(0) <= 0");
  return within(M(A * t1) + M(B * t2), M(A * (t1 + t2)), 1e-10);
}

bool slope_check(const OrliczFunction& M, double u, double t) {
  if (!(u > 0.0 && u <= t)) throw DomainError("slope_check needs 0 < u <= t");
  return M(u) / u <= M(t) / t + 1e-12 * std::max(1.0, M(t) / t);
}

LemmaAResult lemmaA_check(const LemmaAInstance& inst) {
  const std::size_t l = inst.a.size();
  if (l == 0 || inst.b.size() != l || inst.p.size() != l) throw DomainError("lemma instance lengths differ or are 0");
  if (!std::is_sorted(inst.a.begin(), inst.a.end(), std::greater<>())) throw DomainError("a must be nonincreasing");
  for (std::size_t k = 0; k < l; ++k) {
    if (!(inst.a[k] >= 0.0) || !(inst.b[k] >= 0.0) || !(inst.p[k] > 0.0)) {
      throw DomainError("lemma instance needs a, b >= 0 and p > 0");
    }
  }
  CompensatedSum lhs, weighted_a;
  for (std::size_t k = 0; k < l; ++k) {
    const double pb = inst.p[k] * inst.b[k];
    if (pb != 0.0) lhs += pb * inst.N(inst.a[k]);
    weighted_a += inst.p[k] * inst.a[k];
  }
  CompensatedSum p_prefix, pb_prefix;
  double rhs = 0.0;
  for (std::size_t s = 0; s < l; ++s) {
    p_prefix += inst.p[s];
    pb_prefix += inst.p[s] * inst.b[s];
    const double weight = pb_prefix.value();
    if (weight == 0.0) continue;
    rhs = std::max(rhs, inst.N(weighted_a.value() / p_prefix.value()) * weight);
  }
  const double left = lhs.value();
  return {left, rhs, within(left, rhs, 1e-10)};
}

NtermBoundResult nterm_bound_check(const OrliczFunction& M, double p, const WeightSequence& lambda, std::size_t n,
                                   const std::vector<double>& m, double alpha) {
  const std::size_t l = m.size();
  if (l <= n || l > lambda.dim()) throw DomainError("need n < len(m) <= d");
  if (!(alpha > 0.0) || !(p > 0.0)) throw DomainError("alpha and p must be positive");
  if (!lambda.nonincreasing()) throw HypothesisError("weights must be nonincreasing");

  LemmaAInstance inst{compose_power(M, p), {}, {}, {}};
  CompensatedSum tail, inv_prefix;
  double envelope = 0.0;
  for (std::size_t k = 0; k < l; ++k) {
    const double lp = std::pow(lambda[k], p);
    inst.p.push_back(1.0 / lp);
    inst.a.push_back(lp * m[k] / std::pow(alpha, p));
    inst.b.push_back(k < n ? 0.0 : lp);
    inv_prefix += 1.0 / lp;
    if (k >= n) {
      tail += M(lambda[k] * std::pow(m[k], 1.0 / p) / alpha);
      const double tilde = std::pow(inv_prefix.value(), -1.0 / p);
      envelope = std::max(envelope, static_cast<double>(k + 1 - n) * M(tilde / alpha));
    }
  }
  // Rounding can reorder a_k that are equal in exact arithmetic.
  for (std::size_t k = 1; k < l; ++k) inst.a[k] = std::min(inst.a[k], inst.a[k - 1]);
  const auto lemma = lemmaA_check(inst);
  const double f = tail.value();
  return {f, envelope, lemma, within(f, envelope, 1e-10) && lemma.holds};
}

OrliczFunction random_builtin_gauge(Rng& rng) {
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0: return OrliczFunction::power(uniform(rng, 1.0, 4.0));
    case 1: return OrliczFunction::exp_minus_one();
    default: return OrliczFunction::power_log(uniform(rng, 1.0, 3.0));
  }
}

ComposablePair random_composable_pair(Rng& rng) {
  while (true) {
    auto M = random_builtin_gauge(rng);
    const double p = uniform(rng, 0.3, 3.0);
    try {
      auto composed = compose_power(M, p);
      return {std::move(M), p, std::move(composed)};
    } catch (const HypothesisError&) {
    }
  }
}

LemmaAInstance random_lemmaA_instance(Rng& rng) {
  std::normal_distribution<double> normal;
  const auto l = std::uniform_int_distribution<std::size_t>(1, 12)(rng);
  const double scale = uniform(rng, 0.05, 2.0);
  LemmaAInstance inst{random_composable_pair(rng).composed, {}, {}, {}};
  for (std::size_t k = 0; k < l; ++k) {
    inst.a.push_back(std::abs(normal(rng)) * scale);
    const bool zero_b = uniform(rng, 0.0, 1.0) < 0.2;
    inst.b.push_back(zero_b ? 0.0 : std::abs(normal(rng)) + 1e-6);
    inst.p.push_back(std::abs(normal(rng)) + 1e-6);
  }
  std::sort(inst.a.begin(), inst.a.end(), std::greater<>());
  return inst;
}

std::vector<double> random_admissible_m(Rng& rng, double p, const WeightSequence& lambda, std::size_t l) {
  if (l == 0 || l > lambda.dim()) throw DomainError("need 1 <= l <= d");
  // v_k = lambda_k m_k^(1/p) nonincreasing, then normalise sum m = 1 (scaling m
  // scales every v_k by the same factor).
  std::vector<double> v(l);
  for (auto& x : v) x = uniform(rng, 1e-3, 1.0);
  std::sort(v.begin(), v.end(), std::greater<>());
  std::vector<double> m(l);
  CompensatedSum total;
  for (std::size_t k = 0; k < l; ++k) {
    m[k] = std::pow(v[k] / lambda[k], p);
    total += m[k];
  }
  for (auto& x : m) x /= total.value();
  return m;
}

}  // namespace orlicz
