#include "orlicz/widths.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "orlicz/compensated_sum.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/luxemburg.hpp"
#include "orlicz/sampling.hpp"

namespace orlicz {

namespace {

constexpr int kDominationSamples = 1000;

void require_same_space(const DiagonalOperator& T) {
  if (!T.same_space()) throw HypothesisError("Kolmogorov width formula is stated for l_M -> l_M only");
}

struct OutsideMax {
  double value = 0.0;
  std::size_t index = 0;
  bool found = false;
};

OutsideMax max_outside(const WeightSequence& lambda, const IndexSet& gamma) {
  OutsideMax best;
  for (std::size_t k = 0; k < lambda.dim(); ++k) {
    if (gamma.contains(k)) continue;
    if (!best.found || lambda[k] > best.value) best = {lambda[k], k, true};
  }
  return best;
}

void require_above_tail(double value, const WeightSequence& lambda, const std::string& what) {
  if (!(value > lambda.tail_bound())) {
    throw TruncationError(what + " is not above the declared tail bound; increase d");
  }
}

}  // namespace

std::string_view to_string(WidthQuantity q) noexcept {
  switch (q) {
    case WidthQuantity::E_gamma: return "E_gamma";
    case WidthQuantity::D_n: return "D_n";
    case WidthQuantity::E_char_set: return "E_char_set";
    case WidthQuantity::d_m: return "d_m";
  }
  return "unknown";
}

DiagonalOperator::DiagonalOperator(WeightSequence lambda, OrliczFunction source, OrliczFunction target)
    : lambda_(std::move(lambda)), source_(std::move(source)), target_(std::move(target)) {
  reports_.push_back(check_domination(target_, source_, kDominationSamples));
  reports_.push_back(check_unit_norm(source_, target_, 1e-9));
  for (const auto& r : reports_) {
    if (!r.passed) throw HypothesisError("diagonal operator hypotheses fail: " + r.describe(), r);
  }
}

DiagonalOperator::DiagonalOperator(WeightSequence lambda, OrliczFunction gauge)
    : DiagonalOperator(std::move(lambda), gauge, gauge) {}

FiniteSequence DiagonalOperator::apply(const FiniteSequence& x) const {
  if (x.dim() > lambda_.dim()) throw DomainError("sequence longer than the weight truncation");
  auto y = x;
  for (std::size_t k = 0; k < y.dim(); ++k) y[k] *= lambda_[k];
  return y;
}

WidthReport best_approx_over_set(const DiagonalOperator& T, const IndexSet& gamma) {
  if (gamma.empty()) throw DomainError("best_approx_over_set needs a nonempty index set");
  gamma.require_within(T.lambda().dim());
  const auto best = max_outside(T.lambda(), gamma);
  if (!best.found) throw TruncationError("index set covers the whole truncation; the answer lies in the tail");
  require_above_tail(best.value, T.lambda(), "max weight outside the index set");
  const double scale = 1.0 / unit_vector_norm(T.source());
  auto witness = FiniteSequence::unit(T.lambda().dim(), best.index).scaled(scale);
  return {WidthQuantity::E_gamma, static_cast<int>(gamma.size()), best.value, std::move(witness)};
}

WidthReport basis_width(const DiagonalOperator& T, int n) {
  const auto& lambda = T.lambda();
  if (n < 0) throw DomainError("basis width order must be >= 0");
  if (static_cast<std::size_t>(n) + 1 > lambda.dim()) throw TruncationError("basis width needs n + 1 <= d");
  std::vector<std::size_t> order(lambda.dim());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return lambda[a] > lambda[b]; });
  const double value = lambda[order[static_cast<std::size_t>(n)]];
  require_above_tail(value, lambda, "rearranged weight at position n + 1");
  IndexSet gamma(std::vector<std::size_t>(order.begin(), order.begin() + n));
  return {WidthQuantity::D_n, n, value, std::move(gamma)};
}

WidthReport width_on_char_set(const DiagonalOperator& T, int n) {
  if (n < 1) throw DomainError("characteristic level must be >= 1");
  const auto triple = characteristic(T.lambda());
  if (static_cast<std::size_t>(n) > triple.levels()) throw TruncationError("level beyond the truncated weights");
  const double eps = triple.epsilon[static_cast<std::size_t>(n) - 1];
  require_above_tail(eps, T.lambda(), "characteristic level");
  IndexSet gamma = n == 1 ? IndexSet{} : triple.g_sets[static_cast<std::size_t>(n) - 2];
  return {WidthQuantity::E_char_set, n, eps, std::move(gamma)};
}

WidthReport kolmogorov_width(const DiagonalOperator& T, int m) {
  require_same_space(T);
  if (m < 0) throw DomainError("width order must be >= 0");
  const auto triple = characteristic(T.lambda());
  const auto mm = static_cast<std::size_t>(m);
  const auto it = std::upper_bound(triple.delta.begin(), triple.delta.end(), mm);
  if (it == triple.delta.end()) throw TruncationError("width order reaches the truncation dimension");
  const auto level = static_cast<std::size_t>(it - triple.delta.begin());
  const double eps = triple.epsilon[level];
  require_above_tail(eps, T.lambda(), "characteristic level");
  IndexSet subspace = level == 0 ? IndexSet{} : triple.g_sets[level - 1];
  return {WidthQuantity::d_m, m, eps, std::move(subspace)};
}

ContainmentResult ball_containment_check(const DiagonalOperator& T, int n, int trials, std::uint64_t seed) {
  require_same_space(T);
  if (n < 1 || trials < 1) throw DomainError("ball_containment_check needs n >= 1 and trials >= 1");
  const auto triple = characteristic(T.lambda());
  if (static_cast<std::size_t>(n) > triple.levels()) throw TruncationError("level beyond the truncated weights");
  const double eps = triple.epsilon[static_cast<std::size_t>(n) - 1];
  const auto& g = triple.g_sets[static_cast<std::size_t>(n) - 1];
  const auto& M = T.source();
  const auto& lambda = T.lambda();

  Rng rng(seed);
  ContainmentResult result;
  for (int t = 0; t < trials; ++t) {
    const auto coeffs = random_vector(rng, g.size());
    const double radius = uniform(rng, 0.0, 1.0) < 0.5 ? eps : eps * uniform(rng, 1e-3, 1.0);
    const auto scaled = coeffs.scaled(radius / luxemburg_norm(M, coeffs));
    auto phi = FiniteSequence::zeros(lambda.dim());
    CompensatedSum preimage_modular;
    std::size_t j = 0;
    for (std::size_t k : g) {
      phi[k] = scaled[j++];
      preimage_modular += M(std::abs(phi[k]) / lambda[k]);
    }
    const double value = preimage_modular.value();
    result.worst_modular = std::max(result.worst_modular, value);
    ++result.trials;
    if (!(value <= 1.0 + 1e-9) && result.passed) {
      result.passed = false;
      result.counterexample = phi;
    }
  }
  return result;
}

double sup_lower_bound_oracle(const DiagonalOperator& T, const IndexSet& gamma, int trials, std::uint64_t seed) {
  const auto d = T.lambda().dim();
  if (d > 32) throw ScaleError("sup_lower_bound_oracle needs d <= 32");
  gamma.require_within(d);
  const auto& M = T.source();
  const auto& N = T.target();
  double best = 0.0;
  auto consider = [&](const FiniteSequence& x) {
    const double norm = luxemburg_norm(M, x);
    if (norm == 0.0) return;
    best = std::max(best, tail_norm(N, T.apply(x.scaled(1.0 / norm)), gamma));
  };
  for (std::size_t k = 0; k < d; ++k) consider(FiniteSequence::unit(d, k));
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) consider(random_vector(rng, d));
  return best;
}

}  // namespace orlicz
