#include "orlicz/charseq.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "orlicz/errors.hpp"

namespace orlicz {

WeightSequence::WeightSequence(std::vector<double> weights, double tail_bound)
    : weights_(std::move(weights)), tail_bound_(tail_bound) {
  if (weights_.empty()) throw DomainError("weight sequence must be nonempty");
  for (double w : weights_) {
    if (!(w > 0.0) || !std::isfinite(w)) throw DomainError("weights must be finite and positive");
  }
  const double min_w = *std::min_element(weights_.begin(), weights_.end());
  if (!(tail_bound_ >= 0.0) || tail_bound_ > min_w) {
    throw DomainError("tail bound must satisfy 0 <= tail_bound <= min weight");
  }
}

WeightSequence WeightSequence::power_decay(double beta, std::size_t d) {
  if (!(beta > 0.0) || d == 0) throw DomainError("power-decay needs beta > 0 and d >= 1");
  std::vector<double> w(d);
  for (std::size_t k = 0; k < d; ++k) w[k] = std::pow(static_cast<double>(k + 1), -beta);
  return {std::move(w), std::pow(static_cast<double>(d + 1), -beta)};
}

WeightSequence WeightSequence::geometric(double q, std::size_t d) {
  if (!(q > 0.0 && q < 1.0) || d == 0) throw DomainError("geometric needs 0 < q < 1 and d >= 1");
  std::vector<double> w(d);
  for (std::size_t k = 0; k < d; ++k) w[k] = std::pow(q, static_cast<double>(k + 1));
  if (w.back() == 0.0) throw DomainError("geometric weights underflow at this d");
  return {std::move(w), std::pow(q, static_cast<double>(d + 1))};
}

bool WeightSequence::nonincreasing() const noexcept {
  return std::is_sorted(weights_.begin(), weights_.end(), std::greater<>());
}

std::vector<double> rearrange_nonincreasing(const WeightSequence& lambda) {
  auto sorted = lambda.weights();
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  return sorted;
}

CharacteristicTriple characteristic(const WeightSequence& lambda) {
  const auto& w = lambda.weights();
  // Positions ordered by weight descending; equal weights form one level.
  std::vector<std::size_t> order(w.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return w[a] > w[b]; });

  CharacteristicTriple triple;
  std::vector<std::size_t> members;
  std::size_t i = 0;
  while (i < order.size()) {
    const double level = w[order[i]];
    while (i < order.size() && w[order[i]] == level) members.push_back(order[i++]);
    triple.epsilon.push_back(level);
    triple.g_sets.emplace_back(members);
    triple.delta.push_back(members.size());
  }
  return triple;
}

bool rearrangement_consistency(const WeightSequence& lambda) {
  const auto bar = rearrange_nonincreasing(lambda);
  const auto triple = characteristic(lambda);
  std::size_t prev = 0;
  for (std::size_t n = 0; n < triple.levels(); ++n) {
    for (std::size_t k = prev; k < triple.delta[n]; ++k) {
      if (bar[k] != triple.epsilon[n]) return false;
    }
    prev = triple.delta[n];
  }
  return prev == bar.size();
}

}  // namespace orlicz
