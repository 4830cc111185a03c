#pragma once

#include <cstddef>
#include <vector>

#include "orlicz/sequence.hpp"

namespace orlicz {

/// Positive diagonal multipliers lambda_1..lambda_d plus a declared bound on
/// every lambda_k with k > d.
class WeightSequence {
 public:
  /// Throws DomainError unless all weights are finite and > 0 and
  /// 0 <= tail_bound <= min weight.
  WeightSequence(std::vector<double> weights, double tail_bound);

  /// lambda_k = k^-beta, tail bound (d+1)^-beta.
  static WeightSequence power_decay(double beta, std::size_t d);
  /// lambda_k = q^k, 0 < q < 1, tail bound q^(d+1).
  static WeightSequence geometric(double q, std::size_t d);

  std::size_t dim() const noexcept { return weights_.size(); }
  double operator[](std::size_t k) const { return weights_[k]; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  double tail_bound() const noexcept { return tail_bound_; }
  bool nonincreasing() const noexcept;

 private:
  std::vector<double> weights_;
  double tail_bound_;
};

/// The distinct weight levels eps_1 > eps_2 > ... > eps_r, the nested sets
/// g_n = {k : lambda_k >= eps_n} and their sizes delta_n.
struct CharacteristicTriple {
  std::vector<double> epsilon;
  std::vector<IndexSet> g_sets;
  std::vector<std::size_t> delta;

  std::size_t levels() const noexcept { return epsilon.size(); }
};

/// The weights sorted nonincreasingly.
std::vector<double> rearrange_nonincreasing(const WeightSequence& lambda);

/// Levels group exactly equal weights; near-ties are distinct levels.
CharacteristicTriple characteristic(const WeightSequence& lambda);

/// Whether the nonincreasing rearrangement equals eps_n on every position in
/// (delta_{n-1}, delta_n].
bool rearrangement_consistency(const WeightSequence& lambda);

}  // namespace orlicz
