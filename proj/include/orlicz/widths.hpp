#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "orlicz/charseq.hpp"
#include "orlicz/condition_report.hpp"
#include "orlicz/orlicz_function.hpp"
#include "orlicz/sequence.hpp"

namespace orlicz {

/// T: x -> (lambda_k x_k) from l_M (source) to l_N (target).
///
/// Construction verifies 0 < N <= M on (0, 1] and ||e||_M == ||e||_N (to
/// 1e-9 relative), and throws HypothesisError carrying the failed report
/// otherwise. Both reports are kept on the object.
class DiagonalOperator {
 public:
  DiagonalOperator(WeightSequence lambda, OrliczFunction source, OrliczFunction target);
  /// l_M -> l_M.
  DiagonalOperator(WeightSequence lambda, OrliczFunction gauge);

  const WeightSequence& lambda() const noexcept { return lambda_; }
  const OrliczFunction& source() const noexcept { return source_; }
  const OrliczFunction& target() const noexcept { return target_; }
  const std::vector<ConditionReport>& reports() const noexcept { return reports_; }
  bool same_space() const { return source_ == target_; }

  FiniteSequence apply(const FiniteSequence& x) const;

 private:
  WeightSequence lambda_;
  OrliczFunction source_;
  OrliczFunction target_;
  std::vector<ConditionReport> reports_;
};

enum class WidthQuantity { E_gamma, D_n, E_char_set, d_m };
std::string_view to_string(WidthQuantity q) noexcept;

struct WidthReport {
  WidthQuantity quantity;
  int order;
  double value;
  std::variant<std::monostate, FiniteSequence, IndexSet> attaining_witness;
};

/// max_{k not in gamma} lambda_k with witness e_{k*} / ||e_{k*}||_M.
/// gamma must be nonempty and within d.
WidthReport best_approx_over_set(const DiagonalOperator& T, const IndexSet& gamma);

/// The (n+1)-th largest weight; witness is the set of the n largest weights
/// (smallest index wins ties).
WidthReport basis_width(const DiagonalOperator& T, int n);

/// eps_n, attained on gamma = g_{n-1} (g_0 empty). n >= 1.
WidthReport width_on_char_set(const DiagonalOperator& T, int n);

/// d_m = eps_n for delta_{n-1} <= m < delta_n. Requires source == target.
WidthReport kolmogorov_width(const DiagonalOperator& T, int m);

struct ContainmentResult {
  bool passed = true;
  int trials = 0;
  double worst_modular = 0.0;                   ///< max of sum M(|a_k| / lambda_k) seen
  std::optional<FiniteSequence> counterexample;  ///< first violating polynomial
};

/// Samples polynomials supported on g_n inside the l_M ball of radius eps_n
/// and checks that each is the image of a unit-ball element, i.e.
/// sum_{k in g_n} M(|a_k| / lambda_k) <= 1 + 1e-9. Requires source == target.
ContainmentResult ball_containment_check(const DiagonalOperator& T, int n, int trials, std::uint64_t seed);

/// Lower bound for sup over the l_M unit ball of the best approximation of
/// Tx by {e_i : i in gamma} in l_N. Evaluates every normalized basis vector
/// plus `trials` random sphere points. Needs d <= 32.
double sup_lower_bound_oracle(const DiagonalOperator& T, const IndexSet& gamma, int trials, std::uint64_t seed);

}  // namespace orlicz
