#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace orlicz {

enum class ConditionId { axioms, delta2, domination_3starstar, unit_norm_3q, composed_orlicz };

std::string_view to_string(ConditionId id) noexcept;

/// Point where a condition check failed: the abscissa and the values involved.
struct Witness {
  double t = 0.0;
  std::vector<double> values;
  std::string note;
};

/// Outcome of a numeric hypothesis check. `witness` is set iff `passed` is false.
struct ConditionReport {
  ConditionId condition_id = ConditionId::axioms;
  bool passed = true;
  std::optional<Witness> witness;
  int samples_used = 0;

  static ConditionReport pass(ConditionId id, int samples) { return {id, true, std::nullopt, samples}; }
  static ConditionReport fail(ConditionId id, int samples, Witness w) { return {id, false, std::move(w), samples}; }

  std::string describe() const;
};

}  // namespace orlicz
