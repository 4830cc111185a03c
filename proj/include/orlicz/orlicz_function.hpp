#pragma once

#include <filesystem>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "orlicz/condition_report.hpp"

namespace orlicz {

/// t^p.
struct PowerGauge {
  double p;
  bool operator==(const PowerGauge&) const = default;
};

/// e^t - 1.
struct ExpMinusOneGauge {
  bool operator==(const ExpMinusOneGauge&) const = default;
};

/// t^p * log(1 + t).
struct PowerLogGauge {
  double p;
  bool operator==(const PowerLogGauge&) const = default;
};

struct Knot {
  double t;
  double value;
  bool operator==(const Knot&) const = default;
};

/// Piecewise-linear gauge through the knots; the last chord is extended past
/// the final knot.
struct SplineGauge {
  std::vector<Knot> knots;
  bool operator==(const SplineGauge&) const = default;
};

class OrliczFunction;

/// base(t^(1/p)).
struct ComposedGauge {
  std::shared_ptr<const OrliczFunction> base;
  double p;
  bool operator==(const ComposedGauge& other) const;
};

/// An Orlicz function M: [0, inf) -> [0, inf). Immutable value type; copies
/// share composed bases.
class OrliczFunction {
 public:
  using Kind = std::variant<PowerGauge, ExpMinusOneGauge, PowerLogGauge, SplineGauge, ComposedGauge>;

  static OrliczFunction power(double p);
  static OrliczFunction exp_minus_one();
  static OrliczFunction power_log(double p);
  /// Requires at least two knots, the first at (0, 0), strictly increasing t
  /// and finite values. Monotonicity and convexity are not enforced here; see
  /// check_axioms and parse_spline_file.
  static OrliczFunction spline(std::vector<Knot> knots, std::string label = "spline");

  const Kind& kind() const noexcept { return kind_; }
  const std::string& label() const noexcept { return label_; }

  /// M(t). Throws DomainError for negative or NaN t.
  double operator()(double t) const;

  /// True when M is strictly increasing on [0, inf), so that the inverse is a
  /// genuine function.
  bool strictly_increasing() const;

  friend bool operator==(const OrliczFunction& a, const OrliczFunction& b) { return a.kind_ == b.kind_; }

 private:
  OrliczFunction(Kind kind, std::string label) : kind_(std::move(kind)), label_(std::move(label)) {}
  friend OrliczFunction compose_power(const OrliczFunction&, double);

  Kind kind_;
  std::string label_;
};

double eval(const OrliczFunction& M, double t);

/// M^{-1}(u) by bracketing then bisection. Throws NonInvertibleError for
/// gauges with flat segments, DomainError for negative u.
double inverse(const OrliczFunction& M, double u);

/// ||e_i|| in l_M, i.e. inf{alpha > 0 : M(1/alpha) <= 1} = 1 / M^{-1}(1).
double unit_vector_norm(const OrliczFunction& M);

/// M(0) = 0, monotone and convex on the grid (chord slopes nondecreasing), and
/// M(t_max) > 1. Grid must be sorted and nonempty.
ConditionReport check_axioms(const OrliczFunction& M, std::span<const double> grid);

/// Grid heuristic for M(2t) <= C M(t): passes when the ratio M(2t)/M(t) stays
/// finite and its maximum over the top decade of the grid does not exceed 1.05
/// times its maximum below that decade. Advisory only.
ConditionReport check_delta2(const OrliczFunction& M, std::span<const double> grid);

/// 0 < N(t) <= M(t) on the uniform grid {i / samples : i = 1..samples}.
ConditionReport check_domination(const OrliczFunction& N, const OrliczFunction& M, int samples);

/// unit_vector_norm(M) == unit_vector_norm(N) within `tol` (relative).
ConditionReport check_unit_norm(const OrliczFunction& M, const OrliczFunction& N, double tol = 1e-9);

/// The gauge t -> M(t^(1/p)). Throws HypothesisError when the composition
/// fails check_axioms on default_axiom_grid.
OrliczFunction compose_power(const OrliczFunction& M, double p);

/// 0, then a dense linear section on (0, 10] and a geometric extension until
/// M exceeds 1 (capped at 2^64).
std::vector<double> default_axiom_grid(const OrliczFunction& M);

/// Geometric grid 2^-20 .. t_max with `per_octave` points per octave.
std::vector<double> geometric_grid(double t_min, double t_max, int per_octave = 8);

/// Reads `t,value` lines (first line `0,0`, strictly increasing t) and
/// rejects knot lists that are not nondecreasing and discretely convex, or
/// whose last chord is flat.
OrliczFunction parse_spline_file(const std::filesystem::path& path);
OrliczFunction parse_spline_text(const std::string& text, std::string label = "spline");

}  // namespace orlicz
