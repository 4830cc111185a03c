#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace orlicz::verify {

/// Outcome of one randomized falsification suite. `first_failure` records the
/// inputs of the first counterexample for reproduction.
struct SuiteResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  bool passed() const noexcept { return failures == 0 && cases > 0; }
  std::string log_line() const;
  void fail(std::string detail);
};

/// Luxemburg norm of power gauges vs the closed-form l_p norm, p in
/// {1, 1.5, 2, 3}, relative tolerance 1e-10.
SuiteResult lp_agreement(std::uint64_t seed, int vectors = 500, int max_d = 64);

/// Random sup-oracle values never exceed max_{k not in gamma} lambda_k and the
/// normalized basis witness attains it (1e-9).
SuiteResult best_approx_sandwich(std::uint64_t seed, int instances = 100, int max_d = 16, int oracle_trials = 200);

/// basis_width against the exhaustive minimum over all n-subsets, exact
/// equality, d <= 12, n <= 4.
SuiteResult basis_width_exhaustive(std::uint64_t seed, int instances = 300);

/// Kolmogorov staircase on tied weights plus ball containment per level.
SuiteResult kolmogorov_staircase(std::uint64_t seed, int instances = 50, int containment_trials = 1000);

/// The hand-derived n-term instance: power gauge q = 1, p = 1,
/// lambda_k = 2^-k, n = 1.
SuiteResult nterm_worked_instance(std::uint64_t seed);

/// Sharpness of the extremal sequence and domination by random ball points.
SuiteResult nterm_sharpness(std::uint64_t seed, int instances = 50, int ball_points = 200);

/// Coefficient grid search never beats the interpolation error.
SuiteResult interpolation_optimality(std::uint64_t seed, int instances = 30);

SuiteResult prop1_suite(std::uint64_t seed, int trials = 10000);
SuiteResult slope_suite(std::uint64_t seed, int trials = 10000);
SuiteResult lemmaA_suite(std::uint64_t seed, int trials = 10000);
/// The n-term tail-modular bound through the Chebyshev-type lemma.
SuiteResult nterm_bound_suite(std::uint64_t seed, int trials = 10000);

/// Every suite above; `trials` sizes the inequality suites.
std::vector<SuiteResult> run_all(std::uint64_t seed, int trials);

}  // namespace orlicz::verify
