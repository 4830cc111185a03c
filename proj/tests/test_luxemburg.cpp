#include <doctest.h>

#include <cmath>

#include "orlicz/compensated_sum.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/luxemburg.hpp"
#include "orlicz/sampling.hpp"
#include "test_helpers.hpp"

using namespace orlicz;
using orlicz::test::builtin_gauges;
using orlicz::test::rel_close;

TEST_CASE("modular") {
  CHECK(modular(OrliczFunction::power(2.0), {3, 4}, 5.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(modular(OrliczFunction::exp_minus_one(), FiniteSequence::zeros(5), 0.3) == 0.0);
  CHECK(modular(OrliczFunction::power(1.0), {1, 1, 1}, 2.0) == 1.5);
  CHECK_THROWS_AS(modular(OrliczFunction::power(1.0), {1}, 0.0), DomainError);
  CHECK_THROWS_AS(modular(OrliczFunction::power(1.0), {1}, -2.0), DomainError);
}

TEST_CASE("luxemburg_norm closed forms") {
  CHECK(luxemburg_norm(OrliczFunction::power(2.0), {3, 4}) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(luxemburg_norm(OrliczFunction::power(1.0), {1, -2, 3}) == doctest::Approx(6.0).epsilon(1e-15));
  // 2(e^(1/a) - 1) = 1  =>  a = 1 / ln(3/2)
  CHECK(luxemburg_norm(OrliczFunction::exp_minus_one(), {1, 1}) ==
        doctest::Approx(2.4663034623764317).epsilon(1e-14));
  // Roots frozen from an independent high-precision solve.
  CHECK(luxemburg_norm(OrliczFunction::power_log(1.0), {1, 2}) == doctest::Approx(1.8774883426915422).epsilon(1e-13));
  CHECK(luxemburg_norm(OrliczFunction::exp_minus_one(), {1, 2}) == doctest::Approx(3.7807598703008126).epsilon(1e-13));
  CHECK(luxemburg_norm(OrliczFunction::power(2.0), FiniteSequence::zeros(4)) == 0.0);
}

TEST_CASE("norm of a unit vector is the unit vector norm") {
  for (const auto& M : builtin_gauges()) {
    CHECK(rel_close(luxemburg_norm(M, FiniteSequence::unit(5, 3)), unit_vector_norm(M), 1e-14));
  }
}

TEST_CASE("normalization at the norm") {
  Rng rng(21);
  for (const auto& M : builtin_gauges()) {
    for (int i = 0; i < 200; ++i) {
      const auto x = random_vector(rng, 1 + i % 20);
      const double a = luxemburg_norm(M, x);
      const double at = modular(M, x, a);
      CHECK(at <= 1.0);
      CHECK(at >= 1.0 - 1e-6);
      CHECK(modular(M, x, a * (1 - 1e-9)) > 1.0);
    }
  }
}

TEST_CASE("flat spline norm still returns a feasible infimum") {
  const auto flat = OrliczFunction::spline({{0, 0}, {1, 0}, {2, 1}, {3, 3}});
  const FiniteSequence x{1, 2, 0.5};
  const double a = luxemburg_norm(flat, x);
  CHECK(modular(flat, x, a) <= 1.0);
  CHECK(modular(flat, x, a * (1 - 1e-9)) > 1.0);
}

TEST_CASE("homogeneity, triangle inequality, monotonicity") {
  Rng rng(22);
  auto gauges = builtin_gauges();
  gauges.push_back(orlicz::test::convex_spline());
  for (const auto& M : gauges) {
    for (int i = 0; i < 150; ++i) {
      const std::size_t d = 1 + i % 12;
      const auto x = random_vector(rng, d);
      const auto y = random_vector(rng, d);
      const double c = (uniform(rng, 0.0, 1.0) < 0.5 ? -1 : 1) * std::exp(uniform(rng, -3.0, 3.0));
      CHECK(rel_close(luxemburg_norm(M, x.scaled(c)), std::abs(c) * luxemburg_norm(M, x), 1e-10));

      auto sum = x;
      for (std::size_t k = 0; k < d; ++k) sum[k] += y[k];
      CHECK(luxemburg_norm(M, sum) <= luxemburg_norm(M, x) + luxemburg_norm(M, y) + 1e-10);

      auto bigger = x;
      for (std::size_t k = 0; k < d; ++k) bigger[k] = (x[k] < 0 ? -1 : 1) * (std::abs(x[k]) + std::abs(y[k]));
      CHECK(luxemburg_norm(M, x) <= luxemburg_norm(M, bigger) + 1e-12);
    }
  }
}

TEST_CASE("l_p agreement") {
  Rng rng(23);
  for (double p : {1.0, 1.5, 2.0, 3.0}) {
    for (int i = 0; i < 200; ++i) {
      const auto x = random_vector(rng, 1 + i % 64);
      CompensatedSum s;
      for (double v : x.entries()) s += std::pow(std::abs(v), p);
      CHECK(rel_close(luxemburg_norm(OrliczFunction::power(p), x), std::pow(s.value(), 1.0 / p), 1e-10));
    }
  }
}

TEST_CASE("tail_norm") {
  CHECK(tail_norm(OrliczFunction::power(2.0), {3, 4, 12}, IndexSet{2}) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(tail_norm(OrliczFunction::exp_minus_one(), {0, 2, 0, 5}, IndexSet{1, 3}) == 0.0);
  CHECK(tail_norm(OrliczFunction::power(1.0), {1, 1, 1, 1}, IndexSet{0, 1}) == doctest::Approx(2.0));
  CHECK_THROWS_AS(tail_norm(OrliczFunction::power(1.0), {1, 1}, IndexSet{5}), DomainError);
  CHECK_THROWS_AS(IndexSet({1, 1}), DomainError);
}

TEST_CASE("best_coeff_error_oracle reproduces interpolation") {
  const auto P2 = OrliczFunction::power(2.0);
  CHECK(std::abs(best_coeff_error_oracle(P2, {3, 4, 12}, IndexSet{2}, 32) - 5.0) <= 1e-8);
  const FiniteSequence x{1, -2, 0.5};
  CHECK(best_coeff_error_oracle(P2, x, IndexSet{}, 8) == luxemburg_norm(P2, x));
  CHECK(best_coeff_error_oracle(OrliczFunction::exp_minus_one(), FiniteSequence::unit(3, 0), IndexSet{0}, 16) == 0.0);
  CHECK_THROWS_AS(best_coeff_error_oracle(P2, FiniteSequence::zeros(9), IndexSet{0}, 8), ScaleError);
  CHECK_THROWS_AS(best_coeff_error_oracle(P2, FiniteSequence::zeros(5), IndexSet{0, 1, 2, 3}, 8), ScaleError);
}

TEST_CASE("grid search never beats the interpolation error") {
  Rng rng(24);
  for (const auto& M : builtin_gauges()) {
    for (int i = 0; i < 8; ++i) {
      const std::size_t d = 2 + i % 4;
      const auto x = random_vector(rng, d);
      const IndexSet gamma{0, d - 1};
      CHECK(best_coeff_error_oracle(M, x, gamma, 16) >= tail_norm(M, x, gamma) - 1e-8);
    }
  }
}
