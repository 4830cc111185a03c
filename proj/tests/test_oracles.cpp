#include <doctest.h>

#include <cmath>

#include "orlicz/errors.hpp"
#include "orlicz/nterm.hpp"
#include "orlicz/oracles.hpp"
#include "test_helpers.hpp"

using namespace orlicz;

TEST_CASE("prop1_check") {
  const auto P2 = OrliczFunction::power(2.0);
  CHECK(prop1_check(P2, 1, 1, 1, 2));
  CHECK(prop1_check(P2, 3, 1, 0, 2));
  CHECK_THROWS_AS(prop1_check(P2, 1, 1, 2, 1), DomainError);
  CHECK_THROWS_AS(prop1_check(P2, 1, 2, 0, 1), DomainError);
  CHECK_THROWS_AS(prop1_check(OrliczFunction::spline({{0, 0}, {1, 0}, {2, 1}}), 1, 1, 0, 1), DomainError);

  Rng rng(61);
  for (const auto& M : orlicz::test::builtin_gauges()) {
    for (int i = 0; i < 1000; ++i) {
      const double t1 = uniform(rng, 0, 3);
      const double t2 = t1 + uniform(rng, 1e-6, 3);
      const double B = uniform(rng, 0.01, 2);
      const double A = B + uniform(rng, 0, 2);
      CHECK(prop1_check(M, A, B, t1, t2));
    }
  }
}

TEST_CASE("slope_check") {
  const auto P1 = OrliczFunction::power(1.0);
  CHECK(slope_check(P1, 0.3, 7.0));
  CHECK(slope_check(OrliczFunction::power(2.0), 1, 2));
  CHECK_THROWS_AS(slope_check(P1, 2, 1), DomainError);
  CHECK_THROWS_AS(slope_check(P1, 0, 1), DomainError);
}

TEST_CASE("lemmaA_check") {
  const auto N = OrliczFunction::power(2.0);
  const auto single = lemmaA_check({N, {0.7}, {1.3}, {2.0}});
  CHECK(single.lhs == doctest::Approx(2.0 * 1.3 * 0.49));
  CHECK(single.lhs == doctest::Approx(single.rhs));
  CHECK(single.holds);

  // b = (1, 0, 0): lhs = p1 N(a1); the s = 1 term of rhs is N((p.a)/p1) p1 >= p1 N(a1).
  const auto r = lemmaA_check({N, {2, 1, 0.5}, {1, 0, 0}, {1, 1, 2}});
  CHECK(r.lhs == 4.0);
  CHECK(r.rhs == doctest::Approx(16.0));
  CHECK(r.holds);

  CHECK_THROWS_AS(lemmaA_check({N, {1, 2}, {1, 1}, {1, 1}}), DomainError);
  CHECK_THROWS_AS(lemmaA_check({N, {2, 1}, {1}, {1, 1}}), DomainError);
  CHECK_THROWS_AS(lemmaA_check({N, {2, 1}, {1, -1}, {1, 1}}), DomainError);

  Rng rng(62);
  for (int i = 0; i < 2000; ++i) {
    const auto inst = random_lemmaA_instance(rng);
    const auto res = lemmaA_check(inst);
    CHECK(res.holds);
  }
}

TEST_CASE("nterm_bound_check on random admissible weights") {
  Rng rng(63);
  for (int i = 0; i < 300; ++i) {
    const auto pair = random_composable_pair(rng);
    const auto lambda = i % 2 ? WeightSequence::geometric(uniform(rng, 0.3, 0.9), 16)
                              : WeightSequence::power_decay(uniform(rng, 0.3, 2.0), 16);
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 0, 5));
    const std::size_t l = n + 1 + static_cast<std::size_t>(uniform(rng, 0, 16 - n - 1));
    const auto m = random_admissible_m(rng, pair.p, lambda, l);
    double total = 0;
    for (double v : m) total += v;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    const double alpha = uniform(rng, 0.1, 2.0) * sigma_exact(pair.M, pair.p, lambda, n).value;
    const auto res = nterm_bound_check(pair.M, pair.p, lambda, n, m, alpha);
    INFO(pair.M.label(), " p=", pair.p, " n=", n, " l=", l);
    CHECK(res.holds);
    CHECK(res.lemma.holds);
    CHECK(res.tail_modular <= res.envelope + 1e-10);
  }
}

TEST_CASE("tail modular at the n-term width stays within one") {
  Rng rng(64);
  const auto M = OrliczFunction::power(2.0);
  const auto lambda = WeightSequence::power_decay(1.0, 30);
  const double sigma = sigma_exact(M, 1.0, lambda, 3).value;
  for (int i = 0; i < 200; ++i) {
    const auto m = random_admissible_m(rng, 1.0, lambda, 30);
    const auto res = nterm_bound_check(M, 1.0, lambda, 3, m, sigma);
    CHECK(res.envelope <= 1.0 + 1e-9);
    CHECK(res.tail_modular <= 1.0 + 1e-9);
  }
}
