#include <doctest.h>

#include <cmath>
#include <numbers>

#include "orlicz/errors.hpp"
#include "orlicz/orlicz_function.hpp"
#include "orlicz/sampling.hpp"
#include "test_helpers.hpp"

using namespace orlicz;
using orlicz::test::builtin_gauges;
using orlicz::test::convex_spline;

TEST_CASE("eval on the built-in families") {
  CHECK(eval(OrliczFunction::power(2.0), 3.0) == 9.0);
  CHECK(eval(OrliczFunction::exp_minus_one(), 1.0) == doctest::Approx(std::numbers::e - 1.0).epsilon(1e-15));
  CHECK(eval(OrliczFunction::power_log(1.0), 1.0) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  for (const auto& M : builtin_gauges()) CHECK(eval(M, 0.0) == 0.0);
  CHECK(eval(convex_spline(), 0.0) == 0.0);
  CHECK_THROWS_AS(eval(OrliczFunction::power(2.0), -1.0), DomainError);
}

TEST_CASE("spline interpolates and extends its last chord") {
  const auto M = convex_spline();
  CHECK(M(0.25) == doctest::Approx(0.05));
  CHECK(M(1.0) == 1.0);
  CHECK(M(1.5) == doctest::Approx(2.0));
  CHECK(M(6.0) == doctest::Approx(17.0));  // slope 3.5 past t = 4
  CHECK_THROWS_AS(OrliczFunction::spline({{0, 0}}), DomainError);
  CHECK_THROWS_AS(OrliczFunction::spline({{0, 1}, {1, 2}}), DomainError);
  CHECK_THROWS_AS(OrliczFunction::spline({{0, 0}, {1, 1}, {1, 2}}), DomainError);
}

TEST_CASE("inverse") {
  CHECK(inverse(OrliczFunction::power(2.0), 4.0) == doctest::Approx(2.0).epsilon(1e-15));
  for (const auto& M : builtin_gauges()) CHECK(inverse(M, 0.0) == 0.0);
  const auto E = OrliczFunction::exp_minus_one();
  CHECK(inverse(E, 1.0) == doctest::Approx(std::numbers::ln2).epsilon(1e-15));
  CHECK(std::abs(E(inverse(E, 1.0)) - 1.0) <= 1e-12);
  CHECK_THROWS_AS(inverse(E, -1.0), DomainError);

  const auto flat = OrliczFunction::spline({{0, 0}, {1, 0}, {2, 1}});
  CHECK_THROWS_AS(inverse(flat, 0.5), NonInvertibleError);
}

TEST_CASE("eval(inverse(u)) == u across six decades") {
  Rng rng(11);
  auto gauges = builtin_gauges();
  gauges.push_back(convex_spline());
  for (const auto& M : gauges) {
    for (int i = 0; i < 400; ++i) {
      const double u = std::exp(uniform(rng, std::log(1e-6), std::log(1e6)));
      const double t = inverse(M, u);
      INFO(M.label(), " u=", u);
      CHECK(std::abs(M(t) - u) <= 1e-10 * u);
      CHECK(std::abs(M(t) - u) <= 1e-12 * std::max(1.0, u));
    }
  }
}

TEST_CASE("slope monotonicity and the mu-split inequality") {
  Rng rng(12);
  auto gauges = builtin_gauges();
  gauges.push_back(convex_spline());
  for (const auto& M : gauges) {
    for (int i = 0; i < 2000; ++i) {
      const double t = std::exp(uniform(rng, -6.0, 3.0));
      const double u = t * uniform(rng, 1e-6, 1.0);
      CHECK(M(u) / u <= M(t) / t + 1e-12 * std::max(1.0, M(t) / t));
      const double mu = uniform(rng, 0.0, 1.0);
      CHECK(M(mu * t) <= mu * M(t) + 1e-12 * std::max(1.0, M(t)));
    }
  }
}

TEST_CASE("sampled convexity triples") {
  Rng rng(13);
  for (const auto& M : builtin_gauges()) {
    for (int i = 0; i < 2000; ++i) {
      const double a = uniform(rng, 0.0, 5.0);
      const double b = a + uniform(rng, 0.0, 5.0);
      const double mu = uniform(rng, 0.0, 1.0);
      const double lhs = M(mu * a + (1 - mu) * b);
      const double rhs = mu * M(a) + (1 - mu) * M(b);
      CHECK(lhs <= rhs + 1e-12 * std::max(1.0, rhs));
    }
  }
}

TEST_CASE("check_axioms") {
  std::vector<double> grid;
  for (int i = 0; i <= 100; ++i) grid.push_back(i * 0.1);
  CHECK(check_axioms(OrliczFunction::power(1.0), grid).passed);
  CHECK(check_axioms(OrliczFunction::power_log(1.0), grid).passed);
  CHECK(check_axioms(OrliczFunction::exp_minus_one(), grid).passed);

  const auto bad = OrliczFunction::spline({{0, 0}, {1, 2}, {2, 1}, {3, 5}});
  const auto report = check_axioms(bad, grid);
  CHECK_FALSE(report.passed);
  REQUIRE(report.witness.has_value());
  CHECK(report.witness->note == "decreasing");

  const auto concave = OrliczFunction::power(0.5);
  const auto r2 = check_axioms(concave, grid);
  CHECK_FALSE(r2.passed);
  CHECK(r2.witness.has_value());

  // Never exceeds 1 on the grid.
  CHECK_FALSE(check_axioms(OrliczFunction::power(2.0), std::vector<double>{0.0, 0.5, 1.0}).passed);
  CHECK_THROWS_AS(check_axioms(OrliczFunction::power(2.0), std::vector<double>{}), DomainError);
  CHECK(check_axioms(OrliczFunction::power(2.0), grid).samples_used == 101);
}

TEST_CASE("check_delta2") {
  const auto grid = geometric_grid(1e-3, 50.0);
  CHECK(check_delta2(OrliczFunction::power(2.0), grid).passed);
  CHECK(check_delta2(OrliczFunction::power(1.0), grid).passed);
  CHECK(check_delta2(OrliczFunction::power_log(1.0), grid).passed);
  CHECK(check_delta2(convex_spline(), grid).passed);
  const auto exp_report = check_delta2(OrliczFunction::exp_minus_one(), grid);
  CHECK_FALSE(exp_report.passed);
  REQUIRE(exp_report.witness.has_value());
  CHECK(exp_report.witness->values.at(0) > 1e10);
}

TEST_CASE("check_domination") {
  CHECK(check_domination(OrliczFunction::power(3.0), OrliczFunction::power(2.0), 100).passed);
  const auto r = check_domination(OrliczFunction::power(2.0), OrliczFunction::power(3.0), 2);
  CHECK_FALSE(r.passed);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->t == 0.5);
  CHECK(r.witness->values == std::vector<double>{0.25, 0.125});
  const auto E = OrliczFunction::exp_minus_one();
  CHECK(check_domination(E, E, 50).passed);
  CHECK_THROWS_AS(check_domination(E, E, 1), DomainError);
}

TEST_CASE("unit_vector_norm") {
  for (double p : {1.0, 1.5, 2.0, 7.0}) CHECK(unit_vector_norm(OrliczFunction::power(p)) == doctest::Approx(1.0));
  CHECK(unit_vector_norm(OrliczFunction::exp_minus_one()) == doctest::Approx(1.4426950408889634).epsilon(1e-14));
  const auto PL = OrliczFunction::power_log(1.0);
  const double a = unit_vector_norm(PL);
  CHECK(a == doctest::Approx(0.80646599423632681).epsilon(1e-13));
  CHECK(std::abs(PL(1.0 / a) - 1.0) <= 1e-10);
}

TEST_CASE("compose_power") {
  const auto c = compose_power(OrliczFunction::power(2.0), 2.0);
  REQUIRE(std::holds_alternative<PowerGauge>(c.kind()));
  CHECK(std::get<PowerGauge>(c.kind()).p == 1.0);

  try {
    compose_power(OrliczFunction::power(1.0), 2.0);
    FAIL("expected a hypothesis error");
  } catch (const HypothesisError& e) {
    REQUIRE(e.report().has_value());
    CHECK(e.report()->condition_id == ConditionId::composed_orlicz);
  }

  const auto E = OrliczFunction::exp_minus_one();
  CHECK(compose_power(E, 1.0) == E);
  CHECK_THROWS_AS(compose_power(E, 2.0), HypothesisError);  // e^sqrt(t) - 1 is concave near 0
  const auto e_half = compose_power(E, 0.5);                 // e^(t^2) - 1
  CHECK(e_half(2.0) == doctest::Approx(std::expm1(4.0)));
  CHECK(compose_power(e_half, 2.0) == E);
  CHECK_THROWS_AS(compose_power(E, 0.0), DomainError);
}

TEST_CASE("spline file parsing") {
  const auto M = parse_spline_text("0,0\n1,1\n2,3\n\n# comment\n3,6\n");
  CHECK(M(2.5) == doctest::Approx(4.5));
  CHECK_THROWS_AS(parse_spline_text("1,1\n2,3\n"), ParseError);           // must start at 0,0
  CHECK_THROWS_AS(parse_spline_text("0,0\n1,2\n2,3\n"), ParseError);      // slopes 2 then 1
  CHECK_THROWS_AS(parse_spline_text("0,0\n1,1\n1,2\n"), ParseError);      // repeated t
  CHECK_THROWS_AS(parse_spline_text("0,0\n1,1\n2,0.5\n"), ParseError);    // decreasing
  CHECK_THROWS_AS(parse_spline_text("0,0\n1,0\n"), ParseError);           // flat last chord
  CHECK_THROWS_AS(parse_spline_text("0,0\n1;1\n"), ParseError);
  CHECK_THROWS_AS(parse_spline_file("/nonexistent/spline.csv"), ParseError);
  // A flat start is allowed but not invertible.
  const auto flat = parse_spline_text("0,0\n1,0\n2,1\n");
  CHECK_FALSE(flat.strictly_increasing());
}
