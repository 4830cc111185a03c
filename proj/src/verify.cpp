#include "orlicz/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "orlicz/charseq.hpp"
#include "orlicz/compensated_sum.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/luxemburg.hpp"
#include "orlicz/nterm.hpp"
#include "orlicz/oracles.hpp"
#include "orlicz/sampling.hpp"
#include "orlicz/specs.hpp"
#include "orlicz/widths.hpp"

namespace orlicz::verify {

namespace {

std::string join(const std::vector<double>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ";" : "") + format_double(v[i]);
  return out + ")";
}

std::string join(const FiniteSequence& x) { return join(std::vector<double>(x.entries().begin(), x.entries().end())); }

std::string join(const IndexSet& g) {
  std::string out = "{";
  bool first = true;
  for (std::size_t k : g) {
    out += (first ? "" : ";") + std::to_string(k + 1);
    first = false;
  }
  return out + "}";
}

std::size_t draw(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

IndexSet random_subset(Rng& rng, std::size_t d, std::size_t n) {
  std::vector<std::size_t> all(d);
  for (std::size_t i = 0; i < d; ++i) all[i] = i;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(n);
  return IndexSet(std::move(all));
}

// Weights with deliberate ties: each entry picks one of a few random levels.
std::vector<double> tied_weights(Rng& rng, std::size_t d, std::size_t levels) {
  std::vector<double> values(levels);
  for (auto& v : values) v = uniform(rng, 0.05, 2.0);
  std::vector<double> w(d);
  for (auto& x : w) x = values[draw(rng, 0, levels - 1)];
  return w;
}

double min_of(const std::vector<double>& v) { return *std::min_element(v.begin(), v.end()); }

}  // namespace

std::string SuiteResult::log_line() const {
  std::ostringstream os;
  os << "suite=" << name << " cases=" << cases << " failures=" << failures
     << " result=" << (passed() ? "PASS" : "FAIL");
  if (!first_failure.empty()) os << " first_failure=\"" << first_failure << "\"";
  return os.str();
}

void SuiteResult::fail(std::string detail) {
  if (failures++ == 0) first_failure = std::move(detail);
}

SuiteResult lp_agreement(std::uint64_t seed, int vectors, int max_d) {
  SuiteResult r;
  r.name = "lp_agreement";
  Rng rng(seed);
  for (double p : {1.0, 1.5, 2.0, 3.0}) {
    const auto M = OrliczFunction::power(p);
    for (int i = 0; i < vectors; ++i) {
      const auto x = random_vector(rng, draw(rng, 1, static_cast<std::size_t>(max_d)));
      CompensatedSum s;
      for (double v : x.entries()) s += std::pow(std::abs(v), p);
      const double expected = std::pow(s.value(), 1.0 / p);
      const double got = luxemburg_norm(M, x);
      ++r.cases;
      if (std::abs(got - expected) > 1e-10 * expected) {
        r.fail("p=" + format_double(p) + " x=" + join(x) + " norm=" + format_double(got) + " lp=" + format_double(expected));
      }
    }
  }
  return r;
}

SuiteResult best_approx_sandwich(std::uint64_t seed, int instances, int max_d, int oracle_trials) {
  SuiteResult r;
  r.name = "best_approx_sandwich";
  Rng rng(seed);
  std::normal_distribution<double> normal;
  for (int i = 0; i < instances; ++i) {
    const std::size_t d = draw(rng, 2, static_cast<std::size_t>(max_d));
    std::vector<double> w(d);
    if (uniform(rng, 0.0, 1.0) < 0.3) {
      w = tied_weights(rng, d, draw(rng, 1, 3));
    } else {
      for (auto& x : w) x = std::exp(normal(rng));
    }
    WeightSequence lambda(w, 0.5 * min_of(w));
    const auto gamma = random_subset(rng, d, draw(rng, 1, d - 1));

    OrliczFunction M = OrliczFunction::power(1.0);
    OrliczFunction N = M;
    switch (draw(rng, 0, 3)) {
      case 0: M = N = OrliczFunction::power(uniform(rng, 1.0, 4.0)); break;
      case 1: {
        const double q = uniform(rng, 1.0, 3.0);
        M = OrliczFunction::power(q);
        N = OrliczFunction::power(q + uniform(rng, 0.0, 3.0));
        break;
      }
      case 2: M = N = OrliczFunction::exp_minus_one(); break;
      default: M = N = OrliczFunction::power_log(uniform(rng, 1.0, 3.0)); break;
    }
    const DiagonalOperator T(lambda, M, N);
    const auto formula = best_approx_over_set(T, gamma);
    const double oracle = sup_lower_bound_oracle(T, gamma, oracle_trials, rng());
    const auto& witness = std::get<FiniteSequence>(formula.attaining_witness);
    const double attained = tail_norm(N, T.apply(witness), gamma);
    const double tol = 1e-9 * std::max(1.0, formula.value);
    ++r.cases;
    if (oracle > formula.value + tol || std::abs(attained - formula.value) > tol ||
        luxemburg_norm(M, witness) > 1.0 + 1e-12) {
      r.fail("M=" + M.label() + " N=" + N.label() + " lambda=" + join(w) + " gamma=" + join(gamma) +
             " formula=" + format_double(formula.value) + " oracle=" + format_double(oracle) +
             " witness=" + format_double(attained));
    }
  }
  return r;
}

SuiteResult basis_width_exhaustive(std::uint64_t seed, int instances) {
  SuiteResult r;
  r.name = "basis_width_exhaustive";
  Rng rng(seed);
  for (int i = 0; i < instances; ++i) {
    const std::size_t d = draw(rng, 1, 12);
    const std::size_t n = draw(rng, 0, std::min<std::size_t>(4, d - 1));
    const auto w = uniform(rng, 0.0, 1.0) < 0.5 ? tied_weights(rng, d, draw(rng, 1, 4)) : tied_weights(rng, d, d);
    const DiagonalOperator T(WeightSequence(w, 0.0), OrliczFunction::power(2.0));

    // Exhaustive minimum of max_{k not in gamma} lambda_k over all n-subsets.
    double best = std::numeric_limits<double>::infinity();
    std::vector<bool> mask(d, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(n), true);
    std::sort(mask.begin(), mask.end());
    do {
      std::vector<std::size_t> members;
      double outside = 0.0;
      for (std::size_t k = 0; k < d; ++k) {
        if (mask[k]) {
          members.push_back(k);
        } else {
          outside = std::max(outside, w[k]);
        }
      }
      if (n > 0) {
        const double via_formula = best_approx_over_set(T, IndexSet(members)).value;
        if (via_formula != outside) r.fail("best_approx_over_set disagrees with direct max on " + join(w));
      }
      best = std::min(best, outside);
    } while (std::next_permutation(mask.begin(), mask.end()));

    const auto width = basis_width(T, static_cast<int>(n));
    ++r.cases;
    if (width.value != best) {
      r.fail("lambda=" + join(w) + " n=" + std::to_string(n) + " basis_width=" + format_double(width.value) +
             " exhaustive=" + format_double(best));
    } else if (n > 0 && best_approx_over_set(T, std::get<IndexSet>(width.attaining_witness)).value != best) {
      r.fail("optimal set does not attain basis width for lambda=" + join(w));
    }
  }
  return r;
}

SuiteResult kolmogorov_staircase(std::uint64_t seed, int instances, int containment_trials) {
  SuiteResult r;
  r.name = "kolmogorov_staircase";
  Rng rng(seed);
  const auto spline = OrliczFunction::spline({{0, 0}, {0.5, 0.25}, {1, 1}, {2, 4}}, "spline:test");
  for (int i = 0; i < instances; ++i) {
    const std::size_t d = draw(rng, 2, 16);
    const auto w = tied_weights(rng, d, draw(rng, 1, std::min<std::size_t>(5, d)));
    const auto M = uniform(rng, 0.0, 1.0) < 0.2 ? spline : random_builtin_gauge(rng);
    const DiagonalOperator T(WeightSequence(w, 0.5 * min_of(w)), M);
    auto sorted = w;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    const auto triple = characteristic(T.lambda());
    ++r.cases;
    bool ok = true;
    std::string why;
    std::size_t prev = 0;
    for (std::size_t level = 0; level < triple.levels() && ok; ++level) {
      const int n = static_cast<int>(level + 1);
      const double on_char_set = width_on_char_set(T, n).value;
      for (std::size_t m = prev; m < triple.delta[level]; ++m) {
        const double dm = kolmogorov_width(T, static_cast<int>(m)).value;
        if (dm != sorted[m] || dm != on_char_set || dm != triple.epsilon[level]) {
          ok = false;
          why = "m=" + std::to_string(m) + " d_m=" + format_double(dm) + " sorted=" + format_double(sorted[m]);
        }
      }
      prev = triple.delta[level];
      const auto contain = ball_containment_check(T, n, containment_trials, rng());
      if (!contain.passed) {
        ok = false;
        why = "containment failed at level " + std::to_string(n) + " phi=" + join(*contain.counterexample);
      }
    }
    if (!ok) r.fail("M=" + M.label() + " lambda=" + join(w) + " " + why);
  }
  return r;
}

SuiteResult nterm_worked_instance(std::uint64_t seed) {
  SuiteResult r;
  r.name = "nterm_worked_instance";
  const auto M = OrliczFunction::power(1.0);
  const auto lambda = WeightSequence::geometric(0.5, 8);
  const auto res = sigma_exact(M, 1.0, lambda, 1);
  auto check = [&](bool ok, const std::string& what) {
    ++r.cases;
    if (!ok) r.fail(what);
  };
  check(std::abs(res.value - 1.0 / 6.0) <= 1e-12, "sigma=" + format_double(res.value) + " expected 1/6");
  check(res.s_star == 2, "s*=" + std::to_string(res.s_star) + " expected 2");
  check(res.certified, "search not certified");
  check(res.xi_trace.size() >= 2 && std::abs(res.xi_trace[0].second - 1.0 / 6.0) <= 1e-12 &&
            std::abs(res.xi_trace[1].second - 1.0 / 7.0) <= 1e-12,
        "xi trace does not start 1/6, 1/7");
  const double oracle = sigma_sup_oracle(M, 1.0, lambda, 1, 1000, seed);
  check(std::abs(oracle - 1.0 / 6.0) <= 1e-9, "sup oracle=" + format_double(oracle));
  const auto& x = res.extremal;
  bool shape = std::abs(x[0] - 1.0 / 3.0) <= 1e-15 && std::abs(x[1] - 2.0 / 3.0) <= 1e-15;
  for (std::size_t k = 2; k < x.dim(); ++k) shape = shape && x[k] == 0.0;
  check(shape, "extremal=" + join(x));
  auto image = x;
  for (std::size_t k = 0; k < image.dim(); ++k) image[k] *= lambda[k];
  const double attained = sigma_numeric(M, image, 1);
  check(std::abs(attained - 1.0 / 6.0) <= 1e-9, "sigma_numeric(T x*)=" + format_double(attained));
  return r;
}

SuiteResult nterm_sharpness(std::uint64_t seed, int instances, int ball_points) {
  SuiteResult r;
  r.name = "nterm_sharpness";
  Rng rng(seed);
  int attempts = 0;
  while (r.cases < instances && attempts < 100 * instances) {
    ++attempts;
    const std::size_t d = draw(rng, 6, 12);
    const std::size_t n = draw(rng, 0, 3);
    const bool geometric = uniform(rng, 0.0, 1.0) < 0.5;
    const double param = geometric ? uniform(rng, 0.2, 0.85) : uniform(rng, 0.3, 3.0);
    const auto lambda = geometric ? WeightSequence::geometric(param, d) : WeightSequence::power_decay(param, d);
    const auto pair = random_composable_pair(rng);
    const auto res = sigma_exact(pair.M, pair.p, lambda, n);
    if (!res.certified) continue;
    ++r.cases;
    const std::string tag = "M=" + pair.M.label() + " p=" + format_double(pair.p) +
                            (geometric ? " geometric q=" : " power-decay beta=") + format_double(param) +
                            " d=" + std::to_string(d) + " n=" + std::to_string(n);
    auto image = [&](const FiniteSequence& x) {
      auto y = x;
      for (std::size_t k = 0; k < y.dim(); ++k) y[k] *= lambda[k];
      return y;
    };
    const double attained = sigma_numeric(pair.M, image(res.extremal), n);
    if (std::abs(attained - res.value) > 1e-9) {
      r.fail(tag + " sigma=" + format_double(res.value) + " attained=" + format_double(attained));
      continue;
    }
    for (int t = 0; t < ball_points; ++t) {
      const auto x = random_lp_ball(rng, pair.p, d);
      const double v = sigma_numeric(pair.M, image(x), n);
      if (v > res.value + 1e-9) {
        r.fail(tag + " x=" + join(x) + " sigma(Tx)=" + format_double(v) + " > " + format_double(res.value));
        break;
      }
    }
  }
  if (r.cases < instances) r.fail("only " + std::to_string(r.cases) + " certified instances drawn");
  return r;
}

SuiteResult interpolation_optimality(std::uint64_t seed, int instances) {
  SuiteResult r;
  r.name = "interpolation_optimality";
  Rng rng(seed);
  for (int i = 0; i < instances; ++i) {
    const std::size_t d = draw(rng, 1, 6);
    const auto x = random_vector(rng, d);
    const auto gamma = random_subset(rng, d, draw(rng, 0, std::min<std::size_t>(2, d)));
    const auto M = random_builtin_gauge(rng);
    const double oracle = best_coeff_error_oracle(M, x, gamma, 16);
    const double exact = tail_norm(M, x, gamma);
    ++r.cases;
    if (oracle < exact - 1e-8) {
      r.fail("M=" + M.label() + " x=" + join(x) + " gamma=" + join(gamma) + " oracle=" + format_double(oracle) +
             " tail=" + format_double(exact));
    }
  }
  return r;
}

SuiteResult prop1_suite(std::uint64_t seed, int trials) {
  SuiteResult r;
  r.name = "prop1";
  Rng rng(seed);
  for (int i = 0; i < trials; ++i) {
    const auto M = random_builtin_gauge(rng);
    const double t2 = uniform(rng, 1e-6, 5.0);
    const double t1 = uniform(rng, 0.0, 1.0) < 0.1 ? 0.0 : uniform(rng, 0.0, t2);
    const double B = uniform(rng, 1e-3, 3.0);
    const double A = uniform(rng, 0.0, 1.0) < 0.1 ? B : B * uniform(rng, 1.0, 3.0);
    ++r.cases;
    if (!(t2 > t1)) continue;
    if (!prop1_check(M, A, B, t1, t2)) {
      r.fail("M=" + M.label() + " A=" + format_double(A) + " B=" + format_double(B) + " t1=" + format_double(t1) +
             " t2=" + format_double(t2));
    }
  }
  return r;
}

SuiteResult slope_suite(std::uint64_t seed, int trials) {
  SuiteResult r;
  r.name = "slope";
  Rng rng(seed);
  for (int i = 0; i < trials; ++i) {
    const auto M = random_builtin_gauge(rng);
    const double t = std::exp(uniform(rng, -8.0, 3.0));
    const double u = uniform(rng, 0.0, 1.0) < 0.05 ? t : t * uniform(rng, 1e-6, 1.0);
    ++r.cases;
    if (!slope_check(M, u, t)) {
      r.fail("M=" + M.label() + " u=" + format_double(u) + " t=" + format_double(t));
    }
  }
  return r;
}

SuiteResult lemmaA_suite(std::uint64_t seed, int trials) {
  SuiteResult r;
  r.name = "lemmaA";
  Rng rng(seed);
  for (int i = 0; i < trials; ++i) {
    const auto inst = random_lemmaA_instance(rng);
    const auto res = lemmaA_check(inst);
    ++r.cases;
    if (!res.holds) {
      r.fail("N=" + inst.N.label() + " a=" + join(inst.a) + " b=" + join(inst.b) + " p=" + join(inst.p) +
             " lhs=" + format_double(res.lhs) + " rhs=" + format_double(res.rhs));
    }
  }
  return r;
}

SuiteResult nterm_bound_suite(std::uint64_t seed, int trials) {
  SuiteResult r;
  r.name = "nterm_bound";
  Rng rng(seed);
  for (int i = 0; i < trials; ++i) {
    const auto pair = random_composable_pair(rng);
    const std::size_t d = draw(rng, 2, 16);
    const auto lambda = uniform(rng, 0.0, 1.0) < 0.5 ? WeightSequence::power_decay(uniform(rng, 0.3, 3.0), d)
                                                      : WeightSequence::geometric(uniform(rng, 0.2, 0.9), d);
    const std::size_t n = draw(rng, 0, d - 1);
    const std::size_t l = draw(rng, n + 1, d);
    const auto m = random_admissible_m(rng, pair.p, lambda, l);
    const double alpha = std::exp(uniform(rng, -3.0, 1.0));
    const auto res = nterm_bound_check(pair.M, pair.p, lambda, n, m, alpha);
    ++r.cases;
    const double tol = 1e-9 * std::max(1.0, std::abs(res.tail_modular));
    const bool consistent = std::abs(res.lemma.lhs - res.tail_modular) <= tol &&
                            std::abs(res.lemma.rhs - res.envelope) <= 1e-9 * std::max(1.0, res.envelope);
    if (!res.holds || !consistent) {
      r.fail("M=" + pair.M.label() + " p=" + format_double(pair.p) + " n=" + std::to_string(n) + " m=" + join(m) +
             " alpha=" + format_double(alpha) + " F=" + format_double(res.tail_modular) +
             " env=" + format_double(res.envelope) + " lemma_lhs=" + format_double(res.lemma.lhs) +
             " lemma_rhs=" + format_double(res.lemma.rhs));
    }
  }
  return r;
}

std::vector<SuiteResult> run_all(std::uint64_t seed, int trials) {
  return {
      lp_agreement(seed + 1),
      best_approx_sandwich(seed + 2),
      basis_width_exhaustive(seed + 3),
      kolmogorov_staircase(seed + 4),
      nterm_worked_instance(seed + 5),
      nterm_sharpness(seed + 6),
      interpolation_optimality(seed + 7),
      prop1_suite(seed + 8, trials),
      slope_suite(seed + 9, trials),
      lemmaA_suite(seed + 10, trials),
      nterm_bound_suite(seed + 11, trials),
  };
}

}  // namespace orlicz::verify
