#include "orlicz/sampling.hpp"

#include <cmath>

#include "orlicz/compensated_sum.hpp"

namespace orlicz {

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

FiniteSequence random_vector(Rng& rng, std::size_t d) {
  std::normal_distribution<double> normal;
  const double density = uniform(rng, 0.2, 1.0);
  auto x = FiniteSequence::zeros(d);
  for (std::size_t k = 0; k < d; ++k) {
    if (uniform(rng, 0.0, 1.0) < density) {
      const double g = normal(rng);
      x[k] = g * std::exp(normal(rng));
    }
  }
  if (x.is_zero()) x[std::uniform_int_distribution<std::size_t>(0, d - 1)(rng)] = 1.0;
  return x;
}

FiniteSequence random_lp_sphere(Rng& rng, double p, std::size_t d) {
  auto x = random_vector(rng, d);
  CompensatedSum s;
  for (std::size_t k = 0; k < d; ++k) {
    x[k] = std::abs(x[k]);
    s += std::pow(x[k], p);
  }
  return x.scaled(std::pow(s.value(), -1.0 / p));
}

FiniteSequence random_lp_ball(Rng& rng, double p, std::size_t d) {
  auto x = random_lp_sphere(rng, p, d);
  if (uniform(rng, 0.0, 1.0) < 1.0 / 3.0) return x;
  return x.scaled(uniform(rng, 1e-3, 1.0));
}

}  // namespace orlicz
