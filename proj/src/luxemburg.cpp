#include "orlicz/luxemburg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "orlicz/compensated_sum.hpp"
#include "orlicz/errors.hpp"

namespace orlicz {

FiniteSequence FiniteSequence::unit(std::size_t d, std::size_t i) {
  if (i >= d) throw DomainError("unit vector index out of range");
  auto e = zeros(d);
  e[i] = 1.0;
  return e;
}

bool FiniteSequence::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](double v) { return v == 0.0; });
}

double FiniteSequence::max_abs() const noexcept {
  double m = 0.0;
  for (double v : entries_) m = std::max(m, std::abs(v));
  return m;
}

std::size_t FiniteSequence::support_size() const noexcept {
  return static_cast<std::size_t>(std::count_if(entries_.begin(), entries_.end(), [](double v) { return v != 0.0; }));
}

FiniteSequence FiniteSequence::scaled(double c) const {
  auto out = *this;
  for (auto& v : out.entries_) v *= c;
  return out;
}

IndexSet::IndexSet(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
    throw DomainError("index set has duplicate entries");
  }
}

IndexSet IndexSet::first(std::size_t n) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  return IndexSet(std::move(idx));
}

bool IndexSet::contains(std::size_t k) const noexcept { return std::binary_search(indices_.begin(), indices_.end(), k); }

void IndexSet::require_within(std::size_t d) const {
  if (!indices_.empty() && indices_.back() >= d) throw DomainError("index set exceeds sequence dimension");
}

namespace {

// sup{t : M(t) <= 1}; agrees with inverse(M, 1) for strictly increasing M but
// also handles gauges that are flat somewhere.
double unit_level(const OrliczFunction& M) {
  if (M.strictly_increasing()) return inverse(M, 1.0);
  double lo = 0.0, hi = 1.0;
  while (M(hi) <= 1.0) {
    lo = hi;
    hi *= 2.0;
    if (!std::isfinite(hi)) throw DomainError("gauge never exceeds 1");
  }
  for (int i = 0; i < 200; ++i) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    if (M(mid) <= 1.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace

double modular(const OrliczFunction& M, const FiniteSequence& x, double alpha) {
  if (!(alpha > 0.0)) throw DomainError("modular requires alpha > 0");
  CompensatedSum sum;
  for (double v : x.entries()) {
    if (v != 0.0) sum += M(std::abs(v) / alpha);
  }
  return sum.value();
}

double luxemburg_norm(const OrliczFunction& M, const FiniteSequence& x) {
  if (x.is_zero()) return 0.0;
  const double unit = 1.0 / unit_level(M);
  CompensatedSum abs_sum;
  for (double v : x.entries()) abs_sum += std::abs(v);

  double lo = x.max_abs() * unit;
  double hi = abs_sum.value() * unit;
  auto fits = [&](double alpha) { return modular(M, x, alpha) <= 1.0; };

  // Both ends are exact bounds; only rounding can put them on the wrong side.
  while (!fits(hi)) hi = std::nextafter(hi, std::numeric_limits<double>::infinity()) * (1.0 + 1e-15);
  if (fits(lo)) {
    while (lo > 0.0 && fits(lo)) {
      hi = lo;
      lo = std::nextafter(lo, 0.0) * (1.0 - 1e-15);
    }
  }
  // Invariant: modular(lo) > 1 >= modular(hi).
  for (int i = 0; i < 200; ++i) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    if (fits(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

double tail_norm(const OrliczFunction& M, const FiniteSequence& x, const IndexSet& gamma) {
  gamma.require_within(x.dim());
  auto rest = x;
  for (std::size_t k : gamma) rest[k] = 0.0;
  return luxemburg_norm(M, rest);
}

double best_coeff_error_oracle(const OrliczFunction& M, const FiniteSequence& x, const IndexSet& gamma,
                               int grid_steps) {
  if (gamma.size() > 3 || x.dim() > 8) throw ScaleError("best_coeff_error_oracle needs |gamma| <= 3 and d <= 8");
  if (grid_steps < 2) throw DomainError("grid_steps must be >= 2");
  gamma.require_within(x.dim());
  if (gamma.empty()) return luxemburg_norm(M, x);

  const std::vector<std::size_t> coords(gamma.begin(), gamma.end());
  std::vector<double> center(coords.size(), 0.0);
  auto error_at = [&](const std::vector<double>& a) {
    auto r = x;
    for (std::size_t j = 0; j < coords.size(); ++j) r[coords[j]] -= a[j];
    return luxemburg_norm(M, r);
  };

  // Dyadic spacing so that dyadic coefficients are reachable exactly.
  const double radius = 2.0 * std::max(x.max_abs(), 1.0);
  double spacing = std::exp2(std::floor(std::log2(2.0 * radius / grid_steps)));
  double best = error_at(center);
  for (int level = 0; level <= 3; ++level) {
    const int half = grid_steps / 2;
    bool improved = true;
    for (int sweep = 0; improved && sweep < 50; ++sweep) {
      improved = false;
      for (std::size_t j = 0; j < coords.size(); ++j) {
        const double c = center[j];
        for (int i = -half; i <= half; ++i) {
          auto trial = center;
          trial[j] = c + i * spacing;
          const double e = error_at(trial);
          if (e < best) {
            best = e;
            center = trial;
            improved = true;
          }
        }
      }
    }
    // Refine: new grid covers +-2 old spacings around the incumbent.
    spacing = std::exp2(std::floor(std::log2(4.0 * spacing / grid_steps)));
  }
  return best;
}

}  // namespace orlicz
