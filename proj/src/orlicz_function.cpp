#include "orlicz/orlicz_function.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "orlicz/errors.hpp"

namespace orlicz {

namespace {

constexpr int kBisectionCap = 200;

std::string format_param(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

double eval_spline(const SplineGauge& s, double t) {
  const auto& k = s.knots;
  auto it = std::upper_bound(k.begin(), k.end(), t, [](double v, const Knot& knot) { return v < knot.t; });
  std::size_t hi;
  if (it == k.end()) {
    hi = k.size() - 1;
  } else if (it == k.begin()) {
    hi = 1;
  } else {
    hi = static_cast<std::size_t>(it - k.begin());
  }
  const Knot& a = k[hi - 1];
  const Knot& b = k[hi];
  if (t == b.t) return b.value;
  const double slope = (b.value - a.value) / (b.t - a.t);
  return a.value + slope * (t - a.t);
}

// Second-difference test on three ordered points; tolerance scales with the
// magnitude of the values involved.
bool convex_triple(double a, double fa, double b, double fb, double c, double fc) {
  const double chord = ((c - b) * fa + (b - a) * fc) / (c - a);
  const double tol = 1e-12 * std::max({1.0, std::abs(fa), std::abs(fc)});
  return fb <= chord + tol;
}

}  // namespace

std::string_view to_string(ConditionId id) noexcept {
  switch (id) {
    case ConditionId::axioms: return "axioms";
    case ConditionId::delta2: return "delta2";
    case ConditionId::domination_3starstar: return "domination";
    case ConditionId::unit_norm_3q: return "unit_norm";
    case ConditionId::composed_orlicz: return "composed_orlicz";
  }
  return "unknown";
}

std::string ConditionReport::describe() const {
  std::ostringstream os;
  os << "condition=" << to_string(condition_id) << " passed=" << (passed ? "true" : "false")
     << " samples=" << samples_used;
  if (witness) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", witness->t);
    os << " witness_t=" << buf << " values=[";
    for (std::size_t i = 0; i < witness->values.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g", witness->values[i]);
      os << (i ? ";" : "") << buf;
    }
    os << "]";
    if (!witness->note.empty()) os << " note=\"" << witness->note << "\"";
  }
  return os.str();
}

bool ComposedGauge::operator==(const ComposedGauge& other) const {
  return p == other.p && base && other.base && *base == *other.base;
}

OrliczFunction OrliczFunction::power(double p) {
  if (!(p > 0.0) || !std::isfinite(p)) throw DomainError("power gauge requires p > 0");
  return {PowerGauge{p}, "power:p=" + format_param(p)};
}

OrliczFunction OrliczFunction::exp_minus_one() { return {ExpMinusOneGauge{}, "exp"}; }

OrliczFunction OrliczFunction::power_log(double p) {
  if (!(p > 0.0) || !std::isfinite(p)) throw DomainError("power-log gauge requires p > 0");
  return {PowerLogGauge{p}, "power-log:p=" + format_param(p)};
}

OrliczFunction OrliczFunction::spline(std::vector<Knot> knots, std::string label) {
  if (knots.size() < 2) throw DomainError("spline needs at least two knots");
  if (knots.front().t != 0.0 || knots.front().value != 0.0) throw DomainError("spline must start at (0, 0)");
  for (std::size_t i = 0; i < knots.size(); ++i) {
    if (!std::isfinite(knots[i].t) || !std::isfinite(knots[i].value)) throw DomainError("spline knots must be finite");
    if (i > 0 && !(knots[i].t > knots[i - 1].t)) throw DomainError("spline knots must be strictly increasing in t");
  }
  return {SplineGauge{std::move(knots)}, std::move(label)};
}

double OrliczFunction::operator()(double t) const {
  if (!(t >= 0.0)) throw DomainError("gauge argument must be nonnegative");
  return std::visit(
      [t](const auto& g) -> double {
        using G = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<G, PowerGauge>) {
          return std::pow(t, g.p);
        } else if constexpr (std::is_same_v<G, ExpMinusOneGauge>) {
          return std::expm1(t);
        } else if constexpr (std::is_same_v<G, PowerLogGauge>) {
          return t == 0.0 ? 0.0 : std::pow(t, g.p) * std::log1p(t);
        } else if constexpr (std::is_same_v<G, SplineGauge>) {
          return eval_spline(g, t);
        } else {
          return (*g.base)(std::pow(t, 1.0 / g.p));
        }
      },
      kind_);
}

bool OrliczFunction::strictly_increasing() const {
  return std::visit(
      [](const auto& g) -> bool {
        using G = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<G, SplineGauge>) {
          for (std::size_t i = 1; i < g.knots.size(); ++i) {
            if (!(g.knots[i].value > g.knots[i - 1].value)) return false;
          }
          return true;
        } else if constexpr (std::is_same_v<G, ComposedGauge>) {
          return g.base->strictly_increasing();
        } else {
          return true;
        }
      },
      kind_);
}

double eval(const OrliczFunction& M, double t) { return M(t); }

double inverse(const OrliczFunction& M, double u) {
  if (!(u >= 0.0) || !std::isfinite(u)) throw DomainError("inverse requires finite u >= 0");
  if (u == 0.0) return 0.0;
  if (!M.strictly_increasing()) throw NonInvertibleError(M.label());

  double lo = 1.0;
  double hi = 1.0;
  if (M(1.0) < u) {
    while (M(hi) < u) {
      lo = hi;
      hi *= 2.0;
      if (!std::isfinite(hi)) throw DomainError("inverse: value out of range");
    }
  } else {
    while (M(lo) >= u) {
      hi = lo;
      lo *= 0.5;
      if (lo == 0.0) return hi;
    }
  }
  // Invariant: M(lo) < u <= M(hi).
  for (int i = 0; i < kBisectionCap; ++i) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    if (M(mid) < u) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::abs(M(lo) - u) < std::abs(M(hi) - u) ? lo : hi;
}

double unit_vector_norm(const OrliczFunction& M) { return 1.0 / inverse(M, 1.0); }

ConditionReport check_axioms(const OrliczFunction& M, std::span<const double> grid) {
  const auto id = ConditionId::axioms;
  if (grid.empty() || !std::is_sorted(grid.begin(), grid.end()) || grid.front() < 0.0) {
    throw DomainError("check_axioms: grid must be sorted, nonempty and nonnegative");
  }
  const int n = static_cast<int>(grid.size());
  const double m0 = M(0.0);
  if (m0 != 0.0) return ConditionReport::fail(id, n, {0.0, {m0}, "M(0) != 0"});

  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    values[i] = M(grid[i]);
    if (!(values[i] >= 0.0)) return ConditionReport::fail(id, n, {grid[i], {values[i]}, "negative value"});
  }
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (values[i] < values[i - 1]) {
      return ConditionReport::fail(id, n, {grid[i], {values[i - 1], values[i]}, "decreasing"});
    }
  }
  for (std::size_t i = 2; i < grid.size(); ++i) {
    const double a = grid[i - 2], b = grid[i - 1], c = grid[i];
    if (a == b || b == c) continue;
    if (!convex_triple(a, values[i - 2], b, values[i - 1], c, values[i])) {
      return ConditionReport::fail(id, n, {b, {values[i - 2], values[i - 1], values[i]}, "chord slopes decrease"});
    }
  }
  if (!(values.back() > 1.0)) {
    return ConditionReport::fail(id, n, {grid.back(), {values.back()}, "no growth past 1 on grid"});
  }
  return ConditionReport::pass(id, n);
}

ConditionReport check_delta2(const OrliczFunction& M, std::span<const double> grid) {
  const auto id = ConditionId::delta2;
  if (grid.empty()) throw DomainError("check_delta2: empty grid");
  const int n = static_cast<int>(grid.size());
  const double t_max = *std::max_element(grid.begin(), grid.end());
  double max_top = 0.0, max_rest = 0.0, arg_top = 0.0;
  bool have_rest = false;
  for (double t : grid) {
    if (!(t > 0.0)) throw DomainError("check_delta2: grid must be positive");
    const double m1 = M(t);
    const double m2 = M(2.0 * t);
    if (m1 == 0.0 && m2 == 0.0) continue;
    const double ratio = m2 / m1;
    if (!std::isfinite(ratio)) return ConditionReport::fail(id, n, {t, {m1, m2}, "unbounded ratio M(2t)/M(t)"});
    if (t >= t_max / 10.0) {
      if (ratio > max_top) {
        max_top = ratio;
        arg_top = t;
      }
    } else {
      have_rest = true;
      max_rest = std::max(max_rest, ratio);
    }
  }
  if (have_rest && max_top > 1.05 * max_rest) {
    return ConditionReport::fail(id, n, {arg_top, {max_top, max_rest}, "ratio M(2t)/M(t) grows over the top decade"});
  }
  return ConditionReport::pass(id, n);
}

ConditionReport check_domination(const OrliczFunction& N, const OrliczFunction& M, int samples) {
  const auto id = ConditionId::domination_3starstar;
  if (samples < 2) throw DomainError("check_domination: samples must be >= 2");
  for (int i = 1; i <= samples; ++i) {
    const double t = static_cast<double>(i) / samples;
    const double nt = N(t);
    const double mt = M(t);
    if (!(nt > 0.0) || nt > mt * (1.0 + 1e-12)) {
      return ConditionReport::fail(id, samples, {t, {nt, mt}, "need 0 < N(t) <= M(t) on (0, 1]"});
    }
  }
  return ConditionReport::pass(id, samples);
}

ConditionReport check_unit_norm(const OrliczFunction& M, const OrliczFunction& N, double tol) {
  const auto id = ConditionId::unit_norm_3q;
  const double a = unit_vector_norm(M);
  const double b = unit_vector_norm(N);
  if (std::abs(a - b) > tol * std::max(a, b)) {
    return ConditionReport::fail(id, 1, {1.0, {a, b}, "unit vector norms differ"});
  }
  return ConditionReport::pass(id, 1);
}

OrliczFunction compose_power(const OrliczFunction& M, double p) {
  if (!(p > 0.0) || !std::isfinite(p)) throw DomainError("compose_power requires p > 0");
  OrliczFunction composed = [&]() -> OrliczFunction {
    if (p == 1.0) return M;
    if (const auto* pg = std::get_if<PowerGauge>(&M.kind())) return OrliczFunction::power(pg->p / p);
    if (const auto* cg = std::get_if<ComposedGauge>(&M.kind())) {
      const double q = cg->p * p;
      if (q == 1.0) return *cg->base;
      return OrliczFunction{ComposedGauge{cg->base, q}, "compose(" + cg->base->label() + ",p=" + format_param(q) + ")"};
    }
    return OrliczFunction{ComposedGauge{std::make_shared<const OrliczFunction>(M), p},
                          "compose(" + M.label() + ",p=" + format_param(p) + ")"};
  }();
  const auto grid = default_axiom_grid(composed);
  auto report = check_axioms(composed, grid);
  if (!report.passed) {
    report.condition_id = ConditionId::composed_orlicz;
    throw HypothesisError("M(t^(1/p)) is not an Orlicz function for " + M.label() + ", p=" + format_param(p),
                          report);
  }
  return composed;
}

std::vector<double> geometric_grid(double t_min, double t_max, int per_octave) {
  if (!(t_min > 0.0) || !(t_max >= t_min) || per_octave < 1) throw DomainError("geometric_grid: bad range");
  std::vector<double> grid;
  const double step = std::exp2(1.0 / per_octave);
  for (int i = 0;; ++i) {
    const double t = t_min * std::pow(step, i);
    if (t > t_max * (1.0 + 1e-12)) break;
    grid.push_back(t);
  }
  return grid;
}

std::vector<double> default_axiom_grid(const OrliczFunction& M) {
  std::vector<double> grid{0.0};
  for (double t : geometric_grid(std::ldexp(1.0, -20), 0.01, 4)) {
    if (t < 0.01) grid.push_back(t);
  }
  for (int i = 1; i <= 1000; ++i) grid.push_back(i * 0.01);
  double t = 10.0;
  while (!(M(t) > 1.0) && t < std::ldexp(1.0, 64)) {
    t *= 2.0;
    grid.push_back(t);
  }
  return grid;
}

OrliczFunction parse_spline_text(const std::string& text, std::string label) {
  std::vector<Knot> knots;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw ParseError("spline line " + std::to_string(line_no) + ": expected t,value");
    Knot k{};
    try {
      std::size_t used = 0;
      const std::string lhs = line.substr(0, comma);
      const std::string rhs = line.substr(comma + 1);
      k.t = std::stod(lhs, &used);
      k.value = std::stod(rhs, &used);
      if (rhs.find_first_not_of(" \t\r", used) != std::string::npos) throw std::invalid_argument("trailing");
    } catch (const std::logic_error&) {
      throw ParseError("spline line " + std::to_string(line_no) + ": not a number pair");
    }
    if (knots.empty() && (k.t != 0.0 || k.value != 0.0)) throw ParseError("spline: first line must be 0,0");
    if (!knots.empty()) {
      const Knot& prev = knots.back();
      if (!(k.t > prev.t)) throw ParseError("spline line " + std::to_string(line_no) + ": t must strictly increase");
      if (k.value < prev.value) throw ParseError("spline line " + std::to_string(line_no) + ": value decreases");
      if (knots.size() >= 2) {
        const Knot& pp = knots[knots.size() - 2];
        const double s0 = (prev.value - pp.value) / (prev.t - pp.t);
        const double s1 = (k.value - prev.value) / (k.t - prev.t);
        if (s1 < s0 - 1e-12 * std::max(1.0, std::abs(s0))) {
          throw ParseError("spline line " + std::to_string(line_no) + ": chord slopes decrease (not convex)");
        }
      }
    }
    knots.push_back(k);
  }
  if (knots.size() < 2) throw ParseError("spline: need at least two knots");
  const Knot& a = knots[knots.size() - 2];
  const Knot& b = knots.back();
  if (!(b.value > a.value)) throw ParseError("spline: last chord must have positive slope");
  return OrliczFunction::spline(std::move(knots), std::move(label));
}

OrliczFunction parse_spline_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open spline file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spline_text(buf.str(), "spline:" + path.string());
}

}  // namespace orlicz
