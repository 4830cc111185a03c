#include "orlicz/specs.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "orlicz/errors.hpp"

namespace orlicz {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& text, const std::string& context) {
  const auto t = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size() || !std::isfinite(v)) {
    throw ParseError(context + ": not a finite number: '" + text + "'");
  }
  return v;
}

int parse_int(const std::string& text, const std::string& context) {
  const auto t = trim(text);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size()) {
    throw ParseError(context + ": not an integer: '" + text + "'");
  }
  return v;
}

// "family:key=value" -> value, with the key checked.
double family_param(const std::string& spec, const std::string& family, const std::string& key) {
  const std::string prefix = family + ":" + key + "=";
  if (spec.rfind(prefix, 0) != 0) throw ParseError("expected '" + prefix + "<value>' in '" + spec + "'");
  return parse_number(spec.substr(prefix.size()), spec);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) parts.push_back(item);
  return parts;
}

}  // namespace

OrliczFunction parse_orlicz_spec(const std::string& spec) {
  try {
    if (spec == "exp" || spec == "exp-minus-one") return OrliczFunction::exp_minus_one();
    if (spec.rfind("power-log:", 0) == 0) return OrliczFunction::power_log(family_param(spec, "power-log", "p"));
    if (spec.rfind("power:", 0) == 0) return OrliczFunction::power(family_param(spec, "power", "p"));
    if (spec.rfind("spline:", 0) == 0) return parse_spline_file(spec.substr(7));
  } catch (const DomainError& e) {
    throw ParseError(std::string("bad gauge '") + spec + "': " + e.what());
  }
  throw ParseError("unknown gauge '" + spec + "' (power:p=, exp, power-log:p=, spline:<path>)");
}

WeightSpec parse_weight_spec(const std::string& spec, std::size_t d, std::optional<double> csv_tail_bound) {
  try {
    if (spec.rfind("power-decay:", 0) == 0) {
      return {WeightSequence::power_decay(family_param(spec, "power-decay", "beta"), d), true};
    }
    if (spec.rfind("geometric:", 0) == 0) {
      return {WeightSequence::geometric(family_param(spec, "geometric", "q"), d), true};
    }
    if (spec.rfind("csv:", 0) == 0) {
      return {WeightSequence(read_csv_values(spec.substr(4)), csv_tail_bound.value_or(0.0)), false};
    }
  } catch (const DomainError& e) {
    throw ParseError(std::string("bad weights '") + spec + "': " + e.what());
  }
  throw ParseError("unknown weights '" + spec + "' (power-decay:beta=, geometric:q=, csv:<path>)");
}

std::vector<double> parse_csv_values(const std::string& text) {
  std::vector<double> values;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    values.push_back(parse_number(t, "line " + std::to_string(line_no)));
  }
  if (values.empty()) throw ParseError("no values in CSV input");
  return values;
}

std::vector<double> read_csv_values(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_csv_values(buf.str());
}

std::vector<double> parse_value_list(const std::string& text) {
  std::vector<double> values;
  for (const auto& part : split(text, ',')) values.push_back(parse_number(part, "value list"));
  if (values.empty()) throw ParseError("empty value list");
  return values;
}

IndexSet parse_index_list(const std::string& text) {
  std::vector<std::size_t> idx;
  for (const auto& part : split(text, ',')) {
    if (trim(part).empty()) continue;
    const int k = parse_int(part, "index list");
    if (k < 1) throw ParseError("indices are 1-based and positive");
    idx.push_back(static_cast<std::size_t>(k - 1));
  }
  try {
    return IndexSet(std::move(idx));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

IntRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  IntRange r{};
  if (dots == std::string::npos) {
    r.lo = r.hi = parse_int(text, "range");
  } else {
    r.lo = parse_int(text.substr(0, dots), "range");
    r.hi = parse_int(text.substr(dots + 2), "range");
  }
  if (r.lo < 0 || r.hi < r.lo) throw ParseError("range must be 0 <= a <= b: '" + text + "'");
  return r;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace orlicz
