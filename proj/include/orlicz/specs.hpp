#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "orlicz/charseq.hpp"
#include "orlicz/orlicz_function.hpp"
#include "orlicz/sequence.hpp"

namespace orlicz {

/// `power:p=<p>`, `exp`, `power-log:p=<p>` or `spline:<path>`.
OrliczFunction parse_orlicz_spec(const std::string& spec);

struct WeightSpec {
  WeightSequence weights;
  bool builtin_family;  ///< power-decay or geometric; CSV weights are not
};

/// `power-decay:beta=<b>`, `geometric:q=<q>` or `csv:<path>`. Built-in
/// families are generated at dimension d; CSV weights use their own length
/// and take `csv_tail_bound` (default 0) as the bound past the last entry.
WeightSpec parse_weight_spec(const std::string& spec, std::size_t d, std::optional<double> csv_tail_bound = {});

/// One finite real per line; blank lines and `#` comments skipped.
std::vector<double> read_csv_values(const std::filesystem::path& path);
std::vector<double> parse_csv_values(const std::string& text);

/// Comma-separated values, e.g. `3,4,12`.
std::vector<double> parse_value_list(const std::string& text);

/// Comma-separated 1-based positions, converted to a 0-based IndexSet.
IndexSet parse_index_list(const std::string& text);

/// Inclusive integer range `a..b` (or a single integer).
struct IntRange {
  int lo;
  int hi;
};
IntRange parse_range(const std::string& text);

/// 17 significant digits, locale independent.
std::string format_double(double v);

}  // namespace orlicz
