#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "orlicz/specs.hpp"

namespace orlicz::cli {

enum class Command { norm, charseq, widths, sigma, verify, table };

struct RunConfig {
  Command command = Command::verify;
  std::string orlicz_spec = "power:p=2";
  std::optional<std::string> target_spec;  ///< N for E_gamma / D_n; defaults to the source gauge
  std::string weight_spec;
  std::optional<double> tail_bound;  ///< bound past the last CSV weight
  std::optional<double> p;
  std::optional<IntRange> n_range;
  std::optional<IntRange> m_range;
  std::size_t d = 64;
  std::uint64_t seed = 0;
  int trials = 10000;
  std::size_t patience = 1000;
  std::size_t s_cap = 0;
  std::string values;  ///< inline sequence for `norm`
  std::string x_path;  ///< CSV sequence for `norm`
  std::string gamma;   ///< 1-based index list for `norm`
  std::string output;  ///< empty means stdout
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitHypothesis = 3;

/// Dispatches the command; report goes to `out`, diagnostics to `err`.
/// Returns 0, 1 (verify found a counterexample), 2 (invalid input) or 3
/// (hypothesis or truncation failure).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace orlicz::cli
