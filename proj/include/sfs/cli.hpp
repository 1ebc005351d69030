#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>

namespace sfs::cli {

/// Process exit codes. Stable across releases.
enum class ExitStatus : int {
  Ok = 0,
  ValidationFailure = 1,  ///< data loaded but breaks a physical property
  InputError = 2,         ///< unreadable or invalid config / data / flags
  NumericalFailure = 3,   ///< no crossing, step limit, non-finite rhs
};

struct Options {
  std::filesystem::path config;
  std::optional<std::filesystem::path> output;  ///< overrides outputDir
  std::optional<double> y_star;                 ///< overrides yStar
  bool svg = false;
};

/// Prints the resolved configuration as JSON.
ExitStatus configure(const Options& opt, std::ostream& out, std::ostream& err);
/// Fits the field, checks monotonicity in height and locates the liquidus
/// and solidus events at the probe. Writes nothing.
ExitStatus calibrate(const Options& opt, std::ostream& out, std::ostream& err);
/// Full pipeline; writes fs_vs_t.csv, fs_vs_T.csv, fs_vs_rate.csv,
/// summary.txt (and fs_vs_t.svg with `svg`) into the output directory.
/// On failure none of these files are left behind.
ExitStatus calculate(const Options& opt, std::ostream& out, std::ostream& err);

/// `sfs configure|calibrate|calculate --config <path> [--output <dir>]
/// [--y-star <m>] [--svg]`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sfs::cli
