#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sfs/field.hpp"
#include "sfs/material.hpp"
#include "sfs/model.hpp"

namespace sfs {

/// Fully validated run configuration. Relative paths in the JSON file are
/// resolved against the directory that holds it.
struct RunConfig {
  std::filesystem::path data_path;
  MaterialProperties material;
  double working_lo = 0.0;  ///< positivity-check range for the property polynomials [°C]
  double working_hi = 0.0;
  double y_star = 0.0;  ///< probe height [m]
  double height = 0.0;  ///< cylinder height [m]
  int order_time = 2;
  int order_space = 2;
  SolverSettings solver;
  double monotone_tol = 1e-6;  ///< °C
  std::size_t monotone_time_samples = 200;
  std::size_t monotone_position_samples = 50;
  std::filesystem::path output_dir;
  /// Explicit (t_L, t_S). When absent the events are detected from TL/TS.
  std::optional<std::pair<double, double>> events;
};

/// Parses the dataset CSV:
///
///   time,<y_1>,...,<y_n>          positions in metres, strictly ascending
///   <t>,<T_1>,...,<T_n>           one row per sample time, °C
///
/// Cells may carry surrounding blanks; LF or CRLF line ends; trailing blank
/// lines are ignored. dt is the median time step, height the top position.
/// Throws ParseError, SeqSizeMismatch, IVarNotAscend, NonFiniteData or
/// InsufficientPoints.
ThermocoupleDataset read_dataset(std::istream& in);
/// Same as above; IoError when the file cannot be opened.
ThermocoupleDataset read_dataset(const std::filesystem::path& path);
void write_dataset(std::ostream& out, const ThermocoupleDataset& ds);

/// Throws ParseError on malformed JSON and ValidationError (key path in
/// `key()`) for anything that breaks the schema in docs/config.schema.json.
RunConfig read_config(std::istream& in, const std::filesystem::path& base_dir);
RunConfig read_config(const std::filesystem::path& path);
/// Resolved configuration as pretty-printed JSON, defaults filled in.
std::string dump_config(const RunConfig& cfg);

/// Shortest decimal text that reads back to the same double.
std::string format_double(double v);

/// CSV with a header line and one line per row. Throws SeqSizeMismatch for
/// ragged rows and IoError when the file cannot be written.
void write_series(const std::filesystem::path& path, const std::vector<std::string>& header,
                  const std::vector<std::vector<double>>& rows);

}  // namespace sfs
