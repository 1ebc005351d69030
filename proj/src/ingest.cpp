#include "sfs/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <iterator>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <string_view>

#include <json.hpp>

#include "sfs/errors.hpp"

namespace sfs {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Dataset CSV
// ---------------------------------------------------------------------------

namespace {

std::string_view trim(std::string_view s) {
  const auto blank = [](char c) { return c == ' ' || c == '\t'; };
  while (!s.empty() && blank(s.front())) s.remove_prefix(1);
  while (!s.empty() && blank(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_cells(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    cells.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

// Non-finite spellings parse here and are rejected later as NonFiniteData.
double parse_number(std::string_view cell, std::size_t line, std::size_t col) {
  double v = 0.0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (cell.empty() || ec != std::errc() || ptr != last) {
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) +
                     ": not a number: '" + std::string(cell) + "'");
  }
  return v;
}

double median_step(const std::vector<double>& times) {
  std::vector<double> steps;
  for (std::size_t j = 1; j < times.size(); ++j) steps.push_back(times[j] - times[j - 1]);
  if (steps.empty()) return 0.0;
  std::sort(steps.begin(), steps.end());
  const std::size_t mid = steps.size() / 2;
  return steps.size() % 2 == 1 ? steps[mid] : 0.5 * (steps[mid - 1] + steps[mid]);
}

}  // namespace

ThermocoupleDataset read_dataset(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (in.bad()) throw IoError("failed reading dataset stream");
  std::string_view rest = text;
  if (rest.starts_with("\xEF\xBB\xBF")) rest.remove_prefix(3);

  std::vector<std::string_view> lines;
  while (!rest.empty()) {
    const std::size_t nl = rest.find('\n');
    std::string_view line = rest.substr(0, nl);
    if (line.ends_with('\r')) line.remove_suffix(1);
    lines.push_back(line);
    rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
  }
  while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) throw ParseError("empty dataset");

  ThermocoupleDataset ds;
  const auto header = split_cells(lines.front());
  if (header.front() != "time") throw ParseError("line 1: header must start with 'time'");
  for (std::size_t c = 1; c < header.size(); ++c) {
    ds.positions.push_back(parse_number(header[c], 1, c + 1));
  }
  for (std::size_t i = 1; i < ds.positions.size(); ++i) {
    if (std::isfinite(ds.positions[i - 1]) && std::isfinite(ds.positions[i]) &&
        !(ds.positions[i - 1] < ds.positions[i])) {
      throw IVarNotAscend("line 1: thermocouple positions not strictly ascending at column " +
                          std::to_string(i + 2));
    }
  }

  const std::size_t n = ds.positions.size();
  for (std::size_t l = 1; l < lines.size(); ++l) {
    const auto cells = split_cells(lines[l]);
    if (cells.size() == 1 && cells.front().empty()) {
      throw ParseError("line " + std::to_string(l + 1) + ": blank line inside data");
    }
    if (cells.size() != n + 1) {
      throw SeqSizeMismatch("line " + std::to_string(l + 1) + ": " + std::to_string(cells.size()) +
                            " cells, expected " + std::to_string(n + 1));
    }
    ds.times.push_back(parse_number(cells[0], l + 1, 1));
    for (std::size_t c = 1; c <= n; ++c) ds.temps.push_back(parse_number(cells[c], l + 1, c + 1));
  }

  ds.dt = median_step(ds.times);
  ds.height = n > 0 && std::isfinite(ds.positions.back()) ? std::max(0.0, ds.positions.back()) : 0.0;
  validate(ds);
  return ds;
}

ThermocoupleDataset read_dataset(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open dataset '" + path.string() + "'");
  return read_dataset(in);
}

void write_dataset(std::ostream& out, const ThermocoupleDataset& ds) {
  out << "time";
  for (double y : ds.positions) out << ',' << format_double(y);
  out << '\n';
  for (std::size_t r = 0; r < ds.rows(); ++r) {
    out << format_double(ds.times[r]);
    for (std::size_t c = 0; c < ds.cols(); ++c) out << ',' << format_double(ds.temp(r, c));
    out << '\n';
  }
}

// ---------------------------------------------------------------------------
// Run configuration
// ---------------------------------------------------------------------------

namespace {

// Walks one JSON object, marking keys as consumed so leftovers can be
// reported as unknown.
class Section {
 public:
  Section(const json& obj, std::string path) : obj_(obj), path_(std::move(path)) {
    if (!obj_.is_object()) throw ValidationError(display(), "expected an object");
  }

  bool has(const std::string& key) const { return obj_.contains(key); }

  const json& raw(const std::string& key) {
    seen_.insert(key);
    if (!obj_.contains(key)) throw ValidationError(key_path(key), "missing required key");
    return obj_.at(key);
  }

  double number(const std::string& key) {
    const json& v = raw(key);
    if (!v.is_number()) throw ValidationError(key_path(key), "expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw ValidationError(key_path(key), "must be finite");
    return d;
  }

  double number_or(const std::string& key, double fallback) { return has(key) ? number(key) : fallback; }

  std::size_t count_or(const std::string& key, std::size_t fallback) {
    if (!has(key)) return fallback;
    const json& v = raw(key);
    if (!v.is_number_integer() || v.get<long long>() <= 0) {
      throw ValidationError(key_path(key), "expected a positive integer");
    }
    return static_cast<std::size_t>(v.get<long long>());
  }

  int order_or(const std::string& key, int fallback) {
    if (!has(key)) return fallback;
    const json& v = raw(key);
    if (!v.is_number_integer() || (v.get<long long>() != 1 && v.get<long long>() != 2)) {
      throw ValidationError(key_path(key), "order must be 1 or 2");
    }
    return static_cast<int>(v.get<long long>());
  }

  std::string text(const std::string& key) {
    const json& v = raw(key);
    if (!v.is_string() || v.get<std::string>().empty()) {
      throw ValidationError(key_path(key), "expected a non-empty string");
    }
    return v.get<std::string>();
  }

  PropertyPoly poly(const std::string& key) {
    const json& v = raw(key);
    std::vector<double> coeffs;
    if (v.is_number()) {
      coeffs.push_back(v.get<double>());
    } else if (v.is_array()) {
      for (const json& c : v) {
        if (!c.is_number()) throw ValidationError(key_path(key), "coefficients must be numbers");
        coeffs.push_back(c.get<double>());
      }
    } else {
      throw ValidationError(key_path(key), "expected a number or an array of coefficients");
    }
    try {
      return PropertyPoly(std::move(coeffs));
    } catch (const ValidationError& e) {
      throw ValidationError(key_path(key), e.detail());
    }
  }

  Section sub(const std::string& key) { return Section(raw(key), key_path(key)); }

  std::string key_path(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

  void reject_unknown() const {
    for (const auto& [key, _] : obj_.items()) {
      if (!seen_.contains(key)) throw ValidationError(key_path(key), "unknown key");
    }
  }

 private:
  std::string display() const { return path_.empty() ? "<root>" : path_; }

  const json& obj_;
  std::string path_;
  std::set<std::string> seen_;
};

// Rewrites library-level keys ("L", "TL/TS") into their config key paths.
[[noreturn]] void rethrow_material(const ValidationError& e) {
  throw ValidationError("material." + e.key(), e.detail());
}

}  // namespace

RunConfig read_config(std::istream& in, const std::filesystem::path& base_dir) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("config: ") + e.what());
  }

  RunConfig cfg;
  Section root(doc, "");
  cfg.data_path = base_dir / root.text("data");
  cfg.height = root.number("height");
  if (!(cfg.height > 0.0)) throw ValidationError("height", "must be positive");
  cfg.y_star = root.number("yStar");
  if (!(cfg.y_star >= 0.0 && cfg.y_star <= cfg.height)) {
    throw ValidationError("yStar", "probe must lie within [0, height]");
  }
  cfg.order_time = root.order_or("orderTime", 2);
  cfg.order_space = root.order_or("orderSpace", 2);
  cfg.monotone_tol = root.number_or("monotoneTol", 1e-6);
  if (!(cfg.monotone_tol >= 0.0)) throw ValidationError("monotoneTol", "must be non-negative");
  if (root.has("monotoneSamples")) {
    Section ms = root.sub("monotoneSamples");
    cfg.monotone_time_samples = ms.count_or("time", cfg.monotone_time_samples);
    cfg.monotone_position_samples = ms.count_or("position", cfg.monotone_position_samples);
    if (cfg.monotone_time_samples < 2) throw ValidationError("monotoneSamples.time", "need at least 2");
    if (cfg.monotone_position_samples < 2) {
      throw ValidationError("monotoneSamples.position", "need at least 2");
    }
    ms.reject_unknown();
  }
  cfg.output_dir = base_dir / (root.has("outputDir") ? root.text("outputDir") : std::string("out"));

  if (root.has("solver")) {
    Section s = root.sub("solver");
    cfg.solver.h = s.number_or("h", cfg.solver.h);
    cfg.solver.rel_tol = s.number_or("relTol", cfg.solver.rel_tol);
    cfg.solver.abs_tol = s.number_or("absTol", cfg.solver.abs_tol);
    cfg.solver.max_steps = s.count_or("maxSteps", cfg.solver.max_steps);
    if (!(cfg.solver.h > 0.0)) throw ValidationError("solver.h", "must be positive");
    if (!(cfg.solver.rel_tol > 0.0)) throw ValidationError("solver.relTol", "must be positive");
    if (!(cfg.solver.abs_tol > 0.0)) throw ValidationError("solver.absTol", "must be positive");
    s.reject_unknown();
  }

  {
    Section m = root.sub("material");
    MaterialProperties& mp = cfg.material;
    mp.cv_liquid = m.poly("cvL");
    mp.cv_solid = m.poly("cvS");
    mp.rho_liquid = m.poly("rhoL");
    mp.rho_solid = m.poly("rhoS");
    mp.latent_heat = m.number("L");
    mp.alpha_b = m.number("alphaB");
    mp.alpha_e = m.number("alphaE");
    mp.T_liquidus = m.number("TL");
    mp.T_solidus = m.number("TS");
    cfg.working_lo = mp.T_solidus;
    cfg.working_hi = mp.T_liquidus;
    if (m.has("workingRange")) {
      const json& r = m.raw("workingRange");
      if (!r.is_array() || r.size() != 2 || !r[0].is_number() || !r[1].is_number()) {
        throw ValidationError("material.workingRange", "expected [lo, hi]");
      }
      cfg.working_lo = r[0].get<double>();
      cfg.working_hi = r[1].get<double>();
    }
    m.reject_unknown();
    try {
      validate(mp, cfg.working_lo, cfg.working_hi);
    } catch (const ValidationError& e) {
      rethrow_material(e);
    }
  }

  if (root.has("events")) {
    Section ev = root.sub("events");
    const double t_l = ev.number("tL");
    const double t_s = ev.number("tS");
    if (!(t_l < t_s)) throw ValidationError("events.tL/tS", "tL must precede tS");
    ev.reject_unknown();
    cfg.events = std::make_pair(t_l, t_s);
  }

  root.reject_unknown();
  return cfg;
}

RunConfig read_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config '" + path.string() + "'");
  return read_config(in, path.parent_path());
}

std::string dump_config(const RunConfig& cfg) {
  const MaterialProperties& mp = cfg.material;
  json doc;
  doc["data"] = cfg.data_path.generic_string();
  doc["height"] = cfg.height;
  doc["yStar"] = cfg.y_star;
  doc["orderTime"] = cfg.order_time;
  doc["orderSpace"] = cfg.order_space;
  doc["monotoneTol"] = cfg.monotone_tol;
  doc["monotoneSamples"] = {{"time", cfg.monotone_time_samples},
                            {"position", cfg.monotone_position_samples}};
  doc["outputDir"] = cfg.output_dir.generic_string();
  doc["solver"] = {{"h", cfg.solver.h},
                   {"relTol", cfg.solver.rel_tol},
                   {"absTol", cfg.solver.abs_tol},
                   {"maxSteps", cfg.solver.max_steps}};
  doc["material"] = {{"cvL", mp.cv_liquid.coeffs()},
                     {"cvS", mp.cv_solid.coeffs()},
                     {"rhoL", mp.rho_liquid.coeffs()},
                     {"rhoS", mp.rho_solid.coeffs()},
                     {"L", mp.latent_heat},
                     {"alphaB", mp.alpha_b},
                     {"alphaE", mp.alpha_e},
                     {"TL", mp.T_liquidus},
                     {"TS", mp.T_solidus},
                     {"workingRange", {cfg.working_lo, cfg.working_hi}}};
  if (cfg.events) doc["events"] = {{"tL", cfg.events->first}, {"tS", cfg.events->second}};
  return doc.dump(2);
}

// ---------------------------------------------------------------------------
// Output series
// ---------------------------------------------------------------------------

std::string format_double(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

void write_series(const std::filesystem::path& path, const std::vector<std::string>& header,
                  const std::vector<std::vector<double>>& rows) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != header.size()) {
      throw SeqSizeMismatch("row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                            " values for " + std::to_string(header.size()) + " columns");
    }
  }
  std::ostringstream text;
  for (std::size_t c = 0; c < header.size(); ++c) text << (c ? "," : "") << header[c];
  text << '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) text << (c ? "," : "") << format_double(row[c]);
    text << '\n';
  }

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  const std::string s = text.str();
  out.write(s.data(), static_cast<std::streamsize>(s.size()));
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

}  // namespace sfs
