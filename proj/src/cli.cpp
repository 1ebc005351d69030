#include "sfs/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sfs/errors.hpp"
#include "sfs/field.hpp"
#include "sfs/ingest.hpp"
#include "sfs/model.hpp"

namespace sfs::cli {
namespace {

namespace fs = std::filesystem;

struct Failure {
  ExitStatus status;
  std::string message;
};

struct Loaded {
  RunConfig cfg;
  std::shared_ptr<const TemperatureField> field;
  double y_star;
};

// Everything up to a fitted field; any problem here is an input error.
Loaded load(const Options& opt) {
  try {
    Loaded l{read_config(opt.config), nullptr, 0.0};
    l.y_star = opt.y_star.value_or(l.cfg.y_star);
    if (!std::isfinite(l.y_star) || l.y_star < 0.0 || l.y_star > l.cfg.height) {
      throw ValidationError("yStar", "probe height " + format_double(l.y_star) +
                                         " outside [0, " + format_double(l.cfg.height) + "]");
    }
    ThermocoupleDataset ds = read_dataset(l.cfg.data_path);
    ds.height = l.cfg.height;
    validate(ds);
    l.field = std::make_shared<const TemperatureField>(
        fit_field(ds, l.cfg.order_time, l.cfg.order_space));
    const FieldDomain& d = l.field->domain();
    if (l.y_star < d.y_min || l.y_star > d.y_max) {
      throw OutOfDomain("probe height " + format_double(l.y_star) + " outside the thermocouple span [" +
                        format_double(d.y_min) + ", " + format_double(d.y_max) + "]");
    }
    return l;
  } catch (const Error& e) {
    throw Failure{ExitStatus::InputError, e.what()};
  }
}

struct Events {
  double t_liquidus, t_solidus;
};

Events locate_events(const Loaded& l) {
  const FieldDomain& d = l.field->domain();
  if (l.cfg.events) {
    const auto [t_l, t_s] = *l.cfg.events;
    if (t_l < d.t_min || t_s > d.t_max) {
      throw Failure{ExitStatus::InputError, "events: configured times outside the recorded span [" +
                                                format_double(d.t_min) + ", " +
                                                format_double(d.t_max) + "]"};
    }
    return {t_l, t_s};
  }
  try {
    const Events ev{find_crossing(*l.field, l.y_star, l.cfg.material.T_liquidus),
                    find_crossing(*l.field, l.y_star, l.cfg.material.T_solidus)};
    if (!(ev.t_liquidus < ev.t_solidus)) {
      throw Failure{ExitStatus::NumericalFailure, "solidus reached before liquidus at the probe"};
    }
    return ev;
  } catch (const Error& e) {
    throw Failure{ExitStatus::NumericalFailure, e.what()};
  }
}

template <class Body>
ExitStatus guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const Failure& f) {
    err << "error: " << f.message << '\n';
    return f.status;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return ExitStatus::NumericalFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return ExitStatus::NumericalFailure;
  }
}

std::string render_svg(const SolidificationResult& res) {
  constexpr double width = 640, height = 400, margin = 50;
  const double t0 = res.samples.front().t;
  const double t1 = std::max(res.samples.back().t, t0 + 1e-12);
  auto px = [&](double t) { return margin + (t - t0) / (t1 - t0) * (width - 2 * margin); };
  auto py = [&](double fs) { return height - margin - fs * (height - 2 * margin); };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<g stroke=\"black\" stroke-width=\"1\">\n"
      << "<line x1=\"" << margin << "\" y1=\"" << py(0) << "\" x2=\"" << width - margin << "\" y2=\""
      << py(0) << "\"/>\n"
      << "<line x1=\"" << margin << "\" y1=\"" << py(0) << "\" x2=\"" << margin << "\" y2=\"" << py(1)
      << "\"/>\n</g>\n"
      << "<g font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<text x=\"" << width / 2 << "\" y=\"" << height - 12 << "\" text-anchor=\"middle\">t [s]</text>\n"
      << "<text x=\"14\" y=\"" << height / 2 << "\" transform=\"rotate(-90 14 " << height / 2
      << ")\" text-anchor=\"middle\">fs</text>\n"
      << "<text x=\"" << margin << "\" y=\"" << py(0) + 16 << "\" text-anchor=\"middle\">"
      << format_double(t0) << "</text>\n"
      << "<text x=\"" << width - margin << "\" y=\"" << py(0) + 16 << "\" text-anchor=\"middle\">"
      << format_double(t1) << "</text>\n"
      << "<text x=\"" << margin - 6 << "\" y=\"" << py(0) + 4 << "\" text-anchor=\"end\">0</text>\n"
      << "<text x=\"" << margin - 6 << "\" y=\"" << py(1) + 4 << "\" text-anchor=\"end\">1</text>\n"
      << "</g>\n<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"";
  for (std::size_t k = 0; k < res.samples.size(); ++k) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s%.2f,%.2f", k ? " " : "", px(res.samples[k].t),
                  py(res.samples[k].fs));
    svg << buf;
  }
  svg << "\"/>\n</svg>\n";
  return svg.str();
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

}  // namespace

ExitStatus configure(const Options& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    RunConfig cfg;
    try {
      cfg = read_config(opt.config);
    } catch (const Error& e) {
      throw Failure{ExitStatus::InputError, e.what()};
    }
    if (opt.y_star) cfg.y_star = *opt.y_star;
    if (opt.output) cfg.output_dir = *opt.output;
    out << dump_config(cfg) << '\n';
    return ExitStatus::Ok;
  });
}

ExitStatus calibrate(const Options& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Loaded l = load(opt);
    const FieldDomain& d = l.field->domain();
    out << "domain: t in [" << format_double(d.t_min) << ", " << format_double(d.t_max)
        << "] s, y in [" << format_double(d.y_min) << ", " << format_double(d.y_max) << "] m\n";

    const auto violations = check_monotone(*l.field, l.cfg.monotone_time_samples,
                                           l.cfg.monotone_position_samples, l.cfg.monotone_tol);
    out << "monotonicity: " << violations.size() << " violation(s) at tolerance "
        << format_double(l.cfg.monotone_tol) << " degC\n";
    if (!violations.empty()) {
      const auto worst = std::max_element(violations.begin(), violations.end(),
                                          [](const Violation& a, const Violation& b) {
                                            return a.deficit < b.deficit;
                                          });
      out << "  worst deficit " << format_double(worst->deficit) << " degC at t = "
          << format_double(worst->t) << " s between y = " << format_double(worst->y1) << " and "
          << format_double(worst->y2) << " m\n";
    }

    std::optional<Failure> event_failure;
    out << "probe: y* = " << format_double(l.y_star) << " m\n";
    try {
      const Events ev = locate_events(l);
      const char* how = l.cfg.events ? "configured" : "detected";
      out << "liquidus: t_L = " << format_double(ev.t_liquidus) << " s, T = "
          << format_double(l.field->eval(ev.t_liquidus, l.y_star)) << " degC (" << how << ")\n"
          << "solidus: t_S = " << format_double(ev.t_solidus) << " s, T = "
          << format_double(l.field->eval(ev.t_solidus, l.y_star)) << " degC (" << how << ")\n";
    } catch (const Failure& f) {
      out << "events: " << f.message << '\n';
      event_failure = f;
    }

    if (!violations.empty()) {
      out << "status: monotonicity violations\n";
      return ExitStatus::ValidationFailure;
    }
    if (event_failure) {
      out << "status: event detection failed\n";
      err << "error: " << event_failure->message << '\n';
      return event_failure->status;
    }
    out << "status: ok\n";
    return ExitStatus::Ok;
  });
}

ExitStatus calculate(const Options& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Loaded l = load(opt);
    const Events ev = locate_events(l);

    SolidificationResult res;
    try {
      const SolidificationProblem prob =
          make_problem(l.field, l.cfg.material, l.y_star, ev.t_liquidus, ev.t_solidus);
      res = solve_fraction_solid(prob, l.cfg.solver);
    } catch (const Error& e) {
      throw Failure{ExitStatus::NumericalFailure, e.what()};
    }
    if (res.terminated == SolidTermination::StepLimit) {
      throw Failure{ExitStatus::NumericalFailure,
                    "step limit of " + std::to_string(l.cfg.solver.max_steps) + " reached"};
    }

    const fs::path dir = opt.output.value_or(l.cfg.output_dir);
    std::vector<fs::path> written;
    try {
      std::error_code ec;
      fs::create_directories(dir, ec);
      if (ec) throw IoError("cannot create output directory '" + dir.string() + "'");

      std::vector<std::vector<double>> by_time, by_temp, by_rate;
      for (const SolidSample& s : res.samples) by_time.push_back({s.t, s.T, s.dTdt, s.fs});
      for (const auto& [T, f] : as_function_of_temperature(res)) by_temp.push_back({T, f});
      for (const auto& [r, f] : as_function_of_cooling_rate(res)) by_rate.push_back({r, f});

      auto emit_series = [&](const char* name, const std::vector<std::string>& header,
                             const std::vector<std::vector<double>>& rows) {
        written.push_back(dir / name);
        write_series(written.back(), header, rows);
      };
      emit_series("fs_vs_t.csv", {"t", "T", "dTdt", "fs"}, by_time);
      emit_series("fs_vs_T.csv", {"T", "fs"}, by_temp);
      emit_series("fs_vs_rate.csv", {"dTdt", "fs"}, by_rate);

      const SolidSample& last = res.samples.back();
      std::ostringstream summary;
      summary << "termination: " << to_string(res.terminated) << '\n'
              << "y_star: " << format_double(l.y_star) << '\n'
              << "t_L: " << format_double(ev.t_liquidus) << '\n'
              << "T_L: " << format_double(res.samples.front().T) << '\n'
              << "t_S: " << format_double(ev.t_solidus) << '\n'
              << "T_S: " << format_double(l.field->eval(ev.t_solidus, l.y_star)) << '\n'
              << "samples: " << res.samples.size() << '\n'
              << "final_t: " << format_double(last.t) << '\n'
              << "final_fs: " << format_double(last.fs) << '\n'
              << "clamp_count: " << res.clamp_count << '\n'
              << "negative_rhs_count: " << res.negative_rhs_count << '\n';
      written.push_back(dir / "summary.txt");
      write_text(written.back(), summary.str());
      if (opt.svg) {
        written.push_back(dir / "fs_vs_t.svg");
        write_text(written.back(), render_svg(res));
      }
      out << summary.str();
    } catch (const Error& e) {
      std::error_code ignored;
      for (const fs::path& p : written) fs::remove(p, ignored);
      throw Failure{ExitStatus::InputError, e.what()};
    }
    return ExitStatus::Ok;
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fraction-solid calculation from thermocouple cooling curves", "sfs"};
  app.require_subcommand(1);

  Options opt;
  std::string config;
  std::string output;
  double y_star = 0.0;
  std::vector<CLI::App*> subs;
  for (const char* name : {"configure", "calibrate", "calculate"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", config, "run configuration (JSON)")->required();
    sub->add_option("--output", output, "output directory, overrides outputDir");
    sub->add_option("--y-star", y_star, "probe height in metres, overrides yStar");
    sub->add_flag("--svg", opt.svg, "also write fs_vs_t.svg");
    subs.push_back(sub);
  }
  subs[0]->description("validate the configuration and print it with defaults applied");
  subs[1]->description("check the temperature field and locate liquidus/solidus events");
  subs[2]->description("integrate fraction solid and write the result series");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : static_cast<int>(ExitStatus::InputError);
  }

  opt.config = config;
  if (!output.empty()) opt.output = fs::path(output);
  for (CLI::App* sub : subs) {
    if (sub->count("--y-star") > 0) opt.y_star = y_star;
  }

  ExitStatus status = ExitStatus::InputError;
  if (subs[0]->parsed()) status = configure(opt, out, err);
  if (subs[1]->parsed()) status = calibrate(opt, out, err);
  if (subs[2]->parsed()) status = calculate(opt, out, err);
  return static_cast<int>(status);
}

}  // namespace sfs::cli
