#include "sfs/field.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sfs/errors.hpp"

namespace sfs {

std::vector<double> ThermocoupleDataset::column(std::size_t col) const {
  std::vector<double> out;
  out.reserve(rows());
  for (std::size_t r = 0; r < rows(); ++r) out.push_back(temp(r, col));
  return out;
}

void validate(const ThermocoupleDataset& ds) {
  const std::size_t m = ds.rows();
  const std::size_t n = ds.cols();
  if (ds.temps.size() != m * n) {
    throw SeqSizeMismatch("temperature matrix has " + std::to_string(ds.temps.size()) +
                          " entries, expected " + std::to_string(m) + " x " + std::to_string(n));
  }
  if (m < 3) throw InsufficientPoints("need at least 3 sample times, got " + std::to_string(m));
  if (n < 2) throw InsufficientPoints("need at least 2 thermocouples, got " + std::to_string(n));
  for (double v : ds.times) {
    if (!std::isfinite(v)) throw NonFiniteData("non-finite sample time");
  }
  for (double v : ds.positions) {
    if (!std::isfinite(v)) throw NonFiniteData("non-finite thermocouple position");
  }
  for (std::size_t k = 0; k < ds.temps.size(); ++k) {
    if (!std::isfinite(ds.temps[k])) {
      throw NonFiniteData("temperature at row " + std::to_string(k / n) + ", column " +
                          std::to_string(k % n));
    }
  }
  for (std::size_t j = 1; j < m; ++j) {
    if (!(ds.times[j - 1] < ds.times[j])) {
      throw IVarNotAscend("sample times not strictly ascending at row " + std::to_string(j));
    }
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (!(ds.positions[i - 1] < ds.positions[i])) {
      throw IVarNotAscend("thermocouple positions not strictly ascending at column " +
                          std::to_string(i));
    }
  }
  if (!(ds.positions.front() >= 0.0 && ds.positions.back() <= ds.height)) {
    throw ValidationError("positions", "thermocouples must lie within [0, height = " +
                                           std::to_string(ds.height) + "]");
  }
}

TemperatureField::TemperatureField(Contour contour, std::vector<double> times)
    : contour_(std::move(contour)), times_(std::move(times)) {
  contour_.freeze();
  const auto [lo, hi] = contour_.common_domain();
  const auto ys = contour_.positions();
  domain_ = {lo, hi, ys.empty() ? 0.0 : ys.front(), ys.empty() ? 0.0 : ys.back()};
}

TemperatureField fit_field(const ThermocoupleDataset& ds, int order_time, int order_space) {
  if (ds.temps.size() != ds.rows() * ds.cols()) {
    throw SeqSizeMismatch("temperature matrix does not match times x positions");
  }
  Contour contour(order_space);
  for (std::size_t i = 0; i < ds.cols(); ++i) {
    contour.add(Curve(ds.times, ds.column(i), order_time), ds.positions[i]);
  }
  // Validate the stacking order before the field freezes the contour.
  if (contour.size() < static_cast<std::size_t>(order_space) + 1) {
    throw InsufficientPoints("order " + std::to_string(order_space) + " across positions needs " +
                             std::to_string(order_space + 1) + " thermocouples");
  }
  return TemperatureField(std::move(contour), ds.times);
}

namespace {

std::vector<double> uniform(double lo, double hi, std::size_t count) {
  std::vector<double> out(count);
  for (std::size_t k = 0; k < count; ++k) {
    out[k] = k + 1 == count ? hi : lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(count - 1);
  }
  return out;
}

}  // namespace

std::vector<Violation> check_monotone(const TemperatureField& tf, std::size_t t_samples,
                                      std::size_t y_samples, double tol) {
  if (t_samples < 2 || y_samples < 2) {
    throw ValidationError("samples", "need at least 2 samples along each axis");
  }
  if (!(tol >= 0.0)) throw ValidationError("tol", "tolerance must be non-negative");

  const FieldDomain& d = tf.domain();
  std::vector<double> ys = uniform(d.y_min, d.y_max, y_samples);
  const auto nodes = tf.contour().positions();
  ys.insert(ys.end(), nodes.begin(), nodes.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

  std::vector<Violation> found;
  std::vector<double> temps(ys.size());
  for (double t : uniform(d.t_min, d.t_max, t_samples)) {
    const Curve profile = tf.profile(t);
    for (std::size_t k = 0; k < ys.size(); ++k) temps[k] = profile.eval(ys[k]);
    for (std::size_t k = 1; k < ys.size(); ++k) {
      if (temps[k] < temps[k - 1] - tol) {
        found.push_back({t, ys[k - 1], ys[k], temps[k - 1], temps[k], temps[k - 1] - temps[k]});
      }
    }
  }
  return found;
}

double find_crossing(const TemperatureField& tf, double y_star, double target) {
  const FieldDomain& d = tf.domain();
  if (!(d.y_min <= y_star && y_star <= d.y_max)) {
    throw OutOfDomain("probe height " + std::to_string(y_star) + " outside [" +
                      std::to_string(d.y_min) + ", " + std::to_string(d.y_max) + "]");
  }
  std::vector<double> ts;
  for (double t : tf.times()) {
    if (d.t_min <= t && t <= d.t_max) ts.push_back(t);
  }
  auto g = [&](double t) { return tf.eval(t, y_star) - target; };

  const double value_tol = 1e-9 * std::max(1.0, std::abs(target));
  const double width_tol = 1e-12 * (d.t_max - d.t_min);

  double g_prev = ts.empty() ? 0.0 : g(ts.front());
  for (std::size_t j = 0; j + 1 < ts.size(); ++j) {
    const double g_next = g(ts[j + 1]);
    if (g_prev >= 0.0 && g_next <= 0.0) {
      if (g_prev == 0.0) return ts[j];
      if (g_next == 0.0) return ts[j + 1];

      // Illinois variant of regula falsi: keeps the bracket like bisection,
      // converges superlinearly on the locally quadratic trace.
      double a = ts[j], fa = g_prev;
      double b = ts[j + 1], fb = g_next;
      int side = 0;
      for (int it = 0; it < 200; ++it) {
        double c = b - fb * (b - a) / (fb - fa);
        if (!(a < c && c < b)) c = 0.5 * (a + b);
        const double fc = g(c);
        if (std::abs(fc) <= value_tol || (b - a) <= width_tol) return c;
        if (fc > 0.0) {
          a = c, fa = fc;
          if (side == -1) fb *= 0.5;
          side = -1;
        } else {
          b = c, fb = fc;
          if (side == 1) fa *= 0.5;
          side = 1;
        }
      }
      return 0.5 * (a + b);
    }
    g_prev = g_next;
  }
  throw NoCrossing("temperature at y = " + std::to_string(y_star) + " never comes down to " +
                   std::to_string(target));
}

}  // namespace sfs
