#pragma once

#include <cstddef>
#include <vector>

#include "sfs/contour.hpp"

namespace sfs {

/// Raw record of a directional-solidification run: m sample times, n
/// thermocouple positions (metres from the cylinder bottom) and the m x n
/// temperature matrix in °C, stored row-major (one row per time).
struct ThermocoupleDataset {
  std::vector<double> times;
  std::vector<double> positions;
  std::vector<double> temps;
  double dt = 0.0;      ///< nominal sampling step [s], metadata only
  double height = 0.0;  ///< cylinder height H [m]

  std::size_t rows() const noexcept { return times.size(); }
  std::size_t cols() const noexcept { return positions.size(); }
  double& temp(std::size_t row, std::size_t col) { return temps[row * cols() + col]; }
  double temp(std::size_t row, std::size_t col) const { return temps[row * cols() + col]; }
  std::vector<double> column(std::size_t col) const;

  friend bool operator==(const ThermocoupleDataset&, const ThermocoupleDataset&) = default;
};

/// Checks the dataset invariants: m >= 3, n >= 2, matching matrix size,
/// strictly ascending times and positions, 0 <= positions <= height and
/// finite entries. Throws InsufficientPoints, SeqSizeMismatch,
/// IVarNotAscend, NonFiniteData or ValidationError("positions").
void validate(const ThermocoupleDataset& ds);

struct FieldDomain {
  double t_min, t_max, y_min, y_max;
};

/// Continuous temperature field T(y, t) over a thermocouple dataset. One
/// curve per thermocouple (temperature over time), stacked by position.
/// Immutable.
class TemperatureField {
 public:
  TemperatureField(Contour contour, std::vector<double> times);

  double eval(double t, double y) const { return contour_.eval(t, y); }
  /// ∂T/∂t
  double dT_dt(double t, double y) const { return contour_.dydx(t, y); }
  /// ∂²T/∂y²
  double d2T_dy2(double t, double y) const { return contour_.d2ydx2(t, y); }
  Curve profile(double t) const { return contour_.slice(t); }

  const FieldDomain& domain() const noexcept { return domain_; }
  const Contour& contour() const noexcept { return contour_; }
  /// Union of member sample times, ascending. The scan grid for crossings.
  const std::vector<double>& times() const noexcept { return times_; }

 private:
  Contour contour_;
  std::vector<double> times_;
  FieldDomain domain_;
};

/// Fits the dataset: each column becomes a Curve over `times` of order
/// `order_time`, added in position order to a contour of order `order_space`.
TemperatureField fit_field(const ThermocoupleDataset& ds, int order_time = 2, int order_space = 2);

/// Adjacent sample pair (y1 < y2) at time t whose temperature drops with
/// height by more than the tolerance.
struct Violation {
  double t, y1, y2, T1, T2;
  double deficit;  ///< T1 - T2
};

/// Scans a grid of `t_samples` uniform times by `y_samples` uniform heights
/// (merged with the thermocouple positions) for places where the field
/// decreases with height: T(y2) < T(y1) - tol for neighbouring y1 < y2.
/// Empty result means the property holds on the grid.
std::vector<Violation> check_monotone(const TemperatureField& tf, std::size_t t_samples,
                                      std::size_t y_samples, double tol);

/// Earliest time the trace T(y_star, ·) comes down to `target`: scans the
/// sample times for the first bracket g(t_j) >= target >= g(t_j+1), then
/// refines inside it. Throws NoCrossing if there is none, OutOfDomain if
/// y_star is outside the field.
double find_crossing(const TemperatureField& tf, double y_star, double target);

}  // namespace sfs
