#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace sfs {

/// Position of `x` in an ascending sequence: the i with xs[i] <= x < xs[i+1].
/// At the right endpoint x == xs.back() the last interval (|xs| - 2) is
/// returned. The caller guarantees xs.front() <= x <= xs.back().
std::size_t index(std::span<const double> xs, double x);

/// Quadratic through (x0,y0), (x1,y1), (x2,y2) evaluated at x, written about
/// the middle node:
///
///   y1 + p'(x1) (x - x1) + c (x - x1)^2,   c = f[x0, x1, x2]
///
/// On an evenly spaced stencil this is exactly
/// y1 + (y2-y0)/(x2-x0) (x-x1) + (y2-2y1+y0)/(2 (x2-x1)^2) (x-x1)^2.
/// Requires x0 < x1 < x2.
double interp_quad(double x0, double y0, double x1, double y1, double x2, double y2, double x);

/// One-variable tabulated function with local polynomial interpolation.
///
/// Order 1 interpolates linearly on the bracketing interval. Order 2 uses the
/// three-point stencil centred on `index(xs, x)`, with the centre clamped to
/// [1, n-2] so both endpoints reuse the nearest interior stencil. Derivatives
/// are those of the local interpolant, so the first derivative can jump at
/// sample points.
///
/// Immutable after construction; safe to share between threads.
class Curve {
 public:
  static constexpr int default_order = 2;

  /// Throws InvalidOrder, SeqSizeMismatch, NonFiniteData, IVarNotAscend or
  /// InsufficientPoints (checked in that order).
  Curve(std::vector<double> xs, std::vector<double> ys, int order = default_order);

  double min_d() const noexcept { return xs_.front(); }
  double max_d() const noexcept { return xs_.back(); }
  int order() const noexcept { return order_; }
  std::size_t size() const noexcept { return xs_.size(); }
  std::span<const double> xs() const noexcept { return xs_; }
  std::span<const double> ys() const noexcept { return ys_; }

  /// Throws OutOfDomain unless min_d() <= x <= max_d().
  double eval(double x) const;
  double eval_d1(double x) const;
  double eval_d2(double x) const;

  bool contains(double x) const noexcept { return min_d() <= x && x <= max_d(); }

  friend bool operator==(const Curve&, const Curve&) = default;

 private:
  struct Local;
  Local local(double x) const;

  std::vector<double> xs_;
  std::vector<double> ys_;
  int order_;
};

}  // namespace sfs
