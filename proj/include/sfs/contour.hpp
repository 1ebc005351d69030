#pragma once

#include <atomic>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "sfs/curve.hpp"

namespace sfs {

/// Ordered family of curves placed at strictly ascending positions, read as
/// a two-dimensional function y(x, z): each member maps x to y, and values
/// across members are interpolated in z with `slice_order()`.
///
/// Built by `add` in a single writer phase. The first `slice`, `eval`,
/// `dydx`, `d2ydx2` or an explicit `freeze()` ends that phase; any later
/// `add` throws FrozenContour. A frozen contour is safe to share between
/// reader threads.
class Contour {
 public:
  /// Throws InvalidOrder unless slice_order is 1 or 2.
  explicit Contour(int slice_order = Curve::default_order);

  Contour(const Contour& other);
  Contour& operator=(const Contour& other);
  Contour(Contour&& other) noexcept;
  Contour& operator=(Contour&& other) noexcept;

  /// Throws IVarNotAscend when z does not exceed the last position, and
  /// FrozenContour once the contour has been read.
  void add(Curve s, double z);

  /// Throws InvalidIndex when i >= size().
  const Curve& get_c(std::size_t i) const;

  /// Curve across positions of the member values at x.
  Curve slice(double x) const;
  /// Exactly slice(x).eval(z).
  double eval(double x, double z) const;
  /// Member x-derivatives at x, interpolated across positions at z.
  double dydx(double x, double z) const;
  /// Second z-derivative of slice(x) at z. Needs slice_order() == 2.
  double d2ydx2(double x, double z) const;

  void freeze() const noexcept { frozen_.store(true, std::memory_order_release); }
  bool frozen() const noexcept { return frozen_.load(std::memory_order_acquire); }

  std::size_t size() const noexcept { return curves_.size(); }
  bool empty() const noexcept { return curves_.empty(); }
  int slice_order() const noexcept { return slice_order_; }
  std::span<const double> positions() const noexcept { return positions_; }

  /// Range of x accepted by every member: [max of min_d, min of max_d].
  /// The interval is empty (first > second) when member domains do not overlap.
  std::pair<double, double> common_domain() const;

 private:
  template <class Sample>
  Curve across(double x, Sample&& sample) const;

  std::vector<Curve> curves_;
  std::vector<double> positions_;
  int slice_order_;
  mutable std::atomic<bool> frozen_{false};
};

}  // namespace sfs
