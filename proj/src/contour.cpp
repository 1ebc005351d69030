#include "sfs/contour.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "sfs/errors.hpp"

namespace sfs {

Contour::Contour(int slice_order) : slice_order_(slice_order) {
  if (slice_order_ != 1 && slice_order_ != 2) {
    throw InvalidOrder("slice order must be 1 or 2, got " + std::to_string(slice_order_));
  }
}

Contour::Contour(const Contour& other)
    : curves_(other.curves_),
      positions_(other.positions_),
      slice_order_(other.slice_order_),
      frozen_(other.frozen()) {}

Contour& Contour::operator=(const Contour& other) {
  if (this != &other) {
    curves_ = other.curves_;
    positions_ = other.positions_;
    slice_order_ = other.slice_order_;
    frozen_.store(other.frozen());
  }
  return *this;
}

Contour::Contour(Contour&& other) noexcept
    : curves_(std::move(other.curves_)),
      positions_(std::move(other.positions_)),
      slice_order_(other.slice_order_),
      frozen_(other.frozen()) {}

Contour& Contour::operator=(Contour&& other) noexcept {
  curves_ = std::move(other.curves_);
  positions_ = std::move(other.positions_);
  slice_order_ = other.slice_order_;
  frozen_.store(other.frozen());
  return *this;
}

void Contour::add(Curve s, double z) {
  if (frozen()) throw FrozenContour("add after the contour has been read");
  if (!positions_.empty() && !(z > positions_.back())) {
    throw IVarNotAscend("position " + std::to_string(z) + " does not exceed " +
                        std::to_string(positions_.back()));
  }
  curves_.push_back(std::move(s));
  positions_.push_back(z);
}

const Curve& Contour::get_c(std::size_t i) const {
  if (i >= curves_.size()) {
    throw InvalidIndex("index " + std::to_string(i) + " with " + std::to_string(curves_.size()) +
                       " curves");
  }
  return curves_[i];
}

template <class Sample>
Curve Contour::across(double x, Sample&& sample) const {
  freeze();
  if (curves_.size() < static_cast<std::size_t>(slice_order_) + 1) {
    throw InsufficientPoints("slice of order " + std::to_string(slice_order_) + " needs " +
                             std::to_string(slice_order_ + 1) + " curves, have " +
                             std::to_string(curves_.size()));
  }
  std::vector<double> values;
  values.reserve(curves_.size());
  for (const Curve& c : curves_) values.push_back(sample(c, x));
  return Curve(positions_, std::move(values), slice_order_);
}

Curve Contour::slice(double x) const {
  return across(x, [](const Curve& c, double v) { return c.eval(v); });
}

double Contour::eval(double x, double z) const { return slice(x).eval(z); }

double Contour::dydx(double x, double z) const {
  return across(x, [](const Curve& c, double v) { return c.eval_d1(v); }).eval(z);
}

double Contour::d2ydx2(double x, double z) const {
  if (slice_order_ < 2) {
    freeze();
    throw InvalidOrder("second derivative across positions needs slice order 2");
  }
  return slice(x).eval_d2(z);
}

std::pair<double, double> Contour::common_domain() const {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  for (const Curve& c : curves_) {
    lo = std::max(lo, c.min_d());
    hi = std::min(hi, c.max_d());
  }
  return {lo, hi};
}

}  // namespace sfs
