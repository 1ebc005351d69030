#include "sfs/curve.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sfs/errors.hpp"

namespace sfs {
namespace {

std::string fmt_size(std::size_t n) { return std::to_string(n); }

}  // namespace

std::size_t index(std::span<const double> xs, double x) {
  // First element strictly greater than x; the bracket starts one before it.
  auto it = std::upper_bound(xs.begin(), xs.end(), x);
  auto i = static_cast<std::size_t>(it - xs.begin());
  i = i == 0 ? 0 : i - 1;
  return std::min(i, xs.size() - 2);
}

double interp_quad(double x0, double y0, double x1, double y1, double x2, double y2, double x) {
  const double s01 = (y1 - y0) / (x1 - x0);
  const double s12 = (y2 - y1) / (x2 - x1);
  const double c = (s12 - s01) / (x2 - x0);
  return y1 + (x - x1) * (s01 + c * (x - x0));
}

// Local interpolant in Newton form anchored at a sample node:
//   p(x) = ya + (x - xa) * (slope + curv * (x - xb))
struct Curve::Local {
  double xa, ya, xb, slope, curv;

  double value(double x) const { return ya + (x - xa) * (slope + curv * (x - xb)); }
  double d1(double x) const { return slope + curv * ((x - xa) + (x - xb)); }
  double d2() const { return 2.0 * curv; }
};

Curve::Curve(std::vector<double> xs, std::vector<double> ys, int order)
    : xs_(std::move(xs)), ys_(std::move(ys)), order_(order) {
  if (order_ != 1 && order_ != 2) {
    throw InvalidOrder("curve order must be 1 or 2, got " + std::to_string(order_));
  }
  if (xs_.size() != ys_.size()) {
    throw SeqSizeMismatch("|xs| = " + fmt_size(xs_.size()) + " but |ys| = " + fmt_size(ys_.size()));
  }
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    if (!std::isfinite(xs_[i]) || !std::isfinite(ys_[i])) {
      throw NonFiniteData("sample " + fmt_size(i) + " is not finite");
    }
  }
  for (std::size_t i = 1; i < xs_.size(); ++i) {
    if (!(xs_[i - 1] < xs_[i])) {
      throw IVarNotAscend("xs[" + fmt_size(i) + "] does not exceed xs[" + fmt_size(i - 1) + "]");
    }
  }
  if (xs_.size() < static_cast<std::size_t>(order_) + 1) {
    throw InsufficientPoints("order " + std::to_string(order_) + " needs " +
                             std::to_string(order_ + 1) + " samples, got " + fmt_size(xs_.size()));
  }
}

Curve::Local Curve::local(double x) const {
  if (!contains(x)) {
    throw OutOfDomain("x = " + std::to_string(x) + " outside [" + std::to_string(min_d()) + ", " +
                      std::to_string(max_d()) + "]");
  }
  const std::size_t n = xs_.size();
  const std::size_t i = index(xs_, x);
  // Anchor on the sample the bracket starts at, or on the last sample when
  // x sits exactly on it, so that p(xs[k]) == ys[k] bit for bit.
  const std::size_t a = x == xs_[n - 1] ? n - 1 : i;

  if (order_ == 1) {
    const double slope = (ys_[i + 1] - ys_[i]) / (xs_[i + 1] - xs_[i]);
    return {xs_[a], ys_[a], xs_[a], slope, 0.0};
  }

  const std::size_t centre = std::clamp<std::size_t>(i, 1, n - 2);
  const std::size_t lo = centre - 1;
  const std::size_t hi = centre + 1;
  const double s_lo = (ys_[centre] - ys_[lo]) / (xs_[centre] - xs_[lo]);
  const double s_hi = (ys_[hi] - ys_[centre]) / (xs_[hi] - xs_[centre]);
  const double curv = (s_hi - s_lo) / (xs_[hi] - xs_[lo]);

  // Second node of the Newton form: a stencil neighbour of the anchor.
  if (a == lo) return {xs_[lo], ys_[lo], xs_[centre], s_lo, curv};
  if (a == centre) return {xs_[centre], ys_[centre], xs_[lo], s_lo, curv};
  return {xs_[hi], ys_[hi], xs_[centre], s_hi, curv};
}

double Curve::eval(double x) const { return local(x).value(x); }

double Curve::eval_d1(double x) const { return local(x).d1(x); }

double Curve::eval_d2(double x) const { return local(x).d2(); }

}  // namespace sfs
