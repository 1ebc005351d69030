#include "sfs/ivp.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sfs/errors.hpp"

namespace sfs::ivp {
namespace {

double stage(const Rhs& rhs, double t, double u) {
  const double k = rhs(t, u);
  if (!std::isfinite(k)) {
    throw NonFiniteRhs("rhs(" + std::to_string(t) + ", " + std::to_string(u) + ") is not finite");
  }
  return k;
}

void check(const IvpSpec& spec) {
  auto finite_pos = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!spec.rhs) throw ValidationError("rhs", "right-hand side is not set");
  if (!std::isfinite(spec.t0) || !std::isfinite(spec.u0)) {
    throw ValidationError("t0/u0", "initial state must be finite");
  }
  if (!std::isfinite(spec.t_end) || !(spec.t_end > spec.t0)) {
    throw ValidationError("tEnd", "end time must exceed the start time");
  }
  if (!finite_pos(spec.h)) throw ValidationError("h", "step must be positive");
  if (!finite_pos(spec.rel_tol)) throw ValidationError("relTol", "tolerance must be positive");
  if (!finite_pos(spec.abs_tol)) throw ValidationError("absTol", "tolerance must be positive");
  if (spec.max_steps == 0) throw ValidationError("maxSteps", "must be positive");
}

}  // namespace

double rk4_step(const Rhs& rhs, double t, double u, double h) {
  const double k1 = stage(rhs, t, u);
  const double k2 = stage(rhs, t + 0.5 * h, u + 0.5 * h * k1);
  const double k3 = stage(rhs, t + 0.5 * h, u + 0.5 * h * k2);
  const double k4 = stage(rhs, t + h, u + h * k3);
  return u + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

Trajectory solve(const IvpSpec& spec) {
  check(spec);

  Trajectory out;
  out.ts.push_back(spec.t0);
  out.us.push_back(spec.u0);
  if (spec.stop && spec.stop(spec.t0, spec.u0)) {
    out.terminated = Termination::StopPredicate;
    return out;
  }

  const double span = spec.t_end - spec.t0;
  const double snap = 1e-12 * span;
  const double min_step = 1e-14 * span;
  double t = spec.t0;
  double u = spec.u0;
  double h = spec.h;
  std::size_t accepted = 0;

  while (t < spec.t_end) {
    if (accepted >= spec.max_steps) {
      out.terminated = Termination::StepLimit;
      return out;
    }

    double t_next = spec.adaptive ? t + std::min(h, spec.t_end - t)
                                  : spec.t0 + static_cast<double>(accepted + 1) * spec.h;
    if (t_next >= spec.t_end - snap) t_next = spec.t_end;
    const double step = t_next - t;

    double u_next;
    if (spec.adaptive) {
      const double full = rk4_step(spec.rhs, t, u, step);
      const double half = rk4_step(spec.rhs, t, u, 0.5 * step);
      const double two = rk4_step(spec.rhs, t + 0.5 * step, half, 0.5 * step);
      const double err = std::abs(two - full);
      const double tol = spec.abs_tol + spec.rel_tol * std::abs(u);
      if (err > tol && step > min_step) {
        h = 0.5 * step;
        continue;
      }
      if (err < tol / 64.0) h = std::min(2.0 * h, spec.h);
      u_next = two;
    } else {
      u_next = rk4_step(spec.rhs, t, u, step);
    }
    ++accepted;

    if (spec.stop && spec.stop(t_next, u_next)) {
      // Shortest single step from (t, u) that already satisfies the predicate.
      double lo = 0.0, hi = step;
      const double width = 1e-10 * span;
      while (hi - lo > width) {
        const double mid = 0.5 * (lo + hi);
        if (spec.stop(t + mid, rk4_step(spec.rhs, t, u, mid))) {
          hi = mid;
        } else {
          lo = mid;
        }
      }
      const double t_stop = hi == step ? t_next : t + hi;
      double u_stop = hi == step ? u_next : rk4_step(spec.rhs, t, u, hi);
      if (spec.project) u_stop = spec.project(t_stop, u_stop);
      out.ts.push_back(t_stop);
      out.us.push_back(u_stop);
      out.terminated = Termination::StopPredicate;
      return out;
    }

    if (spec.project) u_next = spec.project(t_next, u_next);
    t = t_next;
    u = u_next;
    out.ts.push_back(t);
    out.us.push_back(u);
  }
  out.terminated = Termination::ReachedEnd;
  return out;
}

}  // namespace sfs::ivp
