#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace sfs::ivp {

/// Right-hand side g of u' = g(t, u). Must be free of side effects.
using Rhs = std::function<double(double t, double u)>;

struct IvpSpec {
  Rhs rhs;
  double t0 = 0.0;
  double u0 = 0.0;
  double t_end = 1.0;
  double h = 1e-3;  ///< initial step, also the largest step taken
  double rel_tol = 1e-8;
  double abs_tol = 1e-10;
  std::size_t max_steps = 1'000'000;
  /// Fixed steps of size h when false; step doubling control when true.
  bool adaptive = true;
  /// Stop as soon as this turns true; the stopping time is refined by
  /// bisection to 1e-10 (t_end - t0).
  std::function<bool(double t, double u)> stop;
  /// Applied to every accepted state before it is recorded and integrated
  /// further (e.g. clamping to a physical range).
  std::function<double(double t, double u)> project;
};

enum class Termination { ReachedEnd, StopPredicate, StepLimit };

struct Trajectory {
  std::vector<double> ts;
  std::vector<double> us;
  Termination terminated = Termination::ReachedEnd;
};

/// Classical RK4 update u + h/6 (k1 + 2 k2 + 2 k3 + k4).
/// Throws NonFiniteRhs when a stage evaluates to NaN or infinity.
double rk4_step(const Rhs& rhs, double t, double u, double h);

/// Integrates from t0 to t_end. With `adaptive`, each step is checked by
/// step doubling: rejected and halved while |u_two_halves - u_full| exceeds
/// abs_tol + rel_tol |u|, doubled (up to the initial h) when below 1/64 of
/// it. The two-half-step value is the one accepted. Exceeding `max_steps`
/// accepted steps returns the partial trajectory marked StepLimit.
/// Throws ValidationError for an invalid spec.
Trajectory solve(const IvpSpec& spec);

}  // namespace sfs::ivp
