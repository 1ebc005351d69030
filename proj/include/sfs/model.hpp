#pragma once

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "sfs/field.hpp"
#include "sfs/ivp.hpp"
#include "sfs/material.hpp"

namespace sfs {

/// Fraction-solid problem at one probe height. The field is shared so that
/// several probes can be solved against one fit.
struct SolidificationProblem {
  std::shared_ptr<const TemperatureField> field;
  MaterialProperties material;
  double y_star = 0.0;      ///< probe height [m]
  double t_liquidus = 0.0;  ///< t_L [s]
  double T_liquidus = 0.0;  ///< T_L [°C]
  double t_solidus = 0.0;   ///< t_S [s]
  double T_solidus = 0.0;   ///< T_S [°C]
};

/// Builds a problem whose event temperatures are read off the field at the
/// given event times.
SolidificationProblem make_problem(std::shared_ptr<const TemperatureField> field,
                                   MaterialProperties material, double y_star, double t_liquidus,
                                   double t_solidus);

/// Throws OutOfDomain (probe or event times outside the field),
/// ValidationError("tL/tS") when t_L >= t_S, and ValidationError("TL"/"TS")
/// when the field temperature at an event differs from the stated one by
/// more than 1e-3 °C.
void validate(const SolidificationProblem& prob);

/// dfs/dt = Cv(fs) / (L rho(fs)) * (∂T/∂t - alpha(fs) ∂²T/∂y²) at (t, y*),
/// with Cv and rho evaluated at T(y*, t).
double rhs_im4(const SolidificationProblem& prob, double t, double fs);

struct SolverSettings {
  double h = 1e-3;
  double rel_tol = 1e-8;
  double abs_tol = 1e-10;
  std::size_t max_steps = 1'000'000;
};

enum class SolidTermination { ReachedSolidus, ReachedFullSolid, StepLimit };

struct SolidSample {
  double t;     ///< s
  double T;     ///< °C
  double dTdt;  ///< °C/s
  double fs;
};

struct SolidificationResult {
  std::vector<SolidSample> samples;
  SolidTermination terminated = SolidTermination::ReachedSolidus;
  std::size_t clamp_count = 0;         ///< accepted states pulled back into [0, 1]
  std::size_t negative_rhs_count = 0;  ///< accepted steps over which fs decreased
};

/// Integrates fs from (t_L, 0) until fs reaches 1 or t reaches t_S.
SolidificationResult solve_fraction_solid(const SolidificationProblem& prob,
                                          const SolverSettings& settings = {});

/// (T, fs) ordered by descending temperature; equal temperatures keep time order.
std::vector<std::pair<double, double>> as_function_of_temperature(const SolidificationResult& res);
/// (dT/dt, fs) in time order.
std::vector<std::pair<double, double>> as_function_of_cooling_rate(const SolidificationResult& res);

const char* to_string(SolidTermination t) noexcept;

}  // namespace sfs
