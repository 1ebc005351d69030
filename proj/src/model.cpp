#include "sfs/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sfs/errors.hpp"

namespace sfs {
namespace {

void check_time(const FieldDomain& d, double t, const char* what) {
  if (!(d.t_min <= t && t <= d.t_max)) {
    throw OutOfDomain(std::string(what) + " = " + std::to_string(t) + " outside [" +
                      std::to_string(d.t_min) + ", " + std::to_string(d.t_max) + "]");
  }
}

}  // namespace

SolidificationProblem make_problem(std::shared_ptr<const TemperatureField> field,
                                   MaterialProperties material, double y_star, double t_liquidus,
                                   double t_solidus) {
  const FieldDomain& d = field->domain();
  if (!(d.y_min <= y_star && y_star <= d.y_max)) {
    throw OutOfDomain("probe height " + std::to_string(y_star) + " outside the field");
  }
  check_time(d, t_liquidus, "tL");
  check_time(d, t_solidus, "tS");
  const double T_l = field->eval(t_liquidus, y_star);
  const double T_s = field->eval(t_solidus, y_star);
  return {std::move(field), std::move(material), y_star, t_liquidus, T_l, t_solidus, T_s};
}

void validate(const SolidificationProblem& prob) {
  if (!prob.field) throw ValidationError("field", "no temperature field");
  const FieldDomain& d = prob.field->domain();
  if (!(d.y_min <= prob.y_star && prob.y_star <= d.y_max)) {
    throw OutOfDomain("probe height " + std::to_string(prob.y_star) + " outside the field");
  }
  check_time(d, prob.t_liquidus, "tL");
  check_time(d, prob.t_solidus, "tS");
  if (!(prob.t_liquidus < prob.t_solidus)) {
    throw ValidationError("tL/tS", "liquidus time must precede solidus time");
  }
  constexpr double event_tol = 1e-3;
  if (std::abs(prob.field->eval(prob.t_liquidus, prob.y_star) - prob.T_liquidus) > event_tol) {
    throw ValidationError("TL", "field temperature at tL does not match");
  }
  if (std::abs(prob.field->eval(prob.t_solidus, prob.y_star) - prob.T_solidus) > event_tol) {
    throw ValidationError("TS", "field temperature at tS does not match");
  }
}

double rhs_im4(const SolidificationProblem& prob, double t, double fs) {
  const TemperatureField& f = *prob.field;
  const double T = f.eval(t, prob.y_star);
  const double cv = mix_cv(prob.material, fs, T);
  const double rho = mix_rho(prob.material, fs, T);
  const double alpha = mix_alpha(prob.material, fs);
  return cv / (prob.material.latent_heat * rho) *
         (f.dT_dt(t, prob.y_star) - alpha * f.d2T_dy2(t, prob.y_star));
}

SolidificationResult solve_fraction_solid(const SolidificationProblem& prob,
                                          const SolverSettings& settings) {
  validate(prob);

  SolidificationResult res;
  ivp::IvpSpec spec;
  // RK4 stages may probe just past [0, 1] on the step that completes
  // solidification; properties are taken at the nearest physical state.
  spec.rhs = [&prob](double t, double fs) { return rhs_im4(prob, t, std::clamp(fs, 0.0, 1.0)); };
  spec.t0 = prob.t_liquidus;
  spec.u0 = 0.0;
  spec.t_end = prob.t_solidus;
  spec.h = settings.h;
  spec.rel_tol = settings.rel_tol;
  spec.abs_tol = settings.abs_tol;
  spec.max_steps = settings.max_steps;
  spec.stop = [](double, double fs) { return fs >= 1.0; };
  bool last_clamped_high = false;
  spec.project = [&res, &last_clamped_high](double, double fs) {
    const double c = std::clamp(fs, 0.0, 1.0);
    last_clamped_high = fs > 1.0;
    if (c != fs) ++res.clamp_count;
    return c;
  };

  const ivp::Trajectory traj = ivp::solve(spec);
  switch (traj.terminated) {
    case ivp::Termination::ReachedEnd: res.terminated = SolidTermination::ReachedSolidus; break;
    case ivp::Termination::StopPredicate: res.terminated = SolidTermination::ReachedFullSolid; break;
    case ivp::Termination::StepLimit: res.terminated = SolidTermination::StepLimit; break;
  }

  // Reaching exactly 1 is completion, not a correction.
  if (res.terminated == SolidTermination::ReachedFullSolid && last_clamped_high) {
    --res.clamp_count;
  }

  res.samples.reserve(traj.ts.size());
  for (std::size_t k = 0; k < traj.ts.size(); ++k) {
    const double t = traj.ts[k];
    res.samples.push_back(
        {t, prob.field->eval(t, prob.y_star), prob.field->dT_dt(t, prob.y_star), traj.us[k]});
    if (k > 0 && traj.us[k] < traj.us[k - 1]) ++res.negative_rhs_count;
  }
  return res;
}

std::vector<std::pair<double, double>> as_function_of_temperature(const SolidificationResult& res) {
  std::vector<std::pair<double, double>> out;
  out.reserve(res.samples.size());
  for (const SolidSample& s : res.samples) out.emplace_back(s.T, s.fs);
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  return out;
}

std::vector<std::pair<double, double>> as_function_of_cooling_rate(const SolidificationResult& res) {
  std::vector<std::pair<double, double>> out;
  out.reserve(res.samples.size());
  for (const SolidSample& s : res.samples) out.emplace_back(s.dTdt, s.fs);
  return out;
}

const char* to_string(SolidTermination t) noexcept {
  switch (t) {
    case SolidTermination::ReachedSolidus: return "ReachedSolidus";
    case SolidTermination::ReachedFullSolid: return "ReachedFullSolid";
    case SolidTermination::StepLimit: return "StepLimit";
  }
  return "Unknown";
}

}  // namespace sfs
