#include "sfs/material.hpp"

#include <cmath>
#include <string>

#include "sfs/errors.hpp"

namespace sfs {

PropertyPoly::PropertyPoly(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw ValidationError("coeffs", "polynomial needs at least one coefficient");
  if (coeffs_.size() > max_degree + 1) {
    throw ValidationError("coeffs", "polynomial degree above " + std::to_string(max_degree));
  }
  for (double c : coeffs_) {
    if (!std::isfinite(c)) throw ValidationError("coeffs", "non-finite coefficient");
  }
}

double PropertyPoly::operator()(double T) const noexcept {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * T + *it;
  return acc;
}

void validate(const MaterialProperties& mp, double T_lo, double T_hi) {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(mp.latent_heat)) throw ValidationError("L", "latent heat must be positive");
  if (!positive(mp.alpha_b)) throw ValidationError("alphaB", "diffusivity must be positive");
  if (!positive(mp.alpha_e)) throw ValidationError("alphaE", "diffusivity must be positive");
  if (!std::isfinite(mp.T_liquidus) || !std::isfinite(mp.T_solidus) ||
      !(mp.T_liquidus > mp.T_solidus)) {
    throw ValidationError("TL/TS", "liquidus must lie above solidus");
  }
  if (!std::isfinite(T_lo) || !std::isfinite(T_hi) || T_lo > T_hi) {
    throw ValidationError("workingRange", "need finite lo <= hi");
  }

  const struct {
    const char* key;
    const PropertyPoly& poly;
  } props[] = {{"cvL", mp.cv_liquid}, {"cvS", mp.cv_solid}, {"rhoL", mp.rho_liquid}, {"rhoS", mp.rho_solid}};

  constexpr int grid = 100;
  for (const auto& [key, poly] : props) {
    for (int k = 0; k < grid; ++k) {
      const double T = T_lo + (T_hi - T_lo) * k / (grid - 1);
      if (!positive(poly(T))) {
        throw ValidationError(key, "not positive at T = " + std::to_string(T));
      }
    }
  }
}

namespace {

void check_fs(double fs) {
  if (!(fs >= 0.0 && fs <= 1.0)) {
    throw FsOutOfRange("fraction solid " + std::to_string(fs) + " outside [0, 1]");
  }
}

// Exact at both ends: fs = 0 gives `liquid`, fs = 1 gives `solid`.
double mix(double liquid, double solid, double fs) { return (1.0 - fs) * liquid + fs * solid; }

}  // namespace

double mix_rho(const MaterialProperties& mp, double fs, double T) {
  check_fs(fs);
  return mix(mp.rho_liquid(T), mp.rho_solid(T), fs);
}

double mix_cv(const MaterialProperties& mp, double fs, double T) {
  check_fs(fs);
  return mix(mp.cv_liquid(T), mp.cv_solid(T), fs);
}

double mix_alpha(const MaterialProperties& mp, double fs) {
  check_fs(fs);
  return mix(mp.alpha_b, mp.alpha_e, fs);
}

}  // namespace sfs
