#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace sfs {

/// Polynomial in temperature, coefficients lowest degree first.
class PropertyPoly {
 public:
  static constexpr std::size_t max_degree = 4;

  /// Throws ValidationError("coeffs") when empty, longer than max_degree + 1
  /// or non-finite.
  explicit PropertyPoly(std::vector<double> coeffs);
  PropertyPoly(std::initializer_list<double> coeffs) : PropertyPoly(std::vector<double>(coeffs)) {}

  double operator()(double T) const noexcept;
  const std::vector<double>& coeffs() const noexcept { return coeffs_; }

  friend bool operator==(const PropertyPoly&, const PropertyPoly&) = default;

 private:
  std::vector<double> coeffs_;
};

inline double eval_poly(const PropertyPoly& p, double T) noexcept { return p(T); }

/// Phase properties closing the fraction-solid equation. Liquid values hold
/// at fs = 0 (start of solidification), solid values at fs = 1.
struct MaterialProperties {
  PropertyPoly cv_liquid{1.0};   ///< J/(kg °C)
  PropertyPoly cv_solid{1.0};    ///< J/(kg °C)
  PropertyPoly rho_liquid{1.0};  ///< kg/m³
  PropertyPoly rho_solid{1.0};   ///< kg/m³
  double latent_heat = 1.0;      ///< L, J/kg
  double alpha_b = 1.0;          ///< diffusivity at the start of solidification, m²/s
  double alpha_e = 1.0;          ///< diffusivity at the end of solidification, m²/s
  double T_liquidus = 1.0;       ///< °C
  double T_solidus = 0.0;        ///< °C

  friend bool operator==(const MaterialProperties&, const MaterialProperties&) = default;
};

/// Throws ValidationError keyed "L", "alphaB", "alphaE", "TL/TS", or the
/// property name ("cvL", "rhoS", ...) when a polynomial is not positive on
/// 100 evenly spaced temperatures of [T_lo, T_hi].
void validate(const MaterialProperties& mp, double T_lo, double T_hi);

// Linear mixture rules. Throw FsOutOfRange unless 0 <= fs <= 1.
double mix_rho(const MaterialProperties& mp, double fs, double T);
double mix_cv(const MaterialProperties& mp, double fs, double T);
double mix_alpha(const MaterialProperties& mp, double fs);

}  // namespace sfs
