#pragma once

#include <complex>

#include "spinboson/errors.hpp"

namespace spinboson {

using Complex = std::complex<double>;

// Physical inputs for the two-state system coupled to a damped harmonic
// oscillator. All frequencies share one unit, with hbar = kB = 1.
struct ModelParams {
  double delta = 1.0;        // tunneling amplitude, either sign
  double omega0 = 1.0;       // oscillator frequency, > 0
  Complex g{0.0, 0.0};       // TSS-HO coupling; Re -> coordinate, Im -> momentum
  double kappa = 0.02;       // Ohmic strength, >= 0
  double omega_c = 10.0;     // Ohmic cutoff, > 0
  double temperature = 0.0;  // >= 0; beta() is +inf at T = 0

  void validate() const;  // throws ConfigError on violated bounds
  double beta() const;

  bool operator==(const ModelParams&) const = default;
};

// Converged solution of the coupled displacement pair
//   s  = -g / (omega0 + |dt|),   dt = delta * exp(-2|s|^2).
// The two equations are implicit in each other; solve_displacement resolves
// them by fixed-point iteration.
struct DsrParams {
  Complex s{0.0, 0.0};
  double delta_tilde = 0.0;
  double residual = 0.0;  // self-consistency defect of the returned pair
  int iterations = 0;
};

class SpectralDensity {
 public:
  enum class Kind { ohmic, lorentzian_effective };

  // J(w) = kappa * w * exp(-w / omega_c)
  static SpectralDensity ohmic(double kappa, double omega_c);

  // J_eff(w) = 2 alpha w W^4 / [(W^2 - w^2)^2 + (2 pi kappa w W)^2],
  // a diagnostic for the effective bath seen by the TSS; not used in dynamics.
  static SpectralDensity lorentzian_effective(double alpha, double omega_peak,
                                              double kappa);

  Kind kind() const { return kind_; }
  double kappa() const { return kappa_; }
  double omega_c() const { return omega_c_; }
  double alpha() const { return alpha_; }
  double omega_peak() const { return omega_peak_; }

  double operator()(double omega) const;  // omega >= 0, else std::domain_error
  double slope_at_zero() const;           // dJ/dw at w = 0

 private:
  SpectralDensity() = default;
  Kind kind_ = Kind::ohmic;
  double kappa_ = 0.0;
  double omega_c_ = 1.0;
  double alpha_ = 0.0;
  double omega_peak_ = 1.0;
};

double ohmic_j(const SpectralDensity& sd, double omega);
double lorentzian_j_eff(const SpectralDensity& sd, double omega);

// Fixed-point solve of the displacement pair, started from
// s0 = -g / (omega0 + |delta|). Throws NumericalError (carrying the last
// step size) if |s_{k+1} - s_k| <= tol is not reached within max_iter.
DsrParams solve_displacement(const ModelParams& params, double tol = 1e-12,
                             int max_iter = 200);

}  // namespace spinboson
