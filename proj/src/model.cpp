#include "spinboson/model.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace spinboson {

void ModelParams::validate() const {
  if (!(omega0 > 0.0)) throw ConfigError("omega0 must be positive");
  if (!(omega_c > 0.0)) throw ConfigError("omega_c must be positive");
  if (!(kappa >= 0.0)) throw ConfigError("kappa must be nonnegative");
  if (!(temperature >= 0.0)) throw ConfigError("temperature must be nonnegative");
}

double ModelParams::beta() const {
  if (temperature == 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / temperature;
}

SpectralDensity SpectralDensity::ohmic(double kappa, double omega_c) {
  if (!(kappa >= 0.0)) throw ConfigError("kappa must be nonnegative");
  if (!(omega_c > 0.0)) throw ConfigError("omega_c must be positive");
  SpectralDensity sd;
  sd.kind_ = Kind::ohmic;
  sd.kappa_ = kappa;
  sd.omega_c_ = omega_c;
  return sd;
}

SpectralDensity SpectralDensity::lorentzian_effective(double alpha,
                                                      double omega_peak,
                                                      double kappa) {
  if (!(omega_peak > 0.0)) throw ConfigError("omega_peak must be positive");
  if (!(kappa > 0.0)) throw ConfigError("kappa must be positive for J_eff");
  SpectralDensity sd;
  sd.kind_ = Kind::lorentzian_effective;
  sd.alpha_ = alpha;
  sd.omega_peak_ = omega_peak;
  sd.kappa_ = kappa;
  return sd;
}

double SpectralDensity::operator()(double omega) const {
  if (omega < 0.0) throw std::domain_error("spectral density evaluated at negative frequency");
  if (kind_ == Kind::ohmic) {
    return kappa_ * omega * std::exp(-omega / omega_c_);
  }
  const double w2 = omega_peak_ * omega_peak_;
  const double det = w2 - omega * omega;
  const double width = 2.0 * std::numbers::pi * kappa_ * omega * omega_peak_;
  return 2.0 * alpha_ * omega * w2 * w2 / (det * det + width * width);
}

double SpectralDensity::slope_at_zero() const {
  if (kind_ == Kind::ohmic) return kappa_;
  return 2.0 * alpha_;
}

double ohmic_j(const SpectralDensity& sd, double omega) {
  if (sd.kind() != SpectralDensity::Kind::ohmic)
    throw ConfigError("ohmic_j called with a non-Ohmic density");
  return sd(omega);
}

double lorentzian_j_eff(const SpectralDensity& sd, double omega) {
  if (sd.kind() != SpectralDensity::Kind::lorentzian_effective)
    throw ConfigError("lorentzian_j_eff called with a non-Lorentzian density");
  return sd(omega);
}

DsrParams solve_displacement(const ModelParams& params, double tol, int max_iter) {
  params.validate();
  if (!(tol > 0.0)) throw ConfigError("displacement tolerance must be positive");
  if (max_iter < 1) throw ConfigError("displacement max_iter must be >= 1");

  Complex s = -params.g / (params.omega0 + std::abs(params.delta));
  double dt = 0.0;
  double step = std::numeric_limits<double>::infinity();
  int it = 0;
  while (it < max_iter) {
    ++it;
    dt = params.delta * std::exp(-2.0 * std::norm(s));
    const Complex next = -params.g / (params.omega0 + std::abs(dt));
    step = std::abs(next - s);
    s = next;
    if (step <= tol) break;
  }
  if (step > tol) {
    std::ostringstream msg;
    msg << "displacement fixed point did not converge in " << max_iter
        << " iterations (last step " << step << ", tol " << tol << ")";
    throw NumericalError(msg.str(), step);
  }

  DsrParams out;
  out.s = s;
  out.delta_tilde = params.delta * std::exp(-2.0 * std::norm(s));
  out.residual = std::abs(s + params.g / (params.omega0 + std::abs(out.delta_tilde)));
  out.iterations = it;
  return out;
}

}  // namespace spinboson
