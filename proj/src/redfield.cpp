#include "spinboson/redfield.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <numbers>

#include "spinboson/numerics.hpp"

namespace spinboson {

namespace {

constexpr Complex kI{0.0, 1.0};

// Thermal occupation factor e^{-beta w/2} / sinh(beta |w|/2) in a form that
// stays finite for large beta |w|.
double thermal_weight(double beta, double omega) {
  if (std::isinf(beta)) return omega < 0.0 ? 2.0 : 0.0;
  const double x = beta * std::abs(omega);
  if (omega > 0.0) return 2.0 * std::exp(-x) / (-std::expm1(-x));
  return 2.0 / (-std::expm1(-x));
}

Complex element_product(const Eigen::Matrix4cd& h, int l, int m, int n, int k,
                        ElementProduct variant) {
  if (variant == ElementProduct::lm_nk) return h(l, m) * h(n, k);
  return h(l, m) * h(m, k);
}

}  // namespace

Complex b_amplitude(const DsrEigensystem& es, Complex g) {
  if (g.imag() == 0.0) {
    return g.real() < 0.0 ? Complex(-es.b_coef, 0.0) : Complex(es.b_coef, 0.0);
  }
  return es.b_coef * g / std::abs(g);
}

CouplingElements coupling_elements(const DsrEigensystem& es,
                                   const ModelParams& params,
                                   const DsrParams& dsr) {
  const double chi =
      2.0 * params.g.real() / (params.omega0 + std::abs(dsr.delta_tilde));
  const double a = es.a_coef;
  const Complex b = b_amplitude(es, params.g);

  Eigen::Matrix4cd h = Eigen::Matrix4cd::Zero();
  h(0, 1) = b - chi * a;
  h(0, 2) = a + chi * std::conj(b);
  h(1, 3) = a - chi * std::conj(b);
  h(2, 3) = -b - chi * a;
  h(1, 0) = std::conj(h(0, 1));
  h(2, 0) = std::conj(h(0, 2));
  h(3, 1) = std::conj(h(1, 3));
  h(3, 2) = std::conj(h(2, 3));
  return CouplingElements{h};
}

Complex rate_kernel(const SpectralDensity& sd, double beta, double omega,
                    const RateOptions& opts) {
  if (!(beta > 0.0))
    throw ConfigError("beta must be positive (use +inf for T = 0)");

  double re;
  if (omega == 0.0) {
    re = std::isinf(beta) ? 0.0 : 2.0 * sd.slope_at_zero() / beta;
  } else {
    re = sd(std::abs(omega)) * thermal_weight(beta, omega);
  }

  double im = 0.0;
  if (opts.lamb_shift) {
    const double cut = opts.omega_cut_factor * sd.omega_c();
    im = -(2.0 / std::numbers::pi) *
         principal_value(sd, omega, beta, cut, opts.pv_tol);
  }
  return {re, im};
}

Complex gamma_plus_rate(const CouplingElements& h, int l, int m, int n, int k,
                        const BohrTable& freqs, const SpectralDensity& sd,
                        double beta, const RateOptions& opts) {
  const Complex p = element_product(h.h_tilde, l, m, n, k, opts.variant);
  if (p == Complex(0.0, 0.0)) return {0.0, 0.0};
  return p * rate_kernel(sd, beta, freqs.omega(n, k), opts);
}

GammaTensor build_gamma_tensor(const Eigen::Matrix4cd& coupling,
                               const Eigen::Vector4d& energies,
                               const SpectralDensity& sd, double beta,
                               const RateOptions& opts) {
  std::map<double, Complex> kernel_cache;
  auto kernel = [&](double w) {
    auto it = kernel_cache.find(w);
    if (it != kernel_cache.end()) return it->second;
    const Complex k = rate_kernel(sd, beta, w, opts);
    kernel_cache.emplace(w, k);
    return k;
  };

  GammaTensor out;
  for (int l = 0; l < 4; ++l)
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n)
        for (int k = 0; k < 4; ++k) {
          const Complex p = element_product(coupling, l, m, n, k, opts.variant);
          if (p == Complex(0.0, 0.0)) continue;
          out.plus[GammaTensor::index(l, m, n, k)] =
              p * kernel(energies[n] - energies[k]);
        }
  for (int l = 0; l < 4; ++l)
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n)
        for (int k = 0; k < 4; ++k) {
          out.minus[GammaTensor::index(l, m, n, k)] =
              std::conj(out.plus[GammaTensor::index(k, n, m, l)]);
        }
  return out;
}

Complex redfield_tensor(const GammaTensor& g, int n, int m, int k, int l) {
  Complex r = -g.plus_at(l, m, n, k) - g.minus_at(l, m, n, k);
  if (l == m)
    for (int rr = 0; rr < 4; ++rr) r += g.plus_at(n, rr, rr, k);
  if (n == k)
    for (int rr = 0; rr < 4; ++rr) r += g.minus_at(l, rr, rr, m);
  return r;
}

InitialState InitialState::spin_up_ground(const DsrEigensystem& es, Complex g) {
  InitialState init;
  init.rho01 = 0.5 * es.a_coef;
  init.rho02 = -0.5 * std::conj(b_amplitude(es, g));
  return init;
}

Eigen::Matrix2cd SecularDynamics::generator() const {
  Eigen::Matrix2cd m;
  m(0, 0) = kI * omega01 - gamma1;
  m(0, 1) = -gamma2;
  m(1, 0) = -gamma3;
  m(1, 1) = kI * omega02 - gamma4;
  return m;
}

std::pair<Complex, Complex> secular_frequencies(double w01, double w02,
                                                Complex g1, Complex g2,
                                                Complex g3, Complex g4) {
  const Complex center = 0.5 * (w01 + w02) + 0.5 * kI * (g1 + g4);
  const Complex half = 0.5 * (w01 - w02) + 0.5 * kI * (g1 - g4);
  const Complex root = std::sqrt(half * half - g2 * g3);
  return {center + root, center - root};
}

SecularDynamics secular_dynamics(const DsrEigensystem& es,
                                 const CouplingElements& h,
                                 const SpectralDensity& sd, double beta,
                                 const InitialState& initial, Complex g,
                                 const RateOptions& opts) {
  Eigen::Vector4d energies;
  energies << es.e0, es.e1, es.e2, es.e3;
  const GammaTensor gamma = build_gamma_tensor(h.h_tilde, energies, sd, beta, opts);

  SecularDynamics dyn;
  dyn.gamma1 = redfield_tensor(gamma, 0, 1, 0, 1);
  dyn.gamma2 = redfield_tensor(gamma, 0, 1, 0, 2);
  dyn.gamma3 = redfield_tensor(gamma, 0, 2, 0, 1);
  dyn.gamma4 = redfield_tensor(gamma, 0, 2, 0, 2);
  dyn.omega01 = es.omega01;
  dyn.omega02 = es.omega02;
  std::tie(dyn.omega_plus, dyn.omega_minus) = secular_frequencies(
      es.omega01, es.omega02, dyn.gamma1, dyn.gamma2, dyn.gamma3, dyn.gamma4);
  dyn.rho01_0 = initial.rho01;
  dyn.rho02_0 = initial.rho02;
  dyn.a_coef = es.a_coef;
  dyn.b_coef = es.b_coef;
  dyn.b_amp = b_amplitude(es, g);
  return dyn;
}

std::vector<double> sigma_z_series(const SecularDynamics& dyn,
                                   const std::vector<double>& times) {
  const Eigen::Matrix2cd m = dyn.generator();
  const Eigen::Vector2cd v0(dyn.rho01_0, dyn.rho02_0);
  std::vector<double> out;
  out.reserve(times.size());
  for (double t : times) {
    const Eigen::Vector2cd v = propagate_2x2(m, v0, t);
    out.push_back(2.0 * (dyn.a_coef * v(0) - dyn.b_amp * v(1)).real());
  }
  return out;
}

LevelSystem dsr_level_system(const DsrEigensystem& es, const ModelParams& params,
                             const DsrParams& dsr) {
  LevelSystem sys;
  sys.energies << es.e0, es.e1, es.e2, es.e3;
  sys.coupling = coupling_elements(es, params, dsr).h_tilde;

  const double a = es.a_coef;
  const Complex b = b_amplitude(es, params.g);
  sys.sigma_z = Eigen::Matrix4cd::Zero();
  sys.sigma_z(0, 1) = a;
  sys.sigma_z(0, 2) = -std::conj(b);
  sys.sigma_z(1, 3) = std::conj(b);
  sys.sigma_z(2, 3) = a;
  sys.sigma_z(1, 0) = a;
  sys.sigma_z(2, 0) = -b;
  sys.sigma_z(3, 1) = b;
  sys.sigma_z(3, 2) = a;

  Eigen::Vector4cd psi0;
  psi0 << 1.0, a, -b, 0.0;
  psi0 *= 1.0 / std::numbers::sqrt2;
  sys.rho0 = psi0 * psi0.adjoint();
  return sys;
}

LevelSystem exact_level_system(const ModelParams& params, int n_fock) {
  if (n_fock < 2) throw ConfigError("exact_level_system requires n_fock >= 2");
  const Spectrum spec = eigh(build_exact(params, n_fock));
  const Eigen::MatrixXcd v4 = spec.vectors.leftCols(4);

  LevelSystem sys;
  sys.energies = spec.values.head(4);
  sys.coupling = v4.adjoint() * position_operator(n_fock) * v4;
  sys.sigma_z = v4.adjoint() * sigma_z_operator(n_fock) * v4;

  const DsrParams dsr = solve_displacement(params);
  const Eigen::VectorXcd psi0 = spin_up_coherent_state(dsr.s, n_fock);
  Eigen::Vector4cd c = v4.adjoint() * psi0;
  c.normalize();
  sys.rho0 = c * c.adjoint();
  return sys;
}

std::vector<double> integrate_sigma_z(const LevelSystem& sys,
                                      const SpectralDensity& sd, double beta,
                                      const std::vector<double>& times,
                                      const RateOptions& opts) {
  if (times.empty()) return {};
  const GammaTensor gamma =
      build_gamma_tensor(sys.coupling, sys.energies, sd, beta, opts);

  std::array<Complex, 256> r{};
  for (int n = 0; n < 4; ++n)
    for (int m = 0; m < 4; ++m)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l)
          r[GammaTensor::index(n, m, k, l)] = redfield_tensor(gamma, n, m, k, l);

  auto deriv = [&](const Eigen::Matrix4cd& rho) {
    Eigen::Matrix4cd d;
    for (int n = 0; n < 4; ++n)
      for (int m = 0; m < 4; ++m) {
        Complex acc = -kI * (sys.energies[n] - sys.energies[m]) * rho(n, m);
        for (int k = 0; k < 4; ++k)
          for (int l = 0; l < 4; ++l)
            acc -= r[GammaTensor::index(n, m, k, l)] * rho(k, l);
        d(n, m) = acc;
      }
    return d;
  };

  double wmax = 1.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      wmax = std::max(wmax, std::abs(sys.energies[i] - sys.energies[j]));
  const double dt_target = 0.02 / wmax;

  auto sigma_z_of = [&](const Eigen::Matrix4cd& rho) {
    return (rho * sys.sigma_z).trace().real();
  };

  std::vector<double> out;
  out.reserve(times.size());
  Eigen::Matrix4cd rho = sys.rho0;
  double t = times.front();
  if (t != 0.0 && t < 0.0) throw ConfigError("times must be nonnegative");

  // Advance from 0 to the first sample, then between samples.
  double from = 0.0;
  for (double target : times) {
    const double span = target - from;
    if (span < 0.0) throw ConfigError("times must be ascending");
    if (span > 0.0) {
      const int steps = std::max(1, static_cast<int>(std::ceil(span / dt_target)));
      const double h = span / steps;
      for (int i = 0; i < steps; ++i) {
        const Eigen::Matrix4cd k1 = deriv(rho);
        const Eigen::Matrix4cd k2 = deriv(rho + 0.5 * h * k1);
        const Eigen::Matrix4cd k3 = deriv(rho + 0.5 * h * k2);
        const Eigen::Matrix4cd k4 = deriv(rho + h * k3);
        rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      }
    }
    from = target;
    out.push_back(sigma_z_of(rho));
  }
  return out;
}

}  // namespace spinboson
