#pragma once

#include <array>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "spinboson/hamiltonians.hpp"
#include "spinboson/model.hpp"

namespace spinboson {

// Matrix of the system side of the HO-bath coupling,
//   h~_lm = <l| c^dag + c - 2 Re(g)/(omega0 + |dt|) sigma_z |m>,
// in the DSR eigenbasis {|e0> .. |e3>}.
struct CouplingElements {
  Eigen::Matrix4cd h_tilde;
};

// Phase-carrying upper-component amplitude of |e1>; equals b_coef for real g.
Complex b_amplitude(const DsrEigensystem& es, Complex g);

CouplingElements coupling_elements(const DsrEigensystem& es,
                                   const ModelParams& params,
                                   const DsrParams& dsr);

// Which pair of coupling elements multiplies the bath kernel in
// Gamma^(+)_{lmnk}. lm_nk is the product consistent with the rate
// definition and is validated against the time-domain oracle; lm_mk is
// kept selectable for comparison.
enum class ElementProduct { lm_nk, lm_mk };

struct RateOptions {
  ElementProduct variant = ElementProduct::lm_nk;
  bool lamb_shift = true;        // include Im (principal-value) parts
  double pv_tol = 1e-10;         // absolute quadrature target
  double omega_cut_factor = 50;  // upper integration limit in units of omega_c
};

// One-sided Fourier transform of the bath correlation function,
//   K(w) = int_0^inf dt e^{-iwt} <B(t)B(0)>
//        = J(|w|) e^{-beta w/2} / sinh(beta |w|/2)  -  i (2/pi) P int ... ,
// with the w = 0 real part continued to its Ohmic limit 2 kappa / beta.
Complex rate_kernel(const SpectralDensity& sd, double beta, double omega,
                    const RateOptions& opts = {});

struct BohrTable {
  Eigen::Vector4d energies;
  double omega(int n, int k) const { return energies[n] - energies[k]; }
};

// Gamma^(+)_{lmnk} = (element product) * K(omega_nk).
Complex gamma_plus_rate(const CouplingElements& h, int l, int m, int n, int k,
                        const BohrTable& freqs, const SpectralDensity& sd,
                        double beta, const RateOptions& opts = {});

// Dense rate tensors over four levels. The minus tensor is populated through
// Gamma^(-)_{knml} = conj(Gamma^(+)_{lmnk}).
struct GammaTensor {
  std::array<Complex, 256> plus{};
  std::array<Complex, 256> minus{};

  static int index(int l, int m, int n, int k) {
    return ((l * 4 + m) * 4 + n) * 4 + k;
  }
  Complex plus_at(int l, int m, int n, int k) const {
    return plus[index(l, m, n, k)];
  }
  Complex minus_at(int l, int m, int n, int k) const {
    return minus[index(l, m, n, k)];
  }
};

GammaTensor build_gamma_tensor(const Eigen::Matrix4cd& coupling,
                               const Eigen::Vector4d& energies,
                               const SpectralDensity& sd, double beta,
                               const RateOptions& opts = {});

// R_nmkl = d_lm sum_r G+_nrrk + d_nk sum_r G-_lrrm - G+_lmnk - G-_lmnk.
Complex redfield_tensor(const GammaTensor& g, int n, int m, int k, int l);

// Coherences of the initial reduced state in the DSR eigenbasis. The default
// is the TSS sigma_z = +1 eigenstate tensor the displaced-oscillator ground
// state, for which rho01 = A/2 and rho02 = -conj(B)/2.
struct InitialState {
  Complex rho01{0.0, 0.0};
  Complex rho02{0.0, 0.0};

  static InitialState spin_up_ground(const DsrEigensystem& es, Complex g);
};

// Secular three-level reduction: the coherence pair (rho01, rho02) evolves
// under M = [[i w01 - g1, -g2], [-g3, i w02 - g4]] and
// sigma_z(t) = 2 Re(A rho01(t) - B rho02(t)).
struct SecularDynamics {
  Complex gamma1{0, 0}, gamma2{0, 0}, gamma3{0, 0}, gamma4{0, 0};
  double omega01 = 0, omega02 = 0;
  Complex omega_plus{0, 0}, omega_minus{0, 0};
  Complex rho01_0{0, 0}, rho02_0{0, 0};
  double a_coef = 1, b_coef = 0;
  Complex b_amp{0, 0};  // phase-carrying B used in the sigma_z trace

  Eigen::Matrix2cd generator() const;
};

// Closed-form complex mode frequencies of the 2x2 generator,
//   w_pm = (w01+w02)/2 + i(g1+g4)/2 pm sqrt(((w01-w02)/2 + i(g1-g4)/2)^2 - g2 g3).
std::pair<Complex, Complex> secular_frequencies(double w01, double w02,
                                                Complex g1, Complex g2,
                                                Complex g3, Complex g4);

SecularDynamics secular_dynamics(const DsrEigensystem& es,
                                 const CouplingElements& h,
                                 const SpectralDensity& sd, double beta,
                                 const InitialState& initial, Complex g,
                                 const RateOptions& opts = {});

std::vector<double> sigma_z_series(const SecularDynamics& dyn,
                                   const std::vector<double>& times);

// Four-level description used by the full (non-secular) Redfield integrator:
// energies, bath-coupling operator, sigma_z observable and initial density
// matrix, all in the same eigenbasis.
struct LevelSystem {
  Eigen::Vector4d energies;
  Eigen::Matrix4cd coupling;
  Eigen::Matrix4cd sigma_z;
  Eigen::Matrix4cd rho0;
};

// Analytic DSR four-level system (same basis as dsr_eigensystem).
LevelSystem dsr_level_system(const DsrEigensystem& es, const ModelParams& params,
                             const DsrParams& dsr);

// Lowest four eigenstates of the exact truncated Hamiltonian with the bath
// coupling a^dag + a. The initial state is the sigma_z-up spin tensor the
// coherent state of the self-consistent displacement, projected onto the
// retained levels and renormalized.
LevelSystem exact_level_system(const ModelParams& params, int n_fock);

// sigma_z(t) from stepping the full Redfield equation
//   drho_nm/dt = -i w_nm rho_nm - sum_kl R_nmkl rho_kl
// with the complete tensor (no secular reduction), classic RK4.
std::vector<double> integrate_sigma_z(const LevelSystem& sys,
                                      const SpectralDensity& sd, double beta,
                                      const std::vector<double>& times,
                                      const RateOptions& opts = {});

}  // namespace spinboson
