#include "spinboson/hamiltonians.hpp"

#include <algorithm>
#include <cmath>

namespace spinboson {

namespace {

// Ladder coefficients of the JC-form Hamiltonian for |dt| = |delta_tilde|.
struct JcCoefficients {
  double dt_abs;    // |delta_tilde|
  double q;         // 4|g|^2 / (omega0 + |dt|)^2
  double jc;        // 2|dt| / (omega0 + |dt|)
};

JcCoefficients jc_coefficients(const ModelParams& p, double delta_tilde) {
  JcCoefficients c{};
  c.dt_abs = std::abs(delta_tilde);
  const double denom = p.omega0 + c.dt_abs;
  c.q = 4.0 * std::norm(p.g) / (denom * denom);
  c.jc = 2.0 * c.dt_abs / denom;
  return c;
}

}  // namespace

HermitianMatrix build_exact(const ModelParams& params, int n_fock) {
  params.validate();
  if (n_fock < 2) throw ConfigError("build_exact requires n_fock >= 2");

  const int dim = 2 * n_fock;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  for (int n = 0; n < n_fock; ++n) {
    const int up = basis_index(n, 0);
    const int down = basis_index(n, 1);
    h(up, up) = params.omega0 * n;
    h(down, down) = params.omega0 * n;
    h(up, down) = -0.5 * params.delta;
    h(down, up) = -0.5 * params.delta;
  }
  for (int n = 0; n + 1 < n_fock; ++n) {
    const double ladder = std::sqrt(static_cast<double>(n + 1));
    for (int s = 0; s < 2; ++s) {
      const double zs = (s == 0) ? 1.0 : -1.0;
      const int lo = basis_index(n, s);
      const int hi = basis_index(n + 1, s);
      h(hi, lo) += zs * params.g * ladder;
      h(lo, hi) += zs * std::conj(params.g) * ladder;
    }
  }
  return HermitianMatrix(std::move(h));
}

HermitianMatrix build_simple_truncation(const ModelParams& params) {
  return build_exact(params, 2);
}

HermitianMatrix build_dsr_general(const ModelParams& params, Complex s) {
  params.validate();
  const double dt = params.delta * std::exp(-2.0 * std::norm(s));

  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(4, 4);
  h(0, 0) = -0.5 * dt;
  h(1, 1) = 0.5 * dt;
  h(2, 2) = -0.5 * dt * (1.0 - 4.0 * std::norm(s)) + params.omega0;
  h(3, 3) = 0.5 * dt * (1.0 - 4.0 * std::norm(s)) + params.omega0;

  // Fock-raising couplings: sigma_z flips |+-x>, i sigma_y adds the
  // spin-asymmetric sign.
  const Complex zc = params.g + params.omega0 * s;
  const Complex yc = s * dt;
  h(2, 1) = zc - yc;  // <+,1|H|-,0>
  h(1, 2) = std::conj(h(2, 1));
  h(3, 0) = zc + yc;  // <-,1|H|+,0>
  h(0, 3) = std::conj(h(3, 0));
  return HermitianMatrix(std::move(h));
}

HermitianMatrix build_dsr_jc(const ModelParams& params, const DsrParams& dsr) {
  params.validate();
  const JcCoefficients c = jc_coefficients(params, dsr.delta_tilde);

  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(4, 4);
  h(0, 0) = -0.5 * dsr.delta_tilde;
  h(1, 1) = 0.5 * dsr.delta_tilde;
  h(2, 2) = -0.5 * dsr.delta_tilde * (1.0 - c.q) + params.omega0;
  h(3, 3) = 0.5 * dsr.delta_tilde * (1.0 - c.q) + params.omega0;

  if (params.delta <= 0.0) {
    h(3, 0) = c.jc * params.g;  // g c^dag sigma_-^x
    h(0, 3) = std::conj(h(3, 0));
  } else {
    h(2, 1) = c.jc * params.g;  // g c^dag sigma_+^x, |+x> lowest
    h(1, 2) = std::conj(h(2, 1));
  }
  return HermitianMatrix(std::move(h));
}

DsrEigensystem dsr_eigensystem(const ModelParams& params, const DsrParams& dsr) {
  params.validate();
  const JcCoefficients c = jc_coefficients(params, dsr.delta_tilde);
  const double v_abs = c.jc * std::abs(params.g);

  DsrEigensystem es;
  es.e0 = -0.5 * c.dt_abs;
  es.e3 = 0.5 * c.dt_abs * (1.0 - c.q) + params.omega0;

  const double mean = 0.5 * (2.0 * params.omega0 - (es.e3 + es.e0));
  const double gap = (es.e3 - es.e0) - 2.0 * params.omega0;
  const double half = 0.5 * std::sqrt(gap * gap + 4.0 * v_abs * v_abs);
  es.e1 = mean - half;
  es.e2 = mean + half;

  if (std::abs(params.g) == 0.0) {
    // Product eigenstates; label the spin flip as e1 unless the bare
    // oscillator quantum lies below it.
    const bool spin_first = params.omega0 >= c.dt_abs;
    es.a_coef = spin_first ? 1.0 : 0.0;
    es.b_coef = spin_first ? 0.0 : -1.0;
  } else {
    const double x = es.e0 + es.e2;
    const double norm = std::hypot(x, v_abs);
    es.a_coef = x / norm;
    es.b_coef = -v_abs / norm;
  }

  es.omega01 = es.e1 - es.e0;
  es.omega02 = es.e2 - es.e0;
  return es;
}

BohrPair bohr_from_values(const Eigen::VectorXd& energies) {
  if (energies.size() < 3)
    throw ConfigError("bohr_from_values needs at least three energies");
  return {energies[1] - energies[0], energies[2] - energies[0]};
}

BohrPair bohr_deviations(const BohrPair& scheme, const BohrPair& reference,
                         bool percent) {
  BohrPair out{scheme.omega01 - reference.omega01,
               scheme.omega02 - reference.omega02};
  if (percent) {
    if (reference.omega01 != 0.0) out.omega01 *= 100.0 / reference.omega01;
    if (reference.omega02 != 0.0) out.omega02 *= 100.0 / reference.omega02;
  }
  return out;
}

Eigen::MatrixXcd position_operator(int n_fock) {
  const int dim = 2 * n_fock;
  Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(dim, dim);
  for (int n = 0; n + 1 < n_fock; ++n) {
    const double ladder = std::sqrt(static_cast<double>(n + 1));
    for (int s = 0; s < 2; ++s) {
      x(basis_index(n + 1, s), basis_index(n, s)) = ladder;
      x(basis_index(n, s), basis_index(n + 1, s)) = ladder;
    }
  }
  return x;
}

Eigen::MatrixXcd sigma_z_operator(int n_fock) {
  const int dim = 2 * n_fock;
  Eigen::MatrixXcd z = Eigen::MatrixXcd::Zero(dim, dim);
  for (int n = 0; n < n_fock; ++n) {
    z(basis_index(n, 0), basis_index(n, 0)) = 1.0;
    z(basis_index(n, 1), basis_index(n, 1)) = -1.0;
  }
  return z;
}

Eigen::VectorXcd spin_up_coherent_state(Complex displacement, int n_fock) {
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(2 * n_fock);
  Complex amp = std::exp(-0.5 * std::norm(displacement));
  for (int n = 0; n < n_fock; ++n) {
    psi(basis_index(n, 0)) = amp;
    amp *= displacement / std::sqrt(static_cast<double>(n + 1));
  }
  psi.normalize();
  return psi;
}

}  // namespace spinboson
