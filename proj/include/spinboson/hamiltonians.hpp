#pragma once

#include <Eigen/Dense>

#include "spinboson/model.hpp"
#include "spinboson/numerics.hpp"

namespace spinboson {

// Basis conventions. Composite index = 2 * fock + spin_index.
//   Bare representation: spin_index 0 = sigma_z up,   1 = sigma_z down.
//   DSR representation:  spin_index 0 = sigma_x plus, 1 = sigma_x minus;
//                        fock counts displaced-oscillator quanta.
inline int basis_index(int fock, int spin_index) { return 2 * fock + spin_index; }

// TSS-HO Hamiltonian -delta/2 sigma_x + omega0 a^dag a + sigma_z (g a^dag + g* a)
// in the bare product basis with Fock levels 0 .. n_fock-1. Ladder matrix
// elements leaving the retained subspace are dropped.
HermitianMatrix build_exact(const ModelParams& params, int n_fock);

// Restriction of build_exact to Fock levels {0, 1}; identical to
// build_exact(params, 2).
HermitianMatrix build_simple_truncation(const ModelParams& params);

// Conditionally displaced and truncated Hamiltonian for an arbitrary
// displacement s, in the {|+x>, |-x>} x {|0~>, |1~>} basis. The constant
// shift omega0 |s|^2 + 2 Re(g s*) is omitted; level spacings are unaffected.
HermitianMatrix build_dsr_general(const ModelParams& params, Complex s);

// Jaynes-Cummings form reached with the self-consistent displacement. For
// delta >= 0 the ladder pairing swaps so that |+x> carries the lowest energy.
HermitianMatrix build_dsr_jc(const ModelParams& params, const DsrParams& dsr);

// Closed-form eigensystem of build_dsr_jc. Energies are labeled e0..e3 with
// e0 <= e1 <= e2; a_coef/b_coef are the hybridization amplitudes of the
// one-excitation pair (a^2 + b^2 = 1). For complex g the phase of the upper
// component is carried separately (see redfield helpers); a_coef and b_coef
// stay real.
struct DsrEigensystem {
  double e0 = 0, e1 = 0, e2 = 0, e3 = 0;
  double a_coef = 1, b_coef = 0;
  double omega01 = 0, omega02 = 0;
};

DsrEigensystem dsr_eigensystem(const ModelParams& params, const DsrParams& dsr);

struct BohrPair {
  double omega01 = 0, omega02 = 0;
};

// omega01 = E1 - E0, omega02 = E2 - E0 from ascending energies.
BohrPair bohr_from_values(const Eigen::VectorXd& energies);

// Signed differences scheme - reference; percent mode normalizes to the
// reference and scales by 100.
BohrPair bohr_deviations(const BohrPair& scheme, const BohrPair& reference,
                         bool percent);

// Operators on the bare product basis (dimension 2 * n_fock).
Eigen::MatrixXcd position_operator(int n_fock);  // (a^dag + a) on the HO factor
Eigen::MatrixXcd sigma_z_operator(int n_fock);   // sigma_z on the TSS factor

// sigma_z-up spin tensor a coherent state of amplitude `displacement`,
// normalized within the truncated Fock space.
Eigen::VectorXcd spin_up_coherent_state(Complex displacement, int n_fock);

}  // namespace spinboson
