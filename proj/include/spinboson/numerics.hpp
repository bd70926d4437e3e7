#pragma once

#include <Eigen/Dense>

#include "spinboson/model.hpp"

namespace spinboson {

// Dense complex matrix checked to be Hermitian on construction.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(Eigen::MatrixXcd m);

  const Eigen::MatrixXcd& mat() const { return mat_; }
  Eigen::Index dim() const { return mat_.rows(); }

 private:
  Eigen::MatrixXcd mat_;
};

// Full eigendecomposition, eigenvalues ascending. vectors.col(i) belongs to
// values[i], unit norm, phase fixed so the largest-magnitude component of
// each eigenvector is real positive.
struct Spectrum {
  Eigen::VectorXd values;
  Eigen::MatrixXcd vectors;
};

Spectrum eigh(const HermitianMatrix& h);

// Cauchy principal value of
//   P int_0^omega_cut dw J(w) (w - omega_ref coth(beta w / 2)) / (w^2 - omega_ref^2)
// with the simple pole at |omega_ref| removed by symmetric excision; the odd
// part of the integrand cancels analytically inside the window. beta = +inf
// replaces coth by 1 (zero temperature). tol is the absolute target.
double principal_value(const SpectralDensity& j, double omega_ref, double beta,
                       double omega_cut, double tol);

// exp(m * t) * v0 through the closed-form 2x2 exponential
// exp(m t) = e^{tr t / 2} [cosh(d t) I + sinhc(d t) t (m - tr/2 I)],
// d = sqrt(tr^2/4 - det); exact for defective m as well (sinhc -> 1).
Eigen::Vector2cd propagate_2x2(const Eigen::Matrix2cd& m,
                               const Eigen::Vector2cd& v0, double t);

}  // namespace spinboson
