#include "spinboson/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

namespace spinboson {

namespace {

// coth(x) for x > 0, accurate down to tiny arguments.
double coth_pos(double x) {
  if (x > 20.0) return 1.0;
  return 1.0 + 2.0 / std::expm1(2.0 * x);
}

struct SimpsonWorker {
  std::function<double(double)> f;
  int max_depth = 48;

  double recurse(double a, double b, double fa, double fm, double fb,
                 double whole, double tol, int depth) const {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    // Accept on the tolerance target, on hitting the roundoff floor of the
    // partial sums, or on a vanishing interval.
    const double floor_scale =
        std::abs(left) + std::abs(right) + std::abs(whole);
    if (std::abs(delta) <= 15.0 * tol || std::abs(delta) <= 1e-15 * floor_scale ||
        (b - a) <= 1e-13 * std::max({std::abs(a), std::abs(b), 1.0})) {
      return left + right + delta / 15.0;
    }
    if (depth >= max_depth) {
      std::ostringstream msg;
      msg << "adaptive quadrature stalled on [" << a << ", " << b
          << "], local error estimate " << std::abs(delta) / 15.0;
      throw NumericalError(msg.str(), std::abs(delta) / 15.0);
    }
    return recurse(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           recurse(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
  }

  double integrate(double a, double b, double tol) const {
    if (!(b > a)) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fm = f(m);
    const double fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return recurse(a, b, fa, fm, fb, whole, tol, 0);
  }
};

double adaptive_simpson(std::function<double(double)> f, double a, double b,
                        double tol) {
  SimpsonWorker worker{std::move(f)};
  return worker.integrate(a, b, tol);
}

}  // namespace

HermitianMatrix::HermitianMatrix(Eigen::MatrixXcd m) : mat_(std::move(m)) {
  if (mat_.rows() != mat_.cols())
    throw std::invalid_argument("HermitianMatrix requires a square matrix");
  if (mat_.rows() < 2)
    throw std::invalid_argument("HermitianMatrix requires dim >= 2");
  const double scale = std::max(1.0, mat_.cwiseAbs().maxCoeff());
  const double defect = (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff();
  if (defect > 1e-12 * scale)
    throw std::invalid_argument("matrix is not Hermitian within tolerance");
}

Spectrum eigh(const HermitianMatrix& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.mat());
  if (solver.info() != Eigen::Success)
    throw NumericalError("Hermitian eigensolver failed to converge");

  Spectrum out;
  out.values = solver.eigenvalues();
  out.vectors = solver.eigenvectors();

  // Fix each column's phase: largest-magnitude component real positive.
  for (Eigen::Index j = 0; j < out.vectors.cols(); ++j) {
    Eigen::Index imax = 0;
    double best = -1.0;
    for (Eigen::Index i = 0; i < out.vectors.rows(); ++i) {
      const double a = std::abs(out.vectors(i, j));
      if (a > best) {
        best = a;
        imax = i;
      }
    }
    const Complex pivot = out.vectors(imax, j);
    if (best > 0.0) out.vectors.col(j) *= std::conj(pivot) / best;
  }
  return out;
}

double principal_value(const SpectralDensity& j, double omega_ref, double beta,
                       double omega_cut, double tol) {
  if (!(omega_cut > 0.0)) throw ConfigError("omega_cut must be positive");
  if (!(tol > 0.0)) throw ConfigError("quadrature tolerance must be positive");
  if (!(beta > 0.0)) throw ConfigError("beta must be positive (use +inf for T = 0)");

  const bool zero_t = std::isinf(beta);
  const double w0 = std::abs(omega_ref);

  // Integrand away from the pole; w = 0 is a removable point.
  auto f = [&](double w) -> double {
    if (w <= 0.0) {
      if (zero_t || w0 == 0.0) return 0.0;
      return 2.0 * omega_ref * j.slope_at_zero() / (beta * w0 * w0);
    }
    const double cth = zero_t ? 1.0 : coth_pos(0.5 * beta * w);
    return j(w) * (w - omega_ref * cth) / ((w - w0) * (w + w0));
  };

  if (w0 == 0.0) {
    // No pole: integrand reduces to J(w)/w, regular at the origin.
    auto f0 = [&](double w) {
      if (w <= 0.0) return j.slope_at_zero();
      return j(w) / w;
    };
    return adaptive_simpson(f0, 0.0, omega_cut, tol);
  }

  const double h = std::min(std::max(1e-3 * w0, 1e-6), 0.5 * w0);

  if (w0 + h >= omega_cut) {
    // Pole at or beyond the integration window; J is negligible there, so
    // stop short of the singular point.
    return adaptive_simpson(f, 0.0, std::min(omega_cut, w0 - h), tol);
  }

  // Regular factor g(w) = J(w)(w - omega_ref coth)/(w + w0), so that the
  // integrand is g(w)/(w - w0) near the pole.
  auto greg = [&](double w) -> double {
    const double cth = zero_t ? 1.0 : coth_pos(0.5 * beta * w);
    return j(w) * (w - omega_ref * cth) / (w + w0);
  };

  // Symmetric window: P int = int_0^h [g(w0+u) - g(w0-u)] / u du, with the
  // u -> 0 value taken from a short central difference.
  const double du = 1e-7 * h;
  auto window = [&](double u) -> double {
    if (u < du) return (greg(w0 + du) - greg(w0 - du)) / du;
    return (greg(w0 + u) - greg(w0 - u)) / u;
  };

  double total = 0.0;
  total += adaptive_simpson(f, 0.0, w0 - h, 0.4 * tol);
  total += adaptive_simpson(window, 0.0, h, 0.2 * tol);
  total += adaptive_simpson(f, w0 + h, omega_cut, 0.4 * tol);
  return total;
}

Eigen::Vector2cd propagate_2x2(const Eigen::Matrix2cd& m,
                               const Eigen::Vector2cd& v0, double t) {
  if (t == 0.0) return v0;
  const Complex half_tr = 0.5 * m.trace();
  const Complex det = m.determinant();
  const Complex d = std::sqrt(half_tr * half_tr - det);
  const Eigen::Matrix2cd n = m - half_tr * Eigen::Matrix2cd::Identity();

  const Complex z = d * t;
  Complex cosh_z, sinhc_z;
  if (std::abs(z) < 1e-4) {
    const Complex z2 = z * z;
    cosh_z = 1.0 + z2 * (0.5 + z2 / 24.0);
    sinhc_z = 1.0 + z2 * (1.0 / 6.0 + z2 / 120.0);
  } else {
    cosh_z = std::cosh(z);
    sinhc_z = std::sinh(z) / z;
  }
  const Complex scale = std::exp(half_tr * t);
  return scale * (cosh_z * v0 + sinhc_z * t * (n * v0));
}

}  // namespace spinboson
