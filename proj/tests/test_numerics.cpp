#include <cmath>
#include <complex>
#include <limits>
#include <random>

#include <doctest.h>

#include "oracles.hpp"
#include "spinboson/numerics.hpp"

using namespace spinboson;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("eigh basics") {
  SUBCASE("identity") {
    const Spectrum s = eigh(HermitianMatrix(Eigen::MatrixXcd::Identity(4, 4)));
    for (int i = 0; i < 4; ++i) CHECK(s.values[i] == doctest::Approx(1.0));
  }
  SUBCASE("diagonal sorts ascending") {
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(4, 4);
    d.diagonal() << 0.5, -0.5, 1.5, 0.5;
    const Spectrum s = eigh(HermitianMatrix(d));
    CHECK(s.values[0] == doctest::Approx(-0.5));
    CHECK(s.values[1] == doctest::Approx(0.5));
    CHECK(s.values[2] == doctest::Approx(0.5));
    CHECK(s.values[3] == doctest::Approx(1.5));
  }
}

TEST_CASE("eigh reconstruction and unitarity at dim 18") {
  std::mt19937 rng(42);
  const Eigen::MatrixXcd h = oracles::random_hermitian(18, rng);
  const Spectrum s = eigh(HermitianMatrix(h));

  const Eigen::MatrixXcd rebuilt =
      s.vectors * s.values.asDiagonal() * s.vectors.adjoint();
  CHECK((rebuilt - h).norm() <= 1e-10 * h.norm());
  CHECK((s.vectors.adjoint() * s.vectors - Eigen::MatrixXcd::Identity(18, 18))
            .norm() <= 1e-10);
  for (int i = 0; i < 18; ++i) {
    const Eigen::VectorXcd v = s.vectors.col(i);
    CHECK((h * v - s.values[i] * v).norm() <= 1e-10 * h.norm());
  }
}

TEST_CASE("eigh determinism and phase convention") {
  std::mt19937 rng(7);
  const Eigen::MatrixXcd h = oracles::random_hermitian(6, rng);
  const Spectrum a = eigh(HermitianMatrix(h));
  const Spectrum b = eigh(HermitianMatrix(h));
  CHECK((a.vectors - b.vectors).cwiseAbs().maxCoeff() == 0.0);
  CHECK((a.values - b.values).cwiseAbs().maxCoeff() == 0.0);

  for (int j = 0; j < 6; ++j) {
    Eigen::Index imax = 0;
    a.vectors.col(j).cwiseAbs().maxCoeff(&imax);
    CHECK(a.vectors(imax, j).imag() == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(a.vectors(imax, j).real() > 0.0);
  }
}

TEST_CASE("eigh rejects non-Hermitian input") {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(3, 3);
  m(0, 1) = 1.0;  // missing the conjugate partner
  CHECK_THROWS_AS(HermitianMatrix(std::move(m)), std::invalid_argument);
}

TEST_CASE("eigenvalues invariant under unitary conjugation") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 5; ++trial) {
    const Eigen::MatrixXcd h = oracles::random_hermitian(8, rng);
    const Eigen::MatrixXcd u = oracles::random_unitary(8, rng);
    const Eigen::MatrixXcd rotated0 = u * h * u.adjoint();
    const Eigen::MatrixXcd rotated = 0.5 * (rotated0 + rotated0.adjoint().eval());
    const Spectrum a = eigh(HermitianMatrix(h));
    const Spectrum b = eigh(HermitianMatrix(rotated));
    CHECK((a.values - b.values).cwiseAbs().maxCoeff() <= 1e-10);
  }
}

TEST_CASE("principal value: zero density and far pole") {
  const auto zero = SpectralDensity::ohmic(0.0, 10.0);
  CHECK(principal_value(zero, 1.0, 10.0, 500.0, 1e-12) == doctest::Approx(0.0));

  // Pole far above the support: magnitude decreases monotonically.
  const auto sd = SpectralDensity::ohmic(0.05, 1.0);
  double prev = kInf;
  for (double wref : {50.0, 100.0, 200.0}) {
    const double val = std::abs(principal_value(sd, wref, 5.0, 50.0, 1e-13));
    CHECK(val < prev);
    prev = val;
  }
}

TEST_CASE("principal value against dense-grid oracle") {
  const double kappa = 0.02, omega_c = 10.0, beta = 10.0;
  const auto sd = SpectralDensity::ohmic(kappa, omega_c);
  auto j = [&](double w) { return kappa * w * std::exp(-w / omega_c); };

  SUBCASE("reference point") {
    const double impl = principal_value(sd, 1.0, beta, 50.0 * omega_c, 1e-10);
    const double ref = oracles::brute_pv(j, 1.0, beta, 80.0 * omega_c);
    CHECK(impl == doctest::Approx(ref).epsilon(1e-6));
  }
  SUBCASE("sign of omega_ref matters and matches the oracle") {
    for (double wref : {0.7, -0.7, 1.3, -1.3}) {
      const double impl = principal_value(sd, wref, beta, 50.0 * omega_c, 1e-10);
      const double ref = oracles::brute_pv(j, wref, beta, 80.0 * omega_c);
      CHECK(impl == doctest::Approx(ref).epsilon(2e-5));
    }
    const double plus = principal_value(sd, 0.7, beta, 500.0, 1e-10);
    const double minus = principal_value(sd, -0.7, beta, 500.0, 1e-10);
    CHECK(std::abs(plus - minus) > 1e-3);
  }
  SUBCASE("zero temperature") {
    const double impl = principal_value(sd, 0.9, kInf, 50.0 * omega_c, 1e-10);
    const double ref = oracles::brute_pv(j, 0.9, kInf, 80.0 * omega_c);
    CHECK(impl == doctest::Approx(ref).epsilon(2e-5));
  }
}

TEST_CASE("propagate_2x2 special cases") {
  const Eigen::Vector2cd v0(Complex(0.3, -0.1), Complex(-0.7, 0.2));

  SUBCASE("zero generator") {
    const Eigen::Vector2cd v = propagate_2x2(Eigen::Matrix2cd::Zero(), v0, 3.7);
    CHECK((v - v0).norm() <= 1e-14);
  }
  SUBCASE("diagonal decoupled evolution") {
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    m(0, 0) = Complex(-0.05, 0.9);
    m(1, 1) = Complex(-0.02, 1.4);
    const double t = 2.5;
    const Eigen::Vector2cd v = propagate_2x2(m, v0, t);
    CHECK(std::abs(v(0) - v0(0) * std::exp(m(0, 0) * t)) <= 1e-12);
    CHECK(std::abs(v(1) - v0(1) * std::exp(m(1, 1) * t)) <= 1e-12);
  }
  SUBCASE("defective generator") {
    Eigen::Matrix2cd m;
    const Complex lambda(-0.1, 0.8);
    m << lambda, Complex(1.0, 0.0), Complex(0.0, 0.0), lambda;
    const double t = 4.0;
    const Eigen::Vector2cd v = propagate_2x2(m, v0, t);
    // exp(mt) = e^{lambda t} (I + N t) exactly for this Jordan block.
    const Eigen::Vector2cd expect =
        std::exp(lambda * t) * (v0 + t * (m - lambda * Eigen::Matrix2cd::Identity()) * v0);
    CHECK((v - expect).norm() <= 1e-12);
  }
}

TEST_CASE("propagate_2x2 against RK4 oracle") {
  std::mt19937 rng(99);
  std::normal_distribution<double> dist(0.0, 0.5);
  Eigen::Matrix2cd m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m(i, j) = Complex(dist(rng), dist(rng));
  // Keep the spectrum non-expanding so the t = 10 comparison stays scaled.
  m -= Eigen::Matrix2cd::Identity() * std::abs(m.trace());

  const Eigen::Vector2cd v0(Complex(1.0, 0.0), Complex(0.2, -0.4));
  auto f = [&](double, const Eigen::VectorXcd& y) -> Eigen::VectorXcd {
    return m * y;
  };
  const Eigen::VectorXcd ref = oracles::rk4_integrate(f, v0, 0.0, 10.0, 1e-4);
  const Eigen::Vector2cd v = propagate_2x2(m, v0, 10.0);
  CHECK((v - Eigen::Vector2cd(ref)).norm() <= 1e-8);
}

TEST_CASE("propagate_2x2 semigroup property") {
  std::mt19937 rng(5);
  std::normal_distribution<double> dist(0.0, 0.6);
  for (int trial = 0; trial < 10; ++trial) {
    Eigen::Matrix2cd m;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m(i, j) = Complex(dist(rng), dist(rng));
    const Eigen::Vector2cd v0(Complex(0.4, 0.1), Complex(-0.2, 0.9));
    const double t1 = 1.3, t2 = 2.1;
    const Eigen::Vector2cd two_step = propagate_2x2(m, propagate_2x2(m, v0, t1), t2);
    const Eigen::Vector2cd one_step = propagate_2x2(m, v0, t1 + t2);
    CHECK((two_step - one_step).norm() <= 1e-9 * std::max(1.0, one_step.norm()));
  }
}
