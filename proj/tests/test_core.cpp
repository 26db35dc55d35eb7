// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qmom/core.hpp"
#include "qmom/sampling.hpp"

using namespace qmom;

namespace {
const Vec3 ex(1, 0, 0), ey(0, 1, 0), ez(0, 0, 1);
}

TEST_CASE("pauli matrices") {
  const Matrix2 sx = pauli(Axis::X), sy = pauli(Axis::Y), sz = pauli(Axis::Z);
  CHECK(sx(0, 1) == Complex(1, 0));
  CHECK(sx(1, 0) == Complex(1, 0));
  CHECK(sz(0, 0) == Complex(1, 0));
  CHECK(sz(1, 1) == Complex(-1, 0));
  CHECK((sy * sy - Matrix2::Identity()).cwiseAbs().maxCoeff() == doctest::Approx(0.0));
  for (const auto& s : {sx, sy, sz}) {
    CHECK((s - s.adjoint()).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(std::abs(s.trace()) < 1e-15);
  }
}

TEST_CASE("sigma_u") {
  CHECK((sigma_u(ez) - pauli(Axis::Z)).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((sigma_u(ex) - pauli(Axis::X)).cwiseAbs().maxCoeff() < 1e-15);

  const Vec3 u = Vec3(1, 1, 1).normalized();
  const Matrix2 m = sigma_u(u);
  CHECK((m * pauli(Axis::X)).trace().real() / 2.0 ==
        doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
  Eigen::SelfAdjointEigenSolver<Matrix2> es(m);
  CHECK(es.eigenvalues()(0) == doctest::Approx(-1.0));
  CHECK(es.eigenvalues()(1) == doctest::Approx(1.0));

  CHECK_THROWS_AS(sigma_u(Vec3(1, 1, 1)), std::invalid_argument);
}

TEST_CASE("correlation basics") {
  const auto bell = DensityMatrix::from_pure(bell_state());
  CHECK(correlation(bell, {ez, ez}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(correlation(maximally_mixed(2), {ex, ey}) == doctest::Approx(0.0));
  const auto ghz3 = DensityMatrix::from_pure(ghz_state(3));
  CHECK(correlation(ghz3, {ex, ex, ex}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(correlation(ghz3, {ex, ex}), std::invalid_argument);

  // sign flip under u -> -u
  SeededRng rng(7);
  const auto rho = random_density_hs(2, rng);
  const Vec3 u = rng.unit_vector(), v = rng.unit_vector();
  CHECK(correlation(rho, {u, v}) == doctest::Approx(-correlation(rho, {u, Vec3(-v)})));
  CHECK(std::abs(correlation(rho, {u, v})) <= 1.0 + 1e-12);
}

TEST_CASE("correlation tensor agrees with materialized trace") {
  SeededRng rng(11);
  for (int n = 1; n <= 4; ++n) {
    const auto rho = random_density_hs(n, rng);
    const CorrelationTensor ct(rho);
    std::vector<Vec3> dirs(n);
    for (int rep = 0; rep < 5; ++rep) {
      for (auto& u : dirs) u = rng.unit_vector();
      CHECK(ct.expect(dirs) == doctest::Approx(correlation(rho, dirs)).epsilon(1e-10));
    }
  }
}

TEST_CASE("correlation is multilinear in each direction") {
  SeededRng rng(13);
  const auto rho = random_density_hs(3, rng);
  const CorrelationTensor ct(rho);
  const Vec3 u = rng.unit_vector(), v = rng.unit_vector();
  const Vec3 a = rng.unit_vector(), b = rng.unit_vector();
  const double al = 0.7, be = -1.3;
  const double lhs = ct.expect({Vec3(al * u + be * v), a, b});
  const double rhs = al * ct.expect({u, a, b}) + be * ct.expect({v, a, b});
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
}

TEST_CASE("product state correlation factorizes") {
  SeededRng rng(17);
  std::vector<Vec3> bloch(3);
  for (auto& u : bloch) u = rng.unit_vector();
  const auto rho = DensityMatrix::from_pure(product_state(bloch));
  std::vector<Vec3> dirs(3);
  for (auto& u : dirs) u = rng.unit_vector();
  double expected = 1.0;
  for (int i = 0; i < 3; ++i) expected *= dirs[i].dot(bloch[i]);
  CHECK(correlation(rho, dirs) == doctest::Approx(expected).epsilon(1e-11));
}

TEST_CASE("standard states") {
  SUBCASE("w(3) amplitudes") {
    const auto w3 = w_state(3);
    const double a = 1.0 / std::sqrt(3.0);
    CHECK(std::abs(w3.amplitudes(0b001) - a) < 1e-12);
    CHECK(std::abs(w3.amplitudes(0b010) - a) < 1e-12);
    CHECK(std::abs(w3.amplitudes(0b100) - a) < 1e-12);
    CHECK(std::abs(w3.amplitudes(0b000)) < 1e-12);
  }
  SUBCASE("bell_diagonal(1,-1,1) is pure") {
    const auto rho = bell_diagonal(1, -1, 1);
    CHECK((rho.mat * rho.mat).trace().real() == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("noisy_ghz(1,N) is maximally mixed") {
    const auto rho = noisy_ghz(1.0, 3);
    CHECK((rho.mat - maximally_mixed(3).mat).cwiseAbs().maxCoeff() < 1e-14);
  }
  SUBCASE("parameter validation") {
    CHECK_THROWS_AS(bell_diagonal(1, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(noisy_ghz(1.5, 2), std::invalid_argument);
    CHECK_THROWS_AS(werner(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(w_standard_state({0.5, 0.4}), std::invalid_argument);
  }
  SUBCASE("ghz normalization") {
    for (int n = 2; n <= 6; ++n)
      CHECK(ghz_state(n).amplitudes.norm() == doctest::Approx(1.0));
  }
}

TEST_CASE("density matrix validation") {
  Matrix bad = Matrix::Zero(2, 2);
  bad(0, 0) = 1.5;
  bad(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityMatrix(1, bad), std::invalid_argument);

  Matrix nonherm = Matrix::Identity(2, 2) / 2.0;
  nonherm(0, 1) = Complex(0.3, 0.0);
  CHECK_THROWS_AS(DensityMatrix(1, nonherm), std::invalid_argument);

  CHECK_THROWS_AS(PureState(1, Vector::Ones(2)), std::invalid_argument);
}

TEST_CASE("partial trace") {
  const auto rho = DensityMatrix::from_pure(w_state(3));
  for (int q = 0; q < 3; ++q) {
    const auto red = partial_trace(rho, q);
    CHECK(red.num_qubits == 2);
    CHECK(red.mat.trace().real() == doctest::Approx(1.0));
  }
  // w_marginal matches a direct reduction
  const auto m = w_marginal();
  CHECK((m.mat - partial_trace(rho, 0).mat).cwiseAbs().maxCoeff() < 1e-14);
}
