// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qmom/criteria.hpp"
#include "qmom/moments.hpp"
#include "qmom/sampling.hpp"

using namespace qmom;

TEST_CASE("seeded rng reproducibility") {
  SeededRng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.uniform() == b.uniform());

  SeededRng c(42), d(43);
  bool differs = false;
  for (int i = 0; i < 10; ++i)
    if (c.uniform() != d.uniform()) differs = true;
  CHECK(differs);

  // derived streams are independent of draw order on the parent
  SeededRng p1(7), p2(7);
  (void)p2.uniform();
  SeededRng c1 = p1.derive(3), c2 = p2.derive(3);
  CHECK(c1.uniform() == c2.uniform());
  SeededRng c3 = p1.derive(4);
  CHECK(c1.stream() != c3.stream());
}

TEST_CASE("rng distributions") {
  SeededRng rng(2);
  const int n = 100000;
  double mean = 0.0, var = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = rng.normal();
    mean += x;
    var += x * x;
  }
  CHECK(std::abs(mean / n) < 0.02);
  CHECK(var / n == doctest::Approx(1.0).epsilon(0.02));

  // unit vectors: unit norm, each component mean ~ 0, z uniform in [-1,1]
  Vec3 acc = Vec3::Zero();
  double z2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const Vec3 u = rng.unit_vector();
    CHECK(std::abs(u.norm() - 1.0) < 1e-12);
    acc += u;
    z2 += u.z() * u.z();
  }
  CHECK(acc.norm() / n < 0.02);
  CHECK(z2 / n == doctest::Approx(1.0 / 3.0).epsilon(0.03));

  // dirichlet: nonnegative, sums to one, symmetric means
  for (int i = 0; i < 100; ++i) {
    const auto w = rng.dirichlet(5);
    double s = 0.0;
    for (double wi : w) {
      CHECK(wi >= 0.0);
      s += wi;
    }
    CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("haar unitaries") {
  SeededRng rng(3);
  for (int rep = 0; rep < 20; ++rep) {
    const Matrix u = haar_unitary(2, rng);
    CHECK((u * u.adjoint() - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);
  }
  const Matrix u4 = haar_unitary(4, rng);
  CHECK((u4 * u4.adjoint() - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-12);

  // moments of |tr U|^2 match the Haar values (weak statistical check);
  // the QR phase correction is what makes these come out right.
  const int n = 50000;
  double m1 = 0.0, m2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double a = std::norm(haar_unitary(2, rng).trace());
    m1 += a;
    m2 += a * a;
  }
  CHECK(m1 / n == doctest::Approx(1.0).epsilon(0.05));
  CHECK(m2 / n == doctest::Approx(2.0).epsilon(0.08));

  // haar pure states are normalized
  for (int rep = 0; rep < 10; ++rep)
    CHECK(haar_pure(8, rng).norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("pure class samplers") {
  SeededRng rng(5);
  const auto ico = builtin_spherical("icosahedron");

  SUBCASE("separable products have R2 = 1/3^N exactly") {
    for (int n = 2; n <= 4; ++n) {
      const auto psi = sample_pure_class(PureClass::Separable, n, rng);
      const auto rho = DensityMatrix::from_pure(psi);
      CHECK(moment_design(rho, 2, ico).value ==
            doctest::Approx(1.0 / std::pow(3.0, n)).epsilon(1e-10));
    }
  }

  SUBCASE("biseparable samples respect the cut") {
    const auto psi = sample_pure_class(PureClass::Bisep, 3, rng, 1);
    const auto rho = DensityMatrix::from_pure(psi);
    // qubit 0 is in a pure state on its own
    const auto rest = partial_trace(partial_trace(rho, 2), 1);
    CHECK((rest.mat * rest.mat).trace().real() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK_THROWS_AS(sample_pure_class(PureClass::Bisep, 3, rng, 3),
                    std::invalid_argument);
  }

  SUBCASE("w-class samples obey the W-class criteria") {
    for (int rep = 0; rep < 50; ++rep) {
      const auto psi = sample_pure_class(PureClass::WClass, 4, rng);
      const auto rho = DensityMatrix::from_pure(psi);
      const double r2 = moment_design(rho, 2, ico).value;
      const double r4 = moment_design(rho, 4, ico).value;
      CHECK(r2 <= w_class_chi(4) + 1e-10);
      CHECK(w_class_linear(r2, r4, 4).margin < 1e-9);
    }
  }

  SUBCASE("generic three-qubit states are normalized and reproducible") {
    SeededRng r1(11), r2(11);
    const auto a = sample_pure_class(PureClass::Generic, 3, r1);
    const auto b = sample_pure_class(PureClass::Generic, 3, r2);
    CHECK((a.amplitudes - b.amplitudes).norm() < 1e-15);
    CHECK(a.amplitudes.norm() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("mixed class sampler") {
  SeededRng rng(13);
  const auto ico = builtin_spherical("icosahedron");

  // one term with LU dressing is still pure
  const auto single = sample_mixed_class(PureClass::WClass, 3, 1, rng);
  CHECK((single.mat * single.mat).trace().real() == doctest::Approx(1.0).epsilon(1e-10));

  // several terms lose purity
  const auto mixed = sample_mixed_class(PureClass::WClass, 3, 4, rng);
  CHECK((mixed.mat * mixed.mat).trace().real() < 0.999);

  // W-class mixtures stay inside the mixed W-class moment bounds
  for (int rep = 0; rep < 30; ++rep) {
    const auto rho = sample_mixed_class(PureClass::WClass, 3, 0, rng);
    const double r2 = moment_design(rho, 2, ico).value;
    const double r4 = moment_design(rho, 4, ico).value;
    CHECK(r2 <= w_class_chi(3) + 1e-10);
    CHECK(w_class_linear(r2, r4, 3).margin < 1e-9);
  }
}

TEST_CASE("local unitary dressing preserves moments") {
  SeededRng rng(17);
  const auto ico = builtin_spherical("icosahedron");
  const auto psi = sample_pure_class(PureClass::WClass, 3, rng);
  std::vector<Matrix> us(3);
  for (auto& u : us) u = haar_unitary(2, rng);
  const auto a = DensityMatrix::from_pure(psi);
  const auto b = DensityMatrix::from_pure(apply_local_unitaries(psi, us));
  CHECK(moment_design(a, 2, ico).value ==
        doctest::Approx(moment_design(b, 2, ico).value).epsilon(1e-10));
  CHECK(moment_design(a, 4, ico).value ==
        doctest::Approx(moment_design(b, 4, ico).value).epsilon(1e-10));
}

TEST_CASE("hilbert-schmidt random densities") {
  SeededRng rng(19);
  double purity = 0.0;
  const int n = 4000;
  for (int i = 0; i < n; ++i) {
    const auto rho = random_density_hs(1, rng);
    CHECK(rho.mat.trace().real() == doctest::Approx(1.0).epsilon(1e-12));
    purity += (rho.mat * rho.mat).trace().real();
  }
  // mean purity for the square-Ginibre ensemble at d = 2 is 4/5
  CHECK(purity / n == doctest::Approx(0.8).epsilon(0.01));

  const auto rho2 = random_density_hs(3, rng);
  CHECK(rho2.dim() == 8);
}
