// SPDX-License-Identifier: Apache-2.0
#include "qmom/sampling.hpp"

#include <cmath>

namespace qmom {

namespace {
std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}
}  // namespace

SeededRng::SeededRng(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream), engine_(splitmix64(seed ^ splitmix64(stream))) {}

SeededRng SeededRng::derive(std::uint64_t stream) const {
  return SeededRng(seed_, splitmix64(stream_ * 0x100000001b3ULL + stream + 1));
}

double SeededRng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double SeededRng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double SeededRng::normal() {
  // Box-Muller; draws come in pairs.
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform(), u2 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  spare_ = r * std::sin(2.0 * M_PI * u2);
  have_spare_ = true;
  return r * std::cos(2.0 * M_PI * u2);
}

Vec3 SeededRng::unit_vector() {
  const double z = uniform(-1.0, 1.0);
  const double phi = uniform(0.0, 2.0 * M_PI);
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  return Vec3(r * std::cos(phi), r * std::sin(phi), z);
}

std::vector<double> SeededRng::dirichlet(int n) {
  // Normalized exponentials = flat Dirichlet.
  std::vector<double> w(n);
  double sum = 0.0;
  for (auto& wi : w) {
    double u = uniform();
    while (u <= 0.0) u = uniform();
    sum += (wi = -std::log(u));
  }
  for (auto& wi : w) wi /= sum;
  return w;
}

Matrix haar_unitary(int dim, SeededRng& rng) {
  if (dim < 2) throw std::invalid_argument("haar_unitary: dim >= 2 required");
  Matrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = Complex(rng.normal(), rng.normal());
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    q.col(j) *= d / std::abs(d);
  }
  return q;
}

Matrix haar_unitary_2x2(SeededRng& rng) { return haar_unitary(2, rng); }

Vector haar_pure(int dim, SeededRng& rng) {
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = Complex(rng.normal(), rng.normal());
  return v / v.norm();
}

PureState apply_local_unitaries(const PureState& psi, const std::vector<Matrix>& us) {
  if (static_cast<int>(us.size()) != psi.num_qubits)
    throw std::invalid_argument("apply_local_unitaries: unitary count != N");
  Matrix full = Matrix::Identity(1, 1);
  for (const auto& u : us) full = kron(full, u);
  Vector amp = full * psi.amplitudes;
  amp /= amp.norm();
  return PureState(psi.num_qubits, std::move(amp));
}

PureState sample_pure_class(PureClass cls, int n, SeededRng& rng, int bisep_cut) {
  switch (cls) {
    case PureClass::Separable: {
      std::vector<Vec3> dirs(n);
      for (auto& u : dirs) u = rng.unit_vector();
      return product_state(dirs);
    }
    case PureClass::Bisep: {
      if (n < 2 || bisep_cut < 1 || bisep_cut >= n)
        throw std::invalid_argument("sample_pure_class: bad bisep cut");
      const Vector a = haar_pure(1 << bisep_cut, rng);
      const Vector b = haar_pure(1 << (n - bisep_cut), rng);
      Vector amp(a.size() * b.size());
      for (Eigen::Index i = 0; i < a.size(); ++i)
        amp.segment(i * b.size(), b.size()) = a(i) * b;
      return PureState(n, std::move(amp));
    }
    case PureClass::WClass: {
      return w_standard_state(rng.dirichlet(n + 1));
    }
    case PureClass::Generic: {
      if (n == 3) {
        auto l = rng.dirichlet(5);
        std::array<double, 5> lambda{};
        for (int i = 0; i < 5; ++i) lambda[i] = std::sqrt(l[i]);
        return acin_state(lambda, rng.uniform(0.0, M_PI));
      }
      return PureState(n, haar_pure(1 << n, rng));
    }
  }
  throw std::logic_error("sample_pure_class: unreachable");
}

DensityMatrix sample_mixed_class(PureClass cls, int n, int terms, SeededRng& rng,
                                 int bisep_cut) {
  if (terms < 0) throw std::invalid_argument("sample_mixed_class: terms < 0");
  if (terms == 0) terms = 1 << n;
  const auto weights = rng.dirichlet(terms);
  const Eigen::Index d = Eigen::Index{1} << n;
  Matrix acc = Matrix::Zero(d, d);
  for (int a = 0; a < terms; ++a) {
    PureState psi = sample_pure_class(cls, n, rng, bisep_cut);
    std::vector<Matrix> us(n);
    for (auto& u : us) u = haar_unitary(2, rng);
    psi = apply_local_unitaries(psi, us);
    acc += weights[a] * psi.density();
  }
  acc = (acc + acc.adjoint().eval()) / 2.0;
  return DensityMatrix(n, std::move(acc));
}

DensityMatrix random_density_hs(int n, SeededRng& rng) {
  const Eigen::Index d = Eigen::Index{1} << n;
  Matrix g(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) g(i, j) = Complex(rng.normal(), rng.normal());
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = (rho + rho.adjoint().eval()) / 2.0;
  return DensityMatrix(n, std::move(rho));
}

}  // namespace qmom
