// SPDX-License-Identifier: Apache-2.0
#include "qmom/core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace qmom {

namespace {
int g_max_qubits = 8;

void check_qubits(int n) {
  if (n < 1 || n > g_max_qubits)
    throw std::invalid_argument("qubit count " + std::to_string(n) +
                                " outside [1, " + std::to_string(g_max_qubits) + "]");
}
}  // namespace

int max_qubits() { return g_max_qubits; }
void set_max_qubits(int n) { g_max_qubits = n; }

Matrix2 pauli(Axis axis) {
  Matrix2 m;
  const Complex i(0.0, 1.0);
  switch (axis) {
    case Axis::X: m << 0, 1, 1, 0; break;
    case Axis::Y: m << 0, -i, i, 0; break;
    case Axis::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

Matrix2 sigma_u(const Vec3& u) {
  if (std::abs(u.norm() - 1.0) > 1e-9)
    throw std::invalid_argument("sigma_u: direction must be a unit vector");
  Matrix2 m;
  m << u.z(), Complex(u.x(), -u.y()), Complex(u.x(), u.y()), -u.z();
  return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

PureState::PureState(int n, Vector amp) : num_qubits(n), amplitudes(std::move(amp)) {
  check_qubits(n);
  if (amplitudes.size() != (Eigen::Index{1} << n))
    throw std::invalid_argument("PureState: amplitude count != 2^N");
  if (std::abs(amplitudes.squaredNorm() - 1.0) > 1e-12)
    throw std::invalid_argument("PureState: not normalized");
}

Matrix PureState::density() const { return amplitudes * amplitudes.adjoint(); }

DensityMatrix::DensityMatrix(int n, Matrix m) : num_qubits(n), mat(std::move(m)) {
  check_qubits(n);
  const Eigen::Index d = Eigen::Index{1} << n;
  if (mat.rows() != d || mat.cols() != d)
    throw std::invalid_argument("DensityMatrix: dimension != 2^N");
  if ((mat - mat.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("DensityMatrix: not Hermitian");
  if (std::abs(mat.trace().real() - 1.0) > 1e-10 || std::abs(mat.trace().imag()) > 1e-10)
    throw std::invalid_argument("DensityMatrix: trace != 1");
  Eigen::SelfAdjointEigenSolver<Matrix> es(mat, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-9)
    throw std::invalid_argument("DensityMatrix: negative eigenvalue " +
                                std::to_string(es.eigenvalues().minCoeff()));
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  return DensityMatrix(psi.num_qubits, psi.density());
}

DensityMatrix partial_trace(const DensityMatrix& rho, int qubit) {
  const int n = rho.num_qubits;
  if (qubit < 0 || qubit >= n || n < 2)
    throw std::invalid_argument("partial_trace: bad qubit index");
  const std::size_t dl = std::size_t{1} << qubit;            // dims left of traced qubit
  const std::size_t dr = std::size_t{1} << (n - qubit - 1);  // dims right of it
  const std::size_t dout = dl * dr;
  Matrix out = Matrix::Zero(dout, dout);
  for (std::size_t a = 0; a < dl; ++a)
    for (std::size_t b = 0; b < dr; ++b)
      for (std::size_t a2 = 0; a2 < dl; ++a2)
        for (std::size_t b2 = 0; b2 < dr; ++b2)
          for (std::size_t k = 0; k < 2; ++k)
            out(a * dr + b, a2 * dr + b2) +=
                rho.mat((a * 2 + k) * dr + b, (a2 * 2 + k) * dr + b2);
  return DensityMatrix(n - 1, std::move(out));
}

double correlation(const DensityMatrix& rho, const std::vector<Vec3>& dirs) {
  if (static_cast<int>(dirs.size()) != rho.num_qubits)
    throw std::invalid_argument("correlation: direction count != N");
  Matrix op = Matrix::Identity(1, 1);
  for (const auto& u : dirs) op = kron(op, sigma_u(u));
  return (rho.mat * op).trace().real();
}

namespace {
// Expectation of an N-qubit Pauli string without materializing it.
// idx[k] in {0,1,2} selects x,y,z on qubit k. The string has one nonzero
// per row: column = row ^ xmask with a phase from y/z factors.
double pauli_string_expectation(const Matrix& rho, const std::vector<int>& idx) {
  const int n = static_cast<int>(idx.size());
  std::uint64_t xmask = 0;
  std::vector<int> kind(n);
  for (int k = 0; k < n; ++k) {
    kind[k] = idx[k];
    if (idx[k] != 2) xmask |= std::uint64_t{1} << (n - 1 - k);
  }
  const std::uint64_t dim = std::uint64_t{1} << n;
  Complex sum = 0.0;
  for (std::uint64_t r = 0; r < dim; ++r) {
    const std::uint64_t c = r ^ xmask;
    Complex phase = 1.0;
    for (int k = 0; k < n; ++k) {
      const int bit = static_cast<int>((r >> (n - 1 - k)) & 1);
      switch (kind[k]) {
        case 0: break;                                         // <c|sx|r> = 1
        case 1: phase *= bit ? Complex(0, -1) : Complex(0, 1); break;  // <1-r|sy|r>
        case 2: phase *= bit ? -1.0 : 1.0; break;              // <r|sz|r>
      }
    }
    sum += rho(r, c) * phase;  // tr[rho P] = sum_{r,c} rho(r,c) P(c,r)
  }
  return sum.real();
}
}  // namespace

CorrelationTensor::CorrelationTensor(const DensityMatrix& rho) : n_(rho.num_qubits) {
  std::size_t size = 1;
  for (int k = 0; k < n_; ++k) size *= 3;
  t_.resize(size);
  std::vector<int> idx(n_, 0);
  for (std::size_t flat = 0; flat < size; ++flat) {
    std::size_t rem = flat;
    for (int k = n_ - 1; k >= 0; --k) {
      idx[k] = static_cast<int>(rem % 3);
      rem /= 3;
    }
    t_[flat] = pauli_string_expectation(rho.mat, idx);
  }
  scratch_.resize(size);
}

double CorrelationTensor::expect(const std::vector<Vec3>& dirs) const {
  if (static_cast<int>(dirs.size()) != n_)
    throw std::invalid_argument("CorrelationTensor: direction count != N");
  // Contract the last axis first, shrinking the tensor by 3 each step.
  std::size_t size = t_.size();
  const double* src = t_.data();
  double* dst = scratch_.data();
  for (int k = n_ - 1; k >= 0; --k) {
    const Vec3& u = dirs[k];
    size /= 3;
    for (std::size_t i = 0; i < size; ++i)
      dst[i] = src[3 * i] * u.x() + src[3 * i + 1] * u.y() + src[3 * i + 2] * u.z();
    src = dst;
  }
  return dst[0];
}

// --- standard states ---------------------------------------------------

PureState ghz_state(int n) {
  check_qubits(n);
  Vector amp = Vector::Zero(Eigen::Index{1} << n);
  amp(0) = amp(amp.size() - 1) = 1.0 / std::sqrt(2.0);
  return PureState(n, std::move(amp));
}

PureState w_state(int n) {
  std::vector<double> x(static_cast<std::size_t>(n) + 1, 1.0 / n);
  x[0] = 0.0;
  return w_standard_state(x);
}

PureState w_standard_state(const std::vector<double>& x) {
  const int n = static_cast<int>(x.size()) - 1;
  check_qubits(n);
  double sum = 0.0;
  for (double xi : x) {
    if (xi < -1e-12) throw std::invalid_argument("w_standard_state: negative weight");
    sum += xi;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("w_standard_state: weights must sum to 1");
  Vector amp = Vector::Zero(Eigen::Index{1} << n);
  amp(0) = std::sqrt(std::max(0.0, x[0]));
  for (int i = 1; i <= n; ++i)
    amp(Eigen::Index{1} << (n - i)) = std::sqrt(std::max(0.0, x[i]));
  amp /= amp.norm();
  return PureState(n, std::move(amp));
}

PureState bell_state() {
  Vector amp = Vector::Zero(4);
  amp(0) = amp(3) = 1.0 / std::sqrt(2.0);
  return PureState(2, std::move(amp));
}

PureState product_state(const std::vector<Vec3>& bloch) {
  Vector amp = Vector::Ones(1);
  for (const auto& u : bloch) {
    if (std::abs(u.norm() - 1.0) > 1e-9)
      throw std::invalid_argument("product_state: non-unit Bloch vector");
    // +1 eigenstate of u.sigma
    const double theta = std::acos(std::clamp(u.z(), -1.0, 1.0));
    const double phi = std::atan2(u.y(), u.x());
    Vector q(2);
    q << std::cos(theta / 2.0),
        std::polar(std::sin(theta / 2.0), phi);
    Vector next(amp.size() * 2);
    for (Eigen::Index i = 0; i < amp.size(); ++i) {
      next(2 * i) = amp(i) * q(0);
      next(2 * i + 1) = amp(i) * q(1);
    }
    amp = std::move(next);
  }
  return PureState(static_cast<int>(bloch.size()), std::move(amp));
}

PureState acin_state(const std::array<double, 5>& lambda, double phi) {
  double norm2 = 0.0;
  for (double l : lambda) {
    if (l < 0) throw std::invalid_argument("acin_state: lambda must be >= 0");
    norm2 += l * l;
  }
  if (std::abs(norm2 - 1.0) > 1e-12)
    throw std::invalid_argument("acin_state: sum lambda_i^2 != 1");
  Vector amp = Vector::Zero(8);
  amp(0b000) = lambda[0];
  amp(0b100) = std::polar(lambda[1], phi);
  amp(0b101) = lambda[2];
  amp(0b110) = lambda[3];
  amp(0b111) = lambda[4];
  return PureState(3, std::move(amp));
}

DensityMatrix bell_diagonal(double cx, double cy, double cz) {
  const double l1 = (1 - cx - cy - cz) / 4, l2 = (1 + cx + cy - cz) / 4;
  const double l3 = (1 + cx - cy + cz) / 4, l4 = (1 - cx + cy + cz) / 4;
  if (l1 < -1e-12 || l2 < -1e-12 || l3 < -1e-12 || l4 < -1e-12)
    throw std::invalid_argument("bell_diagonal: c-vector gives negative eigenvalue");
  Matrix m = Matrix::Identity(4, 4);
  m += cx * kron(pauli(Axis::X), pauli(Axis::X));
  m += cy * kron(pauli(Axis::Y), pauli(Axis::Y));
  m += cz * kron(pauli(Axis::Z), pauli(Axis::Z));
  return DensityMatrix(2, m / 4.0);
}

DensityMatrix noisy_ghz(double p, int n) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("noisy_ghz: p outside [0,1]");
  const auto ghz = ghz_state(n);
  const Eigen::Index d = Eigen::Index{1} << n;
  Matrix m = p / static_cast<double>(d) * Matrix::Identity(d, d) + (1.0 - p) * ghz.density();
  return DensityMatrix(n, std::move(m));
}

DensityMatrix werner(double q) {
  if (q < 0.0 || q > 1.0) throw std::invalid_argument("werner: q outside [0,1]");
  Vector psim = Vector::Zero(4);
  psim(1) = 1.0 / std::sqrt(2.0);
  psim(2) = -1.0 / std::sqrt(2.0);
  Matrix m = q * (psim * psim.adjoint()) + (1.0 - q) / 4.0 * Matrix::Identity(4, 4);
  return DensityMatrix(2, std::move(m));
}

DensityMatrix maximally_mixed(int n) {
  check_qubits(n);
  const Eigen::Index d = Eigen::Index{1} << n;
  return DensityMatrix(n, Matrix::Identity(d, d) / static_cast<double>(d));
}

DensityMatrix w_marginal() {
  return partial_trace(DensityMatrix::from_pure(w_state(3)), 0);
}

}  // namespace qmom
