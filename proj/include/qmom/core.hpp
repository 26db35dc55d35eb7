// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace qmom {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Matrix2 = Eigen::Matrix2cd;
using Vector = Eigen::VectorXcd;
using Vec3 = Eigen::Vector3d;

/// Maximum number of qubits accepted by dense-state constructors.
/// Default 8; raise at your own risk (memory grows as 4^N).
int max_qubits();
void set_max_qubits(int n);

enum class Axis { X, Y, Z };

/// Single-qubit Pauli matrix.
Matrix2 pauli(Axis axis);

/// Observable u.sigma for a unit Bloch vector u. Throws on non-unit input.
Matrix2 sigma_u(const Vec3& u);

/// Kronecker product, row-major qubit ordering (first factor = leftmost qubit).
Matrix kron(const Matrix& a, const Matrix& b);

struct PureState {
  int num_qubits = 0;
  Vector amplitudes;

  PureState() = default;
  PureState(int n, Vector amp);

  Matrix density() const;
};

struct DensityMatrix {
  int num_qubits = 0;
  Matrix mat;

  DensityMatrix() = default;
  DensityMatrix(int n, Matrix m);  // validates Hermiticity, trace, PSD

  static DensityMatrix from_pure(const PureState& psi);

  std::size_t dim() const { return static_cast<std::size_t>(mat.rows()); }
};

/// Trace out the given qubit (0-based, qubit 0 = leftmost tensor factor).
DensityMatrix partial_trace(const DensityMatrix& rho, int qubit);

/// E(u_1,...,u_N) = tr[rho (sigma_{u_1} x ... x sigma_{u_N})].
/// The tensor product is materialized per call; use CorrelationTensor for
/// repeated evaluation on the same state.
double correlation(const DensityMatrix& rho, const std::vector<Vec3>& dirs);

/// Pauli correlation tensor T_{i1..iN} = tr[rho sigma_{i1} x ... x sigma_{iN}]
/// stored as a flat array of 3^N reals. E(u_1..u_N) is the multilinear
/// contraction of T with the direction vectors.
class CorrelationTensor {
 public:
  explicit CorrelationTensor(const DensityMatrix& rho);

  int num_qubits() const { return n_; }
  const std::vector<double>& values() const { return t_; }

  /// Contract with N direction vectors (need not be unit length).
  double expect(const std::vector<Vec3>& dirs) const;

 private:
  int n_;
  std::vector<double> t_;
  mutable std::vector<double> scratch_;
};

// --- standard states ---------------------------------------------------

PureState ghz_state(int n);
PureState w_state(int n);
/// W-class standard form sqrt(x0)|0..0> + sum_i sqrt(x_i)|0..1..0>,
/// x has n+1 entries, sum(x) = 1, x >= 0.
PureState w_standard_state(const std::vector<double>& x);
PureState bell_state();  // |Phi+> = (|00>+|11>)/sqrt(2)
/// Product of single-qubit states pointing along the given Bloch vectors.
PureState product_state(const std::vector<Vec3>& bloch);
/// Three-qubit standard form l0|000> + l1 e^{i phi}|100> + l2|101> + l3|110> + l4|111>.
PureState acin_state(const std::array<double, 5>& lambda, double phi);

DensityMatrix bell_diagonal(double cx, double cy, double cz);
DensityMatrix noisy_ghz(double p, int n);
DensityMatrix werner(double q);  // q |Psi-><Psi-| + (1-q) I/4
DensityMatrix maximally_mixed(int n);
/// Two-body marginal of the three-qubit W state.
DensityMatrix w_marginal();

}  // namespace qmom
