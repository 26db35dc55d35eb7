// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>

#include "qmom/core.hpp"

namespace qmom {

/// Deterministic RNG with cheap derived sub-streams: identical (seed, stream)
/// pairs always produce identical draws, independent of call site.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed, std::uint64_t stream = 0);

  SeededRng derive(std::uint64_t stream) const;

  double uniform();                   // [0, 1)
  double uniform(double lo, double hi);
  double normal();
  Vec3 unit_vector();                 // uniform on S^2
  std::vector<double> dirichlet(int n);  // flat Dirichlet(1,..,1)

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::uint64_t seed_, stream_;
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Haar-random unitary via QR of a complex Ginibre matrix with the phase of
/// the triangular factor's diagonal absorbed.
Matrix haar_unitary(int dim, SeededRng& rng);

Matrix haar_unitary_2x2(SeededRng& rng);

/// Haar-random pure state on dim amplitudes.
Vector haar_pure(int dim, SeededRng& rng);

enum class PureClass {
  Separable,  // product of single-qubit states
  Bisep,      // Haar pure on a 2^k x 2^(N-k) split, k = bisep_cut
  WClass,     // W standard form with uniform simplex weights
  Generic,    // N = 3: Acin standard form; otherwise Haar pure
};

PureState sample_pure_class(PureClass cls, int n, SeededRng& rng, int bisep_cut = 1);

/// Convex mixture of `terms` class members under independent random local
/// unitary dressings, with flat-Dirichlet weights. terms = 0 picks the
/// default 2^N.
DensityMatrix sample_mixed_class(PureClass cls, int n, int terms, SeededRng& rng,
                                 int bisep_cut = 1);

/// Hilbert-Schmidt random density matrix (square Ginibre purification).
DensityMatrix random_density_hs(int n, SeededRng& rng);

/// Apply a product of single-qubit unitaries to a pure state.
PureState apply_local_unitaries(const PureState& psi, const std::vector<Matrix>& us);

}  // namespace qmom
