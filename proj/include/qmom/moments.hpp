// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "qmom/core.hpp"
#include "qmom/designs.hpp"

namespace qmom {

enum class MomentMethod { DesignSum, MonteCarlo, ClosedForm };

struct MomentRecord {
  int order = 0;
  double value = 0.0;
  MomentMethod method = MomentMethod::DesignSum;
  std::string detail;          // design name or closed-form tag
  std::uint64_t samples = 0;   // Monte Carlo only
  std::uint64_t seed = 0;      // Monte Carlo only
  double std_error = 0.0;      // Monte Carlo only

  std::string to_json() const;
};

/// Exact moment R^(t) = (1/L^N) sum over all direction tuples of E(...)^t.
/// Requires design.strength >= t. For even t on an antipodal design the sum
/// runs over L/2 representatives (each tuple then stands for 2^N sign
/// choices of equal contribution). Orders t >= 6 are refused for N > 4
/// unless allow_large is set (the tuple count is 24^N).
MomentRecord moment_design(const DensityMatrix& rho, int t, const SphericalDesign& design,
                           bool allow_large = false);

/// Unbiased Haar estimate of R^(t) from uniformly random unit directions,
/// with standard error of the mean. Deterministic given the seed.
MomentRecord moment_monte_carlo(const DensityMatrix& rho, int t,
                                std::uint64_t samples, std::uint64_t seed);

/// Moment via a single-qubit unitary t-design, averaging
/// <x U sigma_z U^dag> over all unitary tuples. Cross-check path for the
/// spherical sums; the Bloch images of the unitaries are used without
/// deduplication so multiplicities cancel in the normalization.
MomentRecord moment_unitary_design(const DensityMatrix& rho, int t,
                                   const UnitaryDesign& design);

/// Closed forms for Bell-diagonal states:
///   R2 = (cx^2+cy^2+cz^2)/9,  R4 = (2/75)(cx^4+cy^4+cz^4) + (27/25) R2^2.
std::pair<double, double> bell_diagonal_moments(double cx, double cy, double cz);

/// R^(2) of the W-class standard form, x = (x1..xN) with x >= 0,
/// sum <= 1 (x0 implicit): (1/3^N) [1 + 8 sum_{i<j} x_i x_j].
double w_standard_form_r2(const std::vector<double>& x);

/// R^(4) of the same standard form (quartic polynomial in x, divided by 5^N).
double w_standard_form_r4(const std::vector<double>& x);

/// (R2, R4) of |W_N>: R2 = (5 - 4/N)/3^N,
/// R4 = (83N^3 + 216N^2 - 176N - 96) / (27 N^3 5^N).
std::pair<double, double> w_state_moments(int n);

/// R^(2) of |GHZ_N>: 2^{N-1}/3^N for odd N, (2^{N-1}+1)/3^N for even N.
double ghz_r2(int n);

/// R^(4) of |GHZ_N> for any N, via the per-qubit factorization of the GHZ
/// correlation function over the 12-point 5-design (cost independent of N).
double ghz_r4(int n);

/// R^(2) of p/2^N + (1-p)|GHZ_N><GHZ_N| = (1-p)^2 ghz_r2(N).
double noisy_ghz_r2(double p, int n);

}  // namespace qmom
