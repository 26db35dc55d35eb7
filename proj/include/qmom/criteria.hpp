// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "qmom/core.hpp"

namespace qmom {

struct CriterionVerdict {
  std::string criterion;
  double r2 = 0.0;
  double r4 = 0.0;   // NaN when the criterion only uses R2
  int n = 0;         // 0 when not applicable
  double margin = 0.0;  // positive = criterion violated / state detected
  bool verdict = false;
  std::vector<std::string> flags;

  std::string to_json() const;
};

/// W-class second-moment ceiling chi^(N) = (5 - 4/N)/3^N.
double w_class_chi(int n);

/// Slope and intercept of the line through |W_N> and |phi>|W_{N-1}> in the
/// rescaled plane (3^N R2, 5^N R4).
double w_class_linear_slope(int n);
double w_class_linear_intercept(int n);

/// Detects R2 > chi^(N); positive margin means the state cannot lie in the
/// mixed W-class.
CriterionVerdict w_class_r2_bound(double r2, int n);

/// Linear criterion margin 5^N R4 - m 3^N R2 - b; positive means outside the
/// mixed W-class. Zero (to rounding) at |W_N> and |phi>|W_{N-1}>.
CriterionVerdict w_class_linear(double r2, double r4, int n);

/// Conjectured three-qubit bound: bi-separable mixed states satisfy
/// R4 >= [972 R2^2 + 90 R2 - 5]/425. Positive margin is evidence of genuine
/// multipartite entanglement; the verdict carries a "conjectured" flag.
CriterionVerdict three_qubit_bisep_conjecture(double r2, double r4);

/// Pure bi-separable three-qubit states lie exactly on
/// R4 = (486 R2^2 - 18 R2 + 1)/125 (single Schmidt parameter after LU
/// reduction); a positive margin means R4 below that curve. Pure-state
/// criterion only.
CriterionVerdict pure_bisep_fourth_moment_bound(double r2, double r4);

/// Bell-diagonal separability from (R2, R4) via alpha = 9 R2,
/// beta = 225 R4/6 - alpha^2/2: entangled when alpha > 1 or beta drops below
/// the minimum attainable with |c|_1 <= 1.
CriterionVerdict bell_diagonal_separability(double r2, double r4);

/// Minimum of c_x^4+c_y^4+c_z^4 over |c|_1 <= 1 at fixed alpha = sum c_i^2.
/// Defined for alpha in [0, 1].
double bell_diagonal_beta_min_separable(double alpha);

/// Min/max of sum c_i^4 over all Bell-diagonal c (|c_i| <= 1) at fixed alpha,
/// alpha in [0, 3].
std::pair<double, double> bell_diagonal_beta_bounds(double alpha);

/// Map (alpha, beta) back to (R2, R4).
std::pair<double, double> bell_diagonal_from_alpha_beta(double alpha, double beta);

struct GhzThresholds {
  double p_star = 0.0;         // R2 <= chi^(N) criterion
  double p_star_linear = 0.0;  // linear (R2, R4) criterion, by bisection
  double p_tilde_star = 0.0;   // GHZ projector witness
};

/// Noise thresholds up to which p I/2^N + (1-p)|GHZ_N><GHZ_N| is detected.
GhzThresholds ghz_noise_thresholds(int n);

struct SimplexMaximum {
  std::vector<double> x;  // N entries, k of them zero
  double value = 0.0;
};

/// Maximize the W-standard-form R2 over {x >= 0, sum x = 1} with the first k
/// coordinates pinned to zero, by projected gradient ascent. The optimum is
/// uniform 1/(N-k) with value (5 - 4/(N-k))/3^N.
SimplexMaximum simplex_max_r2(int n, int zeros);

}  // namespace qmom
