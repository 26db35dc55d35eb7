// SPDX-License-Identifier: Apache-2.0
#include "qmom/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <json.hpp>

#include "qmom/moments.hpp"

namespace qmom {

namespace {
// Guard absorbing rounding in the boundary evaluation; states on the
// separable boundary must not be flagged.
constexpr double kBoundaryGuard = 1e-9;

CriterionVerdict make(std::string id, double r2, double r4, int n, double margin,
                      std::vector<std::string> flags = {}) {
  CriterionVerdict v;
  v.criterion = std::move(id);
  v.r2 = r2;
  v.r4 = r4;
  v.n = n;
  v.margin = margin;
  v.verdict = margin > 0.0;
  v.flags = std::move(flags);
  return v;
}
}  // namespace

std::string CriterionVerdict::to_json() const {
  nlohmann::json j;
  j["criterion"] = criterion;
  j["inputs"]["R2"] = r2;
  if (!std::isnan(r4)) j["inputs"]["R4"] = r4;
  if (n > 0) j["inputs"]["N"] = n;
  j["margin"] = margin;
  j["verdict"] = verdict;
  j["flags"] = flags;
  return j.dump();
}

double w_class_chi(int n) {
  if (n < 2) throw std::invalid_argument("w_class_chi: N >= 2 required");
  return (5.0 - 4.0 / n) / std::pow(3.0, n);
}

double w_class_linear_slope(int n) {
  const double nn = n;
  return (-54.0 * nn * nn * nn * nn + 196.0 * nn * nn * nn - 114.0 * nn * nn -
          28.0 * nn + 24.0) /
         (27.0 * nn * nn * (nn - 1.0) * (nn - 1.0));
}

double w_class_linear_intercept(int n) {
  const double nn = n;
  return (353.0 * nn * nn * nn * nn - 1146.0 * nn * nn * nn + 829.0 * nn * nn +
          156.0 * nn - 216.0) /
         (27.0 * nn * nn * (nn - 1.0) * (nn - 1.0));
}

CriterionVerdict w_class_r2_bound(double r2, int n) {
  const double margin = r2 - w_class_chi(n);
  auto v = make("w-class-r2", r2, std::numeric_limits<double>::quiet_NaN(), n, margin);
  return v;
}

CriterionVerdict w_class_linear(double r2, double r4, int n) {
  if (n < 3) throw std::invalid_argument("w_class_linear: N >= 3 required");
  const double r2t = std::pow(3.0, n) * r2;
  const double r4t = std::pow(5.0, n) * r4;
  const double margin = r4t - w_class_linear_slope(n) * r2t - w_class_linear_intercept(n);
  return make("w-class-linear", r2, r4, n, margin);
}

CriterionVerdict three_qubit_bisep_conjecture(double r2, double r4) {
  const double bound = (972.0 * r2 * r2 + 90.0 * r2 - 5.0) / 425.0;
  return make("three-qubit-bisep", r2, r4, 3, bound - r4, {"conjectured"});
}

CriterionVerdict pure_bisep_fourth_moment_bound(double r2, double r4) {
  const double curve = (486.0 * r2 * r2 - 18.0 * r2 + 1.0) / 125.0;
  return make("pure-bisep-r4", r2, r4, 3, curve - r4,
              {"pure-state criterion", "curve from brute-force minimization over "
                                       "pure bi-separable states"});
}

double bell_diagonal_beta_min_separable(double alpha) {
  if (alpha < 0.0 || alpha > 1.0 + 1e-12)
    throw std::invalid_argument("bell_diagonal_beta_min_separable: alpha outside [0,1]");
  if (alpha <= 1.0 / 3.0) return alpha * alpha / 3.0;  // |c|_1 constraint inactive
  // On |c|_1 = 1 (WLOG c >= 0) the stationary points have at most two
  // distinct nonzero values: candidates (x,y,y) with x+2y=1 and (x,y,0)
  // with x+y=1, both solved from sum c_i^2 = alpha.
  double best = std::numeric_limits<double>::infinity();
  const double disc3 = 6.0 * alpha - 2.0;
  if (disc3 >= 0.0)
    for (double sgn : {1.0, -1.0}) {
      const double y = (2.0 + sgn * std::sqrt(disc3)) / 6.0;
      const double x = 1.0 - 2.0 * y;
      if (y >= -1e-12 && x >= -1e-12)
        best = std::min(best, x * x * x * x + 2.0 * y * y * y * y);
    }
  const double disc2 = 2.0 * alpha - 1.0;
  if (disc2 >= 0.0) {
    const double x = (1.0 + std::sqrt(disc2)) / 2.0;
    const double y = 1.0 - x;
    if (y >= -1e-12) best = std::min(best, x * x * x * x + y * y * y * y);
  }
  return best;
}

std::pair<double, double> bell_diagonal_beta_bounds(double alpha) {
  if (alpha < 0.0 || alpha > 3.0 + 1e-12)
    throw std::invalid_argument("bell_diagonal_beta_bounds: alpha outside [0,3]");
  const double lo = alpha * alpha / 3.0;
  const int full = static_cast<int>(std::floor(std::min(alpha, 3.0)));
  const double rem = alpha - full;
  const double hi = full + rem * rem;
  return {lo, hi};
}

std::pair<double, double> bell_diagonal_from_alpha_beta(double alpha, double beta) {
  const double r2 = alpha / 9.0;
  const double r4 = (beta + alpha * alpha / 2.0) * 6.0 / 225.0;
  return {r2, r4};
}

CriterionVerdict bell_diagonal_separability(double r2, double r4) {
  const double alpha = 9.0 * r2;
  const double beta = 225.0 * r4 / 6.0 - alpha * alpha / 2.0;
  double margin;
  if (alpha > 1.0) {
    margin = alpha - 1.0;
  } else {
    margin = bell_diagonal_beta_min_separable(alpha) - kBoundaryGuard - beta;
  }
  return make("bell-diagonal-separability", r2, r4, 2, margin);
}

GhzThresholds ghz_noise_thresholds(int n) {
  if (n < 3) throw std::invalid_argument("ghz_noise_thresholds: N >= 3 required");
  GhzThresholds th;
  const double nn = n;
  if (n % 2 == 1)
    th.p_star = 1.0 - std::pow(2.0, 0.5 - nn / 2.0) * std::sqrt(5.0 - 4.0 / nn);
  else
    th.p_star = 1.0 - std::sqrt(10.0 * nn - 8.0) / std::sqrt((std::pow(2.0, nn) + 2.0) * nn);
  th.p_tilde_star = (n == 3) ? 2.0 / 7.0
                             : std::pow(2.0, nn - 1.0) / (std::pow(2.0, nn) - 1.0);

  // Linear-criterion threshold: the margin of rho_GHZ(p) is monotone in p
  // (R2 and R4 scale as (1-p)^2 and (1-p)^4), so bisect on [0, 1].
  const double r2ghz = ghz_r2(n);
  const double r4ghz = ghz_r4(n);
  auto margin = [&](double p) {
    const double f = 1.0 - p;
    return w_class_linear(f * f * r2ghz, f * f * f * f * r4ghz, n).margin;
  };
  double lo = 0.0, hi = 1.0;
  if (margin(lo) <= 0.0) {
    th.p_star_linear = 0.0;
  } else {
    while (hi - lo > 1e-9) {
      const double mid = 0.5 * (lo + hi);
      (margin(mid) > 0.0 ? lo : hi) = mid;
    }
    th.p_star_linear = 0.5 * (lo + hi);
  }
  return th;
}

namespace {
// Euclidean projection onto {x >= 0, sum x = 1}.
void project_simplex(std::vector<double>& x) {
  std::vector<double> u = x;
  std::sort(u.begin(), u.end(), std::greater<>());
  double css = 0.0, theta = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    css += u[i];
    const double tt = (css - 1.0) / static_cast<double>(i + 1);
    if (u[i] - tt > 0.0) theta = tt;
  }
  for (auto& xi : x) xi = std::max(0.0, xi - theta);
}
}  // namespace

SimplexMaximum simplex_max_r2(int n, int zeros) {
  if (n < 2 || zeros < 0 || zeros > n - 1)
    throw std::invalid_argument("simplex_max_r2: need N >= 2, 0 <= k <= N-1");
  const int free_count = n - zeros;
  std::vector<double> x(free_count);
  // Deliberately asymmetric start so convergence to uniform is informative.
  double s = 0.0;
  for (int i = 0; i < free_count; ++i) s += (x[i] = 1.0 + 0.37 * i);
  for (auto& xi : x) xi /= s;

  const double step = 0.05;
  for (int it = 0; it < 20000; ++it) {
    const double total = std::accumulate(x.begin(), x.end(), 0.0);
    // d/dx_i of sum_{i<j} x_i x_j = total - x_i
    std::vector<double> next(free_count);
    double delta = 0.0;
    for (int i = 0; i < free_count; ++i) next[i] = x[i] + step * 8.0 * (total - x[i]);
    project_simplex(next);
    for (int i = 0; i < free_count; ++i) delta = std::max(delta, std::abs(next[i] - x[i]));
    x = std::move(next);
    if (delta < 1e-14) break;
  }

  SimplexMaximum out;
  out.x.assign(n, 0.0);
  std::copy(x.begin(), x.end(), out.x.begin() + zeros);
  out.value = w_standard_form_r2(out.x);
  return out;
}

}  // namespace qmom
