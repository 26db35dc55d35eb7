// SPDX-License-Identifier: Apache-2.0
#include "qmom/moments.hpp"

#include <cmath>
#include <numeric>
#include <random>

#include <json.hpp>

namespace qmom {

namespace {

// All values E(u_{k_1},...,u_{k_N}) for every tuple of points, as a flat
// array with k_1 the major index. Computed by contracting one tensor axis
// at a time, so the cost is O(L^N) rather than O(L^N 3^N).
std::vector<double> all_correlations(const CorrelationTensor& ct,
                                     const std::vector<Vec3>& points) {
  const int n = ct.num_qubits();
  const std::size_t m = points.size();
  std::vector<double> buf = ct.values();
  std::size_t lead = 1;          // product of already-contracted axes (m each)
  std::size_t tail = buf.size(); // product of remaining axes (3 each)
  for (int axis = 0; axis < n; ++axis) {
    tail /= 3;
    std::vector<double> next(lead * m * tail);
    for (std::size_t a = 0; a < lead; ++a)
      for (std::size_t k = 0; k < m; ++k) {
        const Vec3& u = points[k];
        const double* src = buf.data() + a * 3 * tail;
        double* dst = next.data() + (a * m + k) * tail;
        for (std::size_t r = 0; r < tail; ++r)
          dst[r] = src[r] * u.x() + src[tail + r] * u.y() + src[2 * tail + r] * u.z();
      }
    buf = std::move(next);
    lead *= m;
  }
  return buf;
}

double power_sum_mean(const std::vector<double>& vals, int t) {
  double sum = 0.0;
  for (double e : vals) sum += std::pow(e, t);
  return sum / static_cast<double>(vals.size());
}

double u01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Vec3 uniform_sphere(std::mt19937_64& rng) {
  const double z = 2.0 * u01(rng) - 1.0;
  const double phi = 2.0 * M_PI * u01(rng);
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  return Vec3(r * std::cos(phi), r * std::sin(phi), z);
}

double binom(int n, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

std::string MomentRecord::to_json() const {
  nlohmann::json j;
  j["order"] = order;
  j["value"] = value;
  switch (method) {
    case MomentMethod::DesignSum: j["method"] = "design-sum"; break;
    case MomentMethod::MonteCarlo: j["method"] = "monte-carlo"; break;
    case MomentMethod::ClosedForm: j["method"] = "closed-form"; break;
  }
  if (method == MomentMethod::MonteCarlo) {
    j["detail"] = {{"samples", samples}, {"seed", seed}, {"std_error", std_error}};
  } else {
    j["detail"] = detail;
  }
  return j.dump();
}

MomentRecord moment_design(const DensityMatrix& rho, int t, const SphericalDesign& design,
                           bool allow_large) {
  if (t < 1) throw std::invalid_argument("moment_design: t must be positive");
  if (design.strength < t)
    throw std::invalid_argument("moment_design: design strength " +
                                std::to_string(design.strength) + " < t=" + std::to_string(t));
  if (t >= 6 && rho.num_qubits > 4 && !allow_large)
    throw std::invalid_argument("moment_design: t>=6 capped at N<=4 by default");
  const CorrelationTensor ct(rho);
  std::vector<Vec3> pts = design.points;
  if (t % 2 == 0 && is_antipodal(pts)) pts = antipodal_representatives(pts);
  MomentRecord rec;
  rec.order = t;
  rec.method = MomentMethod::DesignSum;
  rec.detail = design.name;
  rec.value = power_sum_mean(all_correlations(ct, pts), t);
  return rec;
}

MomentRecord moment_monte_carlo(const DensityMatrix& rho, int t,
                                std::uint64_t samples, std::uint64_t seed) {
  if (samples < 100) throw std::invalid_argument("moment_monte_carlo: samples < 100");
  const CorrelationTensor ct(rho);
  std::mt19937_64 rng(seed);
  const int n = rho.num_qubits;
  std::vector<Vec3> dirs(n);
  double sum = 0.0, sumsq = 0.0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    for (int k = 0; k < n; ++k) dirs[k] = uniform_sphere(rng);
    const double v = std::pow(ct.expect(dirs), t);
    sum += v;
    sumsq += v * v;
  }
  const double mean = sum / static_cast<double>(samples);
  const double var = std::max(0.0, sumsq / static_cast<double>(samples) - mean * mean);
  MomentRecord rec;
  rec.order = t;
  rec.method = MomentMethod::MonteCarlo;
  rec.value = mean;
  rec.samples = samples;
  rec.seed = seed;
  rec.std_error = std::sqrt(var / static_cast<double>(samples));
  return rec;
}

MomentRecord moment_unitary_design(const DensityMatrix& rho, int t,
                                   const UnitaryDesign& design) {
  if (design.strength < t)
    throw std::invalid_argument("moment_unitary_design: design strength < t");
  const Matrix2 sz = pauli(Axis::Z);
  std::vector<Vec3> pts;
  pts.reserve(design.unitaries.size());
  for (const auto& u : design.unitaries) {
    const Matrix2 s = u * sz * u.adjoint();
    pts.emplace_back((s * pauli(Axis::X)).trace().real() / 2.0,
                     (s * pauli(Axis::Y)).trace().real() / 2.0,
                     (s * pauli(Axis::Z)).trace().real() / 2.0);
  }
  const CorrelationTensor ct(rho);
  MomentRecord rec;
  rec.order = t;
  rec.method = MomentMethod::DesignSum;
  rec.detail = design.name;
  rec.value = power_sum_mean(all_correlations(ct, pts), t);
  return rec;
}

std::pair<double, double> bell_diagonal_moments(double cx, double cy, double cz) {
  for (double c : {cx, cy, cz})
    if (std::abs(c) > 1.0 + 1e-12)
      throw std::invalid_argument("bell_diagonal_moments: |c_i| > 1");
  const double r2 = (cx * cx + cy * cy + cz * cz) / 9.0;
  const double q4 = cx * cx * cx * cx + cy * cy * cy * cy + cz * cz * cz * cz;
  const double r4 = 2.0 / 75.0 * q4 + 27.0 / 25.0 * r2 * r2;
  return {r2, r4};
}

namespace {
void check_simplex(const std::vector<double>& x) {
  double sum = 0.0;
  for (double xi : x) {
    if (xi < -1e-12) throw std::invalid_argument("w standard form: negative weight");
    sum += xi;
  }
  if (sum > 1.0 + 1e-9) throw std::invalid_argument("w standard form: sum x_i > 1");
}
}  // namespace

double w_standard_form_r2(const std::vector<double>& x) {
  check_simplex(x);
  const int n = static_cast<int>(x.size());
  double s2 = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) s2 += x[i] * x[j];
  return (1.0 + 8.0 * s2) / std::pow(3.0, n);
}

double w_standard_form_r4(const std::vector<double>& x) {
  check_simplex(x);
  const int n = static_cast<int>(x.size());
  double s2 = 0.0, s22 = 0.0, s3 = 0.0, s211 = 0.0, s4 = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      s2 += x[i] * x[j];
      s22 += x[i] * x[i] * x[j] * x[j];
      for (int k = j + 1; k < n; ++k) {
        s3 += x[i] * x[j] * x[k];
        for (int l = k + 1; l < n; ++l) s4 += x[i] * x[j] * x[k] * x[l];
      }
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (i != j && i != k) s211 += x[i] * x[i] * x[j] * x[k];
  const double r4t = 1.0 + 16.0 / 3.0 * s2 + 128.0 / 3.0 * s22 - 448.0 / 9.0 * s3 +
                     64.0 * s211 + 1664.0 / 9.0 * s4;
  return r4t / std::pow(5.0, n);
}

std::pair<double, double> w_state_moments(int n) {
  if (n < 2) throw std::invalid_argument("w_state_moments: N >= 2 required");
  const double nn = n;
  const double r2 = (5.0 - 4.0 / nn) / std::pow(3.0, n);
  const double r4 = (83.0 * nn * nn * nn + 216.0 * nn * nn - 176.0 * nn - 96.0) /
                    (27.0 * nn * nn * nn * std::pow(5.0, n));
  return {r2, r4};
}

double ghz_r2(int n) {
  if (n < 2) throw std::invalid_argument("ghz_r2: N >= 2 required");
  const double base = std::pow(2.0, n - 1);
  return (n % 2 == 0 ? base + 1.0 : base) / std::pow(3.0, n);
}

double ghz_r4(int n) {
  if (n < 2) throw std::invalid_argument("ghz_r4: N >= 2 required");
  // E_GHZ(u_1..u_N) = [N even] prod z_k + Re prod (x_k - i y_k), so E^4
  // averaged over a product design factorizes into per-qubit averages
  // m(j,r,s) = <z^j w^r conj(w)^s> of total degree 4, taken over any
  // 4-design; the icosahedron suffices.
  const auto icosa = builtin_spherical("icosahedron");
  auto m = [&](int j, int r, int s) {
    Complex acc = 0.0;
    for (const auto& p : icosa.points) {
      const Complex w(p.x(), -p.y());
      acc += std::pow(p.z(), j) * std::pow(w, r) * std::pow(std::conj(w), s);
    }
    return acc / static_cast<double>(icosa.points.size());
  };
  const bool even = (n % 2 == 0);
  Complex total = 0.0;
  for (int j = 0; j <= 4; ++j) {
    if (j > 0 && !even) continue;  // the prod-z term is absent for odd N
    Complex inner = 0.0;
    for (int r = 0; r <= 4 - j; ++r)
      inner += binom(4 - j, r) * std::pow(m(j, r, 4 - j - r), n);
    total += binom(4, j) * std::pow(2.0, j - 4) * inner;
  }
  return total.real();
}

double noisy_ghz_r2(double p, int n) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("noisy_ghz_r2: p outside [0,1]");
  return (1.0 - p) * (1.0 - p) * ghz_r2(n);
}

}  // namespace qmom
