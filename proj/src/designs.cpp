// SPDX-License-Identifier: Apache-2.0
#include "qmom/designs.hpp"

#include <cmath>
#include <fstream>

#include <json.hpp>

namespace qmom {

namespace {

bool same_point(const Vec3& a, const Vec3& b) { return (a - b).norm() < 1e-9; }

bool contains_point(const std::vector<Vec3>& pts, const Vec3& p) {
  for (const auto& q : pts)
    if (same_point(p, q)) return true;
  return false;
}

// Two unitaries are the same measurement iff |tr(U^dag V)| = 2.
bool same_up_to_phase(const Matrix2& a, const Matrix2& b) {
  return std::abs(std::abs((a.adjoint() * b).trace()) - 2.0) < 1e-9;
}

// The 24 proper rotations of the cube, generated by quarter turns about z and x.
std::vector<Eigen::Matrix3d> octahedral_rotations() {
  Eigen::Matrix3d rz, rx;
  rz << 0, -1, 0, 1, 0, 0, 0, 0, 1;
  rx << 1, 0, 0, 0, 0, -1, 0, 1, 0;
  std::vector<Eigen::Matrix3d> group{Eigen::Matrix3d::Identity()};
  std::vector<Eigen::Matrix3d> frontier = group;
  while (!frontier.empty()) {
    std::vector<Eigen::Matrix3d> fresh;
    for (const auto& f : frontier)
      for (const auto& g : {rz, rx}) {
        Eigen::Matrix3d p = f * g;
        auto known = [&](const std::vector<Eigen::Matrix3d>& v) {
          for (const auto& m : v)
            if ((m - p).cwiseAbs().maxCoeff() < 1e-9) return true;
          return false;
        };
        if (!known(group) && !known(fresh)) fresh.push_back(p);
      }
    group.insert(group.end(), fresh.begin(), fresh.end());
    frontier = std::move(fresh);
  }
  return group;
}

std::vector<Vec3> orbit(const Vec3& seed) {
  std::vector<Vec3> pts;
  for (const auto& r : octahedral_rotations()) {
    Vec3 q = r * seed;
    if (!contains_point(pts, q)) pts.push_back(q);
  }
  return pts;
}

// Generating point of the deformed snub cube 7-design. The orbit of a point
// (a,b,c) under the cube rotations averages every monomial of degree <= 7 to
// its sphere value iff the elementary symmetric functions of (a^2,b^2,c^2)
// are e1 = 1, e2 = 1/5, e3 = 1/105, i.e. the squares are the roots of
//   s^3 - s^2 + s/5 - 1/105 = 0.
Vec3 snub7_seed() {
  auto f = [](double s) { return ((s - 1.0) * s + 0.2) * s - 1.0 / 105.0; };
  auto df = [](double s) { return (3.0 * s - 2.0) * s + 0.2; };
  // One Newton run per root, bracketed by the sign pattern of f.
  std::array<double, 3> roots{};
  std::array<double, 3> guesses{0.75, 0.18, 0.07};
  for (int i = 0; i < 3; ++i) {
    double s = guesses[i];
    for (int it = 0; it < 60; ++it) s -= f(s) / df(s);
    roots[i] = s;
  }
  return Vec3(std::sqrt(roots[0]), std::sqrt(roots[1]), std::sqrt(roots[2]));
}

Vec3 regular_snub_seed() {
  // Tribonacci constant: t^3 = t^2 + t + 1.
  double t = 1.8;
  for (int it = 0; it < 60; ++it)
    t -= (((t - 1.0) * t - 1.0) * t - 1.0) / ((3.0 * t - 2.0) * t - 1.0);
  Vec3 p(1.0, 1.0 / t, t);
  return p / p.norm();
}

double dfact(int n) {
  double r = 1.0;
  for (; n > 1; n -= 2) r *= n;
  return r;
}

std::vector<Matrix2> close_group_phase_dedup(const std::vector<Matrix2>& gens,
                                             std::size_t limit) {
  std::vector<Matrix2> group{Matrix2::Identity()};
  std::vector<Matrix2> frontier = group;
  while (!frontier.empty()) {
    std::vector<Matrix2> fresh;
    for (const auto& f : frontier)
      for (const auto& g : gens) {
        Matrix2 p = f * g;
        auto known = [&](const std::vector<Matrix2>& v) {
          for (const auto& m : v)
            if (same_up_to_phase(m, p)) return true;
          return false;
        };
        if (!known(group) && !known(fresh)) fresh.push_back(p);
        if (group.size() + fresh.size() > limit)
          throw std::runtime_error("group closure exceeded expected order");
      }
    group.insert(group.end(), fresh.begin(), fresh.end());
    frontier = std::move(fresh);
  }
  return group;
}

}  // namespace

SphericalDesign builtin_spherical(const std::string& name) {
  SphericalDesign d;
  d.name = name;
  if (name == "octahedron") {
    d.strength = 3;
    for (int ax = 0; ax < 3; ++ax)
      for (double s : {1.0, -1.0}) {
        Vec3 p = Vec3::Zero();
        p(ax) = s;
        d.points.push_back(p);
      }
  } else if (name == "icosahedron") {
    d.strength = 5;
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    const double norm = std::sqrt(1.0 + phi * phi);
    for (double s1 : {1.0, -1.0})
      for (double s2 : {1.0, -1.0}) {
        Vec3 base(0.0, s1 / norm, s2 * phi / norm);
        for (int shift = 0; shift < 3; ++shift) {
          Vec3 p;
          for (int i = 0; i < 3; ++i) p((i + shift) % 3) = base(i);
          d.points.push_back(p);
        }
      }
  } else if (name == "icosidodecahedron") {
    d = spherical_from_unitary(sl2f5_design());
    d.name = name;
    d.strength = 5;
  } else if (name == "snub7") {
    d.strength = 7;
    d.points = orbit(snub7_seed());
  } else {
    throw std::invalid_argument("unknown spherical design: " + name);
  }
  return d;
}

SphericalDesign regular_snub_cube() {
  SphericalDesign d;
  d.name = "regular_snub_cube";
  d.strength = 3;
  d.points = orbit(regular_snub_seed());
  return d;
}

UnitaryDesign clifford_1q() {
  const Complex i(0.0, 1.0);
  Matrix2 h, s;
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  s << std::exp(i * (M_PI / 4.0)), 0, 0, std::exp(-i * (M_PI / 4.0));
  UnitaryDesign d;
  d.name = "clifford_1q";
  d.strength = 3;
  d.unitaries = close_group_phase_dedup({h, s}, 24);
  return d;
}

UnitaryDesign sl2f5_design() {
  const Complex i(0.0, 1.0);
  auto w = [&](int k) { return std::exp(i * (2.0 * M_PI * k / 15.0)); };
  Matrix2 g1, g2, g3, g4;
  g1 << -1, 0, 0, -1;
  g2 << -w(11) - w(14), w(6) + w(9),
      -w(1) - w(2) - w(4) - w(7) - w(8) - w(13), w(11) + w(14);
  g3 << w(10), w(11) + w(14), -w(2) - w(8), -w(10);
  // g4's last entry is -w^3 - w^12: the trace must be real (all SL(2,5)
  // character values are) and g4 must have order 10, otherwise the closure
  // below never terminates at 120.
  g4 << 0, w(5), -w(10), -w(3) - w(12);

  std::vector<Matrix2> gens{g1, g2, g3, g4};
  std::vector<Matrix2> group{Matrix2::Identity()};
  std::vector<Matrix2> frontier = group;
  while (!frontier.empty()) {
    std::vector<Matrix2> fresh;
    for (const auto& f : frontier)
      for (const auto& g : gens) {
        Matrix2 p = f * g;
        auto known = [&](const std::vector<Matrix2>& v) {
          for (const auto& m : v)
            if ((m - p).cwiseAbs().maxCoeff() < 1e-8) return true;
          return false;
        };
        if (!known(group) && !known(fresh)) fresh.push_back(p);
        if (group.size() + fresh.size() > 120)
          throw std::runtime_error(
              "SL(2,F5) closure exceeded order 120; generator transcription bug");
      }
    group.insert(group.end(), fresh.begin(), fresh.end());
    frontier = std::move(fresh);
  }
  if (group.size() != 120)
    throw std::runtime_error("SL(2,F5) closure stopped at order " +
                             std::to_string(group.size()));

  Matrix2 p = Matrix2::Zero();
  for (const auto& s : group) p += s.adjoint() * s;
  Eigen::SelfAdjointEigenSolver<Matrix2> es(p);
  const auto ev = es.eigenvalues();
  const Matrix2 v = es.eigenvectors();
  Matrix2 sqrtp = v * Eigen::Vector2d(ev.array().sqrt()).asDiagonal() * v.adjoint();
  Matrix2 isqrtp = v * Eigen::Vector2d(ev.array().rsqrt()).asDiagonal() * v.adjoint();

  UnitaryDesign d;
  d.name = "sl2f5";
  d.strength = 5;
  for (const auto& s : group) {
    Matrix2 u = sqrtp * s * isqrtp;
    bool dup = false;
    for (const auto& q : d.unitaries)
      if (same_up_to_phase(u, q)) {
        dup = true;
        break;
      }
    if (!dup) d.unitaries.push_back(u);
  }
  return d;
}

SphericalDesign spherical_from_unitary(const UnitaryDesign& ud) {
  SphericalDesign d;
  d.name = ud.name + "_bloch";
  d.strength = ud.strength;
  const Matrix2 sz = pauli(Axis::Z);
  for (const auto& u : ud.unitaries) {
    const Matrix2 s = u * sz * u.adjoint();
    Vec3 p((s * pauli(Axis::X)).trace().real() / 2.0,
           (s * pauli(Axis::Y)).trace().real() / 2.0,
           (s * pauli(Axis::Z)).trace().real() / 2.0);
    if (!contains_point(d.points, p)) d.points.push_back(p);
  }
  return d;
}

double verify_spherical(const std::vector<Vec3>& points, int t) {
  double residual = 0.0;
  for (int deg = 1; deg <= t; ++deg)
    for (int a = 0; a <= deg; ++a)
      for (int b = 0; b <= deg - a; ++b) {
        const int c = deg - a - b;
        double exact = 0.0;
        if (a % 2 == 0 && b % 2 == 0 && c % 2 == 0)
          exact = dfact(a - 1) * dfact(b - 1) * dfact(c - 1) / dfact(deg + 1);
        double avg = 0.0;
        for (const auto& p : points)
          avg += std::pow(p.x(), a) * std::pow(p.y(), b) * std::pow(p.z(), c);
        avg /= static_cast<double>(points.size());
        residual = std::max(residual, std::abs(avg - exact));
      }
  return residual;
}

double verify_unitary(const std::vector<Matrix2>& unitaries, int t) {
  const std::size_t k = unitaries.size();
  double sum = 0.0;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      const double x = std::abs((unitaries[a].adjoint() * unitaries[b]).trace());
      sum += std::pow(x, 2 * t);
    }
  return sum / (static_cast<double>(k) * static_cast<double>(k));
}

double catalan(int t) {
  double c = 1.0;
  for (int i = 0; i < t; ++i) c = c * 2.0 * (2 * i + 1) / (i + 2);
  return c;
}

bool is_antipodal(const std::vector<Vec3>& points) {
  for (const auto& p : points)
    if (!contains_point(points, -p)) return false;
  return true;
}

std::vector<Vec3> antipodal_representatives(const std::vector<Vec3>& points) {
  if (!is_antipodal(points))
    throw std::invalid_argument("antipodal_representatives: set is not antipodal");
  std::vector<Vec3> reps;
  for (const auto& p : points) {
    bool seen = false;
    for (const auto& r : reps)
      if (same_point(p, r) || same_point(p, Vec3(-r))) {
        seen = true;
        break;
      }
    if (!seen) reps.push_back(p);
  }
  return reps;
}

// --- JSON ----------------------------------------------------------------

void save_design(const SphericalDesign& d, const std::string& path) {
  nlohmann::json j;
  j["kind"] = "spherical";
  j["name"] = d.name;
  j["t"] = d.strength;
  auto& pts = j["points"] = nlohmann::json::array();
  for (const auto& p : d.points) pts.push_back({p.x(), p.y(), p.z()});
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

void save_design(const UnitaryDesign& d, const std::string& path) {
  nlohmann::json j;
  j["kind"] = "unitary";
  j["name"] = d.name;
  j["t"] = d.strength;
  auto& us = j["unitaries"] = nlohmann::json::array();
  for (const auto& u : d.unitaries) {
    nlohmann::json m = nlohmann::json::array();
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) m.push_back({u(r, c).real(), u(r, c).imag()});
    us.push_back(m);
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

namespace {
nlohmann::json read_json(const std::string& path, const std::string& kind) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  nlohmann::json j = nlohmann::json::parse(in);
  if (j.value("kind", "") != kind)
    throw std::runtime_error(path + ": expected kind \"" + kind + "\"");
  return j;
}
}  // namespace

SphericalDesign load_spherical_design(const std::string& path) {
  const auto j = read_json(path, "spherical");
  SphericalDesign d;
  d.name = j.value("name", "");
  d.strength = j.at("t").get<int>();
  for (const auto& p : j.at("points"))
    d.points.emplace_back(p.at(0).get<double>(), p.at(1).get<double>(),
                          p.at(2).get<double>());
  for (const auto& p : d.points)
    if (std::abs(p.norm() - 1.0) > 1e-9)
      throw DesignCertificationError(path + ": non-unit point");
  const double res = verify_spherical(d.points, d.strength);
  if (res > 1e-9)
    throw DesignCertificationError(path + ": residual " + std::to_string(res) +
                                   " at declared t=" + std::to_string(d.strength));
  return d;
}

UnitaryDesign load_unitary_design(const std::string& path) {
  const auto j = read_json(path, "unitary");
  UnitaryDesign d;
  d.name = j.value("name", "");
  d.strength = j.at("t").get<int>();
  for (const auto& m : j.at("unitaries")) {
    Matrix2 u;
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) {
        const auto& e = m.at(2 * r + c);
        u(r, c) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
      }
    if ((u.adjoint() * u - Matrix2::Identity()).cwiseAbs().maxCoeff() > 1e-10)
      throw DesignCertificationError(path + ": non-unitary element");
    d.unitaries.push_back(u);
  }
  const double fp = verify_unitary(d.unitaries, d.strength);
  if (std::abs(fp - catalan(d.strength)) > 1e-9)
    throw DesignCertificationError(path + ": frame potential " + std::to_string(fp) +
                                   " at declared t=" + std::to_string(d.strength));
  return d;
}

}  // namespace qmom
