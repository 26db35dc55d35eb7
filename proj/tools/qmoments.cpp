// SPDX-License-Identifier: Apache-2.0
//
// qmoments: moments of randomized multi-qubit correlation measurements and
// the entanglement criteria built on them. Data-emitting CLI, no plotting.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qmom/criteria.hpp"
#include "qmom/designs.hpp"
#include "qmom/moments.hpp"
#include "qmom/sampling.hpp"

using namespace qmom;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitCertification = 3;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

bool looks_numeric(const std::string& s) {
  if (s.empty()) return false;
  char* end = nullptr;
  std::strtod(s.c_str(), &end);
  return end && *end == '\0';
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }

  std::string to_csv() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < header.size(); ++i)
      os << header[i] << (i + 1 < header.size() ? "," : "\n");
    for (const auto& r : rows)
      for (std::size_t i = 0; i < r.size(); ++i)
        os << r[i] << (i + 1 < r.size() ? "," : "\n");
    return os.str();
  }

  std::string to_json() const {
    std::ostringstream os;
    os << "[\n";
    for (std::size_t ri = 0; ri < rows.size(); ++ri) {
      os << "  {";
      for (std::size_t i = 0; i < rows[ri].size(); ++i) {
        os << "\"" << header[i] << "\":";
        if (looks_numeric(rows[ri][i]))
          os << rows[ri][i];
        else
          os << "\"" << rows[ri][i] << "\"";
        if (i + 1 < rows[ri].size()) os << ",";
      }
      os << "}" << (ri + 1 < rows.size() ? "," : "") << "\n";
    }
    os << "]\n";
    return os.str();
  }
};

void emit(const Table& t, const std::string& out, const std::string& format) {
  const std::string payload = format == "json" ? t.to_json() : t.to_csv();
  if (out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(out, std::ios::binary | std::ios::trunc);
  if (!f) throw std::invalid_argument("cannot open output file: " + out);
  f << payload;
}

// ---- designs-verify ----------------------------------------------------

int run_designs_verify(const std::vector<std::string>& names, int tmax,
                       const std::string& design_file, const std::string& out,
                       const std::string& format) {
  Table t;
  t.header = {"name", "kind", "declared_t", "t", "statistic", "value", "pass"};
  bool certified = true;

  auto spherical_rows = [&](const std::string& name, const SphericalDesign& d) {
    const int upto = tmax > 0 ? tmax : d.strength + 1;
    for (int k = 1; k <= upto; ++k) {
      const double res = verify_spherical(d.points, k);
      const bool within = res < 1e-9;
      const bool claimed = k <= d.strength;
      if (claimed && !within) certified = false;
      t.add({name, "spherical", std::to_string(d.strength), std::to_string(k),
             "residual", fmt17(res),
             claimed ? (within ? "pass" : "FAIL") : (within ? "extra" : "n/a")});
    }
  };
  auto unitary_rows = [&](const std::string& name, const UnitaryDesign& d) {
    const int upto = tmax > 0 ? tmax : d.strength + 1;
    for (int k = 1; k <= upto; ++k) {
      const double fp = verify_unitary(d.unitaries, k);
      const bool within = std::abs(fp - catalan(k)) < 1e-9;
      const bool claimed = k <= d.strength;
      if (claimed && !within) certified = false;
      t.add({name, "unitary", std::to_string(d.strength), std::to_string(k),
             "frame_potential", fmt17(fp),
             claimed ? (within ? "pass" : "FAIL") : (within ? "extra" : "n/a")});
    }
  };

  if (!design_file.empty()) {
    // Throws DesignCertificationError on a bad file.
    try {
      spherical_rows(design_file, load_spherical_design(design_file));
    } catch (const DesignCertificationError&) {
      throw;
    } catch (const std::exception&) {
      unitary_rows(design_file, load_unitary_design(design_file));
    }
  }
  for (const auto& name : names) {
    if (name == "clifford")
      unitary_rows(name, clifford_1q());
    else if (name == "sl2f5")
      unitary_rows(name, sl2f5_design());
    else if (name == "regular_snub_cube")
      spherical_rows(name, regular_snub_cube());
    else
      spherical_rows(name, builtin_spherical(name));
  }

  emit(t, out, format);
  return certified ? 0 : kExitCertification;
}

// ---- histogram ---------------------------------------------------------

DensityMatrix parse_two_qubit_state(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  if (name == "product")
    return DensityMatrix::from_pure(product_state({Vec3(0, 0, 1), Vec3(0, 0, 1)}));
  if (name == "w_marginal") return w_marginal();
  if (name == "werner") {
    double q = 1.0 / std::sqrt(3.0);
    if (colon != std::string::npos) q = std::stod(spec.substr(colon + 1));
    return werner(q);
  }
  if (name == "bell") return DensityMatrix::from_pure(bell_state());
  if (name == "mixed") return maximally_mixed(2);
  throw std::invalid_argument("unknown state spec: " + spec);
}

int run_histogram(const std::string& state, std::uint64_t samples, std::uint64_t seed,
                  const std::string& out, const std::string& format) {
  const auto rho = parse_two_qubit_state(state);
  const CorrelationTensor ct(rho);
  SeededRng rng(seed);

  Table t;
  t.header = {"kind", "index", "value"};
  double s2 = 0.0, s4 = 0.0, s4sq = 0.0, s2sq = 0.0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const double e = ct.expect({rng.unit_vector(), rng.unit_vector()});
    const double e2 = e * e, e4 = e2 * e2;
    s2 += e2;
    s4 += e4;
    s2sq += e2 * e2;
    s4sq += e4 * e4;
    t.add({"E", std::to_string(i), fmt17(e)});
  }
  const double n = static_cast<double>(samples);
  const double r2 = s2 / n, r4 = s4 / n;
  const double se2 = samples > 1 ? std::sqrt(std::max(0.0, s2sq / n - r2 * r2) / (n - 1)) : 0.0;
  const double se4 = samples > 1 ? std::sqrt(std::max(0.0, s4sq / n - r4 * r4) / (n - 1)) : 0.0;
  t.add({"r2_empirical", "", fmt17(r2)});
  t.add({"r2_stderr", "", fmt17(se2)});
  t.add({"r4_empirical", "", fmt17(r4)});
  t.add({"r4_stderr", "", fmt17(se4)});
  emit(t, out, format);
  return 0;
}

// ---- scan --------------------------------------------------------------

struct ClassSpec {
  PureClass cls;
  bool mixed = false;
  bool hs = false;
};

ClassSpec parse_class(const std::string& s) {
  if (s == "hs") return {PureClass::Generic, false, true};
  std::string base = s;
  bool mixed = false;
  if (const auto pos = s.rfind("-mixed"); pos != std::string::npos && pos + 6 == s.size()) {
    base = s.substr(0, pos);
    mixed = true;
  }
  if (base == "separable") return {PureClass::Separable, mixed, false};
  if (base == "bisep") return {PureClass::Bisep, mixed, false};
  if (base == "w") return {PureClass::WClass, mixed, false};
  if (base == "generic") return {PureClass::Generic, mixed, false};
  throw std::invalid_argument("unknown class: " + s);
}

void add_landmarks(Table& t, int n, const SphericalDesign& ico) {
  auto row = [&](const std::string& label, double r2, double r4) {
    t.add({label, std::to_string(n), fmt17(r2), fmt17(r4), ""});
  };
  const auto moments_of = [&](const DensityMatrix& rho) {
    return std::pair{moment_design(rho, 2, ico).value, moment_design(rho, 4, ico).value};
  };
  row("landmark_mixed", 0.0, 0.0);
  row("landmark_product", std::pow(3.0, -n), std::pow(5.0, -n));
  const auto [w2, w4] = w_state_moments(n);
  row("landmark_w", w2, w4);
  row("landmark_ghz", ghz_r2(n), ghz_r4(n));
  if (n == 3) {
    row("landmark_qubit_bell", 1.0 / 9.0, 1.0 / 25.0);
    // equal mixture of the three cut-aligned |0> x Bell states
    Matrix acc = Matrix::Zero(8, 8);
    for (int cut = 0; cut < 3; ++cut) {
      Vector v = Vector::Zero(8);
      const int a = (cut + 1) % 3, b = (cut + 2) % 3;
      v(0) = 1.0 / std::sqrt(2.0);
      v((1 << (2 - a)) | (1 << (2 - b))) = 1.0 / std::sqrt(2.0);
      acc += PureState(3, v).density() / 3.0;
    }
    const auto [m2, m4] = moments_of(DensityMatrix(3, acc));
    row("landmark_bisep_mixture", m2, m4);
  }
  if (n == 4) {
    row("landmark_bell_bell", 1.0 / 9.0, 1.0 / 25.0);
    row("landmark_qubit_ghz3", ghz_r2(3) / 3.0, ghz_r4(3) / 5.0);
    row("landmark_qubit_w3", w_state_moments(3).first / 3.0,
        w_state_moments(3).second / 5.0);
  }
}

int run_scan(const std::string& cls_name, int n, std::uint64_t samples,
             std::uint64_t seed, int terms, const std::string& out,
             const std::string& format) {
  const auto spec = parse_class(cls_name);
  const auto ico = builtin_spherical("icosahedron");
  Table t;
  t.header = {"class", "N", "R2", "R4", "seed"};
  SeededRng root(seed);
  for (std::uint64_t i = 0; i < samples; ++i) {
    SeededRng rng = root.derive(i);
    DensityMatrix rho;
    if (spec.hs)
      rho = random_density_hs(n, rng);
    else if (spec.mixed)
      rho = sample_mixed_class(spec.cls, n, terms, rng);
    else
      rho = DensityMatrix::from_pure(sample_pure_class(spec.cls, n, rng));
    const double r2 = moment_design(rho, 2, ico).value;
    const double r4 = moment_design(rho, 4, ico).value;
    t.add({cls_name, std::to_string(n), fmt17(r2), fmt17(r4), std::to_string(seed)});
  }
  add_landmarks(t, n, ico);
  emit(t, out, format);
  return 0;
}

// ---- thresholds --------------------------------------------------------

int run_thresholds(int nmax, const std::string& out, const std::string& format) {
  if (nmax < 3) throw std::invalid_argument("--nmax must be >= 3");
  Table t;
  t.header = {"N", "p_star", "p_star_linear", "p_tilde_star"};
  for (int n = 3; n <= nmax; ++n) {
    const auto th = ghz_noise_thresholds(n);
    t.add({std::to_string(n), fmt17(th.p_star), fmt17(th.p_star_linear),
           fmt17(th.p_tilde_star)});
  }
  emit(t, out, format);
  return 0;
}

// ---- boundary ----------------------------------------------------------

int run_boundary(const std::string& family, std::uint64_t points,
                 const std::string& out, const std::string& format) {
  Table t;
  t.header = {"curve", "R2", "R4"};
  const std::uint64_t m = points < 2 ? 2 : points;
  if (family == "bell_diagonal") {
    for (std::uint64_t i = 0; i < m; ++i) {
      const double alpha = 3.0 * static_cast<double>(i) / static_cast<double>(m - 1);
      const auto [lo, hi] = bell_diagonal_beta_bounds(alpha);
      const auto plo = bell_diagonal_from_alpha_beta(alpha, lo);
      const auto phi = bell_diagonal_from_alpha_beta(alpha, hi);
      t.add({"full_min", fmt17(plo.first), fmt17(plo.second)});
      t.add({"full_max", fmt17(phi.first), fmt17(phi.second)});
      if (alpha <= 1.0) {
        const auto ps =
            bell_diagonal_from_alpha_beta(alpha, bell_diagonal_beta_min_separable(alpha));
        const auto px = bell_diagonal_from_alpha_beta(alpha, alpha * alpha);
        t.add({"separable_min", fmt17(ps.first), fmt17(ps.second)});
        t.add({"separable_max", fmt17(px.first), fmt17(px.second)});
      }
    }
    // below this R2 the separable band covers the full set
    t.add({"marker_full_coverage_r2", fmt17(1.0 / 27.0), ""});
    t.add({"marker_bell_corner", fmt17(1.0 / 3.0), fmt17(1.0 / 5.0)});
  } else if (family == "three_qubit_bisep") {
    for (std::uint64_t i = 0; i < m; ++i) {
      const double r2 = (4.0 / 27.0) * static_cast<double>(i) / static_cast<double>(m - 1);
      t.add({"conjectured_bisep_floor", fmt17(r2),
             fmt17((972.0 * r2 * r2 + 90.0 * r2 - 5.0) / 425.0)});
      if (r2 >= 1.0 / 27.0 && r2 <= 1.0 / 9.0)
        t.add({"pure_bisep_curve", fmt17(r2),
               fmt17((486.0 * r2 * r2 - 18.0 * r2 + 1.0) / 125.0)});
    }
    t.add({"marker_qubit_bell", fmt17(1.0 / 9.0), fmt17(1.0 / 25.0)});
  } else {
    throw std::invalid_argument("unknown family: " + family);
  }
  emit(t, out, format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"moments of randomized multi-qubit correlations"};
  app.require_subcommand(1);

  std::string out, format = "csv";
  const auto add_io = [&](CLI::App* sub) {
    sub->add_option("--out", out, "output file (default: stdout)");
    sub->add_option("--format", format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
  };

  // designs-verify
  auto* dv = app.add_subcommand("designs-verify", "certify built-in or file designs");
  std::vector<std::string> names{"octahedron", "icosahedron", "icosidodecahedron",
                                 "snub7", "regular_snub_cube", "clifford", "sl2f5"};
  int tmax = 0;
  std::string design_file;
  dv->add_option("--names", names, "design names to verify");
  dv->add_option("--tmax", tmax, "verify t = 1..tmax (default: strength + 1)");
  dv->add_option("--design", design_file, "JSON design file to verify");
  add_io(dv);

  // histogram
  auto* hg = app.add_subcommand("histogram", "sampled correlation values for a 2-qubit state");
  std::string state = "product";
  std::uint64_t samples = 10000, seed = 0;
  hg->add_option("--state", state, "product|w_marginal|werner[:q]|bell|mixed");
  hg->add_option("--samples", samples, "number of direction pairs");
  hg->add_option("--seed", seed, "RNG seed")->required();
  add_io(hg);

  // scan
  auto* sc = app.add_subcommand("scan", "moment-plane scan of a state class");
  std::string cls = "w";
  int n = 3, terms = 0;
  sc->add_option("--class", cls,
                 "separable|bisep|w|generic[-mixed]|hs");
  sc->add_option("--n", n, "number of qubits")->check(CLI::Range(2, 8));
  sc->add_option("--samples", samples, "number of sampled states");
  sc->add_option("--terms", terms, "mixture terms (0 = 2^N default)");
  sc->add_option("--seed", seed, "RNG seed")->required();
  add_io(sc);

  // thresholds
  auto* th = app.add_subcommand("thresholds", "GHZ depolarizing-noise detection thresholds");
  int nmax = 10;
  th->add_option("--nmax", nmax, "largest N");
  add_io(th);

  // boundary
  auto* bd = app.add_subcommand("boundary", "criterion boundary curves in the moment plane");
  std::string family = "bell_diagonal";
  std::uint64_t points = 200;
  bd->add_option("--family", family, "bell_diagonal|three_qubit_bisep");
  bd->add_option("--samples", points, "points per curve");
  add_io(bd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (dv->parsed())
      return run_designs_verify(names, tmax, design_file, out, format);
    if (hg->parsed()) return run_histogram(state, samples, seed, out, format);
    if (sc->parsed()) return run_scan(cls, n, samples, seed, terms, out, format);
    if (th->parsed()) return run_thresholds(nmax, out, format);
    if (bd->parsed()) return run_boundary(family, points, out, format);
  } catch (const DesignCertificationError& e) {
    std::cerr << "certification failure: " << e.what() << "\n";
    return kExitCertification;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitValidation;
}
