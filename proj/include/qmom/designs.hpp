// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "qmom/core.hpp"

namespace qmom {

struct SphericalDesign {
  int strength = 0;
  std::string name;
  std::vector<Vec3> points;
};

struct UnitaryDesign {
  int strength = 0;
  std::string name;
  std::vector<Matrix2> unitaries;
};

/// Built-in spherical designs: octahedron (t=3, 6 pts), icosahedron (t=5, 12),
/// icosidodecahedron (t=5, 30), snub7 (t=7, 24). Throws on unknown name.
SphericalDesign builtin_spherical(const std::string& name);

/// The regular (undeformed) snub cube, 24 vertices. Only a 3-design;
/// kept for comparison with snub7.
SphericalDesign regular_snub_cube();

/// Single-qubit Clifford group, 24 phase-classes generated from H and S.
/// A unitary 3-design.
UnitaryDesign clifford_1q();

/// 60-element unitary 5-design from the 2-dimensional unitary representation
/// of SL(2,F5): close the four generators to the 120 group elements, unitarize
/// via P = sum S_k^dag S_k, then drop global-phase duplicates.
UnitaryDesign sl2f5_design();

/// Bloch vectors of U sigma_z U^dag for each element, deduplicated.
SphericalDesign spherical_from_unitary(const UnitaryDesign& ud);

/// Max over monomials x^a y^b z^c, a+b+c <= t, of |point average - sphere
/// average|. The sphere average is (a-1)!!(b-1)!!(c-1)!!/(a+b+c+1)!! for all
/// exponents even, else 0.
double verify_spherical(const std::vector<Vec3>& points, int t);

/// Frame potential (1/K^2) sum_{j,k} |tr(U_j^dag U_k)|^{2t}. Equals the
/// Catalan number C_t iff the set is a unitary t-design on U(2).
double verify_unitary(const std::vector<Matrix2>& unitaries, int t);

/// Catalan number C_t = Haar value of the frame potential for U(2).
double catalan(int t);

/// True if every point has its antipode in the set (tolerance 1e-9).
bool is_antipodal(const std::vector<Vec3>& points);

/// One point per antipodal pair. Throws if the set is not antipodal.
std::vector<Vec3> antipodal_representatives(const std::vector<Vec3>& points);

// JSON design files:
//   {"kind":"spherical","name":...,"t":...,"points":[[x,y,z],...]}
//   {"kind":"unitary","name":...,"t":...,"unitaries":[[[re,im] x4],...]}
// Loading re-verifies at the declared strength and throws
// DesignCertificationError if the residual exceeds 1e-9 (spherical) or the
// frame potential deviates from C_t by more than 1e-9 (unitary).
struct DesignCertificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void save_design(const SphericalDesign& d, const std::string& path);
void save_design(const UnitaryDesign& d, const std::string& path);
SphericalDesign load_spherical_design(const std::string& path);
UnitaryDesign load_unitary_design(const std::string& path);

}  // namespace qmom
