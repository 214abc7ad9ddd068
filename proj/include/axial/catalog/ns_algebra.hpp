#pragma once

#include <string>
#include <vector>

#include "axial/catalog/algebra.hpp"

namespace axial {

/// A Norton-Sakuma algebra nL on the basis a_0..a_{n-1} (residues mod n, with
/// a_{n-1} printed as a_{-1} etc.) followed by the extra vectors of its type.
struct NSAlgebra {
  std::string tag;
  int n = 0;
  std::vector<std::string> labels;
  std::vector<std::size_t> axes;  // every axis, a_i first, then a_rho / a_rho2 / a_rho3
  Algebra algebra;
  Matrix gram;
  /// The dihedral action on the basis: tau0 fixes a_0 (a_i -> a_-i), tau1 fixes
  /// a_1 (a_i -> a_{2-i}); extra vectors are fixed.
  Matrix tau0, tau1;

  [[nodiscard]] std::size_t dim() const { return labels.size(); }
  [[nodiscard]] std::size_t axis(int i) const;
  /// Basis index of a label; throws std::invalid_argument when unknown.
  [[nodiscard]] std::size_t index_of(const std::string& label) const;
  [[nodiscard]] SparseVec vec(const std::string& label) const;
  /// "1/8 a0 + 1/8 a1 - 1/8 a_rho" style rendering.
  [[nodiscard]] std::string render(const SparseVec& v) const;
};

/// 2A 2B 3A 3C 4A 4B 5A 6A.
const std::vector<std::string>& ns_tags();

/// Built once per tag from the printed products and forms by closing under
/// the symmetries of the n-gon; throws std::invalid_argument for an unknown tag
/// and std::logic_error if the data is inconsistent or incomplete.
const NSAlgebra& ns_algebra(const std::string& tag);

/// Number of axes in the pair type nL, i.e. n.
int ns_axis_count(const std::string& tag);

struct DihedralOrbits {
  std::size_t size_a0 = 0, size_a1 = 0;
  bool same_orbit = false;
  /// Equal sizes, in {1,3,5} when the orbits coincide and {1,2,3} otherwise.
  [[nodiscard]] bool satisfies_law() const;
};

/// Orbits of a_0 and a_1 under the group generated by their Miyamoto
/// involutions, computed from the involutions themselves.
DihedralOrbits dihedral_orbits(const NSAlgebra& alg);

struct CatalogReport {
  std::string tag;
  std::vector<std::pair<std::string, AxisReport>> axes;
  FormReport form;
  bool dihedral_invariant = false;
  [[nodiscard]] std::size_t defects() const;
};

CatalogReport verify_catalog(const NSAlgebra& alg);

}  // namespace axial
