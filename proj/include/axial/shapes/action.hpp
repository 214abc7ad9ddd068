#pragma once

#include <optional>
#include <string>
#include <vector>

#include "axial/permgrp/element_table.hpp"
#include "axial/permgrp/perm_group.hpp"

namespace axial {

/// A group acting faithfully on a set of axes X = {0..|X|-1}, with a tau-map.
/// tau[x] is a permutation of X lying in the group.
struct AxisAction {
  std::string name;
  PermGroup group;
  std::vector<Perm> tau;

  [[nodiscard]] std::size_t size() const { return tau.size(); }
  [[nodiscard]] std::vector<std::vector<Point>> orbits() const { return group.orbits(); }
  /// "1+2+2" style orbit lengths, ascending.
  [[nodiscard]] std::string orbit_sizes() const;
};

/// One orbit of a coset construction: the axis with Miyamoto involution `tau`
/// and point stabilizer generated by `stabilizer` (tau is added).
struct OrbitSpec {
  Perm tau;
  std::vector<Perm> stabilizer;
};

/// G acting on the disjoint union of the coset spaces G/G_d, with tau values
/// tau_d^g on the coset G_d g. Throws std::invalid_argument when some tau is
/// not central in its stabilizer or the action is not faithful.
AxisAction coset_action(const PermGroup& g, const std::vector<OrbitSpec>& orbits, std::string name = {});

/// The tau-map axioms: involution or identity, in the group, equivariant.
bool is_tau_map(const AxisAction& act);

/// X_{a,b} = a^D u b^D with D = <tau_a, tau_b>, sorted.
std::vector<Point> dihedral_closure(const AxisAction& act, Point a, Point b);

/// n = |X_{a,b}|.
std::size_t pair_type_size(const AxisAction& act, Point a, Point b);

/// Orbit sizes of a and b under D_{a,b} satisfy the dihedral orbit law.
bool pair_admissible(const AxisAction& act, Point a, Point b);
bool is_admissible(const AxisAction& act);

/// Whether <tau_x : x in X> is the whole group.
bool tau_generates(const AxisAction& act);

/// G-orbits on 2-subsets {a < b} of X, each sorted; orbits ordered by their
/// smallest pair.
struct PairOrbits {
  std::vector<std::vector<std::pair<Point, Point>>> orbits;
  std::vector<std::vector<std::int32_t>> index;  // index[a][b] = orbit id, -1 on the diagonal
  [[nodiscard]] std::size_t size() const { return orbits.size(); }
  [[nodiscard]] std::int32_t of(Point a, Point b) const { return index[a][b]; }
};

PairOrbits pair_orbits(const PermGroup& g, std::size_t n);

/// Image of the tau-map under a permutation n normalizing the group:
/// (tau^n)_x = (tau_{x^{n^-1}})^n.
std::vector<Perm> conjugate_tau(const std::vector<Perm>& tau, const Perm& n);

}  // namespace axial
