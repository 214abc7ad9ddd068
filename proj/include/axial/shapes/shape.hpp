#pragma once

#include <optional>
#include <string>
#include <vector>

#include "axial/permgrp/search.hpp"
#include "axial/shapes/action.hpp"

namespace axial {

/// Pair orbits with their type sizes, symmetrised domination edges, and the
/// consistent type choices of each connected component.
struct ShapeGraph {
  PairOrbits pairs;
  std::vector<std::size_t> n;                   // |X_{a,b}| per pair orbit
  std::vector<std::vector<std::size_t>> edges;  // adjacency lists, sorted
  std::vector<std::vector<bool>> dominates;     // dominates[p][q]: q inside X of p's pairs
  std::vector<std::vector<std::size_t>> components;
  std::vector<std::size_t> component_of;
  /// Per component, every consistent assignment of letters to its orbits
  /// (parallel to components[c]); empty when the component has no choice
  /// within the law, e.g. a mixed inconsistent domination.
  std::vector<std::vector<std::vector<char>>> choices;
};

ShapeGraph shape_graph(const AxisAction& act);

struct Shape {
  AxisAction action;
  PairOrbits pairs;
  std::vector<std::size_t> n;
  std::vector<std::vector<bool>> dominates;
  std::vector<std::string> types;  // "2A", "4B", ... per pair orbit

  [[nodiscard]] const std::string& type_of(Point a, Point b) const {
    return types[static_cast<std::size_t>(pairs.of(a, b))];
  }
  /// Type counts of the pair orbits not dominated by a larger one, e.g.
  /// "4A (2A)^2"; ordered by n descending then letter.
  [[nodiscard]] std::string str() const;
};

/// Splits "4A (2A)^2", "4A^2 2B" or "(2B)^3" into sorted (type, count) terms.
std::vector<std::pair<std::string, std::size_t>> parse_shape_string(const std::string& s);
/// Canonical rendering of parsed terms (same order as Shape::str).
std::string format_shape_terms(std::vector<std::pair<std::string, std::size_t>> terms);

struct ShapeEnumeration {
  std::vector<Shape> shapes;
  /// Set when the normaliser search hit its cap: shapes are then only reduced
  /// up to G, so the count is an upper bound.
  bool upper_bound = false;
  /// Set when some component has n above max_n.
  std::optional<std::string> aborted;
  /// Number of distinct permutations K induces on the pair orbits.
  std::size_t k_pair_action = 1;
};

/// All shapes up to K = stab_N(tau), N the normaliser of the group in Sym(X).
ShapeEnumeration enumerate_shapes(const AxisAction& act, std::size_t max_n = 4, const SearchCaps& caps = {});

/// A reason when the shape contains a triple a, b, c with {a,b}, {a,c} of
/// types 2L, 2L' and {b,c} of type 3A, 3C or 5A that no algebra realises.
std::optional<std::string> forbidden(const Shape& s);

struct TauMaps {
  std::vector<AxisAction> maps;  // admissible, generating the group
  std::size_t admissible = 0;    // before reduction by N
  bool deduplicated = true;      // false when the normaliser hit its cap
};

/// Admissible tau-maps of the group action whose involutions generate the
/// group, one per N-orbit.
TauMaps tau_maps(const PermGroup& g, const SearchCaps& caps = {});

/// Elements n of N with tau^n = tau, as generators (Schreier generators of the
/// stabiliser of tau in N).
std::vector<Perm> tau_stabilizer_gens(const AxisAction& act, const PermGroup& normalizer);

}  // namespace axial
