#pragma once

#include <array>
#include <string>
#include <vector>

#include "axial/permgrp/search.hpp"
#include "axial/shapes/action.hpp"

namespace axial {

struct Configuration {
  std::vector<OrbitSpec> orbits;
  AxisAction action;
};

/// Possible point stabilisers of the axis whose Miyamoto involution is u:
/// G if u = 1; C_G(u) when some product u d (d a conjugate of a generator)
/// has order 3 or 5; otherwise every S with H <= S <= C_G(u), where H is
/// generated by u, the commuting conjugates of generators with that property
/// and the squares (u d)^2 for products of order 4.
std::vector<std::vector<Elem>> stabilizer_options(const ElementTable& t, const std::array<Elem, 3>& gens, Elem u,
                                                  const SearchCaps& caps = {});

/// All axis sets X = a^G u b^G u c^G for the triple, up to isomorphism of
/// G-sets with tau: faithful, admissible, no pair with n > 4 (so disjoint
/// copies creating 6A are dropped) and not generated by two axes.
/// Throws std::invalid_argument when the triple does not generate g.
std::vector<Configuration> axis_configurations(const PermGroup& g, const std::array<Perm, 3>& triple,
                                               const SearchCaps& caps = {});

/// Canonical key of the G-set with tau built from orbit specs: per orbit the
/// smallest conjugate of (stabiliser, tau), sorted.
std::string gset_key(const ElementTable& t, const std::vector<OrbitSpec>& orbits);

}  // namespace axial
