#pragma once

#include <string>
#include <vector>

#include "axial/fpgrp/groups.hpp"
#include "axial/shapes/action.hpp"

namespace axial {

/// A hand-specified action of a 3-generated group on axes: the generating
/// triple and one orbit spec per orbit. Names look like "S4/3+6".
struct NamedAction {
  std::string name;
  Triple triple;
  std::vector<OrbitSpec> orbits;

  [[nodiscard]] AxisAction action() const { return coset_action(triple.group, orbits, name); }
};

const std::vector<NamedAction>& named_actions();
/// Throws std::invalid_argument for an unknown name.
const NamedAction& named_action(const std::string& name);

}  // namespace axial
