#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "axial/fpgrp/coset.hpp"
#include "axial/permgrp/element_table.hpp"

namespace axial {

/// True iff every product of two elements from the union of the conjugacy
/// classes of `reps` has order at most k. Throws std::invalid_argument if a
/// rep is not an involution.
bool is_k_transposition(const PermGroup& g, const std::vector<Perm>& reps, unsigned k);
bool is_k_transposition(const ElementTable& t, const std::vector<Elem>& reps, unsigned k);

/// A group together with an ordered generating triple.
struct Triple {
  PermGroup group;
  std::array<Perm, 3> gens;
};

/// Similarity of generating triples: an isomorphism carrying the triple to one
/// whose conjugacy classes form the same multiset. Throws CapExceeded when
/// either group is larger than `max_order`.
bool similar(const Triple& a, const Triple& b, std::uint64_t max_order = 2500);

/// Rows of the cover-group table: presentations on x, y, z.
struct NamedPresentation {
  std::string name;
  std::string text;
  /// Extra relators giving named quotients, e.g. {"G8''", "(z*z^(x*y))^3"}.
  std::vector<std::pair<std::string, std::string>> quotients;
};

const std::vector<NamedPresentation>& cover_groups();
const NamedPresentation& cover_group(const std::string& name);

/// Presentation text with extra relators appended.
std::string with_relators(const std::string& text, const std::vector<std::string>& extra);

/// Regular permutation representation of a presentation on x, y, z, together
/// with the images of the three generators.
Triple regular_triple(const Presentation& p, const CosetOptions& opts = {});

}  // namespace axial
