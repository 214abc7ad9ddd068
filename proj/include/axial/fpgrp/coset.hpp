#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "axial/fpgrp/presentation.hpp"
#include "axial/permgrp/perm_group.hpp"

namespace axial {

/// Enumeration hit its coset cap. The group may still be finite.
struct Inconclusive : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class CosetStrategy { Felsch, HLT };

struct CosetOptions {
  CosetStrategy strategy = CosetStrategy::Felsch;
  std::size_t max_cosets = 2'000'000;
};

/// Completed coset table, cosets numbered in canonical (breadth-first) order
/// with coset 0 the subgroup itself.
struct CosetTable {
  std::size_t index = 0;
  std::size_t num_generators = 0;
  /// image[g][c] = c^(g), inverse[g][c] = c^(g^-1)
  std::vector<std::vector<std::uint32_t>> image, inverse;
  bool subgroup_trivial = false;
  std::size_t cosets_defined = 0;  // total definitions, a cost measure

  /// Coset reached from c by the word.
  [[nodiscard]] std::uint32_t trace(std::uint32_t c, const Word& w) const;
};

/// Todd-Coxeter coset enumeration of the subgroup generated by
/// `subgroup_words`. Throws Inconclusive when the cap is reached.
CosetTable coset_enumerate(const Presentation& p, const std::vector<Word>& subgroup_words = {},
                           const CosetOptions& opts = {});

/// Action of the generators on the cosets. For the trivial subgroup this is
/// the regular representation and the group order is recorded.
PermGroup perm_rep(const CosetTable& t);

/// Image of a word in the permutation representation.
Perm evaluate(const Word& w, const PermGroup& rep);

}  // namespace axial
