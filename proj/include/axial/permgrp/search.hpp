#pragma once

#include <cstdint>
#include <vector>

#include "axial/permgrp/element_table.hpp"

namespace axial {

struct SearchCaps {
  std::uint64_t nodes = 10'000'000;
  std::size_t normalizer_degree = 24;
  std::size_t brute_force_degree = 8;
  std::uint64_t subgroup_index = 64;
};

/// Group generated by a set of elements of `t`, with a small generating set.
PermGroup subgroup_from_elements(const ElementTable& t, const std::vector<Elem>& elems);

/// C_G(x); throws std::invalid_argument when x is not in g.
PermGroup centralizer(const PermGroup& g, const Perm& x, const SearchCaps& caps = {});

/// True iff the largest normal subgroup of g inside the intersection of the
/// given subgroups is trivial.
bool core_is_trivial(const PermGroup& g, const std::vector<PermGroup>& subgroups,
                     const SearchCaps& caps = {});

/// N_Sym(n)(g). Brute force over Sym(n) up to caps.brute_force_degree,
/// backtrack search up to caps.normalizer_degree; CapExceeded beyond either cap.
PermGroup normalizer_in_sym(const PermGroup& g, const SearchCaps& caps = {});
/// The brute-force path alone (for cross-checking).
PermGroup normalizer_in_sym_brute(const PermGroup& g);

/// Every subgroup S with lo <= S <= hi, as sorted element lists of `t`
/// (which must be the element table of hi or of a supergroup). CapExceeded
/// when |hi : lo| exceeds caps.subgroup_index.
std::vector<std::vector<Elem>> subgroups_between(const ElementTable& t, const std::vector<Elem>& lo,
                                                 const std::vector<Elem>& hi,
                                                 const SearchCaps& caps = {});

}  // namespace axial
