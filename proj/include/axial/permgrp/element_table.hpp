#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "axial/permgrp/perm_group.hpp"

namespace axial {

using Elem = std::uint32_t;

/// Elements of a finite permutation group numbered 0..|G|-1 (0 is the
/// identity), with the right Cayley graph on the generators. Products are
/// evaluated by tracing spanning-tree words, so no per-element permutation is
/// needed; regular groups (|G| = degree, transitive) are identified by the
/// image of point 0 and never materialize their elements.
class ElementTable {
 public:
  explicit ElementTable(const PermGroup& g, std::uint64_t cap = 10'000'000);

  [[nodiscard]] std::size_t size() const { return parent_.size(); }
  [[nodiscard]] const PermGroup& group() const { return group_; }
  [[nodiscard]] std::size_t num_generators() const { return right_.size(); }
  [[nodiscard]] Elem generator(std::size_t k) const { return gen_elem_[k]; }

  /// a * g_k
  [[nodiscard]] Elem mul_gen(Elem a, std::size_t k) const { return right_[k][a]; }
  [[nodiscard]] Elem mul(Elem a, Elem b) const;
  [[nodiscard]] Elem inv(Elem a) const;
  /// b^-1 a b
  [[nodiscard]] Elem conj(Elem a, Elem b) const { return mul(mul(inv(b), a), b); }
  [[nodiscard]] std::uint64_t order(Elem a) const;
  [[nodiscard]] std::vector<std::uint32_t> word(Elem a) const;

  [[nodiscard]] Perm perm(Elem a) const;
  /// Index of a permutation in the group; throws std::invalid_argument if absent.
  [[nodiscard]] Elem index_of(const Perm& p) const;
  [[nodiscard]] bool contains(const Perm& p) const;

  /// Conjugacy class of a, sorted.
  [[nodiscard]] std::vector<Elem> conjugacy_class(Elem a) const;
  /// Class id per element (ids in order of first element).
  [[nodiscard]] std::vector<std::uint32_t> class_ids() const;
  /// Subgroup generated by the given elements, as a sorted element list.
  [[nodiscard]] std::vector<Elem> closure(const std::vector<Elem>& gens) const;

 private:
  PermGroup group_;
  bool regular_ = false;
  std::vector<std::vector<Elem>> right_, right_inv_;
  std::vector<Elem> parent_;
  std::vector<std::uint32_t> parent_gen_;
  std::vector<Elem> gen_elem_;
  std::vector<Elem> by_point_;  // regular case: 0^g -> element
  std::unordered_map<Perm, Elem> index_;
};

}  // namespace axial
