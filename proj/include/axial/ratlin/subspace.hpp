#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "axial/ratlin/sparse_vec.hpp"

namespace axial {

enum class PivotRule { First, Last };

/// Fully reduced echelon basis of a subspace of Q^n. Every row has a unit
/// pivot and all other rows vanish in that column, so reduction against the
/// basis is a single pass.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0, PivotRule rule = PivotRule::Last);

  [[nodiscard]] std::size_t ambient() const { return ambient_; }
  [[nodiscard]] std::size_t dim() const { return rows_.size(); }
  [[nodiscard]] bool empty() const { return rows_.empty(); }
  [[nodiscard]] PivotRule rule() const { return rule_; }
  [[nodiscard]] const std::vector<SparseVec>& basis() const { return rows_; }
  [[nodiscard]] const SparseVec& row(std::size_t i) const { return rows_[i]; }
  [[nodiscard]] Index pivot(std::size_t i) const { return pivots_[i]; }
  /// Row whose pivot is column c, if any.
  [[nodiscard]] std::optional<std::size_t> row_with_pivot(Index c) const;

  /// Residue of v modulo the subspace (zero iff v lies in it).
  [[nodiscard]] SparseVec reduce(const SparseVec& v) const;
  [[nodiscard]] bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  /// Adds v; returns true when the dimension grew.
  bool insert(const SparseVec& v);
  /// Adds every vector; returns the number that increased the dimension.
  std::size_t insert_all(const std::vector<SparseVec>& vs);
  [[nodiscard]] bool contains_all(const Subspace& other) const;

  /// Grows the ambient dimension (new coordinates are zero on the basis).
  void extend_ambient(std::size_t n);

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  void eliminate_column(Index c, const SparseVec& pivot_row);

  std::size_t ambient_;
  PivotRule rule_;
  std::vector<SparseVec> rows_;
  std::vector<Index> pivots_;
  std::vector<std::int64_t> row_of_col_;
  mutable Accumulator acc_;
};

/// All linear dependencies sum_i c_i v_i = 0, as coefficient vectors indexed by
/// position in `vs`.
std::vector<SparseVec> dependencies(const std::vector<SparseVec>& vs, std::size_t ambient);

/// Basis of a ∩ b.
std::vector<SparseVec> intersect(const Subspace& a, const Subspace& b);

/// Basis of a + b.
Subspace sum(const Subspace& a, const Subspace& b);

}  // namespace axial
