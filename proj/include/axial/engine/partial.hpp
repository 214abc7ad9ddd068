#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "axial/permgrp/element_table.hpp"
#include "axial/ratlin/matrix.hpp"
#include "axial/shapes/shape.hpp"

namespace axial {

/// A vector space V with a partial commutative product. The first `known`
/// basis vectors span W, and every product of two vectors of W is defined
/// (as a vector of V). G acts linearly on V preserving W and the product.
struct PartialAlgebra {
  AxisAction action;
  std::shared_ptr<const ElementTable> elements;  // of action.group
  std::size_t dim = 0;
  std::size_t known = 0;
  std::vector<std::string> labels;
  /// table[j][i] for i <= j; empty optional when the product is unknown.
  std::vector<std::vector<std::optional<SparseVec>>> table;
  std::vector<Matrix> gens;  // parallel to action.group.generators()
  std::vector<SparseVec> axes;  // image of each point of X
  /// Seeded extra vectors (u_rho, v_rho, extra 2A axes) by label.
  std::vector<std::pair<std::string, SparseVec>> extras;

  [[nodiscard]] bool has_product(std::size_t i, std::size_t j) const;
  [[nodiscard]] const SparseVec& product(std::size_t i, std::size_t j) const;
  void set_product(std::size_t i, std::size_t j, SparseVec v);
  /// Bilinear product; throws std::logic_error when a needed product is unknown.
  [[nodiscard]] SparseVec mul(const SparseVec& u, const SparseVec& v) const;
  /// Whether v lies in W.
  [[nodiscard]] bool in_known(const SparseVec& v) const { return v.empty() || v.last_index() < known; }
  /// Action of a group element (a permutation of X in action.group) on V.
  [[nodiscard]] Matrix element_matrix(const Perm& g) const;
  /// All products in V x V defined.
  [[nodiscard]] bool complete() const { return known == dim; }
  [[nodiscard]] std::string render(const SparseVec& v) const;
};

/// Axes plus one extra vector per glued subalgebra (u_rho for 3A, v_rho for
/// 4A, the extra axis of each 2A, shared with 4B), with every product inside a
/// glued Norton-Sakuma subalgebra installed. Nothing is known yet: W = 0.
/// Throws std::invalid_argument when two glued subalgebras disagree on a
/// product.
PartialAlgebra seed(const Shape& shape);

/// W := V, with one new basis vector for every product of two basis vectors
/// of V that is not yet known. Returns the number of vectors added.
std::size_t expand(PartialAlgebra& p);

/// Vectors of V that vanish in every axial algebra of Monster type with these
/// axes, involutions and shape: the grading (tau_a negates exactly the
/// 1/32-part), eigenvectors and fusion products, directness of the eigenspace
/// sum, and a.x computed through known eigenvector decompositions of x.
std::vector<SparseVec> find_relations(const PartialAlgebra& p);

struct ReduceOutcome {
  bool collapsed = false;
  std::string reason;
  std::size_t relations = 0;  // dimension of the closed relation space
};

/// Quotient by the smallest G-invariant subspace containing rels that is
/// closed under multiplication by W. Collapsed when an axis becomes zero or two
/// axes with different involutions are identified.
ReduceOutcome reduce(PartialAlgebra& p, const std::vector<SparseVec>& rels);

}  // namespace axial
