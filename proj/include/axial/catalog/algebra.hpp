#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "axial/catalog/fusion.hpp"
#include "axial/ratlin/matrix.hpp"

namespace axial {

/// Commutative algebra given by structure constants on a basis.
class Algebra {
 public:
  explicit Algebra(std::size_t dim = 0);

  [[nodiscard]] std::size_t dim() const { return dim_; }
  void set_product(std::size_t i, std::size_t j, SparseVec v);
  [[nodiscard]] const SparseVec& product(std::size_t i, std::size_t j) const;
  [[nodiscard]] SparseVec mul(const SparseVec& u, const SparseVec& v) const;
  /// Rows are a * e_i, so that v (as a row vector) times the matrix is a * v.
  [[nodiscard]] Matrix adjoint(const SparseVec& a) const;
  /// Image of the basis permutation/linear map g (rows are images of e_i) is
  /// an automorphism.
  [[nodiscard]] bool is_automorphism(const Matrix& g) const;

 private:
  std::size_t dim_;
  std::vector<SparseVec> table_;  // upper triangle, i <= j
};

/// Row-vector action v -> v * m.
SparseVec act(const SparseVec& v, const Matrix& m);

struct Eigenspace {
  Scalar value;
  std::vector<SparseVec> basis;
};

/// Eigenspaces of ad_a for the eigenvalues of the law (in law order).
std::vector<Eigenspace> eigenspaces(const Algebra& alg, const SparseVec& a, const FusionLaw& law);

struct AxisReport {
  bool idempotent = false;
  bool semisimple = false;  // eigenspaces of the law span the algebra
  bool primitive = false;
  bool fusion_ok = false;
  bool graded_ok = false;
  std::vector<Scalar> spectrum;
  std::vector<std::size_t> dims;  // parallel to the law's eigenvalues
  std::vector<std::string> defects;
  [[nodiscard]] bool ok() const { return defects.empty(); }
};

AxisReport verify_axis(const Algebra& alg, const SparseVec& a, const FusionLaw& law = FusionLaw::monster());

/// Miyamoto involution of a as a matrix (rows are images of e_i); nullopt when
/// ad_a is not semisimple over the law.
std::optional<Matrix> miyamoto(const Algebra& alg, const SparseVec& a,
                               const FusionLaw& law = FusionLaw::monster());

struct FormReport {
  bool symmetric = false;
  bool associates = false;
  bool perpendicular = false;
  Inertia inertia;
  std::vector<std::string> defects;
  [[nodiscard]] bool ok() const { return defects.empty(); }
};

Scalar form_value(const Matrix& gram, const SparseVec& u, const SparseVec& v);

/// Associativity on all basis triples and perpendicularity of the eigenspaces
/// of every listed axis.
FormReport verify_form(const Algebra& alg, const Matrix& gram, const std::vector<SparseVec>& axes,
                       const FusionLaw& law = FusionLaw::monster());

}  // namespace axial
