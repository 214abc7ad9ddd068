#pragma once

#include <vector>

#include "axial/ratlin/scalar.hpp"

namespace axial {

/// A fusion law on a finite eigenvalue set, with an optional Z2-grading.
class FusionLaw {
 public:
  FusionLaw(std::vector<Scalar> eigenvalues, std::vector<std::vector<unsigned>> rule,
            std::vector<bool> minus_part);

  /// {1, 0, 1/4, 1/32}; 1/32 is the minus part.
  static const FusionLaw& monster();

  [[nodiscard]] const std::vector<Scalar>& eigenvalues() const { return eigenvalues_; }
  [[nodiscard]] std::size_t size() const { return eigenvalues_.size(); }
  /// Bitmask over eigenvalue positions of lambda_i * lambda_j.
  [[nodiscard]] unsigned rule(std::size_t i, std::size_t j) const { return rule_[i][j]; }
  [[nodiscard]] bool is_minus(std::size_t i) const { return minus_[i]; }
  /// Position of an eigenvalue, or size() when absent.
  [[nodiscard]] std::size_t position(const Scalar& v) const;

  [[nodiscard]] bool is_symmetric() const;
  /// F_s * F_t lies in F_st for all signs.
  [[nodiscard]] bool is_graded() const;

 private:
  std::vector<Scalar> eigenvalues_;
  std::vector<std::vector<unsigned>> rule_;
  std::vector<bool> minus_;
};

}  // namespace axial
