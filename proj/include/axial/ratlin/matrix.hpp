#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "axial/ratlin/sparse_vec.hpp"

namespace axial {

/// Rational matrix stored sparse-by-row.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  static Matrix identity(std::size_t n);
  static Matrix from_dense(const std::vector<std::vector<Scalar>>& rows);
  static Matrix from_rows(std::vector<SparseVec> rows, std::size_t cols);

  [[nodiscard]] std::size_t rows() const { return rows_.size(); }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  [[nodiscard]] Scalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& v);
  [[nodiscard]] const SparseVec& row(std::size_t r) const { return rows_[r]; }
  SparseVec& row(std::size_t r) { return rows_[r]; }

  [[nodiscard]] std::vector<std::vector<Scalar>> dense() const;
  [[nodiscard]] Matrix transpose() const;
  [[nodiscard]] bool is_symmetric() const;
  /// Matrix-vector product m * v.
  [[nodiscard]] SparseVec apply(const SparseVec& v) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t cols_ = 0;
  std::vector<SparseVec> rows_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Reduced row-echelon form; pivots are the first nonzero column of each row.
RrefResult rref(const Matrix& m);
/// Same result, forcing the dense or the sparse elimination path.
RrefResult rref_dense(const Matrix& m);
RrefResult rref_sparse(const Matrix& m);

/// Canonical null-space basis read off the RREF: one vector per free column,
/// with a 1 in that column.
std::vector<SparseVec> kernel(const Matrix& m);

/// Inverse of a square matrix; nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

struct Inertia {
  std::size_t positive = 0;
  std::size_t zero = 0;
  std::size_t negative = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Sylvester inertia of a symmetric matrix by exact congruence elimination.
/// Throws std::invalid_argument for non-symmetric input.
Inertia inertia(const Matrix& g);

}  // namespace axial
