#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "axial/ratlin/scalar.hpp"

namespace axial {

using Index = std::uint32_t;

/// Sparse rational vector: entries sorted by index, no explicit zeros.
class SparseVec {
 public:
  struct Entry {
    Index index;
    Scalar value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  SparseVec() = default;
  static SparseVec unit(Index i, Scalar c = Scalar(1));
  static SparseVec from_dense(std::span<const Scalar> values);
  /// Takes ownership of entries that are already sorted and nonzero.
  static SparseVec from_sorted(std::vector<Entry> entries);

  [[nodiscard]] bool empty() const { return entries_.empty(); }
  [[nodiscard]] std::size_t nnz() const { return entries_.size(); }
  [[nodiscard]] const std::vector<Entry>& entries() const { return entries_; }
  [[nodiscard]] Index first_index() const { return entries_.front().index; }
  [[nodiscard]] Index last_index() const { return entries_.back().index; }

  [[nodiscard]] Scalar get(Index i) const;
  void set(Index i, const Scalar& value);

  /// this += c * w
  void axpy(const Scalar& c, const SparseVec& w);
  SparseVec& operator*=(const Scalar& c);
  SparseVec& operator+=(const SparseVec& w) { axpy(Scalar(1), w); return *this; }
  SparseVec& operator-=(const SparseVec& w) { axpy(Scalar(-1), w); return *this; }

  friend SparseVec operator+(SparseVec a, const SparseVec& b) { return a += b; }
  friend SparseVec operator-(SparseVec a, const SparseVec& b) { return a -= b; }
  friend SparseVec operator*(const Scalar& c, SparseVec a) { return a *= c; }
  friend bool operator==(const SparseVec&, const SparseVec&) = default;

  [[nodiscard]] std::vector<Scalar> dense(std::size_t n) const;
  [[nodiscard]] std::string str() const;

  /// Drops every index >= n; used when a vector is known to live in a prefix.
  void truncate(std::size_t n);

 private:
  std::vector<Entry> entries_;
};

/// Dense scratch buffer for summing many sparse vectors of the same ambient size.
class Accumulator {
 public:
  explicit Accumulator(std::size_t n = 0) { resize(n); }
  void resize(std::size_t n);
  [[nodiscard]] std::size_t size() const { return data_.size(); }

  void add(const Scalar& c, const SparseVec& v);
  void add(Index i, const Scalar& c);
  void add_product(Index i, const Scalar& a, const Scalar& b);
  /// Returns the accumulated vector and resets the buffer to zero.
  SparseVec take();
  void clear();

 private:
  std::vector<mpq_class> data_;
  std::vector<char> touched_;
  std::vector<Index> list_;
  mpq_class tmp_;
};

}  // namespace axial
