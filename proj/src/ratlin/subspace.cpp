#include "axial/ratlin/subspace.hpp"

#include <stdexcept>

namespace axial {

Subspace::Subspace(std::size_t ambient, PivotRule rule)
    : ambient_(ambient), rule_(rule), row_of_col_(ambient, -1), acc_(ambient) {}

std::optional<std::size_t> Subspace::row_with_pivot(Index c) const {
  if (c >= ambient_ || row_of_col_[c] < 0) return std::nullopt;
  return static_cast<std::size_t>(row_of_col_[c]);
}

SparseVec Subspace::reduce(const SparseVec& v) const {
  if (!v.empty() && v.last_index() >= ambient_)
    throw std::out_of_range("Subspace::reduce: vector outside ambient space");
  bool hit = false;
  for (const auto& e : v.entries())
    if (row_of_col_[e.index] >= 0) {
      hit = true;
      break;
    }
  if (!hit) return v;
  acc_.add(Scalar(1), v);
  for (const auto& e : v.entries()) {
    auto r = row_of_col_[e.index];
    if (r >= 0) acc_.add(-e.value, rows_[static_cast<std::size_t>(r)]);
  }
  return acc_.take();
}

void Subspace::eliminate_column(Index c, const SparseVec& pivot_row) {
  for (auto& row : rows_) {
    Scalar f = row.get(c);
    if (!f.is_zero()) row.axpy(-f, pivot_row);
  }
}

bool Subspace::insert(const SparseVec& v) {
  SparseVec r = reduce(v);
  if (r.empty()) return false;
  Index c = rule_ == PivotRule::First ? r.first_index() : r.last_index();
  r *= inverse(r.get(c));
  eliminate_column(c, r);
  row_of_col_[c] = static_cast<std::int64_t>(rows_.size());
  rows_.push_back(std::move(r));
  pivots_.push_back(c);
  return true;
}

std::size_t Subspace::insert_all(const std::vector<SparseVec>& vs) {
  std::size_t n = 0;
  for (const auto& v : vs) n += insert(v) ? 1 : 0;
  return n;
}

bool Subspace::contains_all(const Subspace& other) const {
  for (const auto& r : other.rows_)
    if (!contains(r)) return false;
  return true;
}

void Subspace::extend_ambient(std::size_t n) {
  if (n < ambient_) throw std::invalid_argument("Subspace::extend_ambient: shrinking");
  ambient_ = n;
  row_of_col_.resize(n, -1);
  acc_.resize(n);
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient_ == b.ambient_ && a.dim() == b.dim() && a.contains_all(b);
}

std::vector<SparseVec> dependencies(const std::vector<SparseVec>& vs, std::size_t ambient) {
  const std::size_t n = vs.size();
  Subspace s(ambient + n, PivotRule::First);
  for (std::size_t i = 0; i < n; ++i) {
    SparseVec aug = vs[i];
    aug.set(static_cast<Index>(ambient + i), Scalar(1));
    s.insert(aug);
  }
  std::vector<SparseVec> out;
  for (std::size_t r = 0; r < s.dim(); ++r) {
    if (s.pivot(r) < ambient) continue;
    std::vector<SparseVec::Entry> tag;
    for (const auto& e : s.row(r).entries())
      tag.push_back({static_cast<Index>(e.index - ambient), e.value});
    out.push_back(SparseVec::from_sorted(std::move(tag)));
  }
  return out;
}

std::vector<SparseVec> intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("intersect: ambient mismatch");
  std::vector<SparseVec> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  std::vector<SparseVec> out;
  Accumulator acc(a.ambient());
  for (const auto& dep : dependencies(all, a.ambient())) {
    for (const auto& e : dep.entries())
      if (e.index < a.dim()) acc.add(e.value, a.row(e.index));
    SparseVec v = acc.take();
    if (!v.empty()) out.push_back(std::move(v));
  }
  return out;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  Subspace s = a;
  s.insert_all(b.basis());
  return s;
}

}  // namespace axial
