#include "axial/ratlin/sparse_vec.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace axial {

SparseVec SparseVec::unit(Index i, Scalar c) {
  SparseVec v;
  if (!c.is_zero()) v.entries_.push_back({i, std::move(c)});
  return v;
}

SparseVec SparseVec::from_dense(std::span<const Scalar> values) {
  SparseVec v;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (!values[i].is_zero()) v.entries_.push_back({static_cast<Index>(i), values[i]});
  return v;
}

SparseVec SparseVec::from_sorted(std::vector<Entry> entries) {
  SparseVec v;
  v.entries_ = std::move(entries);
  return v;
}

Scalar SparseVec::get(Index i) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const Entry& e, Index k) { return e.index < k; });
  if (it != entries_.end() && it->index == i) return it->value;
  return Scalar(0);
}

void SparseVec::set(Index i, const Scalar& value) {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const Entry& e, Index k) { return e.index < k; });
  if (it != entries_.end() && it->index == i) {
    if (value.is_zero())
      entries_.erase(it);
    else
      it->value = value;
  } else if (!value.is_zero()) {
    entries_.insert(it, Entry{i, value});
  }
}

void SparseVec::axpy(const Scalar& c, const SparseVec& w) {
  if (c.is_zero() || w.empty()) return;
  std::vector<Entry> out;
  out.reserve(entries_.size() + w.entries_.size());
  auto a = entries_.begin();
  auto b = w.entries_.begin();
  while (a != entries_.end() || b != w.entries_.end()) {
    if (b == w.entries_.end() || (a != entries_.end() && a->index < b->index)) {
      out.push_back(std::move(*a));
      ++a;
    } else if (a == entries_.end() || b->index < a->index) {
      out.push_back({b->index, c * b->value});
      ++b;
    } else {
      Scalar s = a->value + c * b->value;
      if (!s.is_zero()) out.push_back({a->index, std::move(s)});
      ++a;
      ++b;
    }
  }
  entries_ = std::move(out);
}

SparseVec& SparseVec::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    entries_.clear();
  } else {
    for (auto& e : entries_) e.value *= c;
  }
  return *this;
}

std::vector<Scalar> SparseVec::dense(std::size_t n) const {
  std::vector<Scalar> out(n);
  for (const auto& e : entries_) {
    if (e.index >= n) throw std::out_of_range("SparseVec::dense: index past size");
    out[e.index] = e.value;
  }
  return out;
}

std::string SparseVec::str() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ", ";
    os << entries_[i].index << ": " << entries_[i].value;
  }
  os << "}";
  return os.str();
}

void SparseVec::truncate(std::size_t n) {
  while (!entries_.empty() && entries_.back().index >= n) entries_.pop_back();
}

void Accumulator::resize(std::size_t n) {
  clear();
  data_.resize(n);
  touched_.assign(n, 0);
}

void Accumulator::add(const Scalar& c, const SparseVec& v) {
  if (c.is_zero()) return;
  for (const auto& e : v.entries()) add_product(e.index, c, e.value);
}

void Accumulator::add(Index i, const Scalar& c) {
  if (!touched_[i]) {
    touched_[i] = 1;
    list_.push_back(i);
  }
  data_[i] += c.raw();
}

void Accumulator::add_product(Index i, const Scalar& a, const Scalar& b) {
  if (!touched_[i]) {
    touched_[i] = 1;
    list_.push_back(i);
  }
  mpq_mul(tmp_.get_mpq_t(), a.raw().get_mpq_t(), b.raw().get_mpq_t());
  data_[i] += tmp_;
}

SparseVec Accumulator::take() {
  std::sort(list_.begin(), list_.end());
  std::vector<SparseVec::Entry> out;
  out.reserve(list_.size());
  for (Index i : list_) {
    if (sgn(data_[i]) != 0) out.push_back({i, Scalar(data_[i])});
    data_[i] = 0;
    touched_[i] = 0;
  }
  list_.clear();
  return SparseVec::from_sorted(std::move(out));
}

void Accumulator::clear() {
  for (Index i : list_) {
    data_[i] = 0;
    touched_[i] = 0;
  }
  list_.clear();
}

}  // namespace axial
