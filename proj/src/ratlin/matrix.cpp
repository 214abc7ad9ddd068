#include "axial/ratlin/matrix.hpp"

#include <algorithm>
#include <stdexcept>

#include "axial/ratlin/subspace.hpp"

namespace axial {

Matrix::Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.rows_[i] = SparseVec::unit(static_cast<Index>(i));
  return m;
}

Matrix Matrix::from_dense(const std::vector<std::vector<Scalar>>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw std::invalid_argument("Matrix: ragged rows");
    m.rows_[i] = SparseVec::from_dense(rows[i]);
  }
  return m;
}

Matrix Matrix::from_rows(std::vector<SparseVec> rows, std::size_t cols) {
  Matrix m;
  m.cols_ = cols;
  for (const auto& r : rows)
    if (!r.empty() && r.last_index() >= cols)
      throw std::out_of_range("Matrix::from_rows: entry past column count");
  m.rows_ = std::move(rows);
  return m;
}

Scalar Matrix::at(std::size_t r, std::size_t c) const {
  return rows_.at(r).get(static_cast<Index>(c));
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& v) {
  if (c >= cols_) throw std::out_of_range("Matrix::set: column");
  rows_.at(r).set(static_cast<Index>(c), v);
}

std::vector<std::vector<Scalar>> Matrix::dense() const {
  std::vector<std::vector<Scalar>> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r.dense(cols_));
  return out;
}

Matrix Matrix::transpose() const {
  std::vector<std::vector<SparseVec::Entry>> cols(cols_);
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (const auto& e : rows_[i].entries())
      cols[e.index].push_back({static_cast<Index>(i), e.value});
  Matrix t(cols_, rows_.size());
  for (std::size_t c = 0; c < cols_; ++c) t.rows_[c] = SparseVec::from_sorted(std::move(cols[c]));
  return t;
}

bool Matrix::is_symmetric() const {
  if (rows() != cols()) return false;
  return transpose() == *this;
}

SparseVec Matrix::apply(const SparseVec& v) const {
  std::vector<SparseVec::Entry> out;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Scalar s;
    const auto& a = rows_[i].entries();
    const auto& b = v.entries();
    std::size_t p = 0, q = 0;
    while (p < a.size() && q < b.size()) {
      if (a[p].index < b[q].index) {
        ++p;
      } else if (b[q].index < a[p].index) {
        ++q;
      } else {
        s += a[p].value * b[q].value;
        ++p;
        ++q;
      }
    }
    if (!s.is_zero()) out.push_back({static_cast<Index>(i), std::move(s)});
  }
  return SparseVec::from_sorted(std::move(out));
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows()) throw std::invalid_argument("Matrix product: shape mismatch");
  Matrix out(a.rows(), b.cols_);
  Accumulator acc(b.cols_);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (const auto& e : a.rows_[i].entries()) acc.add(e.value, b.rows_[e.index]);
    out.rows_[i] = acc.take();
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.cols_ == b.cols_ && a.rows_ == b.rows_;
}

RrefResult rref_dense(const Matrix& m) {
  auto a = m.dense();
  const std::size_t nr = m.rows(), nc = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t p = r;
    while (p < nr && a[p][c].is_zero()) ++p;
    if (p == nr) continue;
    std::swap(a[p], a[r]);
    Scalar inv = inverse(a[r][c]);
    for (std::size_t k = c; k < nc; ++k) a[r][k] *= inv;
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Scalar f = a[i][c];
      for (std::size_t k = c; k < nc; ++k)
        if (!a[r][k].is_zero()) a[i][k] -= f * a[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  RrefResult res;
  std::vector<SparseVec> rows;
  for (std::size_t i = 0; i < r; ++i) rows.push_back(SparseVec::from_dense(a[i]));
  res.reduced = Matrix::from_rows(std::move(rows), nc);
  res.pivots = std::move(pivots);
  res.rank = r;
  return res;
}

RrefResult rref_sparse(const Matrix& m) {
  Subspace s(m.cols(), PivotRule::First);
  for (std::size_t i = 0; i < m.rows(); ++i) s.insert(m.row(i));
  std::vector<std::size_t> order(s.dim());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return s.pivot(x) < s.pivot(y); });
  RrefResult res;
  std::vector<SparseVec> rows;
  for (std::size_t i : order) {
    rows.push_back(s.row(i));
    res.pivots.push_back(s.pivot(i));
  }
  res.reduced = Matrix::from_rows(std::move(rows), m.cols());
  res.rank = res.pivots.size();
  return res;
}

RrefResult rref(const Matrix& m) {
  return m.cols() < 64 ? rref_dense(m) : rref_sparse(m);
}

std::vector<SparseVec> kernel(const Matrix& m) {
  RrefResult r = rref(m);
  std::vector<char> is_pivot(m.cols(), 0);
  for (auto p : r.pivots) is_pivot[p] = 1;
  std::vector<SparseVec> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    SparseVec v = SparseVec::unit(static_cast<Index>(f));
    for (std::size_t i = 0; i < r.rank; ++i) {
      Scalar c = r.reduced.row(i).get(static_cast<Index>(f));
      if (!c.is_zero()) v.set(static_cast<Index>(r.pivots[i]), -c);
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Matrix> inverse(const Matrix& m) {
  const auto n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("inverse: matrix is not square");
  std::vector<SparseVec> aug;
  aug.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    SparseVec r = m.row(i);
    r.axpy(Scalar(1), SparseVec::unit(static_cast<Index>(n + i)));
    aug.push_back(std::move(r));
  }
  auto red = rref(Matrix::from_rows(std::move(aug), 2 * n));
  if (red.rank < n || red.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<SparseVec::Entry> es;
    for (const auto& e : red.reduced.row(i).entries())
      if (e.index >= n) es.push_back({static_cast<Index>(e.index - n), e.value});
    out.row(i) = SparseVec::from_sorted(std::move(es));
  }
  return out;
}

Inertia inertia(const Matrix& g) {
  if (!g.is_symmetric()) throw std::invalid_argument("inertia: matrix is not symmetric");
  auto a = g.dense();
  const std::size_t n = g.rows();
  std::vector<std::size_t> active(n);
  for (std::size_t i = 0; i < n; ++i) active[i] = i;
  Inertia res;
  while (!active.empty()) {
    std::size_t pos = active.size();
    for (std::size_t k = 0; k < active.size(); ++k)
      if (!a[active[k]][active[k]].is_zero()) {
        pos = k;
        break;
      }
    if (pos == active.size()) {
      // Zero diagonal: fold a partner j into i so the new diagonal is 2 a_ij.
      bool found = false;
      for (std::size_t k = 0; k < active.size() && !found; ++k)
        for (std::size_t l = k + 1; l < active.size() && !found; ++l) {
          std::size_t i = active[k], j = active[l];
          if (a[i][j].is_zero()) continue;
          for (std::size_t t : active) a[i][t] += a[j][t];
          for (std::size_t t : active) a[t][i] = a[i][t];
          a[i][i] = a[i][i] + a[j][i];
          pos = k;
          found = true;
        }
      if (!found) {
        res.zero += active.size();
        break;
      }
    }
    std::size_t i = active[pos];
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(pos));
    const Scalar d = a[i][i];
    (d.sign() > 0 ? res.positive : res.negative) += 1;
    for (std::size_t j : active) {
      if (a[j][i].is_zero()) continue;
      Scalar f = a[j][i] / d;
      for (std::size_t k : active) a[j][k] -= f * a[i][k];
    }
  }
  return res;
}

}  // namespace axial
