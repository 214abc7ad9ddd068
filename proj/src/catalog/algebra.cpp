#include "axial/catalog/algebra.hpp"

#include <stdexcept>

namespace axial {

namespace {

std::size_t tri(std::size_t i, std::size_t j, std::size_t n) {
  if (i > j) std::swap(i, j);
  return i * n - i * (i + 1) / 2 + j;
}

Scalar dot(const SparseVec& a, const SparseVec& b) {
  Scalar s;
  auto ia = a.entries().begin(), ib = b.entries().begin();
  while (ia != a.entries().end() && ib != b.entries().end()) {
    if (ia->index < ib->index) {
      ++ia;
    } else if (ib->index < ia->index) {
      ++ib;
    } else {
      s += ia->value * ib->value;
      ++ia;
      ++ib;
    }
  }
  return s;
}

std::string vec_str(const SparseVec& v) { return v.str(); }

}  // namespace

Algebra::Algebra(std::size_t dim) : dim_(dim), table_(dim * (dim + 1) / 2) {}

void Algebra::set_product(std::size_t i, std::size_t j, SparseVec v) {
  if (i >= dim_ || j >= dim_) throw std::out_of_range("Algebra::set_product");
  table_[tri(i, j, dim_)] = std::move(v);
}

const SparseVec& Algebra::product(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_) throw std::out_of_range("Algebra::product");
  return table_[tri(i, j, dim_)];
}

SparseVec Algebra::mul(const SparseVec& u, const SparseVec& v) const {
  Accumulator acc(dim_);
  Scalar c;
  for (const auto& x : u.entries())
    for (const auto& y : v.entries()) {
      c = x.value * y.value;
      acc.add(c, product(x.index, y.index));
    }
  return acc.take();
}

Matrix Algebra::adjoint(const SparseVec& a) const {
  std::vector<SparseVec> rows;
  rows.reserve(dim_);
  for (std::size_t i = 0; i < dim_; ++i) rows.push_back(mul(a, SparseVec::unit(static_cast<Index>(i))));
  return Matrix::from_rows(std::move(rows), dim_);
}

bool Algebra::is_automorphism(const Matrix& g) const {
  if (g.rows() != dim_ || g.cols() != dim_) return false;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j)
      if (act(product(i, j), g) != mul(g.row(i), g.row(j))) return false;
  return true;
}

SparseVec act(const SparseVec& v, const Matrix& m) {
  Accumulator acc(m.cols());
  for (const auto& e : v.entries()) acc.add(e.value, m.row(e.index));
  return acc.take();
}

std::vector<Eigenspace> eigenspaces(const Algebra& alg, const SparseVec& a, const FusionLaw& law) {
  Matrix ad = alg.adjoint(a);
  std::vector<Eigenspace> out;
  for (const auto& lam : law.eigenvalues()) {
    Matrix b = ad;
    for (std::size_t i = 0; i < alg.dim(); ++i) b.set(i, i, b.at(i, i) - lam);
    out.push_back({lam, kernel(b.transpose())});
  }
  return out;
}

namespace {

struct Decomposition {
  std::vector<Eigenspace> spaces;
  std::vector<std::size_t> block;  // eigenvalue position of each row of p
  Matrix p, p_inv;
  bool semisimple = false;
};

Decomposition decompose(const Algebra& alg, const SparseVec& a, const FusionLaw& law) {
  Decomposition d;
  d.spaces = eigenspaces(alg, a, law);
  std::vector<SparseVec> rows;
  for (std::size_t k = 0; k < d.spaces.size(); ++k)
    for (const auto& v : d.spaces[k].basis) {
      rows.push_back(v);
      d.block.push_back(k);
    }
  if (rows.size() != alg.dim()) return d;
  d.p = Matrix::from_rows(std::move(rows), alg.dim());
  auto inv = inverse(d.p);
  if (!inv) return d;
  d.p_inv = std::move(*inv);
  d.semisimple = true;
  return d;
}

Matrix sign_map(const Decomposition& d, const FusionLaw& law) {
  // v -> v P^-1 D P with D = +-1 on the plus/minus blocks.
  const auto n = d.p.rows();
  Matrix dp(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    SparseVec r = d.p.row(i);
    if (law.is_minus(d.block[i])) r *= Scalar(-1);
    dp.row(i) = std::move(r);
  }
  return d.p_inv * dp;
}

}  // namespace

AxisReport verify_axis(const Algebra& alg, const SparseVec& a, const FusionLaw& law) {
  AxisReport r;
  r.idempotent = alg.mul(a, a) == a;
  if (!r.idempotent) r.defects.push_back("not idempotent: a*a = " + vec_str(alg.mul(a, a)));

  auto d = decompose(alg, a, law);
  for (const auto& s : d.spaces) {
    r.dims.push_back(s.basis.size());
    if (!s.basis.empty()) r.spectrum.push_back(s.value);
  }
  r.semisimple = d.semisimple;
  if (!r.semisimple) r.defects.push_back("adjoint not diagonalisable over the fusion-law eigenvalues");

  const auto one = law.position(Scalar(1));
  r.primitive = one < law.size() && d.spaces[one].basis.size() == 1;
  if (!r.primitive) r.defects.push_back("1-eigenspace has dimension " +
                                        std::to_string(one < law.size() ? d.spaces[one].basis.size() : 0));

  if (!r.semisimple) return r;

  r.fusion_ok = true;
  const auto n = d.p.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      SparseVec coords = act(alg.mul(d.p.row(i), d.p.row(j)), d.p_inv);
      unsigned allowed = law.rule(d.block[i], d.block[j]);
      for (const auto& e : coords.entries())
        if (!(allowed >> d.block[e.index] & 1u)) {
          if (r.fusion_ok)
            r.defects.push_back("fusion: " + d.spaces[d.block[i]].value.str() + " * " +
                                d.spaces[d.block[j]].value.str() + " has a " +
                                d.spaces[d.block[e.index]].value.str() + " component");
          r.fusion_ok = false;
          break;
        }
    }

  r.graded_ok = law.is_graded() && alg.is_automorphism(sign_map(d, law));
  if (!r.graded_ok) r.defects.push_back("Miyamoto sign map is not an automorphism");
  return r;
}

std::optional<Matrix> miyamoto(const Algebra& alg, const SparseVec& a, const FusionLaw& law) {
  auto d = decompose(alg, a, law);
  if (!d.semisimple) return std::nullopt;
  return sign_map(d, law);
}

Scalar form_value(const Matrix& gram, const SparseVec& u, const SparseVec& v) {
  return dot(u, gram.apply(v));
}

FormReport verify_form(const Algebra& alg, const Matrix& gram, const std::vector<SparseVec>& axes,
                       const FusionLaw& law) {
  FormReport r;
  const auto n = alg.dim();
  if (gram.rows() != n || gram.cols() != n) throw std::invalid_argument("verify_form: Gram size mismatch");
  r.symmetric = gram.is_symmetric();
  if (!r.symmetric) {
    r.defects.push_back("Gram matrix is not symmetric");
    return r;
  }
  // (e_i, e_j e_k) = (e_i e_j, e_k); by symmetry i <= k suffices.
  r.associates = true;
  std::vector<SparseVec> g_rows(n);
  for (std::size_t i = 0; i < n; ++i) g_rows[i] = gram.row(i);
  for (std::size_t i = 0; i < n && r.associates; ++i)
    for (std::size_t j = 0; j < n && r.associates; ++j)
      for (std::size_t k = i; k < n; ++k)
        if (dot(g_rows[i], alg.product(j, k)) != dot(alg.product(i, j), g_rows[k])) {
          r.associates = false;
          r.defects.push_back("form does not associate on (e" + std::to_string(i) + ", e" +
                              std::to_string(j) + " e" + std::to_string(k) + ")");
          break;
        }

  r.perpendicular = true;
  for (const auto& a : axes) {
    auto spaces = eigenspaces(alg, a, law);
    for (std::size_t s = 0; s < spaces.size(); ++s)
      for (std::size_t t = s + 1; t < spaces.size(); ++t)
        for (const auto& u : spaces[s].basis)
          for (const auto& v : spaces[t].basis)
            if (!form_value(gram, u, v).is_zero()) r.perpendicular = false;
  }
  if (!r.perpendicular) r.defects.push_back("eigenspaces are not perpendicular");
  r.inertia = inertia(gram);
  return r;
}

}  // namespace axial
