#include "axial/engine/construct.hpp"

#include <cstdlib>
#include <stdexcept>

#include "axial/catalog/fusion.hpp"
#include "axial/catalog/ns_algebra.hpp"
#include "axial/ratlin/subspace.hpp"

namespace axial {

namespace {

std::size_t env_size(const char* name, std::size_t fallback) {
  const char* s = std::getenv(name);
  if (!s || !*s) return fallback;
  char* end = nullptr;
  auto v = std::strtoull(s, &end, 10);
  if (*end != '\0' || v == 0) throw std::invalid_argument(std::string(name) + " must be a positive integer");
  return static_cast<std::size_t>(v);
}

std::size_t missing_products(const PartialAlgebra& p) {
  std::size_t k = 0;
  for (std::size_t j = 0; j < p.dim; ++j)
    for (std::size_t i = 0; i <= j; ++i)
      if (!p.has_product(i, j)) ++k;
  return k;
}

// Products of two bases, inserted into s; returns whether s grew.
bool add_products(const Algebra& alg, const std::vector<SparseVec>& u, const std::vector<SparseVec>& v, bool same,
                  Subspace& s) {
  bool grew = false;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = same ? i : 0; j < v.size(); ++j) grew |= s.insert(alg.mul(u[i], v[j]));
  return grew;
}

}  // namespace

ConstructCaps caps_from_env() {
  ConstructCaps c;
  c.max_dim = env_size("AXIAL_MAX_DIM", c.max_dim);
  c.max_rounds = env_size("AXIAL_MAX_ROUNDS", c.max_rounds);
  return c;
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Completed: return "completed";
    case Outcome::Collapsed: return "collapsed";
    case Outcome::Incomplete: return "incomplete";
  }
  return "?";
}

std::string to_string(FormKind k) {
  switch (k) {
    case FormKind::None: return "none";
    case FormKind::Positive: return "positive definite";
    case FormKind::Semidefinite: return "positive semidefinite";
    case FormKind::Indefinite: return "indefinite";
  }
  return "?";
}

Algebra to_algebra(const PartialAlgebra& p) {
  if (!p.complete()) throw std::logic_error("to_algebra: products are still unknown");
  Algebra a(p.dim);
  for (std::size_t j = 0; j < p.dim; ++j)
    for (std::size_t i = 0; i <= j; ++i) a.set_product(i, j, p.product(i, j));
  return a;
}

Construction construct(const Shape& shape, const ConstructCaps& caps) {
  Construction c;
  try {
    c.partial = seed(shape);
  } catch (const std::invalid_argument& e) {
    c.outcome = Outcome::Collapsed;
    c.reason = e.what();
    return c;
  }
  auto& p = c.partial;
  c.trace.push_back(p.dim);
  for (std::size_t round = 0;; ++round) {
    while (true) {
      auto rels = find_relations(p);
      if (rels.empty()) break;
      auto r = reduce(p, rels);
      c.trace.push_back(p.dim);
      if (r.collapsed) {
        c.outcome = Outcome::Collapsed;
        c.reason = r.reason;
        return c;
      }
    }
    if (p.complete()) break;
    if (round == caps.max_rounds) {
      c.reason = "round cap reached";
      return c;
    }
    auto extra = missing_products(p);
    if (p.dim + extra > caps.max_dim) {
      c.reason = "expansion to " + std::to_string(p.dim + extra) + " exceeds the dimension cap";
      return c;
    }
    expand(p);
    c.trace.push_back(p.dim);
  }
  c.outcome = Outcome::Completed;
  c.algebra = to_algebra(p);
  c.verification = verify(p, *c.algebra, shape);
  c.m = closure_length(*c.algebra, p.axes);
  c.form = frobenius_form(*c.algebra, p, shape);
  return c;
}

Verification verify(const PartialAlgebra& p, const Algebra& alg, const Shape& shape) {
  Verification v;
  v.axes = v.primitive = v.miyamoto = v.automorphisms = v.pair_types = true;
  const auto& law = FusionLaw::monster();
  const auto& act = p.action;
  for (std::size_t x = 0; x < p.axes.size(); ++x) {
    auto rep = verify_axis(alg, p.axes[x], law);
    if (!rep.primitive) v.primitive = false;
    if (!rep.idempotent || !rep.semisimple || !rep.fusion_ok || !rep.graded_ok) {
      v.axes = false;
      for (const auto& d : rep.defects) v.defects.push_back("axis " + std::to_string(x) + ": " + d);
      continue;
    }
    auto t = miyamoto(alg, p.axes[x], law);
    if (!t || *t != p.element_matrix(act.tau[x])) {
      v.miyamoto = false;
      v.defects.push_back("axis " + std::to_string(x) + ": Miyamoto involution differs from tau");
    }
  }
  for (std::size_t k = 0; k < p.gens.size(); ++k)
    if (!alg.is_automorphism(p.gens[k])) {
      v.automorphisms = false;
      v.defects.push_back("generator " + std::to_string(k) + " is not an automorphism");
    }
  for (Point x = 0; x < act.size(); ++x)
    for (Point y = x + 1; y < act.size(); ++y) {
      const auto& type = shape.type_of(x, y);
      const auto& ns = ns_algebra(type);
      auto d = generated_dim(alg, {p.axes[x], p.axes[y]});
      bool ok = d == ns.dim();
      if (ok && type[0] == '4') {
        // 4A and 4B have the same dimension; a_0 a_2 vanishes only in 4A
        auto zero = alg.mul(p.axes[x], p.axes[act.tau[y][x]]).empty();
        ok = zero == (type == "4A");
      }
      if (!ok) {
        v.pair_types = false;
        v.defects.push_back("pair " + std::to_string(x) + "," + std::to_string(y) + " is not of type " + type);
      }
    }
  return v;
}

std::size_t generated_dim(const Algebra& alg, const std::vector<SparseVec>& gens) {
  Subspace s(alg.dim());
  for (const auto& g : gens) s.insert(g);
  std::size_t done = 0;
  while (done < s.dim()) {
    auto basis = s.basis();
    auto n = basis.size();
    for (std::size_t i = done; i < n; ++i)
      for (std::size_t j = 0; j <= i; ++j) s.insert(alg.mul(basis[i], basis[j]));
    done = n;
  }
  return s.dim();
}

std::optional<std::size_t> closure_length(const Algebra& alg, const std::vector<SparseVec>& axes) {
  const auto n = alg.dim();
  std::vector<std::vector<SparseVec>> level(2);  // level[k] spans P_k
  Subspace p(n);
  for (const auto& a : axes) p.insert(a);
  level[1] = p.basis();
  for (std::size_t k = 2; p.dim() < n; ++k) {
    bool grew = false;
    for (std::size_t i = 1; i <= k / 2; ++i) grew |= add_products(alg, level[i], level[k - i], i == k - i, p);
    if (!grew) return std::nullopt;
    level.push_back(p.basis());
  }
  return level.size() - 1;
}

FormInfo frobenius_form(const Algebra& alg, const PartialAlgebra& p, const Shape& shape) {
  const auto n = alg.dim();
  auto id = [n](std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    return static_cast<Index>(j * (j + 1) / 2 + i);
  };
  const auto unknowns = n * (n + 1) / 2;
  const auto rhs = static_cast<Index>(unknowns);
  std::vector<SparseVec> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = i; k < n; ++k) {
        // (e_i, e_j e_k) = (e_i e_j, e_k)
        Accumulator acc(unknowns + 1);
        for (const auto& e : alg.product(j, k).entries()) acc.add(id(i, e.index), e.value);
        for (const auto& e : alg.product(i, j).entries()) acc.add(id(e.index, k), -e.value);
        auto r = acc.take();
        if (!r.empty()) rows.push_back(std::move(r));
      }
  // (u, v) for vectors u, v as a row over the unknowns
  auto pairing = [&](const SparseVec& u, const SparseVec& v, const Scalar& value) {
    Accumulator acc(unknowns + 1);
    for (const auto& x : u.entries())
      for (const auto& y : v.entries()) acc.add(id(x.index, y.index), x.value * y.value);
    acc.add(rhs, -value);
    return acc.take();
  };
  const auto& act = p.action;
  for (Point x = 0; x < act.size(); ++x) {
    rows.push_back(pairing(p.axes[x], p.axes[x], Scalar(1)));
    for (Point y = x + 1; y < act.size(); ++y) {
      const auto& ns = ns_algebra(shape.type_of(x, y));
      rows.push_back(pairing(p.axes[x], p.axes[y], ns.gram.at(ns.axis(0), ns.axis(1))));
    }
  }
  auto red = rref(Matrix::from_rows(std::move(rows), unknowns + 1));
  FormInfo f;
  for (auto c : red.pivots)
    if (c == rhs) return f;  // inconsistent
  f.unique = red.rank == unknowns;
  f.gram = Matrix(n, n);
  for (std::size_t r = 0; r < red.rank; ++r) {
    auto c = red.pivots[r];
    // free unknowns are set to 0
    auto value = -red.reduced.row(r).get(rhs);
    std::size_t j = 0;
    while ((j + 1) * (j + 2) / 2 <= c) ++j;
    auto i = c - j * (j + 1) / 2;
    f.gram.set(i, j, value);
    f.gram.set(j, i, value);
  }
  f.inertia = inertia(f.gram);
  if (f.inertia.negative > 0)
    f.kind = FormKind::Indefinite;
  else if (f.inertia.zero > 0)
    f.kind = FormKind::Semidefinite;
  else
    f.kind = FormKind::Positive;
  return f;
}

RadicalQuotient radical_quotient(const PartialAlgebra& p, const Matrix& gram) {
  RadicalQuotient out;
  auto rad = kernel(gram);
  out.radical_dim = rad.size();
  out.quotient = p;
  if (rad.empty()) {
    out.ideal = true;
    return out;
  }
  auto r = reduce(out.quotient, rad);
  out.ideal = r.relations == rad.size();
  out.collapsed = r.collapsed;
  return out;
}

}  // namespace axial
