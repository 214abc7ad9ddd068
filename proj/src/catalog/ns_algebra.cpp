#include "axial/catalog/ns_algebra.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace axial {

namespace {

using Terms = std::vector<std::pair<long, std::string>>;

struct Combo {
  Scalar scale;
  Terms terms;
};

// scale * sum(coef * label)
Combo c(Scalar scale, Terms terms) { return {std::move(scale), std::move(terms)}; }
Combo just(const std::string& label) { return {Scalar(1), {{1, label}}}; }
Combo zero() { return {Scalar(1), {}}; }

struct ProductRule {
  std::string x, y;
  std::vector<Combo> parts;  // summed
};

struct FormRule {
  std::string x, y;
  Scalar value;
};

struct Spec {
  int n;
  std::vector<std::string> extras;
  std::vector<std::string> extra_axes;  // subset of extras that are axes
  std::vector<ProductRule> products;
  std::vector<FormRule> forms;
};

std::string axis_label(int r, int n) {
  int i = r <= n / 2 ? r : r - n;
  return "a" + std::to_string(i);
}

Spec spec_for(const std::string& tag) {
  const Scalar e8(1, 8);
  if (tag == "2A")
    return {2,
            {"a_rho"},
            {"a_rho"},
            {{"a0", "a1", {c(e8, {{1, "a0"}, {1, "a1"}, {-1, "a_rho"}})}},
             {"a0", "a_rho", {c(e8, {{1, "a0"}, {1, "a_rho"}, {-1, "a1"}})}},
             {"a_rho", "a_rho", {just("a_rho")}}},
            {{"a0", "a1", e8}, {"a0", "a_rho", e8}}};
  if (tag == "2B") return {2, {}, {}, {{"a0", "a1", {zero()}}}, {{"a0", "a1", Scalar(0)}}};
  if (tag == "3A")
    return {3,
            {"u_rho"},
            {},
            {{"a0", "a1",
              {c(Scalar(1, 32), {{2, "a0"}, {2, "a1"}, {1, "a-1"}}), c(Scalar(-135, 2048), {{1, "u_rho"}})}},
             {"a0", "u_rho", {c(Scalar(1, 9), {{2, "a0"}, {-1, "a1"}, {-1, "a-1"}}), c(Scalar(5, 32), {{1, "u_rho"}})}},
             {"u_rho", "u_rho", {just("u_rho")}}},
            {{"a0", "a1", Scalar(13, 256)}, {"a0", "u_rho", Scalar(1, 4)}, {"u_rho", "u_rho", Scalar(8, 5)}}};
  if (tag == "3C")
    return {3,
            {},
            {},
            {{"a0", "a1", {c(Scalar(1, 64), {{1, "a0"}, {1, "a1"}, {-1, "a-1"}})}}},
            {{"a0", "a1", Scalar(1, 64)}}};
  if (tag == "4A")
    return {4,
            {"v_rho"},
            {},
            // Printed with -a_{-1} - a_2; then (a0, a0*a1) = 31/1024 instead of
            // (a0*a0, a1) = 1/32. The signs below satisfy every axiom.
            {{"a0", "a1", {c(Scalar(1, 64), {{3, "a0"}, {3, "a1"}, {1, "a-1"}, {1, "a2"}, {-3, "v_rho"}})}},
             {"a0", "v_rho", {c(Scalar(1, 16), {{5, "a0"}, {-2, "a1"}, {-1, "a2"}, {-2, "a-1"}, {3, "v_rho"}})}},
             {"v_rho", "v_rho", {just("v_rho")}},
             {"a0", "a2", {zero()}}},
            {{"a0", "a1", Scalar(1, 32)}, {"a0", "a2", Scalar(0)}, {"a0", "v_rho", Scalar(3, 8)},
             {"v_rho", "v_rho", Scalar(2)}}};
  if (tag == "4B")
    return {4,
            {"a_rho2"},
            {"a_rho2"},
            {{"a0", "a1", {c(Scalar(1, 64), {{1, "a0"}, {1, "a1"}, {-1, "a-1"}, {-1, "a2"}, {1, "a_rho2"}})}},
             {"a0", "a2", {c(e8, {{1, "a0"}, {1, "a2"}, {-1, "a_rho2"}})}},
             // a0, a2, a_rho2 span a 2A subalgebra.
             {"a0", "a_rho2", {c(e8, {{1, "a0"}, {1, "a_rho2"}, {-1, "a2"}})}},
             {"a_rho2", "a_rho2", {just("a_rho2")}}},
            {{"a0", "a1", Scalar(1, 64)}, {"a0", "a2", e8}, {"a0", "a_rho2", e8}}};
  if (tag == "5A")
    return {5,
            {"w_rho"},
            {},
            {{"a0", "a1",
              {c(Scalar(1, 128), {{3, "a0"}, {3, "a1"}, {-1, "a2"}, {-1, "a-1"}, {-1, "a-2"}}), just("w_rho")}},
             {"a0", "a2",
              {c(Scalar(1, 128), {{3, "a0"}, {3, "a2"}, {-1, "a1"}, {-1, "a-1"}, {-1, "a-2"}}),
               c(Scalar(-1), {{1, "w_rho"}})}},
             {"a0", "w_rho",
              {c(Scalar(7, 4096), {{1, "a1"}, {1, "a-1"}, {-1, "a2"}, {-1, "a-2"}}), c(Scalar(7, 32), {{1, "w_rho"}})}},
             {"w_rho", "w_rho",
              {c(Scalar(175, 524288), {{1, "a-2"}, {1, "a-1"}, {1, "a0"}, {1, "a1"}, {1, "a2"}})}}},
            // a0 and a2 also generate 5A, so (a0,a2) = (a0,a1).
            {{"a0", "a1", Scalar(3, 128)}, {"a0", "a2", Scalar(3, 128)}, {"a0", "w_rho", Scalar(0)},
             {"w_rho", "w_rho", Scalar(875, 524288)}}};
  if (tag == "6A")
    return {6,
            {"a_rho3", "u_rho2"},
            {"a_rho3"},
            {{"a0", "a1",
              {c(Scalar(1, 64), {{1, "a0"}, {1, "a1"}, {-1, "a-2"}, {-1, "a-1"}, {-1, "a2"}, {-1, "a3"}, {1, "a_rho3"}}),
               c(Scalar(45, 2048), {{1, "u_rho2"}})}},
             {"a0", "a2",
              {c(Scalar(1, 32), {{2, "a0"}, {2, "a2"}, {1, "a-2"}}), c(Scalar(-135, 2048), {{1, "u_rho2"}})}},
             // Printed with +a_{-2}; only -a_{-2} is invariant under tau_{a0}
             // (which fixes a0 and u_rho2 and swaps a2, a_{-2}) and matches 3A.
             {"a0", "u_rho2",
              {c(Scalar(1, 9), {{2, "a0"}, {-1, "a2"}, {-1, "a-2"}}), c(Scalar(5, 32), {{1, "u_rho2"}})}},
             {"a0", "a3", {c(e8, {{1, "a0"}, {1, "a3"}, {-1, "a_rho3"}})}},
             {"a_rho3", "u_rho2", {zero()}},
             // a0, a3, a_rho3 span 2A; a_{-2}, a0, a2, u_rho2 span 3A.
             {"a0", "a_rho3", {c(e8, {{1, "a0"}, {1, "a_rho3"}, {-1, "a3"}})}},
             {"a_rho3", "a_rho3", {just("a_rho3")}},
             {"u_rho2", "u_rho2", {just("u_rho2")}}},
            {{"a0", "a1", Scalar(5, 256)}, {"a0", "a2", Scalar(13, 256)}, {"a0", "a3", e8},
             {"a_rho3", "u_rho2", Scalar(0)}, {"a0", "a_rho3", e8}, {"a0", "u_rho2", Scalar(1, 4)},
             {"u_rho2", "u_rho2", Scalar(8, 5)}}};
  throw std::invalid_argument("unknown Norton-Sakuma type '" + tag + "'");
}

using BasisPerm = std::vector<std::size_t>;

BasisPerm compose(const BasisPerm& a, const BasisPerm& b) {
  BasisPerm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

Matrix perm_matrix(const BasisPerm& p) {
  Matrix m(p.size(), p.size());
  for (std::size_t i = 0; i < p.size(); ++i) m.set(i, p[i], Scalar(1));
  return m;
}

SparseVec permute(const SparseVec& v, const BasisPerm& p) {
  SparseVec out;
  for (const auto& e : v.entries()) out.set(static_cast<Index>(p[e.index]), e.value);
  return out;
}

NSAlgebra build(const std::string& tag) {
  Spec s = spec_for(tag);
  NSAlgebra a;
  a.tag = tag;
  a.n = s.n;
  for (int r = 0; r < s.n; ++r) a.labels.push_back(axis_label(r, s.n));
  for (const auto& e : s.extras) a.labels.push_back(e);
  const auto dim = a.labels.size();
  for (int r = 0; r < s.n; ++r) a.axes.push_back(static_cast<std::size_t>(r));
  for (const auto& e : s.extra_axes) a.axes.push_back(a.index_of(e));

  // Symmetries of the n-gon on the axis residues; extras fixed.
  auto residue_map = [&](auto f) {
    BasisPerm p(dim);
    for (std::size_t i = 0; i < dim; ++i) p[i] = i;
    for (int r = 0; r < s.n; ++r) p[static_cast<std::size_t>(r)] = static_cast<std::size_t>(((f(r) % s.n) + s.n) % s.n);
    return p;
  };
  BasisPerm t0 = residue_map([](int r) { return -r; });
  BasisPerm t1 = residue_map([](int r) { return 2 - r; });
  BasisPerm flip = residue_map([](int r) { return 1 - r; });
  a.tau0 = perm_matrix(t0);
  a.tau1 = perm_matrix(t1);

  std::vector<BasisPerm> group;
  {
    BasisPerm id(dim);
    for (std::size_t i = 0; i < dim; ++i) id[i] = i;
    std::set<BasisPerm> seen{id};
    group.push_back(id);
    for (std::size_t k = 0; k < group.size(); ++k)
      for (const auto& g : {t0, flip}) {
        auto h = compose(group[k], g);
        if (seen.insert(h).second) group.push_back(h);
      }
  }

  auto key = [](std::size_t i, std::size_t j) { return std::make_pair(std::min(i, j), std::max(i, j)); };

  std::map<std::pair<std::size_t, std::size_t>, SparseVec> products;
  for (std::size_t i = 0; i < a.axes.size(); ++i) products[key(a.axes[i], a.axes[i])] = SparseVec::unit(static_cast<Index>(a.axes[i]));
  for (const auto& rule : s.products) {
    SparseVec v;
    for (const auto& part : rule.parts)
      for (const auto& [coef, label] : part.terms) v.axpy(part.scale * Scalar(coef), a.vec(label));
    const auto x = a.index_of(rule.x), y = a.index_of(rule.y);
    for (const auto& g : group) {
      auto k = key(g[x], g[y]);
      auto img = permute(v, g);
      auto [it, fresh] = products.emplace(k, img);
      if (!fresh && it->second != img)
        throw std::logic_error(tag + ": conflicting product " + a.labels[k.first] + "*" + a.labels[k.second] +
                               ": " + a.render(it->second) + " vs " + a.render(img));
    }
  }
  std::map<std::pair<std::size_t, std::size_t>, Scalar> forms;
  for (auto ax : a.axes) forms[key(ax, ax)] = Scalar(1);
  for (const auto& rule : s.forms) {
    const auto x = a.index_of(rule.x), y = a.index_of(rule.y);
    for (const auto& g : group) {
      auto [it, fresh] = forms.emplace(key(g[x], g[y]), rule.value);
      if (!fresh && it->second != rule.value)
        throw std::logic_error(tag + ": conflicting form value on " + a.labels[g[x]] + ", " + a.labels[g[y]]);
    }
  }

  a.algebra = Algebra(dim);
  a.gram = Matrix(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i; j < dim; ++j) {
      auto p = products.find(key(i, j));
      if (p == products.end())
        throw std::logic_error(tag + ": missing product " + a.labels[i] + "*" + a.labels[j]);
      a.algebra.set_product(i, j, p->second);
      auto f = forms.find(key(i, j));
      if (f == forms.end()) throw std::logic_error(tag + ": missing form value " + a.labels[i] + ", " + a.labels[j]);
      a.gram.set(i, j, f->second);
      a.gram.set(j, i, f->second);
    }
  return a;
}

}  // namespace

std::size_t NSAlgebra::axis(int i) const { return static_cast<std::size_t>(((i % n) + n) % n); }

std::size_t NSAlgebra::index_of(const std::string& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw std::invalid_argument(tag + ": unknown basis label '" + label + "'");
  return static_cast<std::size_t>(it - labels.begin());
}

SparseVec NSAlgebra::vec(const std::string& label) const {
  return SparseVec::unit(static_cast<Index>(index_of(label)));
}

std::string NSAlgebra::render(const SparseVec& v) const {
  if (v.empty()) return "0";
  std::string out;
  for (const auto& e : v.entries()) {
    Scalar c = e.value;
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (c.sign() < 0) c = -c;
    if (!c.is_one()) out += c.str() + " ";
    out += labels[e.index];
  }
  return out;
}

const std::vector<std::string>& ns_tags() {
  static const std::vector<std::string> tags{"2A", "2B", "3A", "3C", "4A", "4B", "5A", "6A"};
  return tags;
}

const NSAlgebra& ns_algebra(const std::string& tag) {
  static std::mutex m;
  static std::map<std::string, NSAlgebra> cache;
  if (std::find(ns_tags().begin(), ns_tags().end(), tag) == ns_tags().end())
    throw std::invalid_argument("unknown Norton-Sakuma type '" + tag + "'");
  std::lock_guard lock(m);
  auto it = cache.find(tag);
  if (it == cache.end()) it = cache.emplace(tag, build(tag)).first;
  return it->second;
}

int ns_axis_count(const std::string& tag) {
  if (tag.size() != 2 || tag[0] < '1' || tag[0] > '6') throw std::invalid_argument("bad type tag '" + tag + "'");
  return tag[0] - '0';
}

bool DihedralOrbits::satisfies_law() const {
  if (size_a0 != size_a1) return false;
  auto k = size_a0;
  return same_orbit ? (k == 1 || k == 3 || k == 5) : (k == 1 || k == 2 || k == 3);
}

DihedralOrbits dihedral_orbits(const NSAlgebra& alg) {
  std::vector<Matrix> taus;
  for (int i = 0; i < 2; ++i) {
    auto t = miyamoto(alg.algebra, SparseVec::unit(static_cast<Index>(alg.axis(i))));
    if (!t) throw std::logic_error(alg.tag + ": axis is not semisimple");
    taus.push_back(std::move(*t));
  }
  auto orbit = [&](std::size_t start) {
    std::vector<SparseVec> seen{SparseVec::unit(static_cast<Index>(start))};
    for (std::size_t k = 0; k < seen.size(); ++k)
      for (const auto& t : taus) {
        auto img = act(seen[k], t);
        if (std::find(seen.begin(), seen.end(), img) == seen.end()) seen.push_back(img);
      }
    return seen;
  };
  auto o0 = orbit(alg.axis(0)), o1 = orbit(alg.axis(1));
  DihedralOrbits d;
  d.size_a0 = o0.size();
  d.size_a1 = o1.size();
  d.same_orbit = std::find(o0.begin(), o0.end(), SparseVec::unit(static_cast<Index>(alg.axis(1)))) != o0.end();
  return d;
}

std::size_t CatalogReport::defects() const {
  std::size_t n = form.defects.size() + (dihedral_invariant ? 0 : 1);
  for (const auto& [_, r] : axes) n += r.defects.size();
  return n;
}

CatalogReport verify_catalog(const NSAlgebra& alg) {
  CatalogReport r;
  r.tag = alg.tag;
  std::vector<SparseVec> axes;
  for (auto i : alg.axes) {
    auto v = SparseVec::unit(static_cast<Index>(i));
    axes.push_back(v);
    r.axes.emplace_back(alg.labels[i], verify_axis(alg.algebra, v));
  }
  r.form = verify_form(alg.algebra, alg.gram, axes);
  r.dihedral_invariant = true;
  for (const auto* t : {&alg.tau0, &alg.tau1})
    if (!alg.algebra.is_automorphism(*t) || *t * alg.gram * t->transpose() != alg.gram) r.dihedral_invariant = false;
  return r;
}

}  // namespace axial
