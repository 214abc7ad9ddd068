#include "axial/engine/partial.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "axial/catalog/algebra.hpp"
#include "axial/catalog/fusion.hpp"
#include "axial/catalog/ns_algebra.hpp"
#include "axial/ratlin/subspace.hpp"

namespace axial {

bool PartialAlgebra::has_product(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  return j < table.size() && table[j][i].has_value();
}

const SparseVec& PartialAlgebra::product(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  if (j >= table.size() || !table[j][i])
    throw std::logic_error("PartialAlgebra: product " + labels[i] + " * " + labels[j] + " is unknown");
  return *table[j][i];
}

void PartialAlgebra::set_product(std::size_t i, std::size_t j, SparseVec v) {
  if (i > j) std::swap(i, j);
  if (table.size() <= j) {
    auto old = table.size();
    table.resize(j + 1);
    for (auto k = old; k <= j; ++k) table[k].resize(k + 1);
  }
  table[j][i] = std::move(v);
}

SparseVec PartialAlgebra::mul(const SparseVec& u, const SparseVec& v) const {
  thread_local Accumulator acc;
  if (acc.size() < dim) acc.resize(dim);
  for (const auto& x : u.entries())
    for (const auto& y : v.entries()) acc.add(x.value * y.value, product(x.index, y.index));
  return acc.take();
}

Matrix PartialAlgebra::element_matrix(const Perm& g) const {
  Matrix m = Matrix::identity(dim);
  for (auto k : elements->word(elements->index_of(g))) m = m * gens[k];
  return m;
}

std::string PartialAlgebra::render(const SparseVec& v) const {
  if (v.empty()) return "0";
  std::string out;
  for (const auto& e : v.entries()) {
    if (!out.empty()) out += " + ";
    out += e.value.str() + " " + labels[e.index];
  }
  return out;
}

namespace {

std::string join(const std::vector<Point>& s) {
  std::string out;
  for (auto p : s) out += (out.empty() ? "" : ",") + std::to_string(p);
  return out;
}

// Points of X playing a_0 .. a_{n-1} in <<x, y>>: a_{-r} = a_r^{tau_x},
// a_{2-r} = a_r^{tau_y}.
std::vector<Point> residues(const AxisAction& act, Point x, Point y, int n) {
  std::vector<std::int64_t> res(static_cast<std::size_t>(n), -1);
  res[0] = x;
  res[1 % n] = y;
  if (n == 1) throw std::logic_error("residues: n = 1");
  std::vector<int> queue{0, 1};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    int r = queue[i];
    auto p = static_cast<Point>(res[static_cast<std::size_t>(r)]);
    std::pair<int, Point> next[2] = {{(n - r) % n, act.tau[x][p]}, {((2 - r) % n + n) % n, act.tau[y][p]}};
    for (auto [s, q] : next) {
      auto& slot = res[static_cast<std::size_t>(s)];
      if (slot < 0) {
        slot = q;
        queue.push_back(s);
      } else if (slot != q) {
        throw std::invalid_argument("seed: the involutions of " + std::to_string(x) + ", " + std::to_string(y) +
                                    " do not act as on the n-gon");
      }
    }
  }
  std::vector<Point> out;
  for (auto r : res) {
    if (r < 0) throw std::invalid_argument("seed: incomplete dihedral orbit");
    out.push_back(static_cast<Point>(r));
  }
  auto sorted = out;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
      sorted != dihedral_closure(act, x, y))
    throw std::invalid_argument("seed: pair " + std::to_string(x) + ", " + std::to_string(y) +
                                " does not match its type");
  return out;
}

void size_table(PartialAlgebra& p) {
  auto old = p.table.size();
  if (old >= p.dim) return;
  p.table.resize(p.dim);
  for (auto k = old; k < p.dim; ++k) p.table[k].resize(k + 1);
}

struct UnionFind {
  std::vector<std::size_t> parent;
  std::size_t add() {
    parent.push_back(parent.size());
    return parent.size() - 1;
  }
  std::size_t find(std::size_t k) {
    while (parent[k] != k) k = parent[k] = parent[parent[k]];
    return k;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

SparseVec tail(const SparseVec& v, std::size_t from) {
  std::vector<SparseVec::Entry> e;
  for (const auto& x : v.entries())
    if (x.index >= from) e.push_back(x);
  return SparseVec::from_sorted(std::move(e));
}

SparseVec combine(const std::vector<SparseVec>& vs, const SparseVec& coeffs, std::size_t n) {
  Accumulator acc(n);
  for (const auto& c : coeffs.entries()) acc.add(c.value, vs[c.index]);
  return acc.take();
}

}  // namespace

PartialAlgebra seed(const Shape& shape) {
  const auto& act = shape.action;
  PartialAlgebra p;
  p.action = act;
  p.elements = std::make_shared<ElementTable>(act.group);
  const auto nx = act.size();

  // Extra vectors keyed by (type, axis set); a 4B shares its extra axis with
  // the 2A subalgebras on both diagonals.
  std::map<std::string, std::size_t> key_id;
  std::vector<std::pair<std::string, std::vector<Point>>> keys;
  UnionFind uf;
  auto key_of = [&](const std::string& type, std::vector<Point> set) {
    std::sort(set.begin(), set.end());
    auto name = type + ":" + join(set);
    auto it = key_id.find(name);
    if (it != key_id.end()) return it->second;
    auto id = uf.add();
    key_id.emplace(name, id);
    keys.emplace_back(type, std::move(set));
    return id;
  };

  struct Glue {
    const NSAlgebra* alg;
    std::vector<Point> res;
    std::vector<std::size_t> extra_keys;  // parallel to the extra labels of alg
  };
  std::vector<Glue> glues;
  for (Point x = 0; x < nx; ++x)
    for (Point y = x + 1; y < nx; ++y) {
      const auto& type = shape.type_of(x, y);
      const auto& alg = ns_algebra(type);
      Glue g{&alg, residues(act, x, y, alg.n), {}};
      const auto& r = g.res;
      if (type == "2A") {
        g.extra_keys.push_back(key_of("2A", {x, y}));
      } else if (type == "3A") {
        g.extra_keys.push_back(key_of("3A", r));
      } else if (type == "4A") {
        g.extra_keys.push_back(key_of("4A", r));
      } else if (type == "4B") {
        auto k0 = key_of("2A", {r[0], r[2]}), k1 = key_of("2A", {r[1], r[3]});
        uf.unite(k0, k1);
        g.extra_keys.push_back(k0);
      } else if (type != "2B" && type != "3C") {
        throw std::invalid_argument("seed: type " + type + " is outside the 4-algebra scope");
      }
      glues.push_back(std::move(g));
    }

  // Basis: axes, then one vector per class of extra keys.
  for (Point x = 0; x < nx; ++x) p.labels.push_back("a" + std::to_string(x));
  std::map<std::size_t, std::size_t> root_index;
  for (std::size_t k = 0; k < keys.size(); ++k) {
    auto r = uf.find(k);
    if (root_index.count(r)) continue;
    root_index[r] = p.labels.size();
    const auto& [type, set] = keys[r];
    std::string letter = type == "3A" ? "u" : type == "4A" ? "v" : "e";
    p.labels.push_back(letter + "(" + join(set) + ")");
  }
  auto extra_index = [&](std::size_t k) { return root_index.at(uf.find(k)); };
  p.dim = p.labels.size();
  p.known = 0;
  for (Point x = 0; x < nx; ++x) p.axes.push_back(SparseVec::unit(x));
  for (const auto& [r, idx] : root_index) p.extras.emplace_back(p.labels[idx], SparseVec::unit(static_cast<Index>(idx)));
  std::sort(p.extras.begin(), p.extras.end(),
            [](const auto& a, const auto& b) { return a.second.first_index() < b.second.first_index(); });

  // Products inside every glued subalgebra.
  for (const auto& g : glues) {
    const auto& alg = *g.alg;
    std::vector<std::size_t> map(alg.dim());
    for (int r = 0; r < alg.n; ++r) map[alg.axis(r)] = g.res[static_cast<std::size_t>(r)];
    for (std::size_t k = 0; k < g.extra_keys.size(); ++k)
      map[static_cast<std::size_t>(alg.n) + k] = extra_index(g.extra_keys[k]);
    for (std::size_t i = 0; i < alg.dim(); ++i)
      for (std::size_t j = i; j < alg.dim(); ++j) {
        Accumulator acc(p.dim);
        for (const auto& e : alg.algebra.product(i, j).entries()) acc.add(static_cast<Index>(map[e.index]), e.value);
        auto v = acc.take();
        if (p.has_product(map[i], map[j])) {
          if (p.product(map[i], map[j]) != v)
            throw std::invalid_argument("seed: glued subalgebras disagree on " + p.labels[map[i]] + " * " +
                                        p.labels[map[j]]);
        } else {
          p.set_product(map[i], map[j], std::move(v));
        }
      }
  }
  size_table(p);

  // G permutes axes and extra keys.
  for (const auto& gen : act.group.generators()) {
    std::vector<SparseVec> rows(p.dim);
    for (Point x = 0; x < nx; ++x) rows[x] = SparseVec::unit(gen[x]);
    for (std::size_t k = 0; k < keys.size(); ++k) {
      std::vector<Point> img;
      for (auto q : keys[k].second) img.push_back(gen[q]);
      std::sort(img.begin(), img.end());
      auto it = key_id.find(keys[k].first + ":" + join(img));
      if (it == key_id.end()) throw std::logic_error("seed: extra vectors are not closed under the group");
      rows[extra_index(k)] = SparseVec::unit(static_cast<Index>(extra_index(it->second)));
    }
    p.gens.push_back(Matrix::from_rows(std::move(rows), p.dim));
  }
  return p;
}

std::size_t expand(PartialAlgebra& p) {
  const auto n = p.dim;
  std::vector<std::pair<std::size_t, std::size_t>> fresh;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i <= j; ++i)
      if (!p.has_product(i, j)) fresh.emplace_back(i, j);
  p.known = n;
  if (fresh.empty()) return 0;
  p.dim = n + fresh.size();
  for (std::size_t k = 0; k < fresh.size(); ++k) {
    auto [i, j] = fresh[k];
    p.labels.push_back("(" + p.labels[i] + "*" + p.labels[j] + ")");
    p.set_product(i, j, SparseVec::unit(static_cast<Index>(n + k)));
  }
  for (auto& m : p.gens) {
    std::vector<SparseVec> rows;
    rows.reserve(p.dim);
    for (std::size_t i = 0; i < n; ++i) rows.push_back(m.row(i));
    for (auto [i, j] : fresh) rows.push_back(p.mul(m.row(i), m.row(j)));
    m = Matrix::from_rows(std::move(rows), p.dim);
  }
  return fresh.size();
}

namespace {

const FusionLaw& law() { return FusionLaw::monster(); }

struct Tagged {
  unsigned mask;  // eigenvalue positions of the law
  SparseVec v;
};

bool single(unsigned mask) { return mask != 0 && (mask & (mask - 1)) == 0; }
std::size_t bit(unsigned mask) { return static_cast<std::size_t>(__builtin_ctz(mask)); }

class AxisWork {
 public:
  AxisWork(const PartialAlgebra& p, const SparseVec& a, const Matrix& tau) : p_(p), a_(a), tau_(tau) {
    const auto w = p.known;
    ad_.reserve(w);
    for (std::size_t i = 0; i < w; ++i) ad_.push_back(p.mul(a, SparseVec::unit(static_cast<Index>(i))));
  }

  // a * v for v in W
  SparseVec ad(const SparseVec& v) const {
    Accumulator acc(p_.dim);
    for (const auto& e : v.entries()) acc.add(e.value, ad_[e.index]);
    return acc.take();
  }

  void run(std::vector<SparseVec>& rels) {
    const auto w = p_.known, n = p_.dim;
    const auto& ev = law().eigenvalues();
    add({1u << law().position(Scalar(1)), a_});

    // Grading: tau_a is +1 on A_1 + A_0 + A_1/4 and -1 on A_1/32.
    Subspace minus(n, PivotRule::Last), plus(n, PivotRule::Last);
    for (std::size_t i = 0; i < w; ++i) {
      auto e = SparseVec::unit(static_cast<Index>(i));
      auto t = act(e, tau_);
      minus.insert(e - t);
      plus.insert(e + t);
    }
    const unsigned m32 = 1u << law().position(Scalar(1, 32));
    const unsigned mplus = ((1u << law().size()) - 1) & ~m32;
    for (const auto& r : minus.basis()) {
      rels.push_back(ad(r) - Scalar(1, 32) * r);
      add({m32, r});
    }
    for (const auto& r : plus.basis()) add({mplus, r});

    // Eigenvectors inside W.
    for (std::size_t k = 0; k < ev.size(); ++k) {
      std::vector<SparseVec> rows;
      for (std::size_t i = 0; i < w; ++i) rows.push_back(ad_[i] - ev[k] * SparseVec::unit(static_cast<Index>(i)));
      for (const auto& c : dependencies(rows, n)) {
        SparseVec u;
        for (const auto& e : c.entries()) u.set(e.index, e.value);
        auto t = act(u, tau_);
        auto bad = (1u << k) == m32 ? u + t : u - t;
        if (!bad.empty()) rels.push_back(bad);
        add({1u << k, u});
      }
    }

    for (int pass = 0; pass < 2; ++pass) {
      decompose(rels);
      fusion_products();
    }
    decompose(rels);
    direct_sum(rels);
    resurrect(rels);
  }

 private:
  void add(Tagged t) {
    if (!t.v.empty()) tags_.push_back(std::move(t));
  }

  // Splits vectors known to lie in a sum of eigenspaces into their components
  // when enough products with a are known; the components are eigenvectors.
  void decompose(std::vector<SparseVec>& rels) {
    const auto w = p_.known, n = p_.dim;
    const auto& ev = law().eigenvalues();
    std::map<unsigned, std::vector<SparseVec>> by_mask;
    for (std::size_t t = done_decompose_; t < tags_.size(); ++t)
      if (!single(tags_[t].mask)) by_mask[tags_[t].mask].push_back(tags_[t].v);
    done_decompose_ = tags_.size();
    for (auto& [mask, vs] : by_mask) {
      std::vector<Scalar> vals;
      for (std::size_t k = 0; k < ev.size(); ++k)
        if (mask & (1u << k)) vals.push_back(ev[k]);
      const auto depth = vals.size();  // need x, ad x, .., ad^{depth-2} x in W
      if (depth > 3) continue;
      Subspace s(n, PivotRule::Last);
      for (const auto& v : vs) s.insert(v);
      std::vector<SparseVec> base;
      for (const auto& r : s.basis())
        if (p_.in_known(r)) base.push_back(r);
      for (std::size_t level = 1; level + 1 < depth && !base.empty(); ++level) {
        // keep combinations whose ad^level image stays in W
        std::vector<SparseVec> imgs, tails;
        for (const auto& b : base) {
          SparseVec x = b;
          for (std::size_t l = 0; l < level; ++l) x = ad(x);
          tails.push_back(tail(x, w));
        }
        std::vector<SparseVec> next;
        for (const auto& c : dependencies(tails, n)) next.push_back(combine(base, c, n));
        base = std::move(next);
      }
      for (const auto& x : base) {
        std::vector<SparseVec> chain{x};
        while (chain.size() < depth) chain.push_back(ad(chain.back()));
        // components via Lagrange interpolation on the chain x, ad x, ...
        for (std::size_t i = 0; i < vals.size(); ++i) {
          std::vector<Scalar> poly{Scalar(1)};
          for (std::size_t j = 0; j < vals.size(); ++j) {
            if (j == i) continue;
            Scalar d = vals[i] - vals[j];
            std::vector<Scalar> next(poly.size() + 1, Scalar(0));
            for (std::size_t k = 0; k < poly.size(); ++k) {
              next[k + 1] += poly[k] / d;
              next[k] -= poly[k] * vals[j] / d;
            }
            poly = std::move(next);
          }
          Accumulator acc(n);
          for (std::size_t k = 0; k < poly.size(); ++k) acc.add(poly[k], chain[k]);
          add({1u << law().position(vals[i]), acc.take()});
        }
        // and when the last chain element is in W, the minimal polynomial
        if (p_.in_known(chain.back())) {
          std::vector<Scalar> poly{Scalar(1)};
          for (const auto& v : vals) {
            std::vector<Scalar> next(poly.size() + 1, Scalar(0));
            for (std::size_t k = 0; k < poly.size(); ++k) {
              next[k + 1] += poly[k];
              next[k] -= poly[k] * v;
            }
            poly = std::move(next);
          }
          chain.push_back(ad(chain.back()));
          Accumulator acc(n);
          for (std::size_t k = 0; k < poly.size(); ++k) acc.add(poly[k], chain[k]);
          auto r = acc.take();
          if (!r.empty()) rels.push_back(std::move(r));
        }
      }
    }
  }

  // Products of known eigenvectors in W land in the eigenspaces the law allows.
  void fusion_products() {
    const auto n = p_.dim;
    const auto k = law().size();
    std::vector<std::vector<SparseVec>> in_w(k);
    for (std::size_t l = 0; l < k; ++l) {
      Subspace s(n, PivotRule::Last);
      for (const auto& t : tags_)
        if (t.mask == (1u << l)) s.insert(t.v);
      for (const auto& r : s.basis())
        if (p_.in_known(r) && r != a_) in_w[l].push_back(r);
    }
    std::vector<Tagged> out;
    for (std::size_t l = 0; l < k; ++l)
      for (std::size_t m = l; m < k; ++m) {
        auto mask = law().rule(l, m);
        for (std::size_t i = 0; i < in_w[l].size(); ++i)
          for (std::size_t j = (l == m ? i : 0); j < in_w[m].size(); ++j) {
            auto key = std::make_pair(in_w[l][i].str(), in_w[m][j].str());
            if (!seen_products_.insert(key).second) continue;
            out.push_back({mask, p_.mul(in_w[l][i], in_w[m][j])});
          }
      }
    for (auto& t : out) add(std::move(t));
  }

  // A vanishing sum of vectors from eigenspace sums splits along groups of
  // overlapping eigenvalue sets.
  void direct_sum(std::vector<SparseVec>& rels) {
    const auto n = p_.dim;
    const auto& tags = tags_;
    std::vector<SparseVec> vs;
    for (const auto& t : tags) vs.push_back(t.v);
    for (const auto& c : dependencies(vs, n)) {
      std::vector<Tagged> blocks;
      for (const auto& e : c.entries()) blocks.push_back({tags[e.index].mask, e.value * tags[e.index].v});
      bool merged = true;
      while (merged) {
        merged = false;
        for (std::size_t i = 0; i < blocks.size() && !merged; ++i)
          for (std::size_t j = i + 1; j < blocks.size() && !merged; ++j)
            if (blocks[i].mask & blocks[j].mask) {
              blocks[i].mask |= blocks[j].mask;
              blocks[i].v += blocks[j].v;
              blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(j));
              merged = true;
            }
      }
      if (blocks.size() < 2) continue;
      for (auto& b : blocks)
        if (!b.v.empty()) rels.push_back(std::move(b.v));
    }
  }

  // If x = sum of eigenvectors u_l lies in W, then a x = sum lambda_l u_l.
  void resurrect(std::vector<SparseVec>& rels) {
    const auto w = p_.known, n = p_.dim;
    const auto& ev = law().eigenvalues();
    std::vector<SparseVec> vs, tails;
    std::vector<Scalar> lam;
    for (const auto& t : mask_bases())
      if (single(t.mask)) {
        vs.push_back(t.v);
        tails.push_back(tail(t.v, w));
        lam.push_back(ev[bit(t.mask)]);
      }
    for (const auto& c : dependencies(tails, n)) {
      Accumulator x(n), y(n);
      for (const auto& e : c.entries()) {
        x.add(e.value, vs[e.index]);
        y.add(e.value * lam[e.index], vs[e.index]);
      }
      auto xv = x.take();
      auto r = ad(xv) - y.take();
      if (!r.empty()) rels.push_back(std::move(r));
    }
  }

  // one basis per eigenvalue set: dependencies inside a set say nothing
  std::vector<Tagged> mask_bases() const {
    std::map<unsigned, Subspace> spans;
    for (const auto& t : tags_) {
      auto it = spans.try_emplace(t.mask, p_.dim, PivotRule::Last).first;
      it->second.insert(t.v);
    }
    std::vector<Tagged> out;
    for (const auto& [mask, s] : spans)
      for (const auto& r : s.basis()) out.push_back({mask, r});
    return out;
  }

  const PartialAlgebra& p_;
  const SparseVec& a_;
  const Matrix& tau_;
  std::vector<SparseVec> ad_;
  std::vector<Tagged> tags_;
  std::size_t done_decompose_ = 0;
  std::set<std::pair<std::string, std::string>> seen_products_;
};

}  // namespace

std::vector<SparseVec> find_relations(const PartialAlgebra& p) {
  std::vector<SparseVec> rels;
  for (const auto& orbit : p.action.orbits()) {
    Point x = orbit.front();
    if (!p.in_known(p.axes[x])) continue;
    auto tau = p.element_matrix(p.action.tau[x]);
    AxisWork work(p, p.axes[x], tau);
    work.run(rels);
  }
  Subspace s(p.dim, PivotRule::Last);
  for (const auto& r : rels) s.insert(r);
  return s.basis();
}

ReduceOutcome reduce(PartialAlgebra& p, const std::vector<SparseVec>& rels) {
  ReduceOutcome out;
  const auto n = p.dim, w = p.known;
  Subspace r(n, PivotRule::Last);
  std::deque<SparseVec> queue(rels.begin(), rels.end());
  std::vector<bool> multiplied(n, false);
  while (true) {
    while (!queue.empty()) {
      auto v = std::move(queue.front());
      queue.pop_front();
      v = r.reduce(v);
      if (v.empty()) continue;
      for (const auto& m : p.gens) queue.push_back(act(v, m));
      r.insert(v);
    }
    // ideal: relations inside W times W
    for (std::size_t k = 0; k < r.dim(); ++k) {
      auto c = r.pivot(k);
      if (c >= w || multiplied[c]) continue;
      multiplied[c] = true;
      const auto& row = r.row(k);
      for (std::size_t j = 0; j < w; ++j) queue.push_back(p.mul(row, SparseVec::unit(static_cast<Index>(j))));
    }
    if (queue.empty()) break;
  }
  out.relations = r.dim();
  if (r.dim() == 0) return out;

  std::vector<std::int64_t> newidx(n, -1);
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i)
    if (!r.row_with_pivot(static_cast<Index>(i))) {
      newidx[i] = static_cast<std::int64_t>(keep.size());
      keep.push_back(i);
    }
  auto proj = [&](const SparseVec& v) {
    auto red = r.reduce(v);
    std::vector<SparseVec::Entry> e;
    for (const auto& x : red.entries()) e.push_back({static_cast<Index>(newidx[x.index]), x.value});
    return SparseVec::from_sorted(std::move(e));
  };

  PartialAlgebra q;
  q.action = p.action;
  q.elements = p.elements;
  q.dim = keep.size();
  q.known = static_cast<std::size_t>(std::count_if(keep.begin(), keep.end(), [&](auto i) { return i < w; }));
  for (auto i : keep) q.labels.push_back(p.labels[i]);
  for (std::size_t b = 0; b < keep.size(); ++b)
    for (std::size_t a = 0; a <= b; ++a)
      if (p.has_product(keep[a], keep[b])) q.set_product(a, b, proj(p.product(keep[a], keep[b])));
  size_table(q);
  for (const auto& m : p.gens) {
    std::vector<SparseVec> rows;
    for (auto i : keep) rows.push_back(proj(m.row(i)));
    q.gens.push_back(Matrix::from_rows(std::move(rows), q.dim));
  }
  for (const auto& a : p.axes) q.axes.push_back(proj(a));
  for (const auto& [l, v] : p.extras) q.extras.emplace_back(l, proj(v));

  for (std::size_t x = 0; x < q.axes.size(); ++x)
    if (q.axes[x].empty()) {
      out.collapsed = true;
      out.reason = "axis " + std::to_string(x) + " vanished";
    }
  for (std::size_t x = 0; x < q.axes.size() && !out.collapsed; ++x)
    for (std::size_t y = x + 1; y < q.axes.size() && !out.collapsed; ++y)
      if (q.axes[x] == q.axes[y] && p.action.tau[x] != p.action.tau[y]) {
        out.collapsed = true;
        out.reason = "axes " + std::to_string(x) + " and " + std::to_string(y) + " identified";
      }
  p = std::move(q);
  return out;
}

}  // namespace axial
