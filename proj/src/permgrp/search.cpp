#include "axial/permgrp/search.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace axial {

PermGroup subgroup_from_elements(const ElementTable& t, const std::vector<Elem>& elems) {
  std::vector<char> in(t.size(), 0);
  in[0] = 1;
  std::vector<Elem> gens;
  for (Elem e : elems) {
    if (in[e]) continue;
    gens.push_back(e);
    for (Elem x : t.closure(gens)) in[x] = 1;
  }
  std::vector<Perm> perms;
  for (Elem e : gens) perms.push_back(t.perm(e));
  std::uint64_t order = static_cast<std::uint64_t>(std::count(in.begin(), in.end(), 1));
  return PermGroup(t.group().degree(), std::move(perms), order);
}

PermGroup centralizer(const PermGroup& g, const Perm& x, const SearchCaps& caps) {
  ElementTable t(g, caps.nodes);
  if (!t.contains(x)) throw std::invalid_argument("centralizer: element not in group");
  Elem xi = t.index_of(x);
  std::vector<Elem> cent;
  for (Elem e = 0; e < t.size(); ++e)
    if (t.mul(e, xi) == t.mul(xi, e)) cent.push_back(e);
  return subgroup_from_elements(t, cent);
}

bool core_is_trivial(const PermGroup& g, const std::vector<PermGroup>& subgroups,
                     const SearchCaps& caps) {
  ElementTable t(g, caps.nodes);
  std::vector<char> in(t.size(), 1);
  for (Elem e = 1; e < t.size(); ++e) {
    Perm p = t.perm(e);
    for (const auto& s : subgroups)
      if (!s.contains(p)) {
        in[e] = 0;
        break;
      }
  }
  // The core is the set of elements whose whole conjugacy class lies in the intersection.
  std::vector<char> done(t.size(), 0);
  for (Elem e = 1; e < t.size(); ++e) {
    if (!in[e] || done[e]) continue;
    auto cls = t.conjugacy_class(e);
    bool inside = true;
    for (Elem c : cls) {
      done[c] = 1;
      if (!in[c]) inside = false;
    }
    if (inside) return false;
  }
  return true;
}

namespace {

bool normalizes(const PermGroup& g, const Perm& n) {
  for (const auto& s : g.generators())
    if (!g.contains(s.conj(n))) return false;
  return true;
}

// Keeps a generating set of the group found so far.
struct GroupBuilder {
  std::size_t degree;
  std::vector<Perm> gens;
  PermGroup current;
  explicit GroupBuilder(std::size_t d) : degree(d), current(PermGroup::trivial(d)) {}
  void add(const Perm& p) {
    if (current.contains(p)) return;
    gens.push_back(p);
    current = PermGroup(degree, gens);
  }
};

class NormalizerSearch {
 public:
  NormalizerSearch(const PermGroup& g, const SearchCaps& caps)
      : g_(g), n_(g.degree()), caps_(caps), builder_(g.degree()) {
    elems_ = g.elements(caps.nodes);
    const auto& gens = g.generators();
    inv_gens_.reserve(gens.size());
    for (const auto& s : gens) inv_gens_.push_back(s.inverse());
    std::vector<char> seen(n_, 0);
    parent_.assign(n_, -1);
    parent_gen_.assign(n_, 0);
    orbit_size_.assign(n_, 0);
    for (Point r = 0; r < n_; ++r) {
      if (seen[r]) continue;
      std::size_t start = order_.size();
      order_.push_back(r);
      seen[r] = 1;
      for (std::size_t i = start; i < order_.size(); ++i)
        for (std::size_t k = 0; k < gens.size(); ++k) {
          Point q = gens[k][order_[i]];
          if (seen[q]) continue;
          seen[q] = 1;
          parent_[q] = static_cast<std::int64_t>(order_[i]);
          parent_gen_[q] = k;
          order_.push_back(q);
        }
      for (std::size_t i = start; i < order_.size(); ++i) orbit_size_[order_[i]] = order_.size() - start;
    }
    img_.assign(n_, -1);
    used_.assign(n_, 0);
  }

  PermGroup run() {
    std::vector<std::vector<std::uint32_t>> cand(g_.generators().size());
    for (auto& c : cand) {
      c.resize(elems_.size());
      std::iota(c.begin(), c.end(), 0u);
    }
    search(0, cand);
    return builder_.current;
  }

 private:
  void search(std::size_t depth, const std::vector<std::vector<std::uint32_t>>& cand) {
    if (depth == n_) {
      std::vector<Point> im(n_);
      for (std::size_t i = 0; i < n_; ++i) im[i] = static_cast<Point>(img_[i]);
      builder_.add(Perm(std::move(im)));
      return;
    }
    Point q = order_[depth];
    std::vector<Point> options;
    if (parent_[q] >= 0) {
      Point from = static_cast<Point>(img_[static_cast<std::size_t>(parent_[q])]);
      std::vector<char> seen(n_, 0);
      for (auto h : cand[parent_gen_[q]]) {
        Point c = elems_[h][from];
        if (!seen[c] && !used_[c]) {
          seen[c] = 1;
          options.push_back(c);
        }
      }
      std::sort(options.begin(), options.end());
    } else {
      for (Point c = 0; c < n_; ++c)
        if (!used_[c] && orbit_size_[c] == orbit_size_[q]) options.push_back(c);
    }
    const auto& gens = g_.generators();
    for (Point c : options) {
      if (++nodes_ > caps_.nodes) throw CapExceeded("normalizer_in_sym: node cap exceeded");
      img_[q] = c;
      used_[c] = 1;
      std::vector<std::vector<std::uint32_t>> next(cand.size());
      bool ok = true;
      for (std::size_t k = 0; k < gens.size() && ok; ++k) {
        Point pre = inv_gens_[k][q], post = gens[k][q];
        std::int64_t ipre = img_[pre], ipost = img_[post];
        for (auto h : cand[k]) {
          const Perm& e = elems_[h];
          if (ipre >= 0 && e[static_cast<Point>(ipre)] != c) continue;
          if (ipost >= 0 && e[c] != static_cast<Point>(ipost)) continue;
          next[k].push_back(h);
        }
        ok = !next[k].empty();
      }
      if (ok) search(depth + 1, next);
      img_[q] = -1;
      used_[c] = 0;
    }
  }

  const PermGroup& g_;
  std::size_t n_;
  SearchCaps caps_;
  GroupBuilder builder_;
  std::vector<Perm> elems_, inv_gens_;
  std::vector<Point> order_;
  std::vector<std::int64_t> parent_;
  std::vector<std::size_t> parent_gen_, orbit_size_;
  std::vector<std::int64_t> img_;
  std::vector<char> used_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

PermGroup normalizer_in_sym_brute(const PermGroup& g) {
  const std::size_t n = g.degree();
  std::vector<Point> im(n);
  std::iota(im.begin(), im.end(), Point{0});
  GroupBuilder b(n);
  do {
    Perm p(im);
    if (normalizes(g, p)) b.add(p);
  } while (std::next_permutation(im.begin(), im.end()));
  return b.current;
}

PermGroup normalizer_in_sym(const PermGroup& g, const SearchCaps& caps) {
  if (g.degree() <= caps.brute_force_degree) return normalizer_in_sym_brute(g);
  if (g.degree() > caps.normalizer_degree)
    throw CapExceeded("normalizer_in_sym: degree above cap");
  return NormalizerSearch(g, caps).run();
}

std::vector<std::vector<Elem>> subgroups_between(const ElementTable& t, const std::vector<Elem>& lo,
                                                 const std::vector<Elem>& hi,
                                                 const SearchCaps& caps) {
  if (lo.empty() || hi.size() % lo.size() != 0)
    throw std::invalid_argument("subgroups_between: lo is not a subgroup of hi");
  if (hi.size() / lo.size() > caps.subgroup_index)
    throw CapExceeded("subgroups_between: index above cap");
  std::map<std::vector<Elem>, std::vector<Elem>> found;  // subgroup -> generators
  std::vector<std::vector<Elem>> queue{lo};
  found.emplace(lo, lo);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const auto s = queue[i];
    std::vector<char> in(t.size(), 0);
    for (Elem e : s) in[e] = 1;
    const auto gens = found[s];
    for (Elem e : hi) {
      if (in[e]) continue;
      auto g2 = gens;
      g2.push_back(e);
      auto s2 = t.closure(g2);
      if (found.count(s2)) continue;
      found.emplace(s2, g2);
      queue.push_back(std::move(s2));
    }
  }
  std::vector<std::vector<Elem>> out;
  for (auto& [s, gens] : found) out.push_back(s);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
  return out;
}

}  // namespace axial
