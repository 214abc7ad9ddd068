#include "axial/permgrp/element_table.hpp"

#include <algorithm>
#include <stdexcept>

namespace axial {

namespace {

bool acts_regularly(const PermGroup& g) {
  if (g.degree() == 0) return false;
  if (g.orbit(0).size() != g.degree()) return false;
  if (g.has_known_order()) return g.order() == g.degree();
  if (g.degree() > 5000) return false;
  return g.order() == g.degree();
}

}  // namespace

ElementTable::ElementTable(const PermGroup& g, std::uint64_t cap) : group_(g) {
  const auto& gens = g.generators();
  const std::size_t ng = gens.size();
  right_.assign(ng, {});
  regular_ = acts_regularly(g);

  std::vector<Perm> perms;
  if (regular_) {
    if (g.degree() > cap) throw CapExceeded("ElementTable: group order above cap");
    by_point_.assign(g.degree(), UINT32_MAX);
    std::vector<Point> point_of{0};
    by_point_[0] = 0;
    parent_.push_back(0);
    parent_gen_.push_back(0);
    for (std::size_t e = 0; e < point_of.size(); ++e) {
      for (std::size_t k = 0; k < ng; ++k) {
        Point q = gens[k][point_of[e]];
        if (by_point_[q] == UINT32_MAX) {
          by_point_[q] = static_cast<Elem>(point_of.size());
          point_of.push_back(q);
          parent_.push_back(static_cast<Elem>(e));
          parent_gen_.push_back(static_cast<std::uint32_t>(k));
        }
      }
    }
    for (std::size_t k = 0; k < ng; ++k) {
      right_[k].resize(point_of.size());
      for (std::size_t e = 0; e < point_of.size(); ++e) right_[k][e] = by_point_[gens[k][point_of[e]]];
    }
  } else {
    perms.emplace_back(g.degree());
    index_.emplace(perms.back(), 0);
    parent_.push_back(0);
    parent_gen_.push_back(0);
    for (std::size_t e = 0; e < perms.size(); ++e) {
      for (std::size_t k = 0; k < ng; ++k) {
        Perm q = perms[e] * gens[k];
        auto [it, fresh] = index_.emplace(q, static_cast<Elem>(perms.size()));
        if (fresh) {
          if (perms.size() >= cap) throw CapExceeded("ElementTable: group order above cap");
          perms.push_back(std::move(q));
          parent_.push_back(static_cast<Elem>(e));
          parent_gen_.push_back(static_cast<std::uint32_t>(k));
        }
        right_[k].push_back(it->second);
      }
    }
  }
  right_inv_.assign(ng, std::vector<Elem>(size()));
  for (std::size_t k = 0; k < ng; ++k)
    for (std::size_t e = 0; e < size(); ++e) right_inv_[k][right_[k][e]] = static_cast<Elem>(e);
  for (std::size_t k = 0; k < ng; ++k) gen_elem_.push_back(right_[k][0]);
}

std::vector<std::uint32_t> ElementTable::word(Elem a) const {
  std::vector<std::uint32_t> w;
  while (a != 0) {
    w.push_back(parent_gen_[a]);
    a = parent_[a];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

Elem ElementTable::mul(Elem a, Elem b) const {
  // Walk from b back to the root collecting generators, then apply them to a.
  std::uint32_t buf[256];
  std::size_t n = 0;
  std::vector<std::uint32_t> big;
  for (Elem x = b; x != 0; x = parent_[x]) {
    if (n < 256) {
      buf[n++] = parent_gen_[x];
    } else {
      big.push_back(parent_gen_[x]);
    }
  }
  Elem r = a;
  for (auto it = big.rbegin(); it != big.rend(); ++it) r = right_[*it][r];
  for (std::size_t i = n; i-- > 0;) r = right_[buf[i]][r];
  return r;
}

Elem ElementTable::inv(Elem a) const {
  Elem r = 0;
  for (Elem x = a; x != 0; x = parent_[x]) r = right_inv_[parent_gen_[x]][r];
  return r;
}

std::uint64_t ElementTable::order(Elem a) const {
  std::uint64_t n = 1;
  for (Elem x = a; x != 0; x = mul(x, a)) ++n;
  return n;
}

Perm ElementTable::perm(Elem a) const {
  Perm p(group_.degree());
  for (auto k : word(a)) p = p * group_.generators()[k];
  return p;
}

Elem ElementTable::index_of(const Perm& p) const {
  if (p.degree() != group_.degree()) throw std::invalid_argument("ElementTable: degree mismatch");
  if (regular_) {
    Elem e = by_point_[p[0]];
    if (e == UINT32_MAX || perm(e) != p) throw std::invalid_argument("ElementTable: not a group element");
    return e;
  }
  auto it = index_.find(p);
  if (it == index_.end()) throw std::invalid_argument("ElementTable: not a group element");
  return it->second;
}

bool ElementTable::contains(const Perm& p) const {
  if (p.degree() != group_.degree()) return false;
  if (regular_) {
    Elem e = by_point_[p[0]];
    return e != UINT32_MAX && perm(e) == p;
  }
  return index_.count(p) > 0;
}

std::vector<Elem> ElementTable::conjugacy_class(Elem a) const {
  std::vector<char> seen(size(), 0);
  std::vector<Elem> out{a};
  seen[a] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (Elem g : gen_elem_) {
      Elem c = conj(out[i], g);
      if (!seen[c]) {
        seen[c] = 1;
        out.push_back(c);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint32_t> ElementTable::class_ids() const {
  std::vector<std::uint32_t> id(size(), UINT32_MAX);
  std::uint32_t next = 0;
  for (Elem e = 0; e < size(); ++e) {
    if (id[e] != UINT32_MAX) continue;
    for (Elem c : conjugacy_class(e)) id[c] = next;
    ++next;
  }
  return id;
}

std::vector<Elem> ElementTable::closure(const std::vector<Elem>& gens) const {
  std::vector<char> seen(size(), 0);
  std::vector<Elem> out{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (Elem g : gens) {
      Elem c = mul(out[i], g);
      if (!seen[c]) {
        seen[c] = 1;
        out.push_back(c);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace axial
