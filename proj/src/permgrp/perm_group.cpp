#include "axial/permgrp/perm_group.hpp"

#include <algorithm>
#include <mutex>

namespace axial {

StabChain::StabChain(std::size_t deg, const std::vector<Perm>& gens,
                     const std::vector<Point>& base_prefix)
    : degree(deg) {
  std::vector<Perm> strong;
  for (const auto& g : gens)
    if (!g.is_identity()) strong.push_back(g);

  for (Point b : base_prefix) {
    Level l;
    l.base = b;
    levels.push_back(std::move(l));
  }
  for (const auto& g : strong) {
    bool moves_base = false;
    for (const auto& l : levels)
      if (g[l.base] != l.base) moves_base = true;
    if (!moves_base) {
      Level l;
      l.base = g.first_moved();
      levels.push_back(std::move(l));
    }
  }
  for (std::size_t j = 0; j < levels.size(); ++j) {
    for (const auto& g : strong) {
      bool fixes = true;
      for (std::size_t k = 0; k < j; ++k)
        if (g[levels[k].base] != levels[k].base) fixes = false;
      if (fixes) levels[j].gens.push_back(g);
    }
    compute_orbit(levels[j]);
  }

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels.size()) - 1;
  while (i >= 0) {
    bool restart = false;
    const auto li = static_cast<std::size_t>(i);
    for (std::size_t oi = 0; oi < levels[li].orbit.size() && !restart; ++oi) {
      for (std::size_t si = 0; si < levels[li].gens.size() && !restart; ++si) {
        const Level& l = levels[li];
        Point gamma = l.gens[si][l.orbit[oi]];
        Perm h = l.reps[oi] * l.gens[si] * l.reps[static_cast<std::size_t>(l.where[gamma])].inverse();
        if (h.is_identity()) continue;
        auto [r, j] = sift(std::move(h), li + 1);
        if (r.is_identity()) continue;
        if (j == levels.size()) {
          Level nl;
          nl.base = r.first_moved();
          levels.push_back(std::move(nl));
        }
        for (std::size_t k = li + 1; k <= j; ++k) {
          levels[k].gens.push_back(r);
          compute_orbit(levels[k]);
        }
        i = static_cast<std::ptrdiff_t>(j);
        restart = true;
      }
    }
    if (!restart) --i;
  }
  // Drop trailing prefix levels with trivial orbits; they carry no information.
  while (!levels.empty() && levels.back().orbit.size() == 1) levels.pop_back();
}

void StabChain::compute_orbit(Level& l) const {
  l.where.assign(degree, -1);
  l.orbit.assign(1, l.base);
  l.reps.assign(1, Perm(degree));
  l.where[l.base] = 0;
  for (std::size_t k = 0; k < l.orbit.size(); ++k) {
    for (const auto& g : l.gens) {
      Point q = g[l.orbit[k]];
      if (l.where[q] >= 0) continue;
      l.where[q] = static_cast<std::int32_t>(l.orbit.size());
      l.orbit.push_back(q);
      l.reps.push_back(l.reps[k] * g);
    }
  }
}

std::pair<Perm, std::size_t> StabChain::sift(Perm g, std::size_t from) const {
  for (std::size_t i = from; i < levels.size(); ++i) {
    const Level& l = levels[i];
    Point b = g[l.base];
    if (l.where[b] < 0) return {std::move(g), i};
    g = g * l.reps[static_cast<std::size_t>(l.where[b])].inverse();
  }
  return {std::move(g), levels.size()};
}

mpz_class StabChain::order() const {
  mpz_class o = 1;
  for (const auto& l : levels) o *= static_cast<unsigned long>(l.orbit.size());
  return o;
}

struct PermGroup::Cache {
  std::once_flag once;
  std::unique_ptr<StabChain> chain;
};

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> gens,
                     std::optional<std::uint64_t> known_order)
    : degree_(degree), known_order_(known_order), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens) {
    if (g.degree() != degree) throw std::invalid_argument("PermGroup: generator degree mismatch");
    gens_.push_back(std::move(g));
  }
}

PermGroup PermGroup::trivial(std::size_t degree) { return PermGroup(degree, {}); }

PermGroup PermGroup::symmetric(std::size_t degree) {
  std::vector<Perm> gens;
  if (degree >= 2) {
    std::vector<Point> t(degree), c(degree);
    for (std::size_t i = 0; i < degree; ++i) {
      t[i] = static_cast<Point>(i);
      c[i] = static_cast<Point>((i + 1) % degree);
    }
    std::swap(t[0], t[1]);
    gens.emplace_back(std::move(t));
    gens.emplace_back(std::move(c));
  }
  return PermGroup(degree, std::move(gens));
}

const StabChain& PermGroup::chain() const {
  std::call_once(cache_->once,
                 [this] { cache_->chain = std::make_unique<StabChain>(degree_, gens_, std::vector<Point>{}); });
  return *cache_->chain;
}

mpz_class PermGroup::order_big() const {
  if (known_order_) return mpz_class(static_cast<unsigned long>(*known_order_));
  return chain().order();
}

std::uint64_t PermGroup::order() const {
  if (known_order_) return *known_order_;
  mpz_class o = chain().order();
  if (!o.fits_ulong_p()) throw std::overflow_error("PermGroup::order: exceeds 64 bits");
  return o.get_ui();
}

bool PermGroup::is_trivial() const {
  for (const auto& g : gens_)
    if (!g.is_identity()) return false;
  return true;
}

bool PermGroup::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  return chain().sift(g).first.is_identity();
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  for (const auto& g : gens_)
    if (!other.contains(g)) return false;
  return true;
}

std::vector<Point> PermGroup::orbit(Point p) const {
  if (p >= degree_) throw std::out_of_range("PermGroup::orbit: point");
  std::vector<char> seen(degree_, 0);
  std::vector<Point> out{p};
  seen[p] = 1;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& g : gens_) {
      Point q = g[out[k]];
      if (!seen[q]) {
        seen[q] = 1;
        out.push_back(q);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Point>> PermGroup::orbits() const {
  std::vector<char> seen(degree_, 0);
  std::vector<std::vector<Point>> out;
  for (Point p = 0; p < degree_; ++p) {
    if (seen[p]) continue;
    auto o = orbit(p);
    for (Point q : o) seen[q] = 1;
    out.push_back(std::move(o));
  }
  return out;
}

PermGroup PermGroup::stabilizer(Point p) const {
  if (p >= degree_) throw std::out_of_range("PermGroup::stabilizer: point");
  StabChain c(degree_, gens_, {p});
  if (c.levels.empty() || c.levels.front().base != p) return PermGroup(degree_, gens_);
  std::vector<Perm> gens;
  for (std::size_t i = 1; i < c.levels.size(); ++i)
    for (const auto& g : c.levels[i].gens)
      if (g[p] == p) gens.push_back(g);
  return PermGroup(degree_, std::move(gens));
}

std::vector<Perm> PermGroup::elements(std::uint64_t cap) const {
  const auto& c = chain();
  mpz_class o = c.order();
  if (o > cap) throw CapExceeded("PermGroup::elements: group order above cap");
  std::vector<Perm> out{Perm(degree_)};
  // Elements are u_{k-1} ... u_1 u_0 with u_i a transversal element of level i.
  for (std::size_t i = c.levels.size(); i-- > 0;) {
    std::vector<Perm> next;
    next.reserve(out.size() * c.levels[i].reps.size());
    for (const auto& e : out)
      for (const auto& u : c.levels[i].reps) next.push_back(e * u);
    out = std::move(next);
  }
  return out;
}

}  // namespace axial
