#include "axial/shapes/action.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace axial {

std::string AxisAction::orbit_sizes() const {
  std::vector<std::size_t> sizes;
  for (const auto& o : orbits()) sizes.push_back(o.size());
  std::sort(sizes.begin(), sizes.end());
  std::string out;
  for (auto s : sizes) out += (out.empty() ? "" : "+") + std::to_string(s);
  return out;
}

AxisAction coset_action(const PermGroup& g, const std::vector<OrbitSpec>& specs, std::string name) {
  ElementTable t(g);
  const auto order = t.size();
  struct Orbit {
    std::vector<Elem> reps;
    std::vector<std::uint32_t> coset_of;  // element -> coset within this orbit
    Elem tau;
  };
  std::vector<Orbit> orbits;
  std::size_t total = 0;
  for (const auto& spec : specs) {
    Orbit o;
    o.tau = t.index_of(spec.tau);
    std::vector<Elem> gens{o.tau};
    for (const auto& s : spec.stabilizer) gens.push_back(t.index_of(s));
    auto stab = t.closure(gens);
    for (Elem s : stab)
      if (t.mul(s, o.tau) != t.mul(o.tau, s))
        throw std::invalid_argument("coset_action: tau is not central in its stabilizer");
    o.coset_of.assign(order, UINT32_MAX);
    for (Elem e = 0; e < order; ++e) {
      if (o.coset_of[e] != UINT32_MAX) continue;
      auto id = static_cast<std::uint32_t>(o.reps.size());
      o.reps.push_back(e);
      for (Elem s : stab) o.coset_of[t.mul(s, e)] = id;
    }
    total += o.reps.size();
    orbits.push_back(std::move(o));
  }

  // Action of an element on X: coset S r -> S r e.
  auto perm_of = [&](Elem e) {
    std::vector<Point> img;
    img.reserve(total);
    std::size_t offset = 0;
    for (const auto& o : orbits) {
      for (Elem r : o.reps) img.push_back(static_cast<Point>(offset + o.coset_of[t.mul(r, e)]));
      offset += o.reps.size();
    }
    return Perm(std::move(img));
  };

  std::vector<Perm> gens;
  for (std::size_t k = 0; k < t.num_generators(); ++k) gens.push_back(perm_of(t.generator(k)));
  AxisAction act;
  act.name = std::move(name);
  act.group = PermGroup(total, gens);
  if (act.group.order() != order) throw std::invalid_argument("coset_action: action is not faithful");
  act.group = PermGroup(total, gens, order);
  for (const auto& o : orbits)
    for (Elem r : o.reps) act.tau.push_back(perm_of(t.conj(o.tau, r)));
  return act;
}

bool is_tau_map(const AxisAction& act) {
  const auto n = act.size();
  if (act.group.degree() != n) return false;
  for (Point x = 0; x < n; ++x) {
    const auto& t = act.tau[x];
    if (!(t * t).is_identity() || !act.group.contains(t)) return false;
    for (const auto& g : act.group.generators())
      if (t.conj(g) != act.tau[g[x]]) return false;
  }
  return true;
}

namespace {

std::vector<Point> orbit_under(const std::vector<const Perm*>& gens, Point p) {
  std::vector<Point> o{p};
  for (std::size_t i = 0; i < o.size(); ++i)
    for (const auto* g : gens) {
      Point q = (*g)[o[i]];
      if (std::find(o.begin(), o.end(), q) == o.end()) o.push_back(q);
    }
  return o;
}

}  // namespace

std::vector<Point> dihedral_closure(const AxisAction& act, Point a, Point b) {
  std::vector<const Perm*> d{&act.tau[a], &act.tau[b]};
  auto oa = orbit_under(d, a), ob = orbit_under(d, b);
  oa.insert(oa.end(), ob.begin(), ob.end());
  std::sort(oa.begin(), oa.end());
  oa.erase(std::unique(oa.begin(), oa.end()), oa.end());
  return oa;
}

std::size_t pair_type_size(const AxisAction& act, Point a, Point b) { return dihedral_closure(act, a, b).size(); }

bool pair_admissible(const AxisAction& act, Point a, Point b) {
  std::vector<const Perm*> d{&act.tau[a], &act.tau[b]};
  auto oa = orbit_under(d, a), ob = orbit_under(d, b);
  if (oa.size() != ob.size()) return false;
  const auto k = oa.size();
  bool same = std::find(oa.begin(), oa.end(), b) != oa.end();
  return same ? (k == 1 || k == 3 || k == 5) : (k == 1 || k == 2 || k == 3);
}

bool is_admissible(const AxisAction& act) {
  for (Point a = 0; a < act.size(); ++a)
    for (Point b = a; b < act.size(); ++b)
      if (!pair_admissible(act, a, b)) return false;
  return true;
}

bool tau_generates(const AxisAction& act) {
  std::vector<Perm> gens;
  for (const auto& t : act.tau)
    if (!t.is_identity() && std::find(gens.begin(), gens.end(), t) == gens.end()) gens.push_back(t);
  PermGroup g0(act.size(), gens);
  return g0.order_big() == act.group.order_big();
}

PairOrbits pair_orbits(const PermGroup& g, std::size_t n) {
  PairOrbits po;
  po.index.assign(n, std::vector<std::int32_t>(n, -1));
  for (Point a = 0; a < n; ++a)
    for (Point b = a + 1; b < n; ++b) {
      if (po.index[a][b] >= 0) continue;
      auto id = static_cast<std::int32_t>(po.orbits.size());
      std::vector<std::pair<Point, Point>> orbit{{a, b}};
      po.index[a][b] = po.index[b][a] = id;
      for (std::size_t i = 0; i < orbit.size(); ++i)
        for (const auto& gen : g.generators()) {
          Point x = gen[orbit[i].first], y = gen[orbit[i].second];
          if (x > y) std::swap(x, y);
          if (po.index[x][y] < 0) {
            po.index[x][y] = po.index[y][x] = id;
            orbit.emplace_back(x, y);
          }
        }
      std::sort(orbit.begin(), orbit.end());
      po.orbits.push_back(std::move(orbit));
    }
  return po;
}

std::vector<Perm> conjugate_tau(const std::vector<Perm>& tau, const Perm& n) {
  std::vector<Perm> out(tau.size());
  for (Point x = 0; x < tau.size(); ++x) out[n[x]] = tau[x].conj(n);
  return out;
}

}  // namespace axial
