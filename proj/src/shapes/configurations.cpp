#include "axial/shapes/configurations.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace axial {

namespace {

std::vector<Elem> generator_classes(const ElementTable& t, const std::array<Elem, 3>& gens) {
  std::set<Elem> d;
  for (Elem g : gens)
    if (g != 0)
      for (Elem e : t.conjugacy_class(g)) d.insert(e);
  return {d.begin(), d.end()};
}

bool has_odd_partner(const ElementTable& t, const std::vector<Elem>& d, Elem u) {
  for (Elem e : d) {
    auto k = t.order(t.mul(u, e));
    if (k == 3 || k == 5) return true;
  }
  return false;
}

std::vector<Elem> centralizer_elems(const ElementTable& t, Elem u) {
  std::vector<Elem> c;
  for (Elem e = 0; e < t.size(); ++e)
    if (t.mul(e, u) == t.mul(u, e)) c.push_back(e);
  return c;
}

std::vector<Perm> gens_of(const ElementTable& t, const std::vector<Elem>& s) {
  return subgroup_from_elements(t, s).generators();
}

// Smallest conjugate of (S, u) as a string, so G-isomorphic orbits agree.
std::string orbit_key(const ElementTable& t, const std::vector<Elem>& s, Elem u) {
  std::string best;
  for (Elem g = 0; g < t.size(); ++g) {
    std::vector<Elem> img;
    img.reserve(s.size());
    for (Elem e : s) img.push_back(t.conj(e, g));
    std::sort(img.begin(), img.end());
    std::string k = std::to_string(t.conj(u, g)) + ":";
    for (Elem e : img) k += std::to_string(e) + ",";
    if (best.empty() || k < best) best = std::move(k);
  }
  return best;
}

// Set partitions of {0,1,2} as block id per element.
const std::vector<std::array<int, 3>>& partitions3() {
  static const std::vector<std::array<int, 3>> p{{0, 1, 2}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {0, 0, 0}};
  return p;
}

// X is the axis set of ⟨⟨a,b⟩⟩ for some a, b: X_{a,b} plus at most the one
// extra axis of 2A or 4B, whose involution is rho^{n/2}.
bool two_generated(const AxisAction& act) {
  const auto n = act.size();
  if (n <= 2) return true;
  for (Point a = 0; a < n; ++a)
    for (Point b = a + 1; b < n; ++b) {
      auto x = dihedral_closure(act, a, b);
      if (x.size() == n) return true;
      if (x.size() + 1 != n || x.size() % 2 != 0) continue;
      Perm rho = act.tau[a] * act.tau[b];
      Perm r = Perm(n);
      for (std::size_t k = 0; k < x.size() / 2; ++k) r = r * rho;
      if (r.is_identity()) continue;
      for (Point e = 0; e < n; ++e)
        if (!std::binary_search(x.begin(), x.end(), e) && act.tau[e] == r && act.tau[a][e] == e &&
            act.tau[b][e] == e)
          return true;
    }
  return false;
}

}  // namespace

std::vector<std::vector<Elem>> stabilizer_options(const ElementTable& t, const std::array<Elem, 3>& gens, Elem u,
                                                  const SearchCaps& caps) {
  if (u == 0) {
    std::vector<Elem> all(t.size());
    for (Elem e = 0; e < t.size(); ++e) all[e] = e;
    return {all};
  }
  auto d = generator_classes(t, gens);
  auto c = centralizer_elems(t, u);
  if (has_odd_partner(t, d, u)) return {c};
  std::vector<Elem> h{u};
  for (Elem e : d) {
    auto k = t.order(t.mul(u, e));
    // unique implies strong; using only the unique ones keeps H a lower bound
    if (k == 2 && has_odd_partner(t, d, e)) h.push_back(e);
    if (k == 4) {
      Elem p = t.mul(u, e);
      h.push_back(t.mul(p, p));
    }
  }
  return subgroups_between(t, t.closure(h), c, caps);
}

std::string gset_key(const ElementTable& t, const std::vector<OrbitSpec>& orbits) {
  std::vector<std::string> keys;
  for (const auto& o : orbits) {
    Elem u = t.index_of(o.tau);
    std::vector<Elem> g{u};
    for (const auto& s : o.stabilizer) g.push_back(t.index_of(s));
    keys.push_back(orbit_key(t, t.closure(g), u));
  }
  std::sort(keys.begin(), keys.end());
  std::string out;
  for (const auto& k : keys) out += k + "|";
  return out;
}

std::vector<Configuration> axis_configurations(const PermGroup& g, const std::array<Perm, 3>& triple,
                                               const SearchCaps& caps) {
  std::vector<Perm> nontrivial;
  for (const auto& p : triple) {
    if (p.degree() != g.degree()) throw std::invalid_argument("axis_configurations: degree mismatch");
    if (!(p * p).is_identity()) throw std::invalid_argument("axis_configurations: generator is not an involution");
    if (!p.is_identity()) nontrivial.push_back(p);
  }
  if (PermGroup(g.degree(), nontrivial).order_big() != g.order_big())
    throw std::invalid_argument("axis_configurations: triple does not generate the group");

  ElementTable t(g);
  std::array<Elem, 3> u{};
  for (int i = 0; i < 3; ++i) u[i] = t.index_of(triple[i]);
  std::array<std::vector<std::vector<Elem>>, 3> opts;
  for (int i = 0; i < 3; ++i) opts[i] = stabilizer_options(t, u, u[i], caps);
  auto cls = t.class_ids();

  std::vector<Configuration> out;
  std::set<std::string> seen;
  for (const auto& part : partitions3()) {
    bool ok = true;
    std::vector<int> reps;
    for (int i = 0; i < 3; ++i) {
      int r = static_cast<int>(std::find(part.begin(), part.end(), part[i]) - part.begin());
      if (r == i)
        reps.push_back(i);
      else if (cls[u[r]] != cls[u[i]])
        ok = false;  // only conjugate involutions can share an orbit
    }
    if (!ok) continue;
    std::vector<std::size_t> pick(reps.size(), 0);
    while (true) {
      std::vector<OrbitSpec> specs;
      std::vector<PermGroup> stabs;
      for (std::size_t k = 0; k < reps.size(); ++k) {
        const auto& s = opts[reps[k]][pick[k]];
        specs.push_back({triple[reps[k]], gens_of(t, s)});
        stabs.push_back(subgroup_from_elements(t, s));
      }
      if (core_is_trivial(g, stabs, caps)) {
        // an identified axis i needs a point of its representative's orbit with
        // involution u_i; the class check above guarantees one
        auto key = gset_key(t, specs);
        if (!seen.count(key)) {
          AxisAction act = coset_action(g, specs);
          bool small = true;
          for (Point a = 0; a < act.size() && small; ++a)
            for (Point b = a + 1; b < act.size() && small; ++b)
              if (pair_type_size(act, a, b) > 4) small = false;
          if (small && is_admissible(act) && !two_generated(act)) {
            seen.insert(key);
            act.name = g.order_big().get_str() + " on " + act.orbit_sizes();
            out.push_back({specs, std::move(act)});
          }
        }
      }
      std::size_t k = 0;
      while (k < pick.size() && ++pick[k] == opts[reps[k]].size()) pick[k++] = 0;
      if (k == pick.size()) break;
    }
  }
  return out;
}

}  // namespace axial
