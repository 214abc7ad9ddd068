#include "axial/shapes/shape.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

namespace axial {

namespace {

std::string letters_for(std::size_t n) {
  switch (n) {
    case 2:
    case 4:
      return "AB";
    case 3:
      return "AC";
    case 5:
    case 6:
      return "A";
    default:
      return "";
  }
}

// Whether big (dominating) and small (dominated) types are compatible.
bool compatible(std::size_t nb, char lb, std::size_t ns, char ls) {
  if (nb == ns) return lb == ls;
  if (nb == 4 && ns == 2) return (lb == 'A' && ls == 'B') || (lb == 'B' && ls == 'A');
  if (nb == 6 && (ns == 2 || ns == 3)) return lb == 'A' && ls == 'A';
  return false;
}

int type_rank(const std::string& t) {
  // n descending, then letter ascending.
  return (10 - (t[0] - '0')) * 32 + (t[1] - 'A');
}

}  // namespace

ShapeGraph shape_graph(const AxisAction& act) {
  ShapeGraph sg;
  sg.pairs = pair_orbits(act.group, act.size());
  const auto m = sg.pairs.size();
  sg.n.resize(m);
  sg.dominates.assign(m, std::vector<bool>(m, false));
  sg.edges.assign(m, {});
  for (std::size_t p = 0; p < m; ++p) {
    auto [a, b] = sg.pairs.orbits[p].front();
    auto x = dihedral_closure(act, a, b);
    sg.n[p] = x.size();
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = i + 1; j < x.size(); ++j) {
        auto q = static_cast<std::size_t>(sg.pairs.of(x[i], x[j]));
        if (q != p) sg.dominates[p][q] = true;
      }
  }
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q)
      if (sg.dominates[p][q] || sg.dominates[q][p])
        if (std::find(sg.edges[p].begin(), sg.edges[p].end(), q) == sg.edges[p].end()) sg.edges[p].push_back(q);
  for (auto& e : sg.edges) std::sort(e.begin(), e.end());

  sg.component_of.assign(m, SIZE_MAX);
  for (std::size_t p = 0; p < m; ++p) {
    if (sg.component_of[p] != SIZE_MAX) continue;
    std::vector<std::size_t> comp{p};
    sg.component_of[p] = sg.components.size();
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (auto q : sg.edges[comp[i]])
        if (sg.component_of[q] == SIZE_MAX) {
          sg.component_of[q] = sg.components.size();
          comp.push_back(q);
        }
    sg.components.push_back(comp);
  }

  for (const auto& comp : sg.components) {
    std::vector<std::vector<char>> found;
    std::vector<char> cur(comp.size(), 0);
    auto ok_so_far = [&](std::size_t k) {
      for (std::size_t j = 0; j < k; ++j) {
        auto p = comp[k], q = comp[j];
        if (sg.dominates[p][q] && !compatible(sg.n[p], cur[k], sg.n[q], cur[j])) return false;
        if (sg.dominates[q][p] && !compatible(sg.n[q], cur[j], sg.n[p], cur[k])) return false;
      }
      return true;
    };
    auto rec = [&](auto&& self, std::size_t k) -> void {
      if (k == comp.size()) {
        found.push_back(cur);
        return;
      }
      for (char l : letters_for(sg.n[comp[k]])) {
        cur[k] = l;
        if (ok_so_far(k)) self(self, k + 1);
      }
    };
    rec(rec, 0);
    sg.choices.push_back(std::move(found));
  }
  return sg;
}

std::string Shape::str() const {
  std::map<std::string, std::size_t> counts;
  for (std::size_t q = 0; q < types.size(); ++q) {
    bool dominated = false;
    for (std::size_t p = 0; p < types.size(); ++p)
      if (dominates[p][q] && n[p] > n[q]) dominated = true;
    if (!dominated) ++counts[types[q]];
  }
  return format_shape_terms({counts.begin(), counts.end()});
}

std::string format_shape_terms(std::vector<std::pair<std::string, std::size_t>> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& x, const auto& y) { return type_rank(x.first) < type_rank(y.first); });
  std::string out;
  for (const auto& [t, c] : terms) {
    if (!out.empty()) out += ' ';
    out += c == 1 ? t : "(" + t + ")^" + std::to_string(c);
  }
  return out;
}

std::vector<std::pair<std::string, std::size_t>> parse_shape_string(const std::string& s) {
  std::map<std::string, std::size_t> counts;
  std::size_t i = 0;
  auto fail = [&]() { throw std::invalid_argument("bad shape string '" + s + "' at " + std::to_string(i)); };
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    bool paren = s[i] == '(';
    if (paren) ++i;
    if (i + 1 >= s.size()) fail();
    std::string t = s.substr(i, 2);
    if (t[0] < '1' || t[0] > '6' || !std::isupper(static_cast<unsigned char>(t[1]))) fail();
    i += 2;
    if (paren) {
      if (i >= s.size() || s[i] != ')') fail();
      ++i;
    }
    std::size_t k = 1;
    if (i < s.size() && s[i] == '^') {
      ++i;
      std::size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i == start) fail();
      k = std::stoul(s.substr(start, i - start));
    }
    counts[t] += k;
  }
  std::vector<std::pair<std::string, std::size_t>> out(counts.begin(), counts.end());
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return type_rank(x.first) < type_rank(y.first); });
  return out;
}

std::vector<Perm> tau_stabilizer_gens(const AxisAction& act, const PermGroup& normalizer) {
  constexpr std::size_t kMaxOrbit = 200000;
  std::map<std::vector<Perm>, std::size_t> seen;
  std::vector<std::vector<Perm>> orbit{act.tau};
  std::vector<Perm> transversal{Perm(act.size())};
  seen.emplace(act.tau, 0);
  std::vector<Perm> gens;
  std::set<Perm> have;
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (const auto& s : normalizer.generators()) {
      auto img = conjugate_tau(orbit[i], s);
      auto it = seen.find(img);
      if (it == seen.end()) {
        if (orbit.size() >= kMaxOrbit) throw CapExceeded("tau_stabilizer_gens: orbit too large");
        seen.emplace(img, orbit.size());
        transversal.push_back(transversal[i] * s);
        orbit.push_back(std::move(img));
      } else {
        Perm k = transversal[i] * s * transversal[it->second].inverse();
        if (!k.is_identity() && have.insert(k).second) gens.push_back(k);
      }
    }
  return gens;
}

ShapeEnumeration enumerate_shapes(const AxisAction& act, std::size_t max_n, const SearchCaps& caps) {
  ShapeEnumeration out;
  auto sg = shape_graph(act);
  for (std::size_t p = 0; p < sg.n.size(); ++p)
    if (sg.n[p] > max_n) {
      out.aborted = "pair orbit " + std::to_string(p) + " has n = " + std::to_string(sg.n[p]);
      return out;
    }

  std::vector<Perm> kgens;
  try {
    kgens = tau_stabilizer_gens(act, normalizer_in_sym(act.group, caps));
  } catch (const CapExceeded&) {
    out.upper_bound = true;
  }

  // K acting on pair orbits.
  const auto m = sg.pairs.size();
  std::vector<std::vector<std::size_t>> sigmas;
  {
    std::vector<std::size_t> id(m);
    for (std::size_t i = 0; i < m; ++i) id[i] = i;
    std::vector<std::vector<std::size_t>> gens;
    for (const auto& k : kgens) {
      std::vector<std::size_t> s(m);
      for (std::size_t p = 0; p < m; ++p) {
        auto [a, b] = sg.pairs.orbits[p].front();
        s[p] = static_cast<std::size_t>(sg.pairs.of(k[a], k[b]));
      }
      if (s != id) gens.push_back(std::move(s));
    }
    std::set<std::vector<std::size_t>> all{id};
    sigmas.push_back(id);
    for (std::size_t i = 0; i < sigmas.size(); ++i)
      for (const auto& g : gens) {
        std::vector<std::size_t> h(m);
        for (std::size_t p = 0; p < m; ++p) h[p] = g[sigmas[i][p]];
        if (all.insert(h).second) {
          if (sigmas.size() > 5'000'000) throw CapExceeded("enumerate_shapes: K acts too largely on pair orbits");
          sigmas.push_back(h);
        }
      }
  }
  out.k_pair_action = sigmas.size();

  std::set<std::string> keys;
  std::vector<std::size_t> pick(sg.components.size(), 0);
  for (const auto& c : sg.choices)
    if (c.empty()) return out;
  while (true) {
    std::string letters(m, '?');
    for (std::size_t c = 0; c < sg.components.size(); ++c)
      for (std::size_t k = 0; k < sg.components[c].size(); ++k)
        letters[sg.components[c][k]] = sg.choices[c][pick[c]][k];
    std::string best;
    for (const auto& s : sigmas) {
      std::string img(m, '?');
      for (std::size_t p = 0; p < m; ++p) img[s[p]] = letters[p];
      if (best.empty() || img < best) best = img;
    }
    if (keys.insert(best).second) {
      Shape sh{act, sg.pairs, sg.n, sg.dominates, {}};
      for (std::size_t p = 0; p < m; ++p) sh.types.push_back(std::to_string(sg.n[p]) + letters[p]);
      out.shapes.push_back(std::move(sh));
    }
    std::size_t c = 0;
    while (c < pick.size() && ++pick[c] == sg.choices[c].size()) pick[c++] = 0;
    if (c == pick.size()) break;
  }
  return out;
}

std::optional<std::string> forbidden(const Shape& s) {
  const auto n = s.action.size();
  for (Point a = 0; a < n; ++a)
    for (Point b = 0; b < n; ++b) {
      if (b == a) continue;
      const auto& ab = s.type_of(a, b);
      if (ab[0] != '2') continue;
      for (Point c = b + 1; c < n; ++c) {
        if (c == a) continue;
        const auto& ac = s.type_of(a, c);
        const auto& bc = s.type_of(b, c);
        if (ac[0] != '2' || (bc != "3A" && bc != "3C" && bc != "5A")) continue;
        std::string where = " on axes " + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c);
        if (ab != ac) return "induced " + bc + " with " + ab + " and " + ac + where;
        if (ab == "2A" && bc != "3A") return "induced " + bc + " 2A" + where;
      }
    }
  return std::nullopt;
}

TauMaps tau_maps(const PermGroup& g, const SearchCaps& caps) {
  const auto n = g.degree();
  auto orbits = g.orbits();
  // Candidates per orbit representative: involutions (or 1) central in G_x.
  std::vector<std::vector<Perm>> cands;
  std::vector<std::vector<std::pair<Point, Perm>>> transversals;
  for (const auto& o : orbits) {
    Point x = o.front();
    auto stab = g.stabilizer(x);
    std::vector<Perm> c;
    for (const auto& e : stab.elements(1'000'000)) {
      if (!(e * e).is_identity()) continue;
      bool central = true;
      for (const auto& h : stab.generators())
        if (e * h != h * e) central = false;
      if (central) c.push_back(e);
    }
    cands.push_back(std::move(c));
    std::vector<std::pair<Point, Perm>> tr{{x, Perm(n)}};
    std::vector<bool> seen(n, false);
    seen[x] = true;
    for (std::size_t i = 0; i < tr.size(); ++i)
      for (const auto& s : g.generators()) {
        Point y = s[tr[i].first];
        if (!seen[y]) {
          seen[y] = true;
          tr.emplace_back(y, tr[i].second * s);
        }
      }
    transversals.push_back(std::move(tr));
  }

  TauMaps out;
  std::vector<std::vector<Perm>> found;
  std::vector<std::size_t> pick(orbits.size(), 0);
  std::uint64_t combos = 1;
  for (const auto& c : cands) combos *= c.size();
  if (combos > 1'000'000) throw CapExceeded("tau_maps: too many candidate maps");
  while (true) {
    AxisAction act;
    act.group = g;
    act.tau.assign(n, Perm(n));
    for (std::size_t o = 0; o < orbits.size(); ++o)
      for (const auto& [y, h] : transversals[o]) act.tau[y] = cands[o][pick[o]].conj(h);
    if (is_admissible(act) && tau_generates(act)) found.push_back(act.tau);
    std::size_t o = 0;
    while (o < pick.size() && ++pick[o] == cands[o].size()) pick[o++] = 0;
    if (o == pick.size()) break;
  }
  out.admissible = found.size();

  std::optional<PermGroup> norm;
  try {
    norm = normalizer_in_sym(g, caps);
  } catch (const CapExceeded&) {
    out.deduplicated = false;
  }
  std::set<std::vector<Perm>> covered;
  for (const auto& t : found) {
    if (covered.count(t)) continue;
    std::vector<std::vector<Perm>> orbit{t};
    covered.insert(t);
    if (norm)
      for (std::size_t i = 0; i < orbit.size(); ++i)
        for (const auto& s : norm->generators()) {
          auto img = conjugate_tau(orbit[i], s);
          if (covered.insert(img).second) orbit.push_back(std::move(img));
        }
    AxisAction act;
    act.group = g;
    act.tau = t;
    out.maps.push_back(std::move(act));
  }
  return out;
}

}  // namespace axial
