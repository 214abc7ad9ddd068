#include "axial/fpgrp/groups.hpp"

#include <algorithm>
#include <stdexcept>

namespace axial {

bool is_k_transposition(const ElementTable& t, const std::vector<Elem>& reps, unsigned k) {
  std::vector<char> in_d(t.size(), 0);
  std::vector<Elem> d;
  for (Elem r : reps) {
    if (t.order(r) != 2) throw std::invalid_argument("is_k_transposition: rep is not an involution");
    if (in_d[r]) continue;
    for (Elem c : t.conjugacy_class(r)) {
      in_d[c] = 1;
      d.push_back(c);
    }
  }
  // Conjugation invariance: it suffices to take s among the reps.
  for (Elem s : reps)
    for (Elem u : d) {
      Elem e = t.mul(s, u), p = e;
      bool ok = false;
      for (unsigned m = 1; m <= k; ++m) {
        if (p == 0) {
          ok = true;
          break;
        }
        p = t.mul(p, e);
      }
      if (!ok) return false;
    }
  return true;
}

bool is_k_transposition(const PermGroup& g, const std::vector<Perm>& reps, unsigned k) {
  ElementTable t(g);
  std::vector<Elem> r;
  for (const auto& p : reps) r.push_back(t.index_of(p));
  return is_k_transposition(t, r, k);
}

namespace {

std::array<std::uint64_t, 7> invariants(const ElementTable& t, const std::array<Elem, 3>& g) {
  return {t.order(g[0]),
          t.order(g[1]),
          t.order(g[2]),
          t.order(t.mul(g[0], g[1])),
          t.order(t.mul(g[0], g[2])),
          t.order(t.mul(g[1], g[2])),
          t.order(t.mul(t.mul(g[0], g[1]), g[2]))};
}

// Whether x_i -> img_i extends to an isomorphism from t1 onto t2.
bool extends_to_isomorphism(const ElementTable& t1, const std::array<Elem, 3>& x, const ElementTable& t2,
                            const std::array<Elem, 3>& img) {
  std::vector<Elem> map(t1.size(), UINT32_MAX);
  std::vector<char> hit(t2.size(), 0);
  std::vector<Elem> queue{0};
  map[0] = 0;
  hit[0] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Elem a = queue[i];
    for (std::size_t k = 0; k < 3; ++k) {
      Elem b = t1.mul(a, x[k]);
      Elem fb = t2.mul(map[a], img[k]);
      if (map[b] == UINT32_MAX) {
        if (hit[fb]) return false;
        map[b] = fb;
        hit[fb] = 1;
        queue.push_back(b);
      } else if (map[b] != fb) {
        return false;
      }
    }
  }
  return queue.size() == t1.size() && queue.size() == t2.size();
}

}  // namespace

bool similar(const Triple& a, const Triple& b, std::uint64_t max_order) {
  if (a.group.order() > max_order || b.group.order() > max_order)
    throw CapExceeded("similar: group order above cap");
  if (a.group.order() != b.group.order()) return false;
  ElementTable t1(a.group), t2(b.group);
  std::array<Elem, 3> x{}, y{};
  for (std::size_t i = 0; i < 3; ++i) {
    x[i] = t1.index_of(a.gens[i]);
    y[i] = t2.index_of(b.gens[i]);
  }
  if (t1.closure({x[0], x[1], x[2]}).size() != t1.size() ||
      t2.closure({y[0], y[1], y[2]}).size() != t2.size())
    throw std::invalid_argument("similar: triple does not generate its group");

  auto cls = t2.class_ids();
  std::array<std::uint32_t, 3> target{cls[y[0]], cls[y[1]], cls[y[2]]};
  std::sort(target.begin(), target.end());
  const auto inv = invariants(t1, x);

  // Candidate images: elements of the target classes with the right order.
  std::array<std::vector<Elem>, 3> cand;
  for (std::size_t i = 0; i < 3; ++i)
    for (Elem e = 0; e < t2.size(); ++e)
      if (std::find(target.begin(), target.end(), cls[e]) != target.end() && t2.order(e) == inv[i])
        cand[i].push_back(e);
  // Composing with an inner automorphism keeps the class multiset, so the
  // first image can be a fixed representative of its class.
  std::vector<Elem> first;
  std::vector<char> rep_seen(*std::max_element(cls.begin(), cls.end()) + 1, 0);
  for (Elem e : cand[0])
    if (!rep_seen[cls[e]]) {
      rep_seen[cls[e]] = 1;
      first.push_back(e);
    }
  for (Elem p : first)
    for (Elem q : cand[1]) {
      if (t2.order(t2.mul(p, q)) != inv[3]) continue;
      for (Elem r : cand[2]) {
        std::array<std::uint32_t, 3> got{cls[p], cls[q], cls[r]};
        std::sort(got.begin(), got.end());
        if (got != target) continue;
        if (invariants(t2, {p, q, r}) != inv) continue;
        if (extends_to_isomorphism(t1, x, t2, {p, q, r})) return true;
      }
    }
  return false;
}

namespace {

std::string pres(const std::string& base, const std::string& extra) {
  return "<x,y,z | x^2, y^2, z^2, " + base + ", " + extra + ">";
}

const char* kBase1 = "(x*y)^3, (x*z)^3, (y*z)^3";
const char* kBase3 = "(x*y)^3, (x*z)^3, (y*z)^4";
const char* kBase5 = "(x*y)^3, (x*z)^4, (y*z)^4";
const char* kBase9 = "(x*y)^4, (x*z)^4, (y*z)^4";

}  // namespace

const std::vector<NamedPresentation>& cover_groups() {
  static const std::vector<NamedPresentation> groups = {
      {"G1", pres(kBase1, "(x*y^z)^3"), {}},
      {"G2", pres(kBase1, "(x*y^z)^4"), {}},
      {"G3", pres(kBase3, "(x*y^z)^3"), {}},
      {"G4", pres(kBase3, "(x*y^z)^4"), {}},
      {"G5", pres(kBase5, "(x*y^z)^3, (x*z^y)^3"), {}},
      {"G6", pres(kBase5, "(x*y^z)^3, (x*z^y)^4"), {}},
      {"G7", pres(kBase5, "(x*y^z)^4, (x*z^y)^3"), {}},
      {"G8", pres(kBase5, "(x*y^z)^4, (x*z^y)^4"),
       {{"G8'", "(z*z^(x*y))^2"}, {"G8''", "(z*z^(x*y))^3"}}},
      {"G9", pres(kBase9, "(x*y^z)^3, (x*z^y)^3"), {}},
      {"G10", pres(kBase9, "(x*y^z)^3, (x*z^y)^4"),
       {{"G10'", "(z*z^(x*y))^2"}, {"G10''", "(z*z^(x*y))^3"}}},
      {"G11", pres(kBase9, "(x*y^z)^4, (x*z^y)^3"),
       {{"G11'", "(y*y^(x*z))^2"}, {"G11''", "(y*y^(x*z))^3"}}},
      {"G12", pres(kBase9, "(x*y^z)^4, (x*z^y)^4, (y*z^x)^3"),
       {{"G12'", "(x*x^(y*z))^2"}, {"G12''", "(x*x^(y*z))^3"}}},
      {"G13", pres(kBase9, "(x*y^z)^4, (x*z^y)^4, (y*z^x)^4, (x*x^(y*z))^3"),
       {{"G13'", "(y*y^(x*z))^2"}, {"G13''", "(y*y^(x*z))^3"}}},
      {"G14", pres(kBase9, "(x*y^z)^4, (x*z^y)^4, (y*z^x)^4, (x*x^(y*z))^4"),
       {{"G14'", "(y*y^(x*z))^4, (z*z^(x*y))^4"}}},
  };
  return groups;
}

const NamedPresentation& cover_group(const std::string& name) {
  for (const auto& g : cover_groups())
    if (g.name == name) return g;
  throw std::invalid_argument("unknown cover group '" + name + "'");
}

std::string with_relators(const std::string& text, const std::vector<std::string>& extra) {
  auto close = text.rfind('>');
  if (close == std::string::npos) throw std::invalid_argument("with_relators: malformed presentation");
  std::string out = text.substr(0, close);
  auto last = out.find_last_not_of(" \t\n");
  bool empty_list = last != std::string::npos && out[last] == '|';
  for (const auto& r : extra) {
    out += (empty_list ? " " : ", ") + r;
    empty_list = false;
  }
  return out + ">";
}

Triple regular_triple(const Presentation& p, const CosetOptions& opts) {
  if (p.generators.size() != 3) throw std::invalid_argument("regular_triple: need three generators");
  PermGroup g = perm_rep(coset_enumerate(p, {}, opts));
  return Triple{g, {g.generators()[0], g.generators()[1], g.generators()[2]}};
}

}  // namespace axial
