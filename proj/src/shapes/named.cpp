#include "axial/shapes/named.hpp"

#include <mutex>
#include <stdexcept>

#include "axial/fpgrp/presentation.hpp"
#include "axial/permgrp/search.hpp"

namespace axial {

namespace {

Perm cyc(const char* s, std::size_t n) { return Perm::from_cycles(s, n); }

NamedAction make(std::string name, std::size_t degree, std::array<Perm, 3> gens, std::vector<OrbitSpec> orbits) {
  std::vector<Perm> g;
  for (const auto& p : gens)
    if (!p.is_identity()) g.push_back(p);
  return {std::move(name), {PermGroup(degree, g), gens}, std::move(orbits)};
}

// Single orbit of axes in bijection with the class of x.
NamedAction strong_orbit(std::string name, Triple t) {
  auto c = centralizer(t.group, t.gens[0]);
  std::vector<OrbitSpec> o{{t.gens[0], c.generators()}};
  return {std::move(name), std::move(t), std::move(o)};
}

// v -> c - v on F_3^2, points 3i + j.
Perm affine_reflection(int ci, int cj) {
  std::vector<Point> img(9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) img[3 * i + j] = static_cast<Point>(3 * ((ci - i + 3) % 3) + (cj - j + 3) % 3);
  return Perm(img);
}

// Three involutions generating PSL(2,7) on the projective line over F_7
// (point 7 is infinity): x -> x + 1 and x -> -1/x generate it.
Triple psl27_triple() {
  std::vector<Point> t(8), s(8);
  for (Point x = 0; x < 7; ++x) t[x] = (x + 1) % 7;
  t[7] = 7;
  s[0] = 7;
  s[7] = 0;
  for (Point x = 1; x < 7; ++x)
    for (Point y = 1; y < 7; ++y)
      if ((x * y) % 7 == 6) s[x] = y;
  PermGroup g(8, {Perm(t), Perm(s)});
  std::vector<Perm> inv;
  for (const auto& e : g.elements())
    if (!e.is_identity() && (e * e).is_identity()) inv.push_back(e);
  for (std::size_t j = 1; j < inv.size(); ++j)
    for (std::size_t k = j + 1; k < inv.size(); ++k)
      if (PermGroup(8, {inv[0], inv[j], inv[k]}).order_big() == g.order_big())
        return {g, {inv[0], inv[j], inv[k]}};
  throw std::logic_error("psl27_triple: no generating triple");
}

std::vector<NamedAction> build() {
  std::vector<NamedAction> out;
  {
    Perm id(1);
    out.push_back(make("1/1+1+1", 1, {id, id, id}, {{id, {}}, {id, {}}, {id, {}}}));
  }
  {
    auto y = cyc("(0 1)", 4), z = cyc("(2 3)", 4), id = Perm(4);
    out.push_back(make("2^2/1+2+2", 4, {id, y, z}, {{id, {y, z}}, {y, {}}, {z, {}}}));
  }
  {
    auto x = cyc("(0 1)", 4), y = cyc("(2 3)", 4);
    out.push_back(make("2^2/2+2+2a", 4, {x, y, x * y}, {{x, {}}, {y, {}}, {x * y, {}}}));
    out.push_back(make("2^2/2+2+2b", 4, {x, y, x}, {{x, {}}, {y, {}}, {x, {}}}));
  }
  {
    auto y = cyc("(0 1)", 3), z = cyc("(1 2)", 3), id = Perm(3);
    out.push_back(make("S3/1+3", 3, {id, y, z}, {{id, {y, z}}, {y, {}}}));
  }
  {
    auto x = cyc("(0 1)", 4), y = cyc("(1 2)", 4), z = cyc("(2 3)", 4);
    out.push_back(make("S4/6", 4, {x, y, z}, {{x, {cyc("(2 3)", 4)}}}));
  }
  {
    auto x = cyc("(0 1)(2 3)", 4), y = cyc("(1 2)", 4), z = cyc("(0 1)", 4);
    out.push_back(make("S4/3+6", 4, {x, y, z}, {{x, {cyc("(0 1)", 4), cyc("(0 2)(1 3)", 4)}}, {z, {cyc("(2 3)", 4)}}}));
  }
  {
    auto x = affine_reflection(0, 0), y = affine_reflection(1, 0), z = affine_reflection(0, 1);
    out.push_back(make("3^2:2/9", 9, {x, y, z}, {{x, {}}}));
  }
  out.push_back(strong_orbit("PSL(2,7)/21", psl27_triple()));
  out.push_back(strong_orbit("4^2:S3/12", regular_triple(parse_presentation(cover_group("G2").text))));
  {
    auto x = cyc("(0 1)", 6), y = cyc("(2 3)", 6), z = cyc("(4 5)", 6);
    out.push_back(make("2^3/2+4+4", 6, {x, y, z}, {{x, {y * z}}, {y, {}}, {z, {}}}));
  }
  return out;
}

}  // namespace

const std::vector<NamedAction>& named_actions() {
  static std::once_flag once;
  static std::vector<NamedAction> all;
  std::call_once(once, [] { all = build(); });
  return all;
}

const NamedAction& named_action(const std::string& name) {
  for (const auto& a : named_actions())
    if (a.name == name) return a;
  throw std::invalid_argument("unknown action '" + name + "'");
}

}  // namespace axial
