#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "axial/shapes/configurations.hpp"
#include "axial/shapes/named.hpp"
#include "axial/shapes/shape.hpp"
#include "doctest.h"

using namespace axial;

namespace {

std::multiset<std::string> shape_strings(const ShapeEnumeration& e) {
  std::multiset<std::string> out;
  for (const auto& s : e.shapes) out.insert(s.str());
  return out;
}

std::multiset<std::string> canon(std::initializer_list<const char*> xs) {
  std::multiset<std::string> out;
  for (const char* x : xs) out.insert(format_shape_terms(parse_shape_string(x)));
  return out;
}

const Shape& find_shape(const ShapeEnumeration& e, const std::string& s) {
  auto want = format_shape_terms(parse_shape_string(s));
  for (const auto& sh : e.shapes)
    if (sh.str() == want) return sh;
  FAIL("no shape " << s);
  throw;
}

AxisAction relabel(const AxisAction& a, const Perm& sigma) {
  AxisAction b;
  b.name = a.name;
  std::vector<Perm> gens;
  for (const auto& g : a.group.generators()) gens.push_back(g.conj(sigma));
  b.group = PermGroup(a.size(), gens);
  b.tau = conjugate_tau(a.tau, sigma);
  return b;
}

Perm random_perm(std::mt19937& rng, std::size_t n) {
  std::vector<Point> im(n);
  for (Point i = 0; i < n; ++i) im[i] = i;
  std::shuffle(im.begin(), im.end(), rng);
  return Perm(im);
}

}  // namespace

TEST_CASE("shape strings parse and format canonically") {
  CHECK(format_shape_terms(parse_shape_string("(2A)^2 4A")) == "4A (2A)^2");
  CHECK(format_shape_terms(parse_shape_string("4A^2 2B 2A 2A")) == "(4A)^2 (2A)^2 2B");
  CHECK(format_shape_terms(parse_shape_string("3C 3A")) == "3A 3C");
  CHECK_THROWS_AS(parse_shape_string("4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_shape_string("(4A"), std::invalid_argument);
  CHECK_THROWS_AS(parse_shape_string("4A^"), std::invalid_argument);
}

TEST_CASE("named actions are admissible tau-maps generating the group") {
  std::map<std::string, std::string> orbits{
      {"1/1+1+1", "1+1+1"}, {"2^2/1+2+2", "1+2+2"}, {"2^2/2+2+2a", "2+2+2"}, {"2^2/2+2+2b", "2+2+2"},
      {"S3/1+3", "1+3"},    {"S4/6", "6"},          {"S4/3+6", "3+6"},       {"3^2:2/9", "9"},
      {"PSL(2,7)/21", "21"}, {"4^2:S3/12", "12"},   {"2^3/2+4+4", "2+4+4"}};
  CHECK(named_actions().size() == orbits.size());
  for (const auto& na : named_actions()) {
    CAPTURE(na.name);
    auto act = na.action();
    CHECK(act.orbit_sizes() == orbits.at(na.name));
    CHECK(is_tau_map(act));
    CHECK(is_admissible(act));
    CHECK(tau_generates(act));
  }
  CHECK(named_action("4^2:S3/12").triple.group.order() == 96);
  CHECK(named_action("PSL(2,7)/21").triple.group.order() == 168);
  CHECK_THROWS_AS(named_action("nope"), std::invalid_argument);
}

TEST_CASE("dihedral orbit law on hand-made tau-maps") {
  // S3 on 3 points with every tau trivial: a tau-map, but not generating
  PermGroup s3(3, {Perm::from_cycles("(0 1)", 3), Perm::from_cycles("(1 2)", 3)});
  AxisAction a{"", s3, {Perm(3), Perm(3), Perm(3)}};
  CHECK(is_tau_map(a));
  CHECK_FALSE(tau_generates(a));
  a.tau[0] = Perm::from_cycles("(0 1)", 3);
  CHECK_FALSE(is_tau_map(a));
  a.tau = {Perm::from_cycles("(1 2)", 3), Perm::from_cycles("(0 2)", 3), Perm::from_cycles("(0 1)", 3)};
  CHECK(is_tau_map(a));
  CHECK(is_admissible(a));
  CHECK(pair_type_size(a, 0, 1) == 3);
  // 2^2 on 1+2 where the fixed axis has a non-trivial tau: orbits 1 and 2
  PermGroup v(3, {Perm::from_cycles("(1 2)", 3)});
  AxisAction b{"", v, {Perm::from_cycles("(1 2)", 3), Perm(3), Perm(3)}};
  CHECK_FALSE(pair_admissible(b, 0, 1));
}

TEST_CASE("shape counts of the small actions") {
  std::map<std::string, std::size_t> want{{"1/1+1+1", 4}, {"2^2/1+2+2", 6}, {"S3/1+3", 4},
                                          {"S4/6", 4},    {"S4/3+6", 8},    {"3^2:2/9", 5},
                                          {"PSL(2,7)/21", 4}, {"4^2:S3/12", 4}, {"2^3/2+4+4", 12}};
  for (const auto& [name, count] : want) {
    CAPTURE(name);
    auto e = enumerate_shapes(named_action(name).action());
    CHECK_FALSE(e.upper_bound);
    CHECK_FALSE(e.aborted);
    CHECK(e.shapes.size() == count);
  }
  // the two inequivalent actions on 2+2+2 give 2 and 6 shapes
  std::multiset<std::size_t> two{enumerate_shapes(named_action("2^2/2+2+2a").action()).shapes.size(),
                                 enumerate_shapes(named_action("2^2/2+2+2b").action()).shapes.size()};
  CHECK(two == std::multiset<std::size_t>{2, 6});
}

TEST_CASE("shape lists match the tabulated shapes") {
  auto e = [](const char* n) { return shape_strings(enumerate_shapes(named_action(n).action())); };
  CHECK(e("1/1+1+1") == canon({"(2A)^3", "(2A)^2 2B", "2A (2B)^2", "(2B)^3"}));
  CHECK(e("2^2/1+2+2") ==
        canon({"4A (2A)^2", "4A 2A 2B", "4A (2B)^2", "4B (2A)^2", "4B 2A 2B", "4B (2B)^2"}));
  CHECK(e("S3/1+3") == canon({"3A 2A", "3A 2B", "3C 2A", "3C 2B"}));
  CHECK(e("S4/6") == canon({"3A 2A", "3A 2B", "3C 2A", "3C 2B"}));
  CHECK(e("S4/3+6") == canon({"4A 3A 2A", "4A 3A 2B", "4A 3C 2A", "4A 3C 2B", "4B 3A 2A", "4B 3A 2B",
                              "4B 3C 2A", "4B 3C 2B"}));
  CHECK(e("3^2:2/9") == canon({"(3A)^4", "(3A)^3 3C", "(3A)^2 (3C)^2", "3A (3C)^3", "(3C)^4"}));
  CHECK(e("4^2:S3/12") == canon({"4A 3A", "4A 3C", "4B 3A", "4B 3C"}));
  auto w = e("2^3/2+4+4");
  // two inequivalent assignments share this string
  CHECK(w.count(format_shape_terms(parse_shape_string("(4A)^2 (4B)^2 (2A)^2"))) >= 1);
  auto a = e("2^2/2+2+2a"), b = e("2^2/2+2+2b");
  auto& two = a.size() == 2 ? a : b;
  auto& six = a.size() == 2 ? b : a;
  CHECK(two == canon({"(4A)^3", "(4B)^3"}));
  CHECK(six == canon({"(4A)^2 (2A)^2", "(4A)^2 2A 2B", "(4A)^2 (2B)^2", "(4B)^2 (2A)^2", "(4B)^2 2A 2B",
                      "(4B)^2 (2B)^2"}));
}

TEST_CASE("assignments respect domination and components") {
  for (const auto& na : named_actions()) {
    CAPTURE(na.name);
    auto act = na.action();
    auto g = shape_graph(act);
    for (const auto& s : enumerate_shapes(act).shapes)
      for (std::size_t p = 0; p < s.types.size(); ++p) {
        CHECK(s.types[p][0] - '0' == static_cast<int>(s.n[p]));
        for (std::size_t q = 0; q < s.types.size(); ++q) {
          if (!g.dominates[p][q]) continue;
          const auto &tp = s.types[p], &tq = s.types[q];
          if (s.n[p] == s.n[q])
            CHECK(tp == tq);
          else if (tp[0] == '4')
            CHECK(tq == (tp == "4A" ? "2B" : "2A"));
          else
            FAIL("unexpected domination " << tp << " over " << tq);
        }
      }
  }
}

TEST_CASE("shape type is constant on pair orbits") {
  auto act = named_action("S4/3+6").action();
  for (const auto& s : enumerate_shapes(act).shapes)
    for (Point a = 0; a < act.size(); ++a)
      for (Point b = 0; b < act.size(); ++b) {
        if (a == b) continue;
        for (const auto& g : act.group.generators()) CHECK(s.type_of(a, b) == s.type_of(g[a], g[b]));
      }
}

TEST_CASE("forbidden configurations") {
  auto s3 = enumerate_shapes(named_action("S3/1+3").action());
  CHECK(forbidden(find_shape(s3, "3C 2A")));
  CHECK_FALSE(forbidden(find_shape(s3, "3A 2A")));
  CHECK_FALSE(forbidden(find_shape(s3, "3A 2B")));
  CHECK_FALSE(forbidden(find_shape(s3, "3C 2B")));
  auto s4 = enumerate_shapes(named_action("S4/3+6").action());
  // no axis is 2A-related to both ends of a 3C pair here, so the theorem is silent
  CHECK_FALSE(forbidden(find_shape(s4, "4A 3C 2A")));
  CHECK_FALSE(forbidden(find_shape(s4, "4B 3C 2A")));
  // the 2A/2B mixture on a 1+3 subconfiguration needs a 2L 2L' pair
  auto tri = enumerate_shapes(named_action("1/1+1+1").action());
  for (const auto& s : tri.shapes) CHECK_FALSE(forbidden(s));
}

TEST_CASE("exactly one admissible tau-map up to the normaliser") {
  for (const char* name : {"1/1+1+1", "2^2/1+2+2", "S3/1+3", "S4/6", "S4/3+6", "3^2:2/9", "2^3/2+4+4",
                           "2^2/2+2+2a", "2^2/2+2+2b"}) {
    CAPTURE(name);
    auto act = named_action(name).action();
    auto maps = tau_maps(act.group);
    CHECK(maps.deduplicated);
    REQUIRE(maps.maps.size() == 1);
    // the named map lies in the single N-orbit
    auto k = tau_stabilizer_gens(act, normalizer_in_sym(act.group));
    (void)k;
    std::set<std::vector<Perm>> orbit{maps.maps[0].tau};
    std::vector<std::vector<Perm>> queue{maps.maps[0].tau};
    auto n = normalizer_in_sym(act.group);
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (const auto& s : n.generators()) {
        auto img = conjugate_tau(queue[i], s);
        if (orbit.insert(img).second) queue.push_back(img);
      }
    CHECK(orbit.count(act.tau) == 1);
  }
}

TEST_CASE("shape counts are invariant under relabelling the axes") {
  std::mt19937 rng(7);
  for (const char* name : {"2^2/1+2+2", "S3/1+3", "S4/3+6", "3^2:2/9", "2^3/2+4+4"}) {
    auto act = named_action(name).action();
    auto base = shape_strings(enumerate_shapes(act));
    for (int trial = 0; trial < 3; ++trial) {
      CAPTURE(name);
      auto moved = relabel(act, random_perm(rng, act.size()));
      REQUIRE(is_tau_map(moved));
      CHECK(shape_strings(enumerate_shapes(moved)) == base);
    }
  }
}

TEST_CASE("relabelling by the normaliser fixes the shape set") {
  std::mt19937 rng(11);
  for (const char* name : {"2^2/1+2+2", "S4/3+6", "2^3/2+4+4"}) {
    auto act = named_action(name).action();
    auto n = normalizer_in_sym(act.group);
    auto elems = n.elements();
    auto base = enumerate_shapes(act).shapes.size();
    for (int trial = 0; trial < 4; ++trial) {
      const auto& s = elems[rng() % elems.size()];
      AxisAction b = act;
      b.tau = conjugate_tau(act.tau, s);
      CAPTURE(name);
      CHECK(is_tau_map(b));
      CHECK(enumerate_shapes(b).shapes.size() == base);
    }
  }
}

TEST_CASE("axis configurations") {
  SUBCASE("trivial group") {
    Perm id(1);
    auto c = axis_configurations(PermGroup(1, {}), {id, id, id});
    REQUIRE(c.size() == 1);
    CHECK(c[0].action.orbit_sizes() == "1+1+1");
  }
  SUBCASE("S3 with a fixed axis") {
    const auto& na = named_action("S3/1+3");
    auto c = axis_configurations(na.triple.group, na.triple.gens);
    REQUIRE(c.size() == 1);
    CHECK(c[0].action.orbit_sizes() == "1+3");
  }
  SUBCASE("odd products force the full centraliser") {
    const auto& na = named_action("S4/6");
    ElementTable t(na.triple.group);
    std::array<Elem, 3> g{t.index_of(na.triple.gens[0]), t.index_of(na.triple.gens[1]),
                          t.index_of(na.triple.gens[2])};
    auto opts = stabilizer_options(t, g, g[0]);
    REQUIRE(opts.size() == 1);
    CHECK(opts[0].size() == 4);
  }
  SUBCASE("each named action is among the configurations of its triple") {
    for (const char* name : {"1/1+1+1", "2^2/1+2+2", "2^2/2+2+2a", "2^2/2+2+2b", "S3/1+3", "S4/6", "S4/3+6",
                             "3^2:2/9", "2^3/2+4+4"}) {
      CAPTURE(name);
      const auto& na = named_action(name);
      ElementTable t(na.triple.group);
      auto key = gset_key(t, na.orbits);
      auto cs = axis_configurations(na.triple.group, na.triple.gens);
      std::size_t hits = 0;
      for (const auto& c : cs) {
        CHECK(is_admissible(c.action));
        hits += gset_key(t, c.orbits) == key;
      }
      CHECK(hits == 1);
    }
  }
  SUBCASE("non-generating triple") {
    PermGroup s3(3, {Perm::from_cycles("(0 1)", 3), Perm::from_cycles("(0 1 2)", 3)});
    Perm x = Perm::from_cycles("(0 1)", 3);
    CHECK_THROWS_AS(axis_configurations(s3, {x, x, Perm(3)}), std::invalid_argument);
  }
}
