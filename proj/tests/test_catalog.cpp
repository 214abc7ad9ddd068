#include <map>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "axial/catalog/ns_algebra.hpp"
#include "doctest.h"

using namespace axial;

namespace {

SparseVec e(const NSAlgebra& a, const std::string& l) { return a.vec(l); }

SparseVec combo(const NSAlgebra& a, std::vector<std::pair<Scalar, std::string>> terms) {
  SparseVec v;
  for (auto& [c, l] : terms) v.axpy(c, a.vec(l));
  return v;
}

SparseVec random_vec(std::mt19937& rng, std::size_t dim) {
  std::uniform_int_distribution<int> d(-4, 4);
  SparseVec v;
  for (std::size_t i = 0; i < dim; ++i) v.set(static_cast<Index>(i), Scalar(d(rng), 1 + (d(rng) + 4) % 3));
  return v;
}

}  // namespace

TEST_CASE("fusion law: monster law is symmetric and graded") {
  const auto& law = FusionLaw::monster();
  CHECK(law.size() == 4);
  CHECK(law.is_symmetric());
  CHECK(law.is_graded());
  CHECK(law.is_minus(law.position(Scalar(1, 32))));
  CHECK(law.rule(law.position(Scalar(1)), law.position(Scalar(0))) == 0u);
  // An ungraded variant: 1/32 * 1/32 containing 1/32.
  FusionLaw bad({Scalar(1), Scalar(1, 32)}, {{1, 2}, {2, 3}}, {false, true});
  CHECK_FALSE(bad.is_graded());
}

TEST_CASE("ns_algebra: dimensions and printed products") {
  std::map<std::string, std::size_t> dims{{"2A", 3}, {"2B", 2}, {"3A", 4}, {"3C", 3},
                                          {"4A", 5}, {"4B", 5}, {"5A", 6}, {"6A", 8}};
  for (const auto& t : ns_tags()) CHECK_MESSAGE(ns_algebra(t).dim() == dims[t], t);

  const auto& a2 = ns_algebra("2A");
  CHECK(a2.algebra.mul(e(a2, "a0"), e(a2, "a1")) ==
        combo(a2, {{Scalar(1, 8), "a0"}, {Scalar(1, 8), "a1"}, {Scalar(-1, 8), "a_rho"}}));
  const auto& a4 = ns_algebra("4A");
  CHECK(a4.algebra.mul(e(a4, "a0"), e(a4, "a2")).empty());
  CHECK(form_value(a4.gram, e(a4, "a0"), e(a4, "v_rho")) == Scalar(3, 8));
  const auto& b2 = ns_algebra("2B");
  CHECK(b2.algebra.mul(e(b2, "a0"), e(b2, "a1")).empty());
  CHECK(form_value(b2.gram, e(b2, "a0"), e(b2, "a1")) == Scalar(0));

  // Closure under the rotation: a1*a2 in 3C is the image of a0*a1.
  const auto& c3 = ns_algebra("3C");
  CHECK(c3.algebra.mul(e(c3, "a1"), e(c3, "a-1")) ==
        combo(c3, {{Scalar(1, 64), "a1"}, {Scalar(1, 64), "a-1"}, {Scalar(-1, 64), "a0"}}));
  CHECK_THROWS_AS(ns_algebra("7A"), std::invalid_argument);
}

TEST_CASE("golden data: printed form values") {
  std::ifstream in(std::string(AXIAL_DATA_DIR) + "/ns_forms.csv");
  REQUIRE(in);
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::stringstream ss(line);
    std::string tag, x, y, val;
    std::getline(ss, tag, ',');
    std::getline(ss, x, ',');
    std::getline(ss, y, ',');
    std::getline(ss, val, ',');
    const auto& a = ns_algebra(tag);
    CHECK_MESSAGE(form_value(a.gram, a.vec(x), a.vec(y)) == Scalar::parse(val), line);
    ++rows;
  }
  CHECK(rows == 21);
  for (const auto& t : ns_tags()) {
    const auto& a = ns_algebra(t);
    for (auto i : a.axes) CHECK(a.gram.at(i, i) == Scalar(1));
  }
}

TEST_CASE("verify_axis: examples") {
  const auto& b2 = ns_algebra("2B");
  auto r = verify_axis(b2.algebra, e(b2, "a0"));
  CHECK(r.ok());
  CHECK(r.spectrum == std::vector<Scalar>{Scalar(1), Scalar(0)});
  CHECK(r.primitive);
  CHECK(r.fusion_ok);

  const auto& c3 = ns_algebra("3C");
  r = verify_axis(c3.algebra, e(c3, "a0"));
  CHECK(r.spectrum == std::vector<Scalar>{Scalar(1), Scalar(0), Scalar(1, 32)});
  CHECK(r.dims == std::vector<std::size_t>{1, 1, 0, 1});
  // Hand-derived eigenvectors.
  auto ad = [&](const SparseVec& v) { return c3.algebra.mul(e(c3, "a0"), v); };
  auto m = combo(c3, {{1, "a1"}, {-1, "a-1"}});
  CHECK(ad(m) == Scalar(1, 32) * m);
  auto z = combo(c3, {{1, "a1"}, {1, "a-1"}, {Scalar(-1, 32), "a0"}});
  CHECK(ad(z).empty());

  const auto& a5 = ns_algebra("5A");
  r = verify_axis(a5.algebra, e(a5, "a0"));
  CHECK(r.fusion_ok);
  CHECK(r.graded_ok);
  CHECK(r.spectrum.size() == 4);
}

TEST_CASE("catalog: every axis of every type verifies exactly") {
  for (const auto& t : ns_tags()) {
    auto rep = verify_catalog(ns_algebra(t));
    CHECK_MESSAGE(rep.defects() == 0, t);
    CHECK(rep.dihedral_invariant);
    for (const auto& [label, ax] : rep.axes) {
      CHECK_MESSAGE(ax.idempotent, t << " " << label);
      CHECK_MESSAGE(ax.semisimple, t << " " << label);
      CHECK_MESSAGE(ax.primitive, t << " " << label);
      CHECK_MESSAGE(ax.fusion_ok, t << " " << label);
      CHECK_MESSAGE(ax.graded_ok, t << " " << label);
    }
    CHECK(rep.form.associates);
    CHECK(rep.form.perpendicular);
  }
}

TEST_CASE("verify_form: examples") {
  const auto& a2 = ns_algebra("2A");
  auto f = verify_form(a2.algebra, a2.gram, {e(a2, "a0")});
  CHECK(f.associates);
  CHECK(f.inertia == Inertia{3, 0, 0});
  const auto& b2 = ns_algebra("2B");
  CHECK(b2.gram == Matrix::identity(2));
  CHECK(verify_form(b2.algebra, b2.gram, {}).inertia == Inertia{2, 0, 0});
  const auto& a6 = ns_algebra("6A");
  CHECK(verify_form(a6.algebra, a6.gram, {}).associates);
  CHECK(form_value(a6.gram, e(a6, "a_rho3"), e(a6, "u_rho2")) == Scalar(0));
}

TEST_CASE("verifier detects corrupted data") {
  const auto& c3 = ns_algebra("3C");
  Algebra bad = c3.algebra;
  bad.set_product(0, 1, combo(c3, {{Scalar(1, 64), "a0"}, {Scalar(1, 64), "a1"}, {Scalar(1, 64), "a-1"}}));
  auto r = verify_axis(bad, e(c3, "a0"));
  CHECK_FALSE(r.ok());
  CHECK_FALSE(verify_form(bad, c3.gram, {}).associates);

  // The sign printed for a_{-2} in the 6A product a0*u_rho2 breaks the algebra.
  const auto& a6 = ns_algebra("6A");
  Algebra typo = a6.algebra;
  typo.set_product(a6.index_of("a0"), a6.index_of("u_rho2"),
                   combo(a6, {{Scalar(2, 9), "a0"}, {Scalar(-1, 9), "a2"}, {Scalar(1, 9), "a-2"},
                              {Scalar(5, 32), "u_rho2"}}));
  CHECK_FALSE(typo.is_automorphism(a6.tau0));

  // 4A with -a_{-1} - a_2 in a0*a1 (as printed) does not associate.
  const auto& a4 = ns_algebra("4A");
  Algebra printed = a4.algebra;
  auto p01 = combo(a4, {{Scalar(3, 64), "a0"}, {Scalar(3, 64), "a1"}, {Scalar(-1, 64), "a-1"},
                        {Scalar(-1, 64), "a2"}, {Scalar(-3, 64), "v_rho"}});
  CHECK(form_value(a4.gram, e(a4, "a0"), p01) == Scalar(31, 1024));
  printed.set_product(a4.index_of("a0"), a4.index_of("a1"), p01);
  CHECK_FALSE(verify_form(printed, a4.gram, {}).associates);
  CHECK(form_value(a4.gram, e(a4, "a0"), a4.algebra.mul(e(a4, "a0"), e(a4, "a1"))) == Scalar(1, 32));
}

TEST_CASE("miyamoto: examples") {
  const auto& b2 = ns_algebra("2B");
  CHECK(*miyamoto(b2.algebra, e(b2, "a0")) == Matrix::identity(2));

  const auto& c3 = ns_algebra("3C");
  auto t = *miyamoto(c3.algebra, e(c3, "a0"));
  CHECK(act(e(c3, "a1"), t) == e(c3, "a-1"));
  CHECK(act(e(c3, "a-1"), t) == e(c3, "a1"));
  CHECK(act(e(c3, "a0"), t) == e(c3, "a0"));

  const auto& a5 = ns_algebra("5A");
  auto t0 = *miyamoto(a5.algebra, e(a5, "a0"));
  auto t1 = *miyamoto(a5.algebra, e(a5, "a1"));
  Matrix rho = t0 * t1, p = rho;
  int order = 1;
  while (!(p == Matrix::identity(a5.dim())) && order < 20) {
    p = p * rho;
    ++order;
  }
  CHECK(order == 5);
}

TEST_CASE("miyamoto: automorphisms, equivariance and the dihedral action") {
  for (const auto& tag : ns_tags()) {
    const auto& a = ns_algebra(tag);
    auto t0 = *miyamoto(a.algebra, SparseVec::unit(static_cast<Index>(a.axis(0))));
    auto t1 = *miyamoto(a.algebra, SparseVec::unit(static_cast<Index>(a.axis(1))));
    CHECK_MESSAGE(t0 == a.tau0, tag);
    CHECK_MESSAGE(t1 == a.tau1, tag);
    for (auto i : a.axes) {
      auto ax = SparseVec::unit(static_cast<Index>(i));
      auto ti = *miyamoto(a.algebra, ax);
      CHECK(a.algebra.is_automorphism(ti));
      CHECK(ti * ti == Matrix::identity(a.dim()));
      // tau_{a^g} = g^-1 tau_a g, with g = tau0 (an involution).
      auto img = act(ax, a.tau0);
      CHECK(*miyamoto(a.algebra, img) == a.tau0 * ti * a.tau0);
    }
  }
}

TEST_CASE("5A: the five axes have distinct Miyamoto involutions") {
  const auto& a = ns_algebra("5A");
  std::set<std::vector<std::vector<Scalar>>> seen;
  for (int i = 0; i < 5; ++i)
    seen.insert(miyamoto(a.algebra, SparseVec::unit(static_cast<Index>(a.axis(i))))->dense());
  CHECK(seen.size() == 5);
}

TEST_CASE("dihedral orbit law") {
  std::map<std::string, DihedralOrbits> expect{
      {"2A", {1, 1, false}}, {"2B", {1, 1, false}}, {"3A", {3, 3, true}}, {"3C", {3, 3, true}},
      {"4A", {2, 2, false}}, {"4B", {2, 2, false}}, {"5A", {5, 5, true}}, {"6A", {3, 3, false}}};
  for (const auto& t : ns_tags()) {
    auto d = dihedral_orbits(ns_algebra(t));
    CHECK_MESSAGE(d.satisfies_law(), t);
    CHECK(d.size_a0 == expect[t].size_a0);
    CHECK(d.size_a1 == expect[t].size_a1);
    CHECK(d.same_orbit == expect[t].same_orbit);
    // Orbit sizes add up to n.
    CHECK(static_cast<int>(d.same_orbit ? d.size_a0 : d.size_a0 + d.size_a1) == ns_axis_count(t));
  }
}

TEST_CASE("property: the form associates on random vectors") {
  std::mt19937 rng(7);
  for (const auto& t : ns_tags()) {
    const auto& a = ns_algebra(t);
    for (int k = 0; k < 20; ++k) {
      auto x = random_vec(rng, a.dim()), y = random_vec(rng, a.dim()), z = random_vec(rng, a.dim());
      CHECK(form_value(a.gram, x, a.algebra.mul(y, z)) == form_value(a.gram, a.algebra.mul(x, y), z));
      CHECK(a.algebra.mul(x, y) == a.algebra.mul(y, x));
    }
  }
}
