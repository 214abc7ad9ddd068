#include <map>
#include <random>

#include "axial/cli/report.hpp"
#include "axial/engine/construct.hpp"
#include "axial/shapes/named.hpp"
#include "axial/shapes/shape.hpp"
#include "doctest.h"

using namespace axial;

namespace {

std::vector<Shape> shapes_named(const std::string& action, const std::string& s) {
  auto want = format_shape_terms(parse_shape_string(s));
  std::vector<Shape> out;
  for (const auto& sh : enumerate_shapes(named_action(action).action()).shapes)
    if (sh.str() == want) out.push_back(sh);
  REQUIRE_FALSE(out.empty());
  return out;
}

// constructions are reused across test cases
const Construction& built(const std::string& action, const std::string& s, std::size_t which = 0) {
  static std::map<std::string, Construction> cache;
  auto key = action + "|" + s + "|" + std::to_string(which);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, construct(shapes_named(action, s).at(which))).first;
  return it->second;
}

// the completed member among shapes sharing a name
std::size_t completed_index(const std::string& action, const std::string& s) {
  auto n = shapes_named(action, s).size();
  for (std::size_t i = 0; i < n; ++i)
    if (built(action, s, i).outcome == Outcome::Completed) return i;
  FAIL("nothing completed for " << s);
  return 0;
}

const Construction& completed(const std::string& action, const std::string& s) {
  return built(action, s, completed_index(action, s));
}

SparseVec random_vec(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> c(-3, 3);
  Accumulator acc(n);
  for (std::size_t i = 0; i < n; ++i)
    if (int k = c(rng)) acc.add(i, Scalar(k));
  return acc.take();
}

struct Row {
  const char* action;
  const char* shape;
  std::size_t dim, m;
  FormKind form;
};

// quick rows of the classification; the slower ones run in the acceptance suite
const Row rows[] = {
    {"1/1+1+1", "(2B)^3", 3, 1, FormKind::Positive},
    {"1/1+1+1", "2A (2B)^2", 4, 2, FormKind::Positive},
    {"1/1+1+1", "(2A)^2 2B", 6, 3, FormKind::Positive},
    {"S3/1+3", "3A 2A", 8, 2, FormKind::Positive},
    {"S3/1+3", "3A 2B", 5, 2, FormKind::Positive},
    {"S3/1+3", "3C 2B", 4, 1, FormKind::Positive},
    {"2^2/1+2+2", "4A (2A)^2", 14, 3, FormKind::Semidefinite},
    {"2^2/1+2+2", "4A 2A 2B", 10, 3, FormKind::Positive},
    {"2^2/1+2+2", "4A (2B)^2", 6, 2, FormKind::Positive},
    {"2^2/1+2+2", "4B (2A)^2", 5, 1, FormKind::Positive},
    {"2^2/1+2+2", "4B 2A 2B", 8, 2, FormKind::Positive},
    {"2^2/1+2+2", "4B (2B)^2", 6, 2, FormKind::Positive},
    {"S4/6", "3C 2A", 9, 2, FormKind::Positive},
    {"S4/6", "3A 2B", 13, 3, FormKind::Positive},
    {"S4/6", "3C 2B", 6, 1, FormKind::Positive},
    {"3^2:2/9", "3A (3C)^3", 12, 2, FormKind::Positive},
    {"3^2:2/9", "(3C)^4", 9, 1, FormKind::Positive},
};

}  // namespace

TEST_CASE("seed installs the dihedral subalgebras and nothing else") {
  auto p = seed(shapes_named("1/1+1+1", "(2B)^3")[0]);
  CHECK(p.dim == 3);
  CHECK(p.known == 0);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) CHECK(p.product(i, j).empty());
  CHECK(p.product(1, 1) == p.axes[1]);

  auto q = seed(shapes_named("S3/1+3", "3A 2A")[0]);
  // four axes, three 3A extras and the three extra 2A axes collapse onto the
  // existing ones: 4 + 1 u_rho
  CHECK(q.dim >= 4);
  CHECK(q.axes.size() == 4);
}

TEST_CASE("quick rows complete with the expected dimension, length and form") {
  for (const auto& r : rows) {
    CAPTURE(r.action);
    CAPTURE(r.shape);
    const auto& c = completed(r.action, r.shape);
    REQUIRE(c.outcome == Outcome::Completed);
    CHECK(c.dim() == r.dim);
    CHECK(c.m == r.m);
    CHECK(c.form.kind == r.form);
    CHECK(c.verification.ok());
    CHECK(c.verification.primitive);
    CHECK(c.verification.defects.empty());
    CHECK(c.trace.back() == r.dim);
  }
}

TEST_CASE("forbidden configurations collapse") {
  const auto& c = built("S3/1+3", "3C 2A");
  CHECK(c.outcome == Outcome::Collapsed);
  CHECK(c.dim() == 0);
  CHECK_FALSE(c.reason.empty());
  CHECK(forbidden(shapes_named("S3/1+3", "3C 2A")[0]));
}

TEST_CASE("tight caps stop the loop honestly") {
  ConstructCaps caps;
  caps.max_dim = 10;
  auto c = construct(shapes_named("S3/1+3", "3A 2A")[0], caps);
  CHECK(c.outcome == Outcome::Incomplete);
  CHECK_FALSE(c.reason.empty());
  CHECK(c.dim() <= 10);

  caps = {};
  caps.max_rounds = 0;
  CHECK(construct(shapes_named("S4/6", "3C 2B")[0], caps).outcome == Outcome::Incomplete);
}

TEST_CASE("the group acts by automorphisms") {
  std::mt19937 rng(11);
  for (const auto& r : rows) {
    const auto& c = completed(r.action, r.shape);
    const auto& alg = *c.algebra;
    CAPTURE(r.shape);
    for (const auto& g : c.partial.gens) CHECK(alg.is_automorphism(g));
    // random words, and g(a_x) = a_{x^g}
    const auto& gens = c.partial.action.group.generators();
    for (int t = 0; t < 3 && !gens.empty(); ++t) {
      Perm w(c.partial.action.size());
      for (int k = 0; k < 5; ++k) w = w * gens[rng() % gens.size()];
      auto m = c.partial.element_matrix(w);
      CHECK(alg.is_automorphism(m));
      for (Point x = 0; x < c.partial.axes.size(); ++x) CHECK(act(c.partial.axes[x], m) == c.partial.axes[w[x]]);
    }
  }
}

TEST_CASE("products are commutative and the form associates on random vectors") {
  std::mt19937 rng(5);
  for (const auto& r : rows) {
    const auto& c = completed(r.action, r.shape);
    const auto& alg = *c.algebra;
    CAPTURE(r.shape);
    for (int t = 0; t < 4; ++t) {
      auto u = random_vec(rng, alg.dim()), v = random_vec(rng, alg.dim()), w = random_vec(rng, alg.dim());
      CHECK(alg.mul(u, v) == alg.mul(v, u));
      CHECK(form_value(c.form.gram, alg.mul(u, v), w) == form_value(c.form.gram, u, alg.mul(v, w)));
    }
  }
}

TEST_CASE("axes generate and closure lengths are consistent") {
  for (const auto& r : rows) {
    const auto& c = completed(r.action, r.shape);
    CAPTURE(r.shape);
    CHECK(generated_dim(*c.algebra, c.partial.axes) == r.dim);
    CHECK(closure_length(*c.algebra, c.partial.axes) == c.m);
  }
}

TEST_CASE("radicals are ideals and the quotients carry positive definite forms") {
  struct Case {
    const char *action, *shape;
    std::size_t radical, quotient;
  };
  for (const auto& k : {Case{"2^2/1+2+2", "4A (2A)^2", 3, 11}, Case{"2^3/2+4+4", "(4A)^2 (4B)^2 (2A)^2", 3, 13}}) {
    CAPTURE(k.shape);
    const auto& c = completed(k.action, k.shape);
    CHECK(c.form.kind == FormKind::Semidefinite);
    CHECK(c.form.radical_dim() == k.radical);
    auto rq = radical_quotient(c.partial, c.form.gram);
    CHECK(rq.radical_dim == k.radical);
    CHECK(rq.ideal);
    REQUIRE_FALSE(rq.collapsed);
    CHECK(rq.quotient.dim == k.quotient);
    auto alg = to_algebra(rq.quotient);
    auto f = frobenius_form(alg, rq.quotient, shapes_named(k.action, k.shape)[completed_index(k.action, k.shape)]);
    CHECK(f.kind == FormKind::Positive);
    CHECK(generated_dim(alg, rq.quotient.axes) == k.quotient);
  }
  // positive definite forms have nothing to quotient
  auto rq = radical_quotient(completed("S3/1+3", "3A 2B").partial, completed("S3/1+3", "3A 2B").form.gram);
  CHECK(rq.radical_dim == 0);
  CHECK(rq.quotient.dim == 5);
}

TEST_CASE("summaries round trip through JSON") {
  std::mt19937 rng(3);
  const char* outcomes[] = {"completed", "collapsed", "incomplete"};
  for (int t = 0; t < 50; ++t) {
    AlgebraSummary s;
    s.action = "A" + std::to_string(rng() % 100);
    s.shape = "(4A)^" + std::to_string(rng() % 5) + " 2B";
    s.outcome = outcomes[rng() % 3];
    s.dim = rng() % 3000;
    if (rng() % 2) s.m = rng() % 5;
    s.form = rng() % 2 ? "pos" : "";
    s.radical = rng() % 4;
    s.verified = rng() % 2;
    s.primitive = rng() % 2;
    for (int k = rng() % 6; k > 0; --k) s.trace.push_back(rng() % 500);
    s.reason = rng() % 2 ? "" : "axis 3 vanished";
    nlohmann::json j = s;
    CHECK(j.get<AlgebraSummary>() == s);
    CHECK(nlohmann::json::parse(j.dump()).get<AlgebraSummary>() == s);
  }
  auto real = summarize("S3/1+3", shapes_named("S3/1+3", "3A 2B")[0], completed("S3/1+3", "3A 2B"));
  CHECK(real.dim == 5);
  CHECK(real.m == 2u);
  CHECK(real.form == "pos");
  CHECK(nlohmann::json(real).get<AlgebraSummary>() == real);
}
