#include <atomic>
#include <cstdio>
#include <fstream>
#include <random>

#include "axial/cli/report.hpp"
#include "doctest.h"

using namespace axial;

namespace {

std::string temp_file(const std::string& body) {
  static int n = 0;
  auto path = std::string("/tmp/axial_report_") + std::to_string(n++) + ".csv";
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("csv reader skips comments and honours quotes") {
  auto rows = read_csv(temp_file("# a,b\n\nx,1\r\n\"P(2,7)\",,\n"));
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == std::vector<std::string>{"x", "1"});
  CHECK(rows[1] == std::vector<std::string>{"P(2,7)", "", ""});
  CHECK_THROWS(read_csv(temp_file("\"open,1\n")));
  CHECK_THROWS(read_csv("/nonexistent/file.csv"));
  CHECK_THROWS(load_shape_counts(temp_file("a,1,2\n")));
  CHECK_THROWS(load_groups(temp_file("G1,54,y,sometimes\n")));
}

TEST_CASE("golden files load") {
  auto groups = load_groups(data_dir() + "/groups.csv");
  CHECK(groups.size() == 25);
  CHECK(groups.front().name == "G1");
  CHECK(groups.front().order == 54);
  auto counts = load_shape_counts(data_dir() + "/shape_counts.csv");
  CHECK(counts.size() == 11);
  CHECK(counts.back().action == "PSL(2,7)/21");
  auto algebras = load_algebras(data_dir() + "/algebras.csv");
  std::size_t unknown = 0;
  for (const auto& a : algebras) {
    if (!a.dim) {
      ++unknown;
      CHECK(a.subset == Subset::Listed);
    }
    if (a.form == "-") CHECK(a.dim == 0u);
  }
  CHECK(unknown == 6);
}

TEST_CASE("parallel_for visits every index once") {
  std::mt19937 rng(9);
  for (int t = 0; t < 20; ++t) {
    std::size_t n = rng() % 200, jobs = 1 + rng() % 4;
    std::vector<std::atomic<int>> seen(n);
    parallel_for(n, jobs, [&](std::size_t i) { ++seen[i]; });
    for (auto& s : seen) CHECK(s.load() == 1);
  }
  CHECK_THROWS(parallel_for(10, 3, [](std::size_t i) {
    if (i == 7) throw std::runtime_error("boom");
  }));
}

TEST_CASE("small groups and quotients reproduce") {
  auto g = compute_group("G5");
  CHECK(g.order == 2u);
  CHECK(g.four_transposition == true);
  auto q = compute_group("G8'");
  CHECK(q.order == 8u);
  auto tiny = compute_group("G8", false, 100);
  CHECK_FALSE(tiny.order);
  CHECK_FALSE(tiny.note.empty());
  CHECK_THROWS(group_presentation("G8'''"));
}

TEST_CASE("shape counts reproduce") {
  auto r = reproduce_counts(load_shape_counts(data_dir() + "/shape_counts.csv"), 1);
  CHECK(r.mismatches == 0);
  CHECK(r.matches == 11);
  CHECK(r.exit_code() == 0);
  auto bad = reproduce_counts({{"S3/1+3", 5}}, 1);
  CHECK(bad.mismatches == 1);
  CHECK(bad.exit_code() == 1);
}

TEST_CASE("algebra rows compare against every shape of that name") {
  std::vector<AlgebraGolden> golden{
      {"S3/1+3", "3A 2B", 5, 2, "pos", Subset::Default},
      {"S3/1+3", "3C 2A", 0, 0, "-", Subset::Default},
      {"S3/1+3", "3C 2B", 5, 1, "pos", Subset::Default},
      {"S3/1+3", "3A 2A", std::nullopt, std::nullopt, "", Subset::Listed},
  };
  auto r = reproduce_algebras(golden, false, 1, {});
  CHECK(r.matches == 2);
  CHECK(r.mismatches == 1);
  CHECK(r.listed == 1);
  CHECK(r.lines[2].find("MISMATCH") != std::string::npos);

  ConstructCaps caps;
  caps.max_dim = 8;
  auto capped = reproduce_algebras({{"S3/1+3", "3A 2A", 8, 2, "pos", Subset::Default}}, false, 1, caps);
  CHECK(capped.inconclusive == 1);
  CHECK(capped.exit_code() == 2);
}
