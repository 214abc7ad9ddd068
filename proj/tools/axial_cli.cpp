// axial: command line front end.
#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "axial/catalog/ns_algebra.hpp"
#include "axial/cli/report.hpp"
#include "axial/fpgrp/coset.hpp"
#include "axial/fpgrp/presentation.hpp"
#include "axial/shapes/named.hpp"
#include "axial/shapes/shape.hpp"
#include "json.hpp"

using namespace axial;
using nlohmann::json;

namespace {

int print(const Reproduction& r) {
  for (const auto& l : r.lines) std::cout << l << "\n";
  std::cout << r.matches << " match, " << r.mismatches << " mismatch, " << r.inconclusive << " inconclusive, "
            << r.listed << " not attempted\n";
  return r.exit_code();
}

int catalog_verify(const std::vector<std::string>& tags) {
  int code = 0;
  for (const auto& tag : tags.empty() ? ns_tags() : tags) {
    auto r = verify_catalog(ns_algebra(tag));
    auto orbits = dihedral_orbits(ns_algebra(tag));
    std::cout << tag << ": " << r.defects() << " defects, orbit sizes " << orbits.size_a0 << "/" << orbits.size_a1
              << (orbits.satisfies_law() ? "" : " (violates the orbit law)") << "\n";
    for (const auto& [label, a] : r.axes)
      for (const auto& d : a.defects) std::cout << "  " << label << ": " << d << "\n";
    for (const auto& d : r.form.defects) std::cout << "  form: " << d << "\n";
    if (r.defects() || !orbits.satisfies_law()) code = 1;
  }
  return code;
}

int catalog_dump(const std::vector<std::string>& tags) {
  json out = json::array();
  for (const auto& tag : tags.empty() ? ns_tags() : tags) {
    const auto& a = ns_algebra(tag);
    json products = json::object(), form = json::object();
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = i; j < a.dim(); ++j) {
        auto key = a.labels[i] + "*" + a.labels[j];
        products[key] = a.render(a.algebra.product(i, j));
        form["(" + a.labels[i] + "," + a.labels[j] + ")"] = a.gram.at(i, j).str();
      }
    out.push_back(json{{"tag", tag}, {"basis", a.labels}, {"products", products}, {"form", form}});
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int groups_order(const std::string& file, std::size_t max_cosets) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open " + file);
  std::stringstream ss;
  ss << in.rdbuf();
  CosetOptions opts;
  opts.max_cosets = max_cosets;
  try {
    auto t = coset_enumerate(parse_presentation(ss.str()), {}, opts);
    std::cout << t.index << "\n";
    return 0;
  } catch (const Inconclusive& e) {
    std::cout << "inconclusive: " << e.what() << "\n";
    return 2;
  }
}

// name,order,4trans as CSV; mismatches against the golden file go to stderr
int groups_table1(bool extended, std::size_t jobs) {
  auto golden = load_groups(data_dir() + "/groups.csv");
  std::vector<std::optional<GroupResult>> got(golden.size());
  parallel_for(golden.size(), jobs, [&](std::size_t i) {
    if (golden[i].subset == Subset::Default || extended) got[i] = compute_group(golden[i].name);
  });
  int code = 0;
  std::cout << "group,order,4trans\n";
  for (std::size_t i = 0; i < golden.size(); ++i) {
    if (!got[i]) continue;
    const auto& r = *got[i];
    if (!r.order) {
      std::cout << r.name << ",?,?\n";
      std::cerr << r.name << ": inconclusive (" << r.note << ")\n";
      code = std::max(code, 2);
      continue;
    }
    bool flag = r.four_transposition.value_or(false);
    std::cout << r.name << "," << *r.order << "," << (flag ? "y" : "n") << "\n";
    if (*r.order != golden[i].order || flag != golden[i].four_transposition) {
      std::cerr << r.name << ": expected " << golden[i].order << "," << (golden[i].four_transposition ? "y" : "n") << "\n";
      code = 1;
    }
  }
  return code;
}

int shapes_enumerate(const std::vector<std::string>& names, bool as_json) {
  json out = json::array();
  for (const auto& name : names.empty() ? [] {
         std::vector<std::string> all;
         for (const auto& a : named_actions()) all.push_back(a.name);
         return all;
       }()
                                        : names) {
    auto en = enumerate_shapes(named_action(name).action());
    json shapes = json::array();
    for (const auto& s : en.shapes) {
      auto f = forbidden(s);
      shapes.push_back(json{{"shape", s.str()}, {"forbidden", f ? json(*f) : json(nullptr)}});
    }
    if (as_json) {
      out.push_back(json{{"action", name}, {"count", en.shapes.size()}, {"shapes", shapes}});
    } else {
      std::cout << name << ": " << en.shapes.size() << " shapes\n";
      for (const auto& s : en.shapes) std::cout << "  " << s.str() << (forbidden(s) ? "  [forbidden: " + *forbidden(s) + "]" : std::string()) << "\n";
    }
  }
  if (as_json) std::cout << out.dump(2) << "\n";
  return 0;
}

int construct_cmd(const std::string& action, const std::string& shape, std::size_t jobs) {
  auto all = enumerate_shapes(named_action(action).action()).shapes;
  std::vector<Shape> picked;
  for (const auto& s : all)
    if (shape.empty() || s.str() == shape) picked.push_back(s);
  if (picked.empty()) throw std::invalid_argument("no shape '" + shape + "' for " + action);
  auto caps = caps_from_env();
  std::vector<AlgebraSummary> out(picked.size());
  parallel_for(picked.size(), jobs, [&](std::size_t i) { out[i] = summarize(action, picked[i], construct(picked[i], caps)); });
  std::cout << json(out).dump(2) << "\n";
  bool unfinished = false;
  for (const auto& s : out) unfinished |= s.outcome == "incomplete";
  return unfinished ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Axial algebras of Monster type: catalog, groups, shapes and construction"};
  app.require_subcommand(1);
  std::size_t jobs = 1;
  app.add_option("--jobs,-j", jobs, "worker threads")->check(CLI::PositiveNumber);

  auto* cat = app.add_subcommand("catalog", "dihedral algebras");
  cat->require_subcommand(1);
  std::vector<std::string> tags;
  auto* cat_verify = cat->add_subcommand("verify", "check every axis and the form");
  cat_verify->add_option("--tag", tags, "restrict to these types");
  auto* cat_dump = cat->add_subcommand("dump", "products and form values as JSON");
  cat_dump->add_option("--tag", tags, "restrict to these types");

  auto* grp = app.add_subcommand("groups", "finitely presented groups");
  grp->require_subcommand(1);
  bool extended = false;
  auto* grp_table = grp->add_subcommand("table1", "orders and 4-transposition flags of the cover groups, CSV");
  grp_table->add_flag("--extended", extended, "include the large enumerations");
  std::string file;
  std::size_t max_cosets = 2'000'000;
  auto* grp_order = grp->add_subcommand("order", "order of a presentation read from a file");
  grp_order->add_option("file", file)->required();
  grp_order->add_option("--max-cosets", max_cosets);

  auto* shp = app.add_subcommand("shapes", "shapes of the named actions");
  shp->require_subcommand(1);
  std::vector<std::string> actions;
  bool as_json = false;
  auto* shp_enum = shp->add_subcommand("enumerate", "list shapes");
  shp_enum->add_option("--action", actions, "named action, e.g. S4/6 (default: all)");
  shp_enum->add_flag("--json", as_json);

  std::string action, shape;
  auto* con = app.add_subcommand("construct", "build the algebra of a shape, JSON output");
  con->add_option("--action", action, "named action")->required();
  con->add_option("--shape", shape, "shape such as \"3A 2A\" (default: every shape)");

  int table = 4;
  auto* rep = app.add_subcommand("reproduce", "compare against the golden data");
  rep->add_option("--table", table, "1 groups, 3 shape counts, 4 algebras")->check(CLI::IsMember({1, 3, 4}));
  rep->add_flag("--extended", extended, "also run the slow rows");

  CLI11_PARSE(app, argc, argv);
  try {
    if (cat_verify->parsed()) return catalog_verify(tags);
    if (cat_dump->parsed()) return catalog_dump(tags);
    if (grp_table->parsed()) return groups_table1(extended, jobs);
    if (grp_order->parsed()) return groups_order(file, max_cosets);
    if (shp_enum->parsed()) return shapes_enumerate(actions, as_json);
    if (con->parsed()) return construct_cmd(action, shape, jobs);
    if (rep->parsed()) {
      auto dir = data_dir();
      if (table == 1) return print(reproduce_groups(load_groups(dir + "/groups.csv"), extended, jobs));
      if (table == 3) return print(reproduce_counts(load_shape_counts(dir + "/shape_counts.csv"), jobs));
      return print(reproduce_algebras(load_algebras(dir + "/algebras.csv"), extended, jobs, caps_from_env()));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
