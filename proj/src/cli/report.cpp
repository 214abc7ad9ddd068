#include "axial/cli/report.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "axial/fpgrp/coset.hpp"
#include "axial/fpgrp/presentation.hpp"
#include "axial/shapes/named.hpp"
#include "axial/shapes/shape.hpp"

namespace axial {

Subset parse_subset(const std::string& s) {
  if (s == "default") return Subset::Default;
  if (s == "extended") return Subset::Extended;
  if (s == "listed") return Subset::Listed;
  throw std::invalid_argument("unknown subset '" + s + "'");
}

std::string data_dir() {
  if (const char* d = std::getenv("AXIAL_DATA_DIR"); d && *d) return d;
  return AXIAL_SOURCE_DATA_DIR;
}

std::vector<std::vector<std::string>> read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    // double quotes protect commas, as in "PSL(2,7)/21"
    std::vector<std::string> cells(1);
    bool quoted = false;
    for (char c : line) {
      if (c == '"')
        quoted = !quoted;
      else if (c == ',' && !quoted)
        cells.emplace_back();
      else
        cells.back() += c;
    }
    if (quoted) throw std::runtime_error(path + ": unbalanced quote");
    rows.push_back(std::move(cells));
  }
  return rows;
}

namespace {

void need(const std::vector<std::string>& row, std::size_t n, const std::string& path) {
  if (row.size() != n)
    throw std::runtime_error(path + ": expected " + std::to_string(n) + " fields, got " + std::to_string(row.size()));
}

std::optional<std::size_t> opt_size(const std::string& s) {
  if (s.empty() || s == "?") return std::nullopt;
  return std::stoul(s);
}

}  // namespace

std::vector<GroupGolden> load_groups(const std::string& path) {
  std::vector<GroupGolden> out;
  for (const auto& r : read_csv(path)) {
    need(r, 4, path);
    out.push_back({r[0], std::stoull(r[1]), r[2] == "y", parse_subset(r[3])});
  }
  return out;
}

std::vector<CountGolden> load_shape_counts(const std::string& path) {
  std::vector<CountGolden> out;
  for (const auto& r : read_csv(path)) {
    need(r, 2, path);
    out.push_back({r[0], std::stoul(r[1])});
  }
  return out;
}

std::vector<AlgebraGolden> load_algebras(const std::string& path) {
  std::vector<AlgebraGolden> out;
  for (const auto& r : read_csv(path)) {
    need(r, 6, path);
    out.push_back({r[0], r[1], opt_size(r[2]), opt_size(r[3]), r[4], parse_subset(r[5])});
  }
  return out;
}

std::string group_presentation(const std::string& name) {
  auto base = name.substr(0, name.find('\''));
  const auto& g = cover_group(base);
  if (base == name) return g.text;
  for (const auto& [q, rel] : g.quotients)
    if (q == name) return with_relators(g.text, {rel});
  throw std::invalid_argument("unknown quotient '" + name + "'");
}

GroupResult compute_group(const std::string& name, bool with_flag, std::size_t max_cosets) {
  GroupResult r;
  r.name = name;
  auto pres = parse_presentation(group_presentation(name));
  CosetOptions opts;
  opts.max_cosets = max_cosets;
  try {
    auto t = regular_triple(pres, opts);
    r.order = t.group.order();
    if (with_flag) {
      std::vector<Perm> reps;
      for (const auto& g : t.gens)
        if (!g.is_identity()) reps.push_back(g);
      r.four_transposition = is_k_transposition(t.group, reps, 4);
    }
  } catch (const Inconclusive& e) {
    r.note = e.what();
  }
  return r;
}

std::string form_flag(const Construction& c) {
  switch (c.outcome) {
    case Outcome::Collapsed: return "-";
    case Outcome::Incomplete: return "";
    case Outcome::Completed: break;
  }
  switch (c.form.kind) {
    case FormKind::Positive: return "pos";
    case FormKind::Semidefinite: return "semi";
    case FormKind::Indefinite: return "indef";
    case FormKind::None: return "none";
  }
  return "";
}

AlgebraSummary summarize(const std::string& action, const Shape& shape, const Construction& c) {
  AlgebraSummary s;
  s.action = action;
  s.shape = shape.str();
  s.outcome = to_string(c.outcome);
  s.dim = c.dim();
  if (c.outcome == Outcome::Collapsed)
    s.m = 0;
  else
    s.m = c.m;
  s.form = form_flag(c);
  s.radical = c.form.radical_dim();
  s.verified = c.outcome == Outcome::Completed && c.verification.ok();
  s.primitive = c.outcome == Outcome::Completed && c.verification.primitive;
  s.trace = c.trace;
  s.reason = c.reason;
  return s;
}

void to_json(nlohmann::json& j, const AlgebraSummary& s) {
  j = nlohmann::json{{"action", s.action}, {"shape", s.shape},   {"outcome", s.outcome},
                     {"dim", s.dim},       {"form", s.form},     {"radical", s.radical},
                     {"verified", s.verified}, {"primitive", s.primitive}, {"trace", s.trace},
                     {"reason", s.reason}};
  j["m"] = s.m ? nlohmann::json(*s.m) : nlohmann::json(nullptr);
}

void from_json(const nlohmann::json& j, AlgebraSummary& s) {
  j.at("action").get_to(s.action);
  j.at("shape").get_to(s.shape);
  j.at("outcome").get_to(s.outcome);
  j.at("dim").get_to(s.dim);
  j.at("form").get_to(s.form);
  j.at("radical").get_to(s.radical);
  j.at("verified").get_to(s.verified);
  j.at("primitive").get_to(s.primitive);
  j.at("trace").get_to(s.trace);
  j.at("reason").get_to(s.reason);
  if (j.at("m").is_null())
    s.m.reset();
  else
    s.m = j.at("m").get<std::size_t>();
}

void parallel_for(std::size_t n, std::size_t jobs, const std::function<void(std::size_t)>& f) {
  jobs = std::max<std::size_t>(1, std::min(jobs, n));
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex m;
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < n;) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard lock(m);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

Reproduction reproduce_groups(const std::vector<GroupGolden>& golden, bool extended, std::size_t jobs) {
  Reproduction rep;
  std::vector<std::optional<GroupResult>> got(golden.size());
  parallel_for(golden.size(), jobs, [&](std::size_t i) {
    if (golden[i].subset == Subset::Default || extended) got[i] = compute_group(golden[i].name);
  });
  for (std::size_t i = 0; i < golden.size(); ++i) {
    const auto& g = golden[i];
    std::string head = g.name + ": expected order " + std::to_string(g.order) + ", 4-trans " +
                       (g.four_transposition ? "y" : "n");
    if (!got[i]) {
      ++rep.listed;
      rep.lines.push_back(head + " : skipped (extended)");
      continue;
    }
    const auto& r = *got[i];
    if (!r.order) {
      ++rep.inconclusive;
      rep.lines.push_back(head + " : inconclusive (" + r.note + ")");
      continue;
    }
    bool ok = *r.order == g.order && r.four_transposition == g.four_transposition;
    std::string body = "; got order " + std::to_string(*r.order) + ", 4-trans " +
                       (r.four_transposition ? (*r.four_transposition ? "y" : "n") : "?");
    (ok ? rep.matches : rep.mismatches)++;
    rep.lines.push_back(head + body + (ok ? " : match" : " : MISMATCH"));
  }
  return rep;
}

Reproduction reproduce_counts(const std::vector<CountGolden>& golden, std::size_t jobs) {
  Reproduction rep;
  std::vector<std::size_t> got(golden.size());
  parallel_for(golden.size(), jobs, [&](std::size_t i) {
    got[i] = enumerate_shapes(named_action(golden[i].action).action()).shapes.size();
  });
  for (std::size_t i = 0; i < golden.size(); ++i) {
    bool ok = got[i] == golden[i].shapes;
    (ok ? rep.matches : rep.mismatches)++;
    rep.lines.push_back(golden[i].action + ": expected " + std::to_string(golden[i].shapes) + " shapes, got " +
                        std::to_string(got[i]) + (ok ? " : match" : " : MISMATCH"));
  }
  return rep;
}

namespace {

std::string show(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "?"; }

std::string describe(const AlgebraSummary& s) {
  if (s.outcome == "incomplete") return "incomplete at dim " + std::to_string(s.dim) + " (" + s.reason + ")";
  return "dim " + std::to_string(s.dim) + ", m " + show(s.m) + ", form " + s.form;
}

bool matches(const AlgebraGolden& g, const AlgebraSummary& s) {
  if (!g.dim) return s.outcome == "incomplete";
  if (s.outcome == "incomplete") return false;
  if (s.dim != *g.dim) return false;
  if (g.m && s.m != g.m) return false;
  return g.form.empty() || g.form == s.form;
}

}  // namespace

Reproduction reproduce_algebras(const std::vector<AlgebraGolden>& golden, bool extended, std::size_t jobs,
                                const ConstructCaps& caps) {
  Reproduction rep;
  // every enumerated shape carrying a golden row's name is a candidate: the
  // listing omits collapsed duplicates
  struct Job {
    std::size_t row;
    Shape shape;
  };
  std::vector<Job> work;
  std::vector<std::vector<std::size_t>> per_row(golden.size());
  std::vector<bool> run(golden.size(), false);
  std::map<std::string, std::vector<Shape>> shapes;
  for (std::size_t i = 0; i < golden.size(); ++i) {
    const auto& g = golden[i];
    run[i] = g.subset == Subset::Default || extended;
    if (!run[i]) continue;
    auto it = shapes.find(g.action);
    if (it == shapes.end())
      it = shapes.emplace(g.action, enumerate_shapes(named_action(g.action).action()).shapes).first;
    for (const auto& s : it->second)
      if (s.str() == g.shape) {
        per_row[i].push_back(work.size());
        work.push_back({i, s});
      }
  }
  std::vector<AlgebraSummary> got(work.size());
  parallel_for(work.size(), jobs, [&](std::size_t k) {
    const auto& g = golden[work[k].row];
    got[k] = summarize(g.action, work[k].shape, construct(work[k].shape, caps));
  });

  for (std::size_t i = 0; i < golden.size(); ++i) {
    const auto& g = golden[i];
    std::string head = g.label() + ": expected " +
                       (g.dim ? "dim " + std::to_string(*g.dim) + ", m " + show(g.m) + ", form " + g.form : "?");
    if (!run[i]) {
      ++rep.listed;
      rep.lines.push_back(head + " : not attempted (" + (g.subset == Subset::Listed ? "listed" : "extended") + ")");
      continue;
    }
    if (per_row[i].empty()) {
      ++rep.mismatches;
      rep.lines.push_back(head + " : MISMATCH (no such shape)");
      continue;
    }
    bool ok = false, unfinished = false;
    std::string body;
    for (auto k : per_row[i]) {
      ok |= matches(g, got[k]);
      unfinished |= got[k].outcome == "incomplete";
      body += (body.empty() ? "" : " / ") + describe(got[k]);
    }
    if (ok) {
      ++rep.matches;
      rep.lines.push_back(head + "; got " + body + " : match");
    } else if (unfinished) {
      ++rep.inconclusive;
      rep.lines.push_back(head + "; got " + body + " : inconclusive");
    } else {
      ++rep.mismatches;
      rep.lines.push_back(head + "; got " + body + " : MISMATCH");
    }
  }
  return rep;
}

}  // namespace axial
