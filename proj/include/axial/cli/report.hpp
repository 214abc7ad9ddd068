#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "axial/engine/construct.hpp"
#include "axial/fpgrp/groups.hpp"
#include "json.hpp"

namespace axial {

enum class Subset { Default, Extended, Listed };
Subset parse_subset(const std::string& s);

struct GroupGolden {
  std::string name;
  std::uint64_t order = 0;
  bool four_transposition = false;
  Subset subset = Subset::Default;
};

struct CountGolden {
  std::string action;
  std::size_t shapes = 0;
};

struct AlgebraGolden {
  std::string action, shape;
  std::optional<std::size_t> dim;  // nullopt for rows that never completed
  std::optional<std::size_t> m;
  std::string form;  // pos, semi, - (collapsed) or empty
  Subset subset = Subset::Default;
  [[nodiscard]] std::string label() const { return action + " | " + shape; }
};

/// $AXIAL_DATA_DIR, else the data directory of the source tree.
std::string data_dir();
/// Comma separated, "..." quotes a field, '#' starts a comment line.
std::vector<std::vector<std::string>> read_csv(const std::string& path);
std::vector<GroupGolden> load_groups(const std::string& path);
std::vector<CountGolden> load_shape_counts(const std::string& path);
std::vector<AlgebraGolden> load_algebras(const std::string& path);

/// "G8" or a named quotient such as "G8''".
std::string group_presentation(const std::string& name);

struct GroupResult {
  std::string name;
  std::optional<std::uint64_t> order;  // nullopt when enumeration was inconclusive
  std::optional<bool> four_transposition;
  std::string note;
};

/// Order by coset enumeration over the trivial subgroup; the 4-transposition
/// flag is checked on the regular representation.
GroupResult compute_group(const std::string& name, bool with_flag = true, std::size_t max_cosets = 2'000'000);

/// pos / semi / indef / none for completed algebras, "-" for a collapse and
/// "" when incomplete.
std::string form_flag(const Construction& c);

struct AlgebraSummary {
  std::string action, shape;
  std::string outcome;
  std::size_t dim = 0;
  std::optional<std::size_t> m;
  std::string form;
  std::size_t radical = 0;
  bool verified = false;
  bool primitive = false;
  std::vector<std::size_t> trace;
  std::string reason;
  friend bool operator==(const AlgebraSummary&, const AlgebraSummary&) = default;
};

AlgebraSummary summarize(const std::string& action, const Shape& shape, const Construction& c);
void to_json(nlohmann::json& j, const AlgebraSummary& s);
void from_json(const nlohmann::json& j, AlgebraSummary& s);

/// Runs f(0..n-1) on `jobs` threads; each index exactly once.
void parallel_for(std::size_t n, std::size_t jobs, const std::function<void(std::size_t)>& f);

struct Reproduction {
  std::vector<std::string> lines;
  std::size_t matches = 0, mismatches = 0, inconclusive = 0, listed = 0;
  /// 0 all match, 1 some mismatch, 2 nothing wrong but something unfinished.
  [[nodiscard]] int exit_code() const { return mismatches ? 1 : inconclusive ? 2 : 0; }
};

Reproduction reproduce_groups(const std::vector<GroupGolden>& golden, bool extended, std::size_t jobs);
Reproduction reproduce_counts(const std::vector<CountGolden>& golden, std::size_t jobs);
Reproduction reproduce_algebras(const std::vector<AlgebraGolden>& golden, bool extended, std::size_t jobs,
                                const ConstructCaps& caps);

}  // namespace axial
