#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "axial/permgrp/perm.hpp"

namespace axial {

/// Thrown when a search exceeds its node or size cap. Callers treat this as
/// "inconclusive", never as a negative answer.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Stabilizer chain built by deterministic Schreier-Sims.
struct StabChain {
  struct Level {
    Point base = 0;
    std::vector<Perm> gens;
    std::vector<std::int32_t> where;  // point -> orbit position, or -1
    std::vector<Point> orbit;
    std::vector<Perm> reps;  // reps[i] maps base to orbit[i]
  };
  std::size_t degree = 0;
  std::vector<Level> levels;

  StabChain(std::size_t degree, const std::vector<Perm>& gens, const std::vector<Point>& base_prefix);
  /// Returns the residue of g and the level where sifting stopped
  /// (levels.size() when it passed every level).
  [[nodiscard]] std::pair<Perm, std::size_t> sift(Perm g, std::size_t from = 0) const;
  [[nodiscard]] mpz_class order() const;

 private:
  void compute_orbit(Level& l) const;
};

/// Immutable permutation group given by generators. The stabilizer chain is
/// built on first use and shared between copies.
class PermGroup {
 public:
  PermGroup() : PermGroup(0, {}) {}
  PermGroup(std::size_t degree, std::vector<Perm> gens,
            std::optional<std::uint64_t> known_order = std::nullopt);
  static PermGroup trivial(std::size_t degree);
  static PermGroup symmetric(std::size_t degree);

  [[nodiscard]] std::size_t degree() const { return degree_; }
  [[nodiscard]] const std::vector<Perm>& generators() const { return gens_; }
  [[nodiscard]] Perm identity() const { return Perm(degree_); }

  /// Group order; throws std::overflow_error beyond 64 bits.
  [[nodiscard]] std::uint64_t order() const;
  [[nodiscard]] mpz_class order_big() const;
  [[nodiscard]] bool is_trivial() const;
  [[nodiscard]] bool contains(const Perm& g) const;
  [[nodiscard]] bool is_subgroup_of(const PermGroup& other) const;
  /// True when the order is known without building a stabilizer chain.
  [[nodiscard]] bool has_known_order() const { return known_order_.has_value(); }

  [[nodiscard]] std::vector<Point> orbit(Point p) const;
  [[nodiscard]] std::vector<std::vector<Point>> orbits() const;
  [[nodiscard]] PermGroup stabilizer(Point p) const;
  /// All elements, ordered by the chain; throws CapExceeded above `cap`.
  [[nodiscard]] std::vector<Perm> elements(std::uint64_t cap = 10'000'000) const;

  [[nodiscard]] const StabChain& chain() const;

 private:
  std::size_t degree_;
  std::vector<Perm> gens_;
  std::optional<std::uint64_t> known_order_;
  struct Cache;
  std::shared_ptr<Cache> cache_;
};

}  // namespace axial
