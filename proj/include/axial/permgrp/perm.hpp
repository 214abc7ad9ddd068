#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace axial {

using Point = std::uint32_t;

/// Permutation of {0..n-1} acting on the right: p^(g*h) = (p^g)^h.
class Perm {
 public:
  Perm() = default;
  /// Identity of the given degree.
  explicit Perm(std::size_t degree);
  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Perm(std::vector<Point> images);
  /// Cycle notation such as "(0 1 2)(3 4)" or "()" for the identity; points
  /// may also be separated by commas.
  static Perm from_cycles(std::string_view text, std::size_t degree);

  [[nodiscard]] std::size_t degree() const { return images_.size(); }
  [[nodiscard]] Point operator[](Point p) const { return images_[p]; }
  [[nodiscard]] const std::vector<Point>& images() const { return images_; }

  [[nodiscard]] bool is_identity() const;
  [[nodiscard]] Perm inverse() const;
  [[nodiscard]] std::uint64_t order() const;
  [[nodiscard]] Perm pow(long e) const;
  /// h^-1 * this * h
  [[nodiscard]] Perm conj(const Perm& h) const;
  /// Smallest moved point, or degree() when the identity.
  [[nodiscard]] Point first_moved() const;

  [[nodiscard]] std::string cycles() const;

  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

  [[nodiscard]] std::size_t hash() const;

 private:
  std::vector<Point> images_;
};

}  // namespace axial

template <>
struct std::hash<axial::Perm> {
  std::size_t operator()(const axial::Perm& p) const { return p.hash(); }
};
