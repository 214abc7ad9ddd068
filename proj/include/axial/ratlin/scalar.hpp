#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace axial {

/// Exact rational number, always in lowest terms with a positive denominator.
class Scalar {
 public:
  Scalar() = default;

  template <std::integral I>
  Scalar(I n) : q_(static_cast<long>(n)) {}  // NOLINT(implicit)

  Scalar(long num, long den);
  explicit Scalar(mpq_class q);

  /// Parses "p/q" or "p" (optional sign, decimal digits).
  static Scalar parse(std::string_view text);

  [[nodiscard]] bool is_zero() const { return sgn(q_) == 0; }
  [[nodiscard]] bool is_one() const { return q_ == 1; }
  [[nodiscard]] int sign() const { return sgn(q_); }
  [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }

  [[nodiscard]] std::string numerator() const { return q_.get_num().get_str(); }
  [[nodiscard]] std::string denominator() const { return q_.get_den().get_str(); }

  /// "p/q" serialization, with "/q" omitted when q = 1.
  [[nodiscard]] std::string str() const;

  [[nodiscard]] const mpq_class& raw() const { return q_; }
  mpq_class& raw() { return q_; }

  Scalar operator-() const { return Scalar(mpq_class(-q_)); }
  Scalar& operator+=(const Scalar& o) { q_ += o.q_; return *this; }
  Scalar& operator-=(const Scalar& o) { q_ -= o.q_; return *this; }
  Scalar& operator*=(const Scalar& o) { q_ *= o.q_; return *this; }
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.q_ == b.q_; }
  friend bool operator<(const Scalar& a, const Scalar& b) { return a.q_ < b.q_; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return a.q_ > b.q_; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return a.q_ <= b.q_; }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return a.q_ >= b.q_; }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.str();
  }

  [[nodiscard]] std::size_t hash() const;

 private:
  mpq_class q_;
};

Scalar inverse(const Scalar& s);
Scalar pow(const Scalar& s, int e);

}  // namespace axial

template <>
struct std::hash<axial::Scalar> {
  std::size_t operator()(const axial::Scalar& s) const { return s.hash(); }
};
