#include "axial/ratlin/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace axial {

Scalar::Scalar(long num, long den) {
  if (den == 0) throw std::domain_error("Scalar: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Scalar::Scalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

namespace {

bool valid_integer(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string strip_plus(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return std::string(s);
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : text.substr(slash + 1);
  if (!valid_integer(num, true) || !valid_integer(den, false))
    throw std::invalid_argument("Scalar::parse: malformed rational '" +
                                std::string(text) + "'");
  mpz_class n(strip_plus(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::domain_error("Scalar::parse: zero denominator");
  return Scalar(mpq_class(n, d));
}

std::string Scalar::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
  q_ /= o.q_;
  return *this;
}

std::size_t Scalar::hash() const {
  std::size_t h = std::hash<std::string>{}(q_.get_num().get_str(16));
  return h ^ (std::hash<std::string>{}(q_.get_den().get_str(16)) * 1000003u);
}

Scalar inverse(const Scalar& s) { return Scalar(1) / s; }

Scalar pow(const Scalar& s, int e) {
  Scalar base = e < 0 ? inverse(s) : s;
  unsigned n = static_cast<unsigned>(e < 0 ? -e : e);
  Scalar r(1);
  while (n) {
    if (n & 1u) r *= base;
    base *= base;
    n >>= 1u;
  }
  return r;
}

}  // namespace axial
