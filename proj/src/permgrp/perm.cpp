#include "axial/permgrp/perm.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace axial {

Perm::Perm(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p])
      throw std::invalid_argument("Perm: images do not form a bijection");
    seen[p] = 1;
  }
}

Perm Perm::from_cycles(std::string_view text, std::size_t degree) {
  Perm out(degree);
  std::vector<char> used(degree, 0);
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("Perm::from_cycles: expected '('");
    ++i;
    std::vector<Point> cyc;
    while (true) {
      skip_space();
      if (i >= text.size()) throw std::invalid_argument("Perm::from_cycles: unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("Perm::from_cycles: expected a point");
      unsigned long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + static_cast<unsigned long>(text[i++] - '0');
      if (v >= degree) throw std::invalid_argument("Perm::from_cycles: point out of range");
      if (used[v]) throw std::invalid_argument("Perm::from_cycles: point repeated");
      used[v] = 1;
      cyc.push_back(static_cast<Point>(v));
    }
    for (std::size_t k = 0; k < cyc.size(); ++k) out.images_[cyc[k]] = cyc[(k + 1) % cyc.size()];
    skip_space();
  }
  return out;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  Perm out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[images_[i]] = static_cast<Point>(i);
  return out;
}

std::uint64_t Perm::order() const {
  std::vector<char> seen(images_.size(), 0);
  std::uint64_t o = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (Point p = static_cast<Point>(i); !seen[p]; p = images_[p]) {
      seen[p] = 1;
      ++len;
    }
    o = std::lcm(o, len);
  }
  return o;
}

Perm Perm::pow(long e) const {
  Perm base = e < 0 ? inverse() : *this;
  unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
  Perm r(degree());
  while (n) {
    if (n & 1u) r = r * base;
    base = base * base;
    n >>= 1u;
  }
  return r;
}

Perm Perm::conj(const Perm& h) const {
  // p^(h^-1 g h): the image of p^h is (p^g)^h.
  Perm out;
  out.images_.resize(images_.size());
  for (std::size_t p = 0; p < images_.size(); ++p) out.images_[h.images_[p]] = h.images_[images_[p]];
  return out;
}

Point Perm::first_moved() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return static_cast<Point>(i);
  return static_cast<Point>(images_.size());
}

std::string Perm::cycles() const {
  std::ostringstream os;
  std::vector<char> seen(images_.size(), 0);
  bool any = false;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    any = true;
    os << "(";
    bool first = true;
    for (Point p = static_cast<Point>(i); !seen[p]; p = images_[p]) {
      seen[p] = 1;
      if (!first) os << " ";
      os << p;
      first = false;
    }
    os << ")";
  }
  return any ? os.str() : "()";
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("Perm product: degree mismatch");
  Perm out;
  out.images_.resize(a.images_.size());
  for (std::size_t i = 0; i < a.images_.size(); ++i) out.images_[i] = b.images_[a.images_[i]];
  return out;
}

std::size_t Perm::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (Point p : images_) h = (h ^ p) * 1099511628211ull;
  return h;
}

}  // namespace axial
