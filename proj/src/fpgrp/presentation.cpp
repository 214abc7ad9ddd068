#include "axial/fpgrp/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

namespace axial {

ParseError::ParseError(const std::string& what, std::size_t l, std::size_t c)
    : std::runtime_error("line " + std::to_string(l) + ", column " + std::to_string(c) + ": " + what),
      line(l),
      column(c) {}

Word free_reduce(const Word& w) {
  Word out;
  for (int a : w) {
    if (!out.empty() && out.back() == -a)
      out.pop_back();
    else
      out.push_back(a);
  }
  return out;
}

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& a : out) a = -a;
  return out;
}

std::string Presentation::word_str(const Word& w) const {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << "*";
    const auto& name = generators[static_cast<std::size_t>(std::abs(w[i]) - 1)];
    os << name;
    if (w[i] < 0) os << "^-1";
  }
  return os.str();
}

std::string Presentation::str() const {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < generators.size(); ++i) os << (i ? "," : "") << generators[i];
  os << " | ";
  for (std::size_t i = 0; i < relators.size(); ++i) os << (i ? ", " : "") << word_str(relators[i]);
  os << ">";
  return os.str();
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::vector<std::string> gens) : text_(text), gens_(std::move(gens)) {}

  Presentation presentation() {
    Presentation p;
    expect('<');
    while (true) {
      skip();
      std::size_t at = pos_;
      std::string name = identifier();
      if (name.empty()) fail("expected generator name", at);
      if (std::find(gens_.begin(), gens_.end(), name) != gens_.end())
        fail("duplicate generator '" + name + "'", at);
      gens_.push_back(name);
      skip();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      break;
    }
    expect('|');
    skip();
    if (peek() != '>') {
      while (true) {
        Word w = relator();
        if (!w.empty()) p.relators.push_back(std::move(w));
        skip();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        break;
      }
    }
    expect('>');
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing input", pos_);
    p.generators = gens_;
    return p;
  }

  Word single_word() {
    Word w = word();
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing input", pos_);
    return free_reduce(w);
  }

 private:
  Word relator() {
    Word w = word();
    skip();
    if (peek() == '=') {
      ++pos_;
      Word rhs = word();
      Word inv = inverse_word(rhs);
      w.insert(w.end(), inv.begin(), inv.end());
    }
    return free_reduce(w);
  }

  Word word() {
    skip();
    Word w = factor();
    while (true) {
      skip();
      char c = peek();
      if (c == '*') {
        ++pos_;
      } else if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '(' || c == '{' || c == '1')) {
        break;
      }
      Word f = factor();
      w.insert(w.end(), f.begin(), f.end());
    }
    return w;
  }

  Word factor() {
    Word base = primary();
    // In a run like "xy^z" the exponent binds to the last letter only.
    Word prefix;
    if (last_was_run_ && base.size() > 1) {
      prefix.assign(base.begin(), base.end() - 1);
      base.erase(base.begin(), base.end() - 1);
    }
    while (true) {
      skip();
      if (peek() != '^') break;
      ++pos_;
      skip();
      char c = peek();
      if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
        bool neg = c == '-';
        if (c == '-' || c == '+') ++pos_;
        skip();
        std::size_t at = pos_;
        long n = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
          n = n * 10 + (text_[pos_++] - '0');
          if (n > 100000) fail("exponent too large", at);
        }
        if (at == pos_) fail("expected exponent", at);
        Word unit = neg ? inverse_word(base) : base;
        Word out;
        for (long k = 0; k < n; ++k) out.insert(out.end(), unit.begin(), unit.end());
        base = std::move(out);
      } else {
        Word conj = primary();
        Word out = inverse_word(conj);
        out.insert(out.end(), base.begin(), base.end());
        out.insert(out.end(), conj.begin(), conj.end());
        base = std::move(out);
      }
    }
    prefix.insert(prefix.end(), base.begin(), base.end());
    return prefix;
  }

  Word primary() {
    last_was_run_ = false;
    skip();
    std::size_t at = pos_;
    char c = peek();
    if (c == '(' || c == '{') {
      ++pos_;
      Word w = word();
      expect(c == '(' ? ')' : '}');
      last_was_run_ = false;  // a bracket is one unit even if it held a run
      return w;
    }
    if (c == '1') {
      ++pos_;
      return {};
    }
    std::string name = identifier();
    if (name.empty()) fail("expected a generator, '(' or '1'", at);
    return letters(name, at);
  }

  // A name is a generator, a capitalized generator (its inverse), or a run of
  // single-letter generators written without '*'.
  Word letters(const std::string& name, std::size_t at) {
    if (auto g = lookup(name)) return {*g};
    Word out;
    last_was_run_ = true;
    for (std::size_t i = 0; i < name.size(); ++i) {
      auto g = lookup(std::string(1, name[i]));
      if (!g) fail("unknown generator '" + name + "'", at);
      out.push_back(*g);
    }
    return out;
  }

  std::optional<int> lookup(const std::string& name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
      if (gens_[i] == name) return static_cast<int>(i + 1);
    if (name.size() == 1 && std::isupper(static_cast<unsigned char>(name[0]))) {
      std::string lower(1, static_cast<char>(std::tolower(static_cast<unsigned char>(name[0]))));
      for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i] == lower) return -static_cast<int>(i + 1);
    }
    return std::nullopt;
  }

  std::string identifier() {
    std::size_t start = pos_;
    if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& what, std::size_t at) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(what, line, col);
  }

  std::string_view text_;
  std::vector<std::string> gens_;
  std::size_t pos_ = 0;
  bool last_was_run_ = false;
};

}  // namespace

Presentation parse_presentation(std::string_view text) { return Parser(text, {}).presentation(); }

Word parse_word(std::string_view text, const std::vector<std::string>& generators) {
  return Parser(text, generators).single_word();
}

}  // namespace axial
