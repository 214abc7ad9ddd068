#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace axial {

/// Letters are signed generator numbers: +(i+1) for g_i, -(i+1) for g_i^-1.
using Word = std::vector<int>;

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  [[nodiscard]] std::string word_str(const Word& w) const;
  [[nodiscard]] std::string str() const;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t line, std::size_t column);
  std::size_t line, column;
};

/// Parses `< g1, g2 | w1, w2 >`. Words combine generators with `*`, powers
/// `w^n` (n may be negative), conjugation `a^b` = b^-1 a b, parentheses, and
/// `X` as shorthand for `x^-1` when x is a generator. Words are freely reduced.
Presentation parse_presentation(std::string_view text);

/// Parses a single word over the given generator names.
Word parse_word(std::string_view text, const std::vector<std::string>& generators);

Word free_reduce(const Word& w);
Word inverse_word(const Word& w);

}  // namespace axial
