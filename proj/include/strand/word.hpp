#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace strand {

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(size_t pos, const std::string& msg)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

// One letter of a word over the generators of F.  Generators with index >= 2
// are syntactic sugar and are expanded away by parse_word, so a normalized
// Word only contains indices 0 and 1.
struct Letter {
  uint32_t gen = 0;
  int8_t sign = 1;  // +1 or -1

  bool operator==(const Letter&) const = default;
};

struct Word {
  std::vector<Letter> letters;

  bool empty() const { return letters.empty(); }
  size_t size() const { return letters.size(); }
  Word inverse() const;
  Word& append(const Word& w);
  Word& append(Letter l);
};

// Grammar: tokens `x<k>` with optional `^<int>`, separated by whitespace.
// x_k for k >= 2 expands as x0^(1-k) x1 x0^(k-1); exponent 0 is elided.
Word parse_word(const std::string& text);

// Renders with run-length compressed exponents, e.g. "x0 x1^-2".
std::string word_to_text(const Word& w);

// Repeats w k times (k may be negative: inverse repeated).
Word word_power(const Word& w, int k);

}  // namespace strand
