#include "strand/word.hpp"

#include <cctype>
#include <sstream>

namespace strand {

Word Word::inverse() const {
  Word w;
  w.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    w.letters.push_back({it->gen, static_cast<int8_t>(-it->sign)});
  return w;
}

Word& Word::append(const Word& w) {
  letters.insert(letters.end(), w.letters.begin(), w.letters.end());
  return *this;
}

Word& Word::append(Letter l) {
  letters.push_back(l);
  return *this;
}

namespace {

// x_k = x0^(1-k) x1 x0^(k-1) for k >= 2; a power of x_k expands each copy.
void push_generator(Word& w, uint32_t k, int exp) {
  if (exp == 0) return;
  int8_t sign = exp > 0 ? int8_t{1} : int8_t{-1};
  int count = exp > 0 ? exp : -exp;
  for (int c = 0; c < count; ++c) {
    if (k <= 1) {
      w.letters.push_back({k, sign});
      continue;
    }
    Word one;
    for (uint32_t i = 0; i + 1 < k; ++i) one.letters.push_back({0, -1});
    one.letters.push_back({1, 1});
    for (uint32_t i = 0; i + 1 < k; ++i) one.letters.push_back({0, 1});
    if (sign < 0) one = one.inverse();
    w.append(one);
  }
}

}  // namespace

Word parse_word(const std::string& text) {
  Word w;
  size_t i = 0;
  size_t n = text.size();
  while (i < n) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != 'x') throw ParseError(i, "expected generator 'x<k>'");
    size_t tok = i;
    ++i;
    if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError(i, "expected generator index after 'x'");
    uint64_t k = 0;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
      k = k * 10 + static_cast<uint64_t>(text[i] - '0');
      if (k > 1000000) throw ParseError(tok, "generator index out of range");
      ++i;
    }
    long exp = 1;
    if (i < n && text[i] == '^') {
      ++i;
      bool neg = false;
      if (i < n && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
      }
      if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError(i, "expected integer exponent after '^'");
      uint64_t e = 0;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
        e = e * 10 + static_cast<uint64_t>(text[i] - '0');
        if (e > 100000) throw ParseError(tok, "exponent out of range");
        ++i;
      }
      exp = neg ? -static_cast<long>(e) : static_cast<long>(e);
    }
    if (i < n && !std::isspace(static_cast<unsigned char>(text[i])))
      throw ParseError(i, "unexpected character in word");
    push_generator(w, static_cast<uint32_t>(k), static_cast<int>(exp));
  }
  return w;
}

std::string word_to_text(const Word& w) {
  std::ostringstream os;
  size_t i = 0;
  bool first = true;
  while (i < w.letters.size()) {
    size_t j = i;
    while (j < w.letters.size() && w.letters[j] == w.letters[i]) ++j;
    long run = static_cast<long>(j - i) * w.letters[i].sign;
    if (!first) os << ' ';
    first = false;
    os << 'x' << w.letters[i].gen;
    if (run != 1) os << '^' << run;
    i = j;
  }
  return os.str();
}

Word word_power(const Word& w, int k) {
  Word base = k >= 0 ? w : w.inverse();
  int count = k >= 0 ? k : -k;
  Word out;
  for (int i = 0; i < count; ++i) out.append(base);
  return out;
}

}  // namespace strand
