#pragma once

// Seeded random words over generator alphabets.
//
// The PRNG is std::mt19937_64, whose output sequence is fixed by the C++
// standard, and bounded draws use rejection sampling rather than
// std::uniform_int_distribution, so a seed reproduces the same words on
// every platform.

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "thompson/element.hpp"

namespace thompson {

class WordRng {
 public:
  static constexpr std::string_view kName = "mt19937_64";

  explicit WordRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n);
  // Uniform in [lo, hi].
  long between(long lo, long hi);

 private:
  std::mt19937_64 engine_;
};

struct Letter {
  std::size_t generator;
  bool inverse;
};

using Word = std::vector<Letter>;

struct Alphabet {
  std::string name;
  std::vector<std::string> names;
  std::vector<Element> generators;
  std::vector<Element> inverses;
  Element identity;
};

// {A, B} on the line.
Alphabet alphabet_F();
// {A, B, C} on the circle R/Z.
Alphabet alphabet_T();
// Line generators of F_3: t (x + 1), u (bump on [0, 4/3], slopes 1/3 and 3),
// v (bump on [0, 2], slopes 1/3, 1, 3).
Alphabet alphabet_F3();
// {t^2, u, v}: all in F_{3,inf}.
Alphabet alphabet_F3inf();

PLMap f3_bump_u();
PLMap f3_bump_v();

// Length uniform in [1, max_len], letters uniform over generators and inverses.
Word random_word(WordRng& rng, const Alphabet& alphabet, long max_len);
Element evaluate_word(const Alphabet& alphabet, const Word& word);
std::string word_string(const Alphabet& alphabet, const Word& word);

// Single-letter generator names; lowercase is the inverse, so "BaCB" is
// B A^-1 C B. Throws std::invalid_argument on unknown letters.
Word parse_word(const Alphabet& alphabet, std::string_view text);

}  // namespace thompson
