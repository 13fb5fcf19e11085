#include "thompson/words.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace thompson {

std::uint64_t WordRng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("WordRng::below(0)");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  for (;;) {
    const std::uint64_t v = engine_();
    if (v < limit) return v % n;
  }
}

long WordRng::between(long lo, long hi) {
  return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

namespace {

Alphabet make_alphabet(std::string name, std::vector<std::string> names,
                       std::vector<Element> gens) {
  Alphabet a;
  a.name = std::move(name);
  a.names = std::move(names);
  for (const auto& g : gens) a.inverses.push_back(invert(g));
  a.identity = identity_like(gens.front());
  a.generators = std::move(gens);
  return a;
}

}  // namespace

Alphabet alphabet_F() { return make_alphabet("F", {"A", "B"}, {gen::A(), gen::B()}); }

Alphabet alphabet_T() {
  return make_alphabet("T", {"A", "B", "C"},
                       {gen::embed_F(gen::A()), gen::embed_F(gen::B()), gen::C()});
}

PLMap f3_bump_u() {
  return PLMap::canonical({{Rat(0), Rat(0)}, {Rat(1), Rat(1, 3)}, {Rat(4, 3), Rat(4, 3)}},
                          Rat(1), Rat(1));
}

PLMap f3_bump_v() {
  return PLMap::canonical(
      {{Rat(0), Rat(0)}, {Rat(1), Rat(1, 3)}, {Rat(5, 3), Rat(1)}, {Rat(2), Rat(2)}}, Rat(1),
      Rat(1));
}

Alphabet alphabet_F3() {
  return make_alphabet("F_3", {"t", "u", "v"},
                       {gen::translation(Rat(1)), f3_bump_u(), f3_bump_v()});
}

Alphabet alphabet_F3inf() {
  return make_alphabet("F_{3,inf}", {"t2", "u", "v"},
                       {gen::translation(Rat(2)), f3_bump_u(), f3_bump_v()});
}

Word random_word(WordRng& rng, const Alphabet& alphabet, long max_len) {
  const long len = rng.between(1, std::max(1L, max_len));
  Word w;
  w.reserve(static_cast<std::size_t>(len));
  const std::uint64_t letters = 2 * alphabet.generators.size();
  for (long i = 0; i < len; ++i) {
    const std::uint64_t c = rng.below(letters);
    w.push_back(Letter{static_cast<std::size_t>(c / 2), (c % 2) == 1});
  }
  return w;
}

Element evaluate_word(const Alphabet& alphabet, const Word& word) {
  Element acc = alphabet.identity;
  for (const auto& l : word)
    acc = compose(acc, l.inverse ? alphabet.inverses[l.generator]
                                 : alphabet.generators[l.generator]);
  return acc;
}

std::string word_string(const Alphabet& alphabet, const Word& word) {
  if (word.empty()) return "id";
  std::string s;
  for (const auto& l : word) {
    if (!s.empty()) s += ' ';
    s += alphabet.names[l.generator];
    if (l.inverse) s += "^-1";
  }
  return s;
}

Word parse_word(const Alphabet& alphabet, std::string_view text) {
  Word w;
  for (char c : text) {
    const char upper = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    bool found = false;
    for (std::size_t i = 0; i < alphabet.names.size(); ++i)
      if (alphabet.names[i].size() == 1 && alphabet.names[i][0] == upper) {
        w.push_back(Letter{i, c != upper});
        found = true;
        break;
      }
    if (!found) throw std::invalid_argument(std::string("unknown generator letter '") + c + "'");
  }
  return w;
}

}  // namespace thompson
