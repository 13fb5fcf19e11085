#pragma once

// Seeded generators and reference oracles shared by the unit tests. The
// generator is SplitMix64 so the tests do not lean on the library's own
// word sampler.

#include <cstdint>
#include <vector>

#include "thompson/plmap.hpp"
#include "thompson/rat.hpp"

namespace testing_support {

class SplitMix {
 public:
  explicit SplitMix(std::uint64_t seed) : s_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (s_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t s_;
};

// a / n^k with |a| <= 200, k <= 4.
inline thompson::Rat n_adic(SplitMix& g, long n) {
  return thompson::Rat(g.range(-200, 200)) / thompson::pow(thompson::Rat(n), g.range(0, 4));
}

// Random word in A^{+-1}, B^{+-1} of length 1..max_len, built by the test.
inline thompson::PLMap random_f(SplitMix& g, long max_len = 12) {
  using namespace thompson;
  const PLMap gens[4] = {gen::A(), invert(gen::A()), gen::B(), invert(gen::B())};
  PLMap acc;
  const long len = g.range(1, max_len);
  for (long i = 0; i < len; ++i) acc = compose(acc, gens[g.range(0, 3)]);
  return acc;
}

// Dyadic grid k / 2^bits on [lo, hi].
inline std::vector<thompson::Rat> dyadic_grid(long lo, long hi, long bits) {
  std::vector<thompson::Rat> out;
  const long steps = 1L << bits;
  for (long k = lo * steps; k <= hi * steps; ++k) out.push_back(thompson::Rat(k, steps));
  return out;
}

}  // namespace testing_support
