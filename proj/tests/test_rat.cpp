#include <gtest/gtest.h>

#include <stdexcept>

#include "support.hpp"
#include "thompson/rat.hpp"

using namespace thompson;
using testing_support::SplitMix;

namespace {

// Residue by brute force: scale q by n^k until integral, reduce mod n - 1.
long residue_oracle(const Rat& q, long n) {
  mpz_class a = q.num();
  mpz_class d = q.den();
  while (d != 1) {
    const mpz_class g = gcd(d, mpz_class(n));
    if (g == 1) throw std::logic_error("not n-adic");
    d /= g;
    a *= n / g.get_si();
  }
  mpz_class m = a % (n - 1);
  if (m < 0) m += n - 1;
  return m.get_si();
}

}  // namespace

TEST(Rat, Arithmetic) {
  EXPECT_EQ(Rat(1, 2) + Rat(1, 4), Rat(3, 4));
  EXPECT_EQ(Rat(3, 6), Rat(1, 2));
  EXPECT_EQ(Rat(3, 6).str(), "1/2");
  EXPECT_EQ(Rat(1, 3) * Rat(3), Rat(1));
  EXPECT_EQ(Rat(0).str(), "0");
  EXPECT_EQ(Rat(2, -4).str(), "-1/2");
  EXPECT_LT(Rat(1, 3), Rat(1, 2));
  EXPECT_THROW(Rat(1) / Rat(0), std::domain_error);
}

TEST(Rat, Parse) {
  EXPECT_EQ(Rat::parse("3/6"), Rat(1, 2));
  EXPECT_EQ(Rat::parse("-7"), Rat(-7));
  EXPECT_EQ(Rat::parse("123456789012345678901234567890/2").str(),
            "61728394506172839450617283945");
  for (const char* bad : {"", "1/0", "1/-2", "a", "1/2/3", " 1", "1.5", "+-1"})
    EXPECT_THROW(Rat::parse(bad), std::invalid_argument) << bad;
}

TEST(Rat, StringRoundTrip) {
  SplitMix g(7);
  for (int i = 0; i < 500; ++i) {
    const Rat q(g.range(-100000, 100000), g.range(1, 100000));
    EXPECT_EQ(Rat::parse(q.str()), q);
  }
}

TEST(Rat, NAdic) {
  EXPECT_TRUE(is_n_adic(Rat(3, 8), 2));
  EXPECT_FALSE(is_n_adic(Rat(1, 3), 2));
  EXPECT_TRUE(is_n_adic(Rat(5, 12), 6));
  EXPECT_FALSE(is_n_adic(Rat(1, 5), 6));
  EXPECT_TRUE(is_n_adic(Rat(7), 3));
}

TEST(Rat, DeltaResidue) {
  EXPECT_EQ(delta_residue(Rat(0), 3).value, 0);
  EXPECT_EQ(delta_residue(Rat(5, 9), 3).value, 1);
  EXPECT_EQ(delta_residue(Rat(15, 27), 3).value, 1);
  EXPECT_EQ(delta_residue(Rat(4, 3), 3).value, 0);
  EXPECT_EQ(delta_residue(Rat(4, 3), 3).modulus, 2);
  EXPECT_EQ(delta_residue(Rat(-1), 4).value, 2);
  EXPECT_THROW(delta_residue(Rat(1, 2), 3), std::domain_error);
  EXPECT_THROW(delta_residue(Rat(1), 1), std::domain_error);
}

TEST(Rat, DeltaResidueMatchesOracle) {
  SplitMix g(11);
  for (long n : {3L, 4L, 5L, 6L, 10L})
    for (int i = 0; i < 200; ++i) {
      const Rat q = testing_support::n_adic(g, n);
      EXPECT_EQ(delta_residue(q, n).value, residue_oracle(q, n)) << q << " n=" << n;
    }
}

TEST(Rat, DeltaResidueIsRingHomomorphism) {
  SplitMix g(12);
  for (long n : {3L, 4L, 5L, 7L})
    for (int i = 0; i < 200; ++i) {
      const Rat p = testing_support::n_adic(g, n);
      const Rat q = testing_support::n_adic(g, n);
      const long m = n - 1;
      const long rp = delta_residue(p, n).value;
      const long rq = delta_residue(q, n).value;
      EXPECT_EQ(delta_residue(p + q, n).value, (rp + rq) % m);
      EXPECT_EQ(delta_residue(p * q, n).value, (rp * rq) % m);
    }
}

TEST(Rat, DeltaResidueRepresentationIndependent) {
  SplitMix g(13);
  for (int i = 0; i < 200; ++i) {
    const long n = g.range(3, 9);
    const long a = g.range(-500, 500);
    const long k = g.range(0, 3);
    const long extra = g.range(0, 4);
    const Rat q = Rat(a) / pow(Rat(n), k);
    const Rat same = Rat(a) * pow(Rat(n), extra) / pow(Rat(n), k + extra);
    EXPECT_EQ(delta_residue(q, n), delta_residue(same, n));
    long expected = a % (n - 1);
    if (expected < 0) expected += n - 1;
    EXPECT_EQ(delta_residue(q, n).value, expected);
  }
}

TEST(Rat, LogBase) {
  EXPECT_EQ(log_base(Rat(8), 2), 3);
  EXPECT_EQ(log_base(Rat(1, 9), 3), -2);
  EXPECT_EQ(log_base(Rat(1), 5), 0);
  EXPECT_EQ(log_base(Rat(6), 2), std::nullopt);
  EXPECT_EQ(log_base(Rat(-2), 2), std::nullopt);
}

TEST(Rat, FloorAndPow) {
  EXPECT_EQ(Rat(-1, 2).floor(), -1);
  EXPECT_EQ(Rat(7, 2).floor(), 3);
  EXPECT_EQ(pow(Rat(2), -3), Rat(1, 8));
  EXPECT_EQ(floor_div(Rat(7, 4), Rat(1, 2)), 3);
}
