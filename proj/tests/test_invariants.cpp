#include <gtest/gtest.h>

#include "support.hpp"
#include "thompson/invariants.hpp"
#include "thompson/twisted.hpp"

using namespace thompson;
using testing_support::SplitMix;

namespace {

// Component count from the signs of f(x) - x at every breakpoint and every
// midpoint between them. On each piece f(x) - x is affine, so a run of moved
// points ends exactly at a zero sample or a strict sign change.
std::size_t sigma_by_sampling(const PLMap& f) {
  std::vector<Rat> xs;
  const auto bps = f.breakpoints();
  for (std::size_t i = 0; i < bps.size(); ++i) {
    xs.push_back(bps[i]);
    if (i + 1 < bps.size()) xs.push_back((bps[i] + bps[i + 1]) / Rat(2));
  }
  std::size_t runs = 0;
  int prev = 0;
  for (const Rat& x : xs) {
    const int s = (f(x) - x).sign();
    if (s != 0 && s != prev) ++runs;
    prev = s;
  }
  return runs;
}

Interval iv(Rat a, Rat b) { return {ExtRat(std::move(a)), ExtRat(std::move(b))}; }

}  // namespace

TEST(Invariants, SupportExamples) {
  EXPECT_EQ(support(PLMap::identity()).sigma(), 0u);
  EXPECT_EQ(support(gen::B()).components, (std::vector<Interval>{iv(Rat(1, 2), 1)}));
  EXPECT_EQ(support(gen::A()).components, (std::vector<Interval>{iv(0, 1)}));
  const SupportSet rot = support(gen::rotation(Rat(1, 4)));
  EXPECT_TRUE(rot.entire_circle);
  EXPECT_EQ(rot.sigma(), 1u);
  EXPECT_EQ(sigma(Element(gen::C())), 1u);
  EXPECT_EQ(support(gen::rescaled_bump(Rat(1, 4), 2)).components,
            (std::vector<Interval>{iv(Rat(1, 4), Rat(1, 2))}));
}

TEST(Invariants, SupportOnUnboundedPieces) {
  const SupportSet t = support(gen::translation(1));
  EXPECT_EQ(t.components,
            (std::vector<Interval>{{ExtRat::neg_inf(), ExtRat::pos_inf()}}));
  // 2x has the single fixed point 0.
  const SupportSet d = support(PLMap::affine(2, 0));
  EXPECT_EQ(d.components, (std::vector<Interval>{{ExtRat::neg_inf(), ExtRat(Rat(0))},
                                                 {ExtRat(Rat(0)), ExtRat::pos_inf()}}));
  EXPECT_EQ(d.sigma(), 2u);
  // Crossing points need not be dyadic: 3x - 1 fixes 1/2, x/3 + 1 fixes 3/2.
  EXPECT_EQ(support(PLMap::affine(Rat(1, 3), 1)).components.front().hi, ExtRat(Rat(3, 2)));
}

TEST(Invariants, SigmaMatchesSamplingOracle) {
  SplitMix g(41);
  for (int i = 0; i < 200; ++i) {
    const PLMap f = testing_support::random_f(g);
    EXPECT_EQ(support(f).sigma(), sigma_by_sampling(f));
  }
}

TEST(Invariants, WitnessSigma) {
  EXPECT_EQ(sigma(Element(witness_f(3))), 3u);
  EXPECT_EQ(sigma(Element(witness_f(5))), 5u);
  EXPECT_EQ(sigma(Element(witness_h(3))), 6u);
}

TEST(Invariants, LambdaTau) {
  const auto t = lambda_tau(gen::translation(1));
  EXPECT_EQ(t.lambda, Rat(1));
  EXPECT_EQ(t.tau, Rat(1));
  const auto a = lambda_tau(gen::A());
  EXPECT_EQ(a.lambda, Rat(1));
  EXPECT_EQ(a.tau, Rat(0));
  const auto s = lambda_tau(PLMap::affine(3, 0));
  EXPECT_EQ(s.lambda, Rat(3));
  EXPECT_EQ(s.tau, Rat(0));
}

TEST(Invariants, SupportOfIterates) {
  SplitMix g(42);
  for (int i = 0; i < 200; ++i) {
    const PLMap f = testing_support::random_f(g);
    for (long k : {2L, 3L, 5L, -1L, -3L}) EXPECT_EQ(support(power(f, k)), support(f)) << k;
  }
}

TEST(Invariants, SupportUnderConjugation) {
  SplitMix g(43);
  for (int i = 0; i < 200; ++i) {
    const PLMap f = testing_support::random_f(g);
    PLMap theta;
    switch (g.range(0, 2)) {
      case 0: theta = testing_support::random_f(g); break;
      case 1: theta = gen::reflection(); break;
      default:
        theta = PLMap::affine(Rat(g.range(0, 1) ? -1 : 1) * pow(Rat(2), g.range(-3, 3)),
                              Rat(g.range(-8, 8), 8));
    }
    const PLMap conj = compose(theta, compose(f, invert(theta)));
    EXPECT_EQ(support(conj).sigma(), support(f).sigma());
    EXPECT_EQ(support(conj), transport(support(f), theta));
  }
}

TEST(Invariants, TauAndLambdaAlgebra) {
  SplitMix g(44);
  const PLMap gens[3] = {gen::translation(1), PLMap::canonical({{0, 0}, {1, Rat(1, 3)}, {Rat(4, 3), Rat(4, 3)}}, 1, 1),
                         PLMap::affine(3, Rat(1, 3))};
  auto draw = [&] {
    PLMap acc;
    for (long i = g.range(1, 8); i > 0; --i) {
      const PLMap& s = gens[g.range(0, 1)];
      acc = compose(acc, g.range(0, 1) ? s : invert(s));
    }
    return acc;
  };
  for (int i = 0; i < 200; ++i) {
    const PLMap h = draw();
    const PLMap h2 = draw();
    const PLMap z = compose(draw(), g.range(0, 1) ? gens[2] : invert(gens[2]));
    EXPECT_EQ(lambda_tau(compose(h, h2)).tau, lambda_tau(h).tau + lambda_tau(h2).tau);
    EXPECT_EQ(lambda_tau(compose(z, compose(h, invert(z)))).tau,
              lambda_tau(z).lambda * lambda_tau(h).tau);
    EXPECT_EQ(lambda_tau(compose(z, h)).lambda, lambda_tau(z).lambda * lambda_tau(h).lambda);
  }
}

TEST(Invariants, TorsionOrderIsConjugacyInvariant) {
  SplitMix g(45);
  const CircleMap gens[3] = {gen::embed_F(gen::A()), gen::embed_F(gen::B()), gen::C()};
  for (int i = 0; i < 100; ++i) {
    CircleMap z;
    for (long j = g.range(1, 8); j > 0; --j) z = compose(z, gens[g.range(0, 2)]);
    const long d = 1L << g.range(0, 5);
    const CircleMap f = g.range(0, 1) ? gen::C() : gen::rotation(Rat(g.range(0, d - 1), d));
    EXPECT_EQ(order(compose(z, compose(f, invert(z))), 64), order(f, 64));
  }
}

TEST(Invariants, Profile) {
  const InvariantProfile c = profile(Element(gen::C()));
  EXPECT_EQ(c.sigma, 1u);
  EXPECT_EQ(c.order, 3);
  EXPECT_FALSE(c.lambda.has_value());
  const InvariantProfile h = profile(Element(witness_h(2)));
  EXPECT_EQ(h.sigma, 4u);
  EXPECT_EQ(h.order, std::nullopt);
  const InvariantProfile id = profile(Element(PLMap::identity()));
  EXPECT_EQ(id.sigma, 0u);
  EXPECT_EQ(id.order, 1);
  EXPECT_EQ(id.lambda, Rat(1));
}
