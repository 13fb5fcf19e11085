#include <gtest/gtest.h>

#include <set>

#include "support.hpp"
#include "thompson/serialize.hpp"
#include "thompson/twisted.hpp"

using namespace thompson;
using testing_support::SplitMix;

namespace {

PLMap rho_of(const PLMap& f) {
  const PLMap r = gen::reflection();
  return compose(r, compose(f, r));
}

// Test-side rescale of f onto [p, p + 2^-m].
PLMap squeeze(const PLMap& f, const Rat& p, long m) {
  const PLMap alpha = PLMap::affine(pow(Rat(2), -m), p);
  return compose(alpha, compose(f, invert(alpha)));
}

const Element kId = PLMap::identity();

}  // namespace

TEST(Twisted, RhoOnLineAndCircle) {
  const Automorphism rho = Automorphism::rho();
  SplitMix g(51);
  for (int i = 0; i < 100; ++i) {
    const PLMap f = testing_support::random_f(g);
    const PLMap h = testing_support::random_f(g);
    const Element rf = apply_aut(rho, f);
    EXPECT_EQ(rf, Element(rho_of(f)));
    EXPECT_EQ(apply_aut(rho, rf), Element(f));
    EXPECT_EQ(apply_aut(rho, compose(f, h)), compose(rf, apply_aut(rho, h)));
    EXPECT_TRUE(is_member(std::get<PLMap>(rf), GroupF{}));
    for (const Rat& x : testing_support::dyadic_grid(0, 1, 3))
      EXPECT_EQ(std::get<PLMap>(rf)(x), Rat(1) - f(Rat(1) - x));
  }
  EXPECT_TRUE(power_is_inner(rho, 2, kId));
  EXPECT_FALSE(power_is_inner(rho, 1, kId));
  EXPECT_TRUE(power_is_inner(rho, 2, Element(CircleMap())));
  EXPECT_TRUE(spot_check_generators(rho));
}

TEST(Twisted, ApplyAutExamples) {
  const Automorphism rho = Automorphism::rho();
  for (long k = 1; k <= 4; ++k)
    EXPECT_EQ(apply_aut(rho, witness_h(k)), Element(witness_h(k)));
  const Element a = gen::A();
  EXPECT_TRUE(is_identity(apply_aut(Inner{a}, kId)));
  const SupportSet s = support(apply_aut(rho, witness_f(2)));
  for (const auto& c : s.components) {
    EXPECT_GE(c.lo, ExtRat(Rat(1, 2)));
    EXPECT_LE(c.hi, ExtRat(Rat(1)));
  }
}

TEST(Twisted, ConjByWhitelist) {
  EXPECT_EQ(classify_conjugator(gen::reflection(), 2), Whitelist::reflection);
  EXPECT_EQ(classify_conjugator(PLMap::affine(Rat(1, 4), Rat(3, 8)), 2), Whitelist::affine);
  EXPECT_EQ(classify_conjugator(gen::B(), 2), Whitelist::group_element);
  EXPECT_EQ(classify_conjugator(PLMap::affine(3, 0), 2), std::nullopt);
  const Automorphism bad = ConjBy{PLMap::affine(3, 0), Whitelist::affine, 2};
  EXPECT_THROW(apply_aut(bad, gen::A()), std::invalid_argument);
  const Automorphism by_r = ConjBy{gen::reflection(), Whitelist::reflection, 2};
  EXPECT_EQ(apply_aut(by_r, gen::A()), apply_aut(Automorphism::rho(), gen::A()));
  EXPECT_TRUE(spot_check_generators(ConjBy{gen::B(), Whitelist::group_element, 2}));
}

TEST(Twisted, CarrierMismatch) {
  EXPECT_THROW(apply_aut(Inner{gen::C()}, gen::A()), std::invalid_argument);
  EXPECT_THROW(twisted_conjugate(gen::A(), gen::C(), Automorphism::rho()), std::invalid_argument);
}

TEST(Twisted, TwistedConjugateExamples) {
  SplitMix g(52);
  const Automorphism id = Automorphism::identity_on(kId);
  for (int i = 0; i < 50; ++i) {
    const Element x = testing_support::random_f(g);
    const Element gm = testing_support::random_f(g);
    EXPECT_EQ(twisted_conjugate(gm, x, id), product(gm, x, invert(gm)));
    EXPECT_EQ(twisted_conjugate(kId, x, Automorphism::rho()), x);
    EXPECT_TRUE(in_fix(id, x));
  }
  const PLMap a = gen::A();
  const PLMap t = std::get<PLMap>(twisted_conjugate(a, kId, Automorphism::rho()));
  for (const Rat& x : testing_support::dyadic_grid(-1, 2, 6))
    EXPECT_EQ(t(x), a(Rat(1) - invert(a)(Rat(1) - x))) << x;
}

TEST(Twisted, InFix) {
  EXPECT_TRUE(in_fix(Automorphism::rho(), witness_h(3)));
  EXPECT_FALSE(in_fix(Automorphism::rho(), witness_f(1)));
}

TEST(Twisted, Witnesses) {
  EXPECT_EQ(witness_f(1), gen::rescaled_bump(Rat(1, 4), 2));
  for (long k = 1; k <= 32; ++k) {
    const PLMap f = witness_f(k);
    const PLMap h = witness_h(k);
    EXPECT_TRUE(is_member(f, GroupF{}));
    EXPECT_EQ(sigma(Element(f)), static_cast<std::size_t>(k));
    const auto comps = support(f).components;
    EXPECT_GT(comps.front().lo, ExtRat(Rat(0)));
    EXPECT_LE(comps.back().hi, ExtRat(Rat(1, 2)));
    EXPECT_TRUE(in_fix(Automorphism::rho(), h));
    EXPECT_EQ(sigma(Element(h)), static_cast<std::size_t>(2 * k));
    EXPECT_EQ(sigma(Element(compose(h, h))), static_cast<std::size_t>(2 * k));
    EXPECT_EQ(compose(f, rho_of(f)), compose(rho_of(f), f));
    EXPECT_EQ(h, compose(f, rho_of(f)));
  }
  EXPECT_THROW(witness_f(0), std::invalid_argument);
}

TEST(Twisted, TelescopeValidInstances) {
  SplitMix g(53);
  const Automorphism rho = Automorphism::rho();
  for (int i = 0; i < 100; ++i) {
    const PLMap gx = squeeze(testing_support::random_f(g), 0, 1);
    const PLMap gz = squeeze(testing_support::random_f(g), 0, 1);
    const PLMap x = compose(gx, rho_of(gx));
    const PLMap z = compose(gz, rho_of(gz));
    const TelescopeReport r = telescope_check(x, z, rho, 2, kId);
    ASSERT_EQ(r.verdict, Verdict::pass) << r.detail;
    // Independent restatement of the identity.
    const PLMap y = compose(invert(z), compose(x, rho_of(z)));
    EXPECT_EQ(compose(y, y), compose(invert(z), compose(compose(x, x), z)));
  }
}

TEST(Twisted, TelescopeDisjointBumpFamilyIsNotFixed) {
  // z supported in J inside (0, 1/8), x = h_1 whose support avoids J and r(J).
  const Automorphism rho = Automorphism::rho();
  for (long m = 4; m <= 8; ++m) {
    const PLMap z = gen::rescaled_bump(pow(Rat(2), -m), m);
    const TelescopeReport r = telescope_check(witness_h(1), z, rho, 2, kId);
    EXPECT_EQ(r.verdict, Verdict::precondition_unmet);
    EXPECT_EQ(r.detail, "y is not in Fix(theta)");
  }
}

TEST(Twisted, TelescopeTrivialCases) {
  SplitMix g(54);
  const Automorphism id = Automorphism::identity_on(kId);
  for (int i = 0; i < 20; ++i) {
    const PLMap x = testing_support::random_f(g);
    const PLMap z = testing_support::random_f(g);
    EXPECT_EQ(telescope_check(x, z, id, 1, kId).verdict, Verdict::pass);
  }
  EXPECT_EQ(telescope_check(kId, witness_h(1), Automorphism::rho(), 2, kId).verdict,
            Verdict::pass);
  EXPECT_EQ(telescope_check(witness_f(1), kId, Automorphism::rho(), 2, kId).verdict,
            Verdict::precondition_unmet);
  EXPECT_EQ(telescope_check(witness_h(1), kId, Automorphism::rho(), 1, kId).verdict,
            Verdict::precondition_unmet);
}

TEST(Twisted, SeparateExamples) {
  const Automorphism rho = Automorphism::rho();
  const auto s = separate(witness_h(1), witness_h(2), rho, 2, kId, InvariantKind::sigma);
  ASSERT_EQ(s.status, SeparationStatus::certified);
  EXPECT_EQ(s.certificate->x_value.value, 2);
  EXPECT_EQ(s.certificate->y_value.value, 4);
  EXPECT_TRUE(replay(*s.certificate).ok);

  const Element circle_id = CircleMap();
  const auto t = separate(gen::rotation(Rat(1, 2)), gen::rotation(Rat(1, 4)),
                          Automorphism::identity_on(circle_id), 1, circle_id,
                          InvariantKind::order);
  ASSERT_EQ(t.status, SeparationStatus::certified);
  EXPECT_EQ(t.certificate->x_value.value, 2);
  EXPECT_EQ(t.certificate->y_value.value, 4);
  EXPECT_TRUE(replay(*t.certificate).ok);

  EXPECT_EQ(separate(witness_h(2), witness_h(2), rho, 2, kId, InvariantKind::sigma).status,
            SeparationStatus::inconclusive);
  EXPECT_EQ(separate(witness_f(1), witness_h(2), rho, 2, kId, InvariantKind::sigma).status,
            SeparationStatus::x_not_fixed);
  EXPECT_EQ(separate(witness_h(1), witness_f(2), rho, 2, kId, InvariantKind::sigma).status,
            SeparationStatus::y_not_fixed);
  EXPECT_EQ(separate(witness_h(1), witness_h(2), rho, 1, kId, InvariantKind::sigma).status,
            SeparationStatus::power_not_inner);
}

TEST(Twisted, ReplayRejectsTamperedCertificates) {
  const auto s = separate(witness_h(1), witness_h(3), Automorphism::rho(), 2, kId,
                          InvariantKind::sigma);
  ASSERT_TRUE(s.certificate);
  SeparationCertificate c = *s.certificate;
  c.y_value.value = 4;
  EXPECT_FALSE(replay(c).ok);
  c = *s.certificate;
  c.y = witness_f(3);
  EXPECT_FALSE(replay(c).ok);
  c = *s.certificate;
  c.n = 1;
  EXPECT_FALSE(replay(c).ok);
  c = *s.certificate;
  c.y = c.x;
  c.y_value = c.x_value;
  EXPECT_FALSE(replay(c).ok);
}

TEST(Twisted, CertificatesSurviveSerialization) {
  const RInfinityWitness w = rinfinity_witness(Automorphism::rho(), 5);
  ASSERT_EQ(w.certificates.size(), 10u);
  for (const auto& c : w.certificates) {
    const json j = to_json(c);
    EXPECT_EQ(j["claim"], "distinct-twisted-classes");
    EXPECT_EQ(j["aut"], "rho");
    EXPECT_EQ(j["gamma"], "id");
    const SeparationCertificate back = certificate_from_json(json::parse(j.dump()));
    EXPECT_TRUE(replay(back).ok);
    EXPECT_EQ(to_json(back), j);
  }
}

TEST(Twisted, RInfinityWitness) {
  const auto r4 = rinfinity_witness(Automorphism::rho(), 4);
  EXPECT_EQ(r4.elements.size(), 4u);
  EXPECT_EQ(r4.certificates.size(), 6u);
  std::set<long> values;
  for (const auto& c : r4.certificates) {
    values.insert(*c.x_value.value);
    values.insert(*c.y_value.value);
  }
  EXPECT_EQ(values, (std::set<long>{2, 4, 6, 8}));

  const auto i3 = rinfinity_witness(Automorphism::identity_on(kId), 3);
  values.clear();
  for (const auto& c : i3.certificates) {
    values.insert(*c.x_value.value);
    values.insert(*c.y_value.value);
  }
  EXPECT_EQ(values, (std::set<long>{1, 2, 3}));
  EXPECT_THROW(rinfinity_witness(Inner{gen::A()}, 3), std::invalid_argument);
  EXPECT_THROW(rinfinity_witness(Automorphism::rho(), 1), std::invalid_argument);
}
