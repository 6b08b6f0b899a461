#include <gtest/gtest.h>

#include "freealg/skewfrac.hpp"

using namespace freealg;

namespace {

RatFun random_ratfun(RationalSampler& rng) {
  Poly num;
  for (int i = 0; i <= rng.uniform_int(0, 1); ++i) num += Poly::monomial(rng.next(9, 3), i);
  return num.is_zero() ? RatFun(1) : RatFun(num);
}

SkewPoly random_skewpoly(const ShiftAut& aut, RationalSampler& rng, int max_degree) {
  std::vector<RatFun> c;
  for (int i = rng.uniform_int(0, max_degree); i >= 0; --i) c.push_back(random_ratfun(rng));
  SkewPoly f(aut, c);
  return f.is_zero() ? SkewPoly::one(aut) : f;
}

SkewFrac random_frac(const ShiftAut& aut, RationalSampler& rng) {
  return SkewFrac(random_skewpoly(aut, rng, 2), random_skewpoly(aut, rng, 2));
}

}  // namespace

TEST(SkewFrac, CanonicalFormIgnoresCommonLeftFactor) {
  RationalSampler rng(21);
  const ShiftAut aut{Rational(1)};
  for (int k = 0; k < 20; ++k) {
    const SkewPoly d = random_skewpoly(aut, rng, 2), n = random_skewpoly(aut, rng, 2);
    const SkewPoly h = random_skewpoly(aut, rng, 1);
    EXPECT_EQ(SkewFrac(h * d, h * n), SkewFrac(d, n));
    EXPECT_TRUE(SkewFrac(d, n).den().is_monic());
  }
  EXPECT_THROW(SkewFrac(SkewPoly(aut), SkewPoly::one(aut)), Error);
}

TEST(SkewFrac, FieldAxioms) {
  RationalSampler rng(22);
  for (const Rational& c : {Rational(1), Rational(-1)}) {
    const ShiftAut aut{c};
    const SkewFrac one(SkewPoly::one(aut));
    for (int k = 0; k < 12; ++k) {
      const SkewFrac a = random_frac(aut, rng), b = random_frac(aut, rng), e = random_frac(aut, rng);
      EXPECT_EQ((a * b) * e, a * (b * e));
      EXPECT_EQ(a * (b + e), a * b + a * e);
      EXPECT_EQ((a + b) * e, a * e + b * e);
      EXPECT_TRUE((a - a).is_zero());
      if (!a.is_zero()) {
        EXPECT_EQ(a * a.inverse(), one);
        EXPECT_EQ(a.inverse() * a, one);
      }
    }
  }
}

TEST(SkewFrac, CrossLlcmAgreesWithStructuralEquality) {
  RationalSampler rng(23);
  const ShiftAut aut{Rational(-1)};
  for (int k = 0; k < 15; ++k) {
    const SkewFrac a = random_frac(aut, rng), b = random_frac(aut, rng);
    EXPECT_EQ(equal_by_cross_llcm(a, b), a == b);
    const SkewFrac c = (a * b) * b.inverse();
    EXPECT_TRUE(equal_by_cross_llcm(c, a));
    EXPECT_EQ(c, a);
  }
}

TEST(SkewFrac, RightFractions) {
  RationalSampler rng(24);
  const ShiftAut aut{Rational(1)};
  for (int k = 0; k < 15; ++k) {
    const SkewPoly n = random_skewpoly(aut, rng, 2), d = random_skewpoly(aut, rng, 2);
    const SkewFrac f = SkewFrac::from_right(n, d);
    EXPECT_EQ(f * SkewFrac(d), SkewFrac(n));
  }
}

TEST(SkewFrac, BaseFieldEmbedding) {
  const ShiftAut aut{Rational(1)};
  const RatFun t = RatFun::variable();
  const SkewFrac a = SkewFrac::constant(aut, t), b = SkewFrac::constant(aut, t + RatFun(2));
  EXPECT_TRUE((a * b.inverse()).in_base_field());
  EXPECT_EQ((a * b.inverse()).base_value(), t / (t + RatFun(2)));
  const SkewFrac p(SkewPoly::p(aut));
  EXPECT_FALSE(p.in_base_field());
  // p t p^{-1} = sigma^{-1}(t) = t + 1
  EXPECT_EQ(p * a * p.inverse(), SkewFrac::constant(aut, t + RatFun(1)));
}

TEST(SkewFrac, OrbitDistinctness) {
  EXPECT_TRUE(orbit_distinct(Rational(0), Rational(1, 2), Rational(1)));
  EXPECT_FALSE(orbit_distinct(Rational(0), Rational(4), Rational(1)));
  EXPECT_FALSE(orbit_distinct(Rational(1, 3), Rational(-5, 3), Rational(2)));
  EXPECT_TRUE(orbit_distinct(Rational(1, 3), Rational(-2, 3), Rational(2)));
  EXPECT_FALSE(orbit_distinct(Rational(0), Rational(1, 2), Rational(0)));
}

TEST(SkewFrac, CauchonPairShape) {
  const ShiftAut aut{Rational(1)};
  const CauchonPair cp = cauchon_pair(aut, Rational(0), Rational(1, 2), 2);
  const RatFun t = RatFun::variable();
  EXPECT_TRUE(cp.s.in_base_field());
  EXPECT_EQ(cp.s.base_value(), t / (t - RatFun(Rational(1, 2))));
  const SkewFrac p2(SkewPoly::monomial(aut, RatFun(1), 2));
  const SkewFrac one(SkewPoly::one(aut));
  EXPECT_EQ(cp.u * (one + p2), one - p2);
}

TEST(SkewFrac, SymmetricImages) {
  for (const SymmetricImages& im : {build_heisenberg_images(), build_twodim_images()}) {
    EXPECT_EQ(im.sbar, im.s + im.s.inverse());
    EXPECT_EQ(im.tbar * im.u, im.u * im.sbar);
  }
  const SymmetricImages h = build_heisenberg_images();
  const RatFun t = RatFun::variable();
  EXPECT_EQ(h.s.base_value(), (t - RatFun(Rational(5, 6))) / (t - RatFun(Rational(1, 6))));
}
