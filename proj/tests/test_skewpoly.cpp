#include <gtest/gtest.h>

#include "freealg/skewpoly.hpp"

using namespace freealg;

namespace {

RatFun random_ratfun(RationalSampler& rng) {
  Poly num, den(Rational(1));
  for (int i = 0; i <= rng.uniform_int(0, 2); ++i) num += Poly::monomial(rng.next(9, 3), i);
  if (rng.uniform_int(0, 1)) den = Poly::variable() - Poly(rng.next(9, 3));
  return RatFun::reduce(num, den);
}

SkewPoly random_skewpoly(const ShiftAut& aut, RationalSampler& rng, int max_degree) {
  std::vector<RatFun> c;
  for (int i = rng.uniform_int(0, max_degree); i >= 0; --i) c.push_back(random_ratfun(rng));
  SkewPoly f(aut, c);
  return f.is_zero() ? SkewPoly::one(aut) : f;
}

// direct expansion of (sum p^i a_i)(sum p^j b_j) = sum p^{i+j} sigma^j(a_i) b_j
std::vector<RatFun> naive_product(const SkewPoly& a, const SkewPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<RatFun> out(a.degree() + b.degree() + 1);
  for (int i = 0; i <= a.degree(); ++i)
    for (int j = 0; j <= b.degree(); ++j) out[i + j] += a.aut().apply(a.coeff(i), j) * b.coeff(j);
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

}  // namespace

TEST(SkewPoly, CommutationRule) {
  const ShiftAut aut{Rational(1)};
  const RatFun t = RatFun::variable();
  const SkewPoly p = SkewPoly::p(aut);
  const SkewPoly a = SkewPoly::constant(aut, t);
  EXPECT_EQ(a * p, p * SkewPoly::constant(aut, t - RatFun(1)));
  EXPECT_EQ((p * p).degree(), 2);
  EXPECT_EQ(SkewPoly::monomial(aut, t, 0).order(), 0);
  EXPECT_EQ(SkewPoly(aut).order(), -1);
}

TEST(SkewPoly, ProductMatchesDirectExpansion) {
  RationalSampler rng(11);
  for (const Rational& c : {Rational(0), Rational(1), Rational(-1), Rational(3, 2)}) {
    const ShiftAut aut{c};
    for (int k = 0; k < 25; ++k) {
      const SkewPoly a = random_skewpoly(aut, rng, 3), b = random_skewpoly(aut, rng, 3);
      EXPECT_EQ((a * b).coeffs(), naive_product(a, b));
    }
  }
}

TEST(SkewPoly, RingAxioms) {
  RationalSampler rng(12);
  const ShiftAut aut{Rational(-1)};
  for (int k = 0; k < 25; ++k) {
    const SkewPoly a = random_skewpoly(aut, rng, 2), b = random_skewpoly(aut, rng, 2),
                   c = random_skewpoly(aut, rng, 2);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ((a * b).degree(), a.degree() + b.degree());
  }
}

TEST(SkewPoly, LeftAndRightDivision) {
  RationalSampler rng(13);
  for (const Rational& c : {Rational(1), Rational(2)}) {
    const ShiftAut aut{c};
    for (int k = 0; k < 20; ++k) {
      const SkewPoly f = random_skewpoly(aut, rng, 4), g = random_skewpoly(aut, rng, 2);
      const DivModResult r = divmod(f, g, Side::Right);
      EXPECT_EQ(r.q * g + r.r, f);
      EXPECT_TRUE(r.r.is_zero() || r.r.degree() < g.degree());
      const DivModResult l = divmod(f, g, Side::Left);
      EXPECT_EQ(g * l.q + l.r, f);
      EXPECT_TRUE(l.r.is_zero() || l.r.degree() < g.degree());
    }
  }
  EXPECT_THROW(divmod(SkewPoly::one(ShiftAut{1}), SkewPoly(ShiftAut{1}), Side::Right), Error);
}

TEST(SkewPoly, GcrdOfBuiltCommonFactor) {
  RationalSampler rng(14);
  const ShiftAut aut{Rational(1)};
  for (int k = 0; k < 15; ++k) {
    const SkewPoly h = random_skewpoly(aut, rng, 1) * SkewPoly::p(aut) + SkewPoly::one(aut);
    const SkewPoly f = random_skewpoly(aut, rng, 2) * h;
    const SkewPoly g = random_skewpoly(aut, rng, 2) * h;
    const GcrdLlcm gl = gcrd_llcm(f, g);
    EXPECT_TRUE(gl.gcrd.is_monic());
    EXPECT_TRUE(divmod(gl.gcrd, h.monic_left(), Side::Right).r.is_zero());
    EXPECT_EQ(gl.a * f, gl.llcm);
    EXPECT_EQ(gl.b * g, gl.llcm);
    EXPECT_EQ(gl.llcm.degree() + gl.gcrd.degree(), f.degree() + g.degree());
  }
}

TEST(SkewPoly, GcldOfBuiltCommonFactor) {
  RationalSampler rng(15);
  const ShiftAut aut{Rational(-1)};
  for (int k = 0; k < 10; ++k) {
    const SkewPoly h = SkewPoly::p(aut) + SkewPoly::constant(aut, random_ratfun(rng));
    const SkewPoly f = h * random_skewpoly(aut, rng, 2);
    const SkewPoly g = h * random_skewpoly(aut, rng, 2);
    const SkewPoly d = gcld(f, g);
    EXPECT_TRUE(divmod(d, h, Side::Left).r.is_zero());
    EXPECT_TRUE(divmod(f, d, Side::Left).r.is_zero());
    EXPECT_TRUE(divmod(g, d, Side::Left).r.is_zero());
  }
}

TEST(SkewPoly, MismatchedAutomorphismsRejected) {
  const SkewPoly a = SkewPoly::p(ShiftAut{1}), b = SkewPoly::p(ShiftAut{2});
  try {
    (void)(a * b);
    FAIL() << "expected AutMismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AutMismatch);
  }
}
