#include <gtest/gtest.h>

#include "freealg/scalar.hpp"

using namespace freealg;

namespace {

Poly random_poly(RationalSampler& rng, int max_degree) {
  Poly p;
  const int d = rng.uniform_int(0, max_degree);
  for (int i = 0; i <= d; ++i) p += Poly::monomial(rng.next(20, 7), i);
  return p;
}

Poly linear(const Rational& root) { return Poly::variable() - Poly(root); }

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational(" -7 "), Rational(-7));
  EXPECT_EQ(to_string(Rational(-3, 2)), "-3/2");
  EXPECT_EQ(to_string(Rational(5)), "5/1");
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("abc"), Error);
}

TEST(Rational, SamplerIsCanonicalAndSeeded) {
  RationalSampler a(7), b(7);
  for (int k = 0; k < 100; ++k) {
    const Rational q = a.next(30, 12);
    EXPECT_EQ(q, b.next(30, 12));
    Rational c = q;
    c.canonicalize();
    EXPECT_EQ(c.get_num(), q.get_num());
    EXPECT_EQ(c.get_den(), q.get_den());
  }
}

TEST(Poly, DivmodRemultiplies) {
  RationalSampler rng(1);
  for (int k = 0; k < 100; ++k) {
    const Poly f = random_poly(rng, 7);
    Poly g = random_poly(rng, 4);
    if (g.is_zero()) g = Poly(Rational(1));
    Poly q, r;
    Poly::divmod(f, g, q, r);
    EXPECT_EQ(q * g + r, f);
    EXPECT_TRUE(r.is_zero() || r.degree() < g.degree());
  }
  Poly q, r;
  EXPECT_THROW(Poly::divmod(Poly::variable(), Poly(), q, r), Error);
}

TEST(Poly, GcdMatchesEuclidAndKnownFactors) {
  RationalSampler rng(2);
  for (int k = 0; k < 60; ++k) {
    const Poly common = linear(rng.next(9, 5)) * linear(rng.next(9, 5));
    const Poly a = random_poly(rng, 5) * common;
    const Poly b = random_poly(rng, 5) * common;
    if (a.is_zero() || b.is_zero()) continue;
    const Poly g = Poly::gcd(a, b);
    EXPECT_EQ(g, Poly::gcd_euclid(a, b));
    Poly q, r;
    Poly::divmod(g, common.monic(), q, r);
    EXPECT_TRUE(r.is_zero());
  }
  // large shifted-product denominators, as produced by sigma-orbits
  Poly d(Rational(1)), n(Rational(1));
  for (int j = 0; j < 24; ++j) {
    d = d * linear(Rational(2 * j + 1, 7));
    n = n * linear(Rational(3 * j - 1, 5)) + Poly(Rational(j, 11));
  }
  const Poly g = linear(Rational(1, 7));
  EXPECT_EQ(Poly::gcd(n * g * g, d * g), Poly::gcd_euclid(n * g * g, d * g));
  EXPECT_EQ(Poly::gcd(Poly(), Poly::variable() * Rational(3)), Poly::variable());
}

TEST(Poly, LongProductsMatchSchoolbook) {
  RationalSampler rng(3);
  for (int k = 0; k < 30; ++k) {
    const Poly a = random_poly(rng, 12);
    const Poly b = random_poly(rng, 12);
    const Rational x = rng.next(5, 3);
    EXPECT_EQ((a * b).eval(x), a.eval(x) * b.eval(x));
  }
}

TEST(RatFun, CanonicalForm) {
  const Poly t = Poly::variable();
  const RatFun f = RatFun::reduce((t - Poly(Rational(1))) * (t + Poly(Rational(2))) * Rational(4),
                                  (t - Poly(Rational(1))) * Rational(2));
  EXPECT_EQ(f.den(), Poly(Rational(1)));
  EXPECT_EQ(f.num(), (t + Poly(Rational(2))) * Rational(2));
  EXPECT_THROW(RatFun::reduce(t, Poly()), Error);
  EXPECT_THROW(RatFun().inverse(), Error);
}

TEST(RatFun, FieldAxiomsAndEvaluation) {
  RationalSampler rng(4);
  auto random_rf = [&] {
    Poly den = random_poly(rng, 2);
    if (den.is_zero()) den = Poly(Rational(1));
    return RatFun::reduce(random_poly(rng, 3), den);
  };
  for (int k = 0; k < 60; ++k) {
    const RatFun a = random_rf(), b = random_rf(), c = random_rf();
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), RatFun(1));
    const Rational x = rng.next(40, 9) + Rational(1, 997);
    try {
      EXPECT_EQ((a * b).eval(x), a.eval(x) * b.eval(x));
      EXPECT_EQ((a + b).eval(x), a.eval(x) + b.eval(x));
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::PoleAtPoint);
    }
  }
}

TEST(RatFun, ShiftIsARingMap) {
  RationalSampler rng(5);
  const RatFun t = RatFun::variable();
  EXPECT_EQ(t.shift(Rational(1)), t - RatFun(1));
  for (int k = 0; k < 30; ++k) {
    const RatFun a = RatFun::reduce(random_poly(rng, 3), Poly(Rational(1)) + Poly::variable() * rng.next(3, 2));
    const RatFun b = RatFun(random_poly(rng, 3));
    const Rational c = rng.next(5, 3);
    EXPECT_EQ((a * b).shift(c), a.shift(c) * b.shift(c));
    EXPECT_EQ((a + b).shift(c), a.shift(c) + b.shift(c));
  }
}
