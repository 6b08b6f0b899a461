#include "freealg/skewfrac.hpp"

namespace freealg {

SkewFrac::SkewFrac(const SkewPoly& den, const SkewPoly& num) : den_(den), num_(num) {
  require_same_aut(den, num);
  if (den.is_zero()) throw Error(ErrorKind::InvertZero, "fraction with zero denominator");
  if (num_.is_zero()) {
    den_ = SkewPoly::one(den.aut());
    return;
  }
  if (den_.degree() > 0 && num_.degree() > 0) {
    const SkewPoly h = gcld(den_, num_);
    if (h.degree() > 0) {
      den_ = divmod(den_, h, Side::Left).q;
      num_ = divmod(num_, h, Side::Left).q;
    }
  }
  const RatFun c = den_.monic_left_unit();
  if (!c.is_one()) {
    den_ = den_.left_scale(c);
    num_ = num_.left_scale(c);
  }
}

SkewFrac SkewFrac::from_right(const SkewPoly& num, const SkewPoly& den) {
  require_same_aut(num, den);
  if (den.is_zero()) throw Error(ErrorKind::InvertZero, "fraction with zero denominator");
  if (num.is_zero()) return SkewFrac(num.aut());
  // num den^{-1} = a^{-1} b  iff  a num = b den
  const GcrdLlcm g = gcrd_llcm(num, den);
  return SkewFrac(g.a, g.b);
}

SkewFrac SkewFrac::operator-() const { return SkewFrac(den_, -num_, Canonical{}); }

SkewFrac operator+(const SkewFrac& a, const SkewFrac& b) {
  require_same_aut(a.den_, b.den_);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return SkewFrac(a.den_, a.num_ + b.num_);
  // l = x d1 = y d2, so d1^{-1} = l^{-1} x
  const GcrdLlcm g = gcrd_llcm(a.den_, b.den_);
  return SkewFrac(g.llcm, g.a * a.num_ + g.b * b.num_);
}

SkewFrac operator*(const SkewFrac& a, const SkewFrac& b) {
  require_same_aut(a.den_, b.den_);
  if (a.is_zero() || b.is_zero()) return SkewFrac(a.aut());
  if (b.den_.degree() == 0) return SkewFrac(a.den_, a.num_ * b.num_);  // b.den_ is 1
  // n1 d2^{-1} = x^{-1} y with x n1 = y d2
  const GcrdLlcm g = gcrd_llcm(a.num_, b.den_);
  return SkewFrac(g.a * a.den_, g.b * b.num_);
}

SkewFrac SkewFrac::inverse() const {
  if (is_zero()) throw Error(ErrorKind::InvertZero, "inverse of zero in K(p;sigma)");
  return SkewFrac(num_, den_);
}

SkewFrac SkewFrac::scaled(const Rational& c) const {
  if (c == 0) return SkewFrac(aut());
  return SkewFrac(den_, num_.right_scale(RatFun(c)), Canonical{});
}

std::string SkewFrac::str() const {
  if (den_.degree() == 0) return num_.str();
  return "(" + den_.str() + ")^-1 * (" + num_.str() + ")";
}

bool equal_by_cross_llcm(const SkewFrac& a, const SkewFrac& b) {
  const GcrdLlcm g = gcrd_llcm(a.den(), b.den());
  return g.a * a.num() == g.b * b.num();
}

bool orbit_distinct(const Rational& alpha, const Rational& beta, const Rational& c) {
  if (c == 0) return false;
  const Rational ratio = (alpha - beta) / c;
  return ratio.get_den() != 1;
}

CauchonPair cauchon_pair(const ShiftAut& aut, const Rational& alpha, const Rational& beta, int p_power) {
  const RatFun t = RatFun::variable();
  const SkewPoly t_minus_alpha = SkewPoly::constant(aut, t - RatFun(alpha));
  const SkewPoly t_minus_beta = SkewPoly::constant(aut, t - RatFun(beta));
  const SkewPoly one = SkewPoly::one(aut);
  const SkewPoly pk = SkewPoly::monomial(aut, RatFun(1), p_power);
  return {SkewFrac::from_right(t_minus_alpha, t_minus_beta), SkewFrac::from_right(one - pk, one + pk)};
}

namespace {

SymmetricImages symmetric_images(const ShiftAut& aut, const Rational& alpha, const Rational& beta, int p_power) {
  auto [s, u] = cauchon_pair(aut, alpha, beta, p_power);
  SkewFrac sbar = s + s.inverse();
  SkewFrac tbar = u * sbar * u.inverse();
  return {std::move(s), std::move(u), std::move(sbar), std::move(tbar)};
}

}  // namespace

SymmetricImages build_heisenberg_images() {
  const ShiftAut aut{Rational(1)};
  // Cauchon's theorem is applied to K[p^2; sigma^2], sigma^2(t) = t - 2
  if (!orbit_distinct(Rational(5, 6), Rational(1, 6), Rational(2)))
    throw Error(ErrorKind::HypothesisViolation, "orbits of 5/6 and 1/6 under t -> t - 2 coincide");
  return symmetric_images(aut, Rational(5, 6), Rational(1, 6), 2);
}

SymmetricImages build_twodim_images() {
  const ShiftAut aut{Rational(-1)};  // e f = f (e + 1)
  if (!orbit_distinct(Rational(1, 3), Rational(-1, 3), Rational(-1)))
    throw Error(ErrorKind::HypothesisViolation, "orbits of 1/3 and -1/3 under e -> e + 1 coincide");
  return symmetric_images(aut, Rational(1, 3), Rational(-1, 3), 1);
}

}  // namespace freealg
