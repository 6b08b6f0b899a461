#pragma once

#include <string>

#include "freealg/skewpoly.hpp"

namespace freealg {

/// Element den^{-1} num of the Ore field K(p; sigma), kept canonical:
/// den monic and gcld(den, num) = 1, zero is 1^{-1} 0. Equality is structural.
class SkewFrac {
 public:
  explicit SkewFrac(const ShiftAut& aut) : den_(SkewPoly::one(aut)), num_(aut) {}
  SkewFrac(const SkewPoly& p) : SkewFrac(SkewPoly::one(p.aut()), p) {}  // NOLINT

  /// den^{-1} num, canonicalized. Throws InvertZero for a zero den.
  SkewFrac(const SkewPoly& den, const SkewPoly& num);
  /// num den^{-1}, converted to a left fraction via the Ore condition.
  static SkewFrac from_right(const SkewPoly& num, const SkewPoly& den);
  static SkewFrac constant(const ShiftAut& aut, const RatFun& c) { return SkewFrac(SkewPoly::constant(aut, c)); }

  const SkewPoly& den() const { return den_; }
  const SkewPoly& num() const { return num_; }
  const ShiftAut& aut() const { return den_.aut(); }
  bool is_zero() const { return num_.is_zero(); }
  /// True when the element lies in K (no p anywhere).
  bool in_base_field() const { return den_.degree() == 0 && num_.degree() <= 0; }
  RatFun base_value() const { return num_.coeff(0); }

  SkewFrac operator-() const;
  friend SkewFrac operator+(const SkewFrac& a, const SkewFrac& b);
  friend SkewFrac operator-(const SkewFrac& a, const SkewFrac& b) { return a + (-b); }
  friend SkewFrac operator*(const SkewFrac& a, const SkewFrac& b);
  friend bool operator==(const SkewFrac& a, const SkewFrac& b) { return a.den_ == b.den_ && a.num_ == b.num_; }
  SkewFrac inverse() const;
  SkewFrac scaled(const Rational& c) const;

  std::string str() const;

 private:
  struct Canonical {};
  SkewFrac(SkewPoly den, SkewPoly num, Canonical) : den_(std::move(den)), num_(std::move(num)) {}
  SkewPoly den_;
  SkewPoly num_;
};

/// Equality by the cross-llcm test (independent of canonical forms):
/// a1^{-1}b1 = a2^{-1}b2 iff with l = x a1 = y a2 we have x b1 = y b2.
bool equal_by_cross_llcm(const SkewFrac& a, const SkewFrac& b);

/// Orbits of alpha and beta under z -> z - c are infinite and distinct.
bool orbit_distinct(const Rational& alpha, const Rational& beta, const Rational& c);

/// The elements s = (t - alpha)(t - beta)^{-1} and u = (1 - p^k)(1 + p^k)^{-1}.
struct CauchonPair {
  SkewFrac s;
  SkewFrac u;
};
CauchonPair cauchon_pair(const ShiftAut& aut, const Rational& alpha, const Rational& beta, int p_power);

struct SymmetricImages {
  SkewFrac s;
  SkewFrac u;
  SkewFrac sbar;  // s + s^{-1}
  SkewFrac tbar;  // u sbar u^{-1}
};

/// sigma(t) = t - 1, s = (t - 5/6)(t - 1/6)^{-1}, u = (1 - p^2)(1 + p^2)^{-1}.
SymmetricImages build_heisenberg_images();
/// sigma(e) = e + 1, s = (e - 1/3)(e + 1/3)^{-1}, u = (1 - f)(1 + f)^{-1}.
SymmetricImages build_twodim_images();

}  // namespace freealg
