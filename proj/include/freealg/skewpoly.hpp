#pragma once

#include <string>
#include <vector>

#include "freealg/scalar.hpp"

namespace freealg {

/// The automorphism sigma(t) = t - c of Q(t). c = 0 gives the commutative case.
struct ShiftAut {
  Rational c{0};

  /// sigma^power(f)
  RatFun apply(const RatFun& f, int power = 1) const {
    if (power == 0 || c == 0) return f;
    return f.shift(c * power);
  }
  friend bool operator==(const ShiftAut& a, const ShiftAut& b) { return a.c == b.c; }
};

enum class Side { Left, Right };

/// Element sum_i p^i a_i of K[p; sigma], coefficients written on the right,
/// so that a p = p sigma(a).
class SkewPoly {
 public:
  SkewPoly() = default;
  explicit SkewPoly(ShiftAut aut) : aut_(std::move(aut)) {}
  SkewPoly(ShiftAut aut, std::vector<RatFun> coeffs);

  static SkewPoly constant(const ShiftAut& aut, const RatFun& a) { return monomial(aut, a, 0); }
  /// p^degree * a
  static SkewPoly monomial(const ShiftAut& aut, const RatFun& a, int degree);
  static SkewPoly one(const ShiftAut& aut) { return constant(aut, RatFun(1)); }
  static SkewPoly p(const ShiftAut& aut) { return monomial(aut, RatFun(1), 1); }

  const ShiftAut& aut() const { return aut_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<RatFun>& coeffs() const { return coeffs_; }
  RatFun coeff(int i) const;
  const RatFun& leading() const { return coeffs_.back(); }
  bool is_monic() const { return !is_zero() && leading().is_one(); }
  /// Lowest i with a_i != 0; -1 for zero.
  int order() const;

  SkewPoly operator-() const;
  friend SkewPoly operator+(const SkewPoly& a, const SkewPoly& b);
  friend SkewPoly operator-(const SkewPoly& a, const SkewPoly& b);
  /// sp_mul: (p^i a)(p^j b) = p^{i+j} sigma^j(a) b.
  friend SkewPoly operator*(const SkewPoly& a, const SkewPoly& b);
  friend bool operator==(const SkewPoly& a, const SkewPoly& b) {
    return a.aut_ == b.aut_ && a.coeffs_ == b.coeffs_;
  }

  /// c * f for a scalar c in K.
  SkewPoly left_scale(const RatFun& c) const;
  SkewPoly right_scale(const RatFun& c) const;
  /// The left unit c making c * f monic (f nonzero).
  RatFun monic_left_unit() const;
  SkewPoly monic_left() const { return left_scale(monic_left_unit()); }

  std::string str() const;

 private:
  void trim();
  ShiftAut aut_;
  std::vector<RatFun> coeffs_;
};

struct DivModResult {
  SkewPoly q;
  SkewPoly r;
};

/// Right: f = q g + r. Left: f = g q + r. deg r < deg g.
DivModResult divmod(const SkewPoly& f, const SkewPoly& g, Side side);

struct GcrdLlcm {
  SkewPoly gcrd;  // monic
  SkewPoly llcm;  // monic, llcm = a f = b g
  SkewPoly a;
  SkewPoly b;
};

/// Greatest common right divisor and least common left multiple.
GcrdLlcm gcrd_llcm(const SkewPoly& f, const SkewPoly& g);

/// Monic greatest common left divisor (f = h f', g = h g').
SkewPoly gcld(const SkewPoly& f, const SkewPoly& g);

void require_same_aut(const SkewPoly& a, const SkewPoly& b);

}  // namespace freealg
