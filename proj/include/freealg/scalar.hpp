#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "freealg/errors.hpp"

namespace freealg {

/// Arbitrary precision rational; GMP keeps it canonical (den > 0, reduced).
using Rational = mpq_class;
using Integer = mpz_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// Deterministic source of small rationals for randomized oracles.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}
  /// num in [-num_bound, num_bound], den in [1, den_bound].
  Rational next(int num_bound = 50, int den_bound = 13);
  int uniform_int(int lo, int hi);
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Dense univariate polynomial over Q, lowest degree first.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(const Rational& c);  // NOLINT: constants convert implicitly
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT

  static Poly monomial(const Rational& c, int degree);
  static Poly variable() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int i) const;
  const Rational& leading() const { return coeffs_.back(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division over Q; throws DivisionByZero on a zero divisor.
  static void divmod(const Poly& f, const Poly& g, Poly& q, Poly& r);
  static Poly gcd(Poly a, Poly b);  // monic, gcd(0,0) = 0
  /// Monic remainder sequence over Q; the reference for gcd.
  static Poly gcd_euclid(Poly a, Poly b);

  Poly monic() const;
  Rational eval(const Rational& x) const;
  /// f(t - c)
  Poly shift(const Rational& c) const;
  /// f(lambda * t)
  Poly scale_variable(const Rational& lambda) const;

  std::string str(std::string_view var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Element of Q(t) in canonical form: den monic, gcd(num, den) = 1, 0 = 0/1.
class RatFun {
 public:
  RatFun() : num_(), den_(1) {}
  RatFun(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  RatFun(long c) : RatFun(Rational(c)) {}          // NOLINT
  RatFun(const Poly& p) : num_(p), den_(1) {}      // NOLINT

  /// ratfun_reduce: the canonical representative of num/den.
  static RatFun reduce(const Poly& num, const Poly& den);
  static RatFun variable() { return RatFun(Poly::variable()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_constant() && num_.is_constant() && !num_.is_zero() && num_.coeff(0) == 1; }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  RatFun operator-() const;
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  RatFun& operator+=(const RatFun& b) { return *this = *this + b; }
  RatFun& operator-=(const RatFun& b) { return *this = *this - b; }
  RatFun& operator*=(const RatFun& b) { return *this = *this * b; }
  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RatFun inverse() const;
  /// Throws PoleAtPoint when the denominator vanishes at x.
  Rational eval(const Rational& x) const;
  /// shift_apply: t -> t - c, the automorphism sigma of a shift.
  RatFun shift(const Rational& c) const;
  RatFun scale_variable(const Rational& lambda) const;

  std::string str(std::string_view var = "t") const;

 private:
  RatFun(Poly num, Poly den, bool /*already canonical*/) : num_(std::move(num)), den_(std::move(den)) {}
  Poly num_;
  Poly den_;
};

enum class ArithOp { Add, Sub, Mul, Div };
/// ratfun_arith
RatFun arith(const RatFun& a, const RatFun& b, ArithOp op);

std::ostream& operator<<(std::ostream& os, const Poly& p);
std::ostream& operator<<(std::ostream& os, const RatFun& f);

}  // namespace freealg
