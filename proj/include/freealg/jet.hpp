#pragma once

// Truncated skew Laurent series  sum_{i >= m} t^i a_i + O(t^prec)  with
// coefficients on the right. Two commutation laws are supported:
//   derivation:   a t^{-1} = t^{-1} a + delta(a), hence
//                 a t^j = sum_{k >= 0} binom(-j, k) t^{j+k} delta^k(a)
//   automorphism: a t^j = t^j sigma^j(a)
// Coefficient rings are plugged in through CoeffTraits; a Jet is itself a
// valid coefficient type, which is how towers are built.

#include <algorithm>
#include <climits>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "freealg/errors.hpp"
#include "freealg/pbw.hpp"
#include "freealg/scalar.hpp"

namespace freealg {

inline constexpr int kExactPrec = INT_MAX / 4;

inline int sat_add(int a, int b) {
  if (a >= kExactPrec || b >= kExactPrec) return kExactPrec;
  return std::min(a + b, kExactPrec);
}

enum class Exec { Serial, Parallel };

template <class R>
struct CoeffTraits;

template <>
struct CoeffTraits<Rational> {
  static bool is_zero(const Rational& a) { return a == 0; }
  static bool is_exact_zero(const Rational& a) { return a == 0; }
  static std::optional<Rational> unit_inverse(const Rational& a) {
    if (a == 0) return std::nullopt;
    return Rational(1 / a);
  }
  static Rational scale(const Rational& a, const Rational& q) { return a * q; }
  static bool agrees(const Rational& a, const Rational& b) { return a == b; }
  static std::string str(const Rational& a) { return a.get_str(); }
  static void audit(const Rational& a, std::vector<std::string>& trail) { trail.push_back(a.get_str()); }
};

template <>
struct CoeffTraits<RatFun> {
  static bool is_zero(const RatFun& a) { return a.is_zero(); }
  static bool is_exact_zero(const RatFun& a) { return a.is_zero(); }
  static std::optional<RatFun> unit_inverse(const RatFun& a) {
    if (a.is_zero()) return std::nullopt;
    return a.inverse();
  }
  static RatFun scale(const RatFun& a, const Rational& q) { return a * RatFun(q); }
  static bool agrees(const RatFun& a, const RatFun& b) { return a == b; }
  static std::string str(const RatFun& a) { return a.str(); }
  static void audit(const RatFun& a, std::vector<std::string>& trail) { trail.push_back(a.str()); }
};

/// Units of a (commutative, in our use) enveloping algebra are the nonzero constants.
template <>
struct CoeffTraits<UElem> {
  static bool is_zero(const UElem& a) { return a.is_zero(); }
  static bool is_exact_zero(const UElem& a) { return a.is_zero(); }
  static std::optional<UElem> unit_inverse(const UElem& a) {
    if (a.is_zero() || !a.is_constant()) return std::nullopt;
    return UElem(a.algebra(), Rational(1 / a.constant_term()));
  }
  static UElem scale(const UElem& a, const Rational& q) { return a * q; }
  static bool agrees(const UElem& a, const UElem& b) { return a == b; }
  static std::string str(const UElem& a) { return a.str(); }
  static void audit(const UElem& a, std::vector<std::string>& trail) { trail.push_back(a.str()); }
};

template <class R>
class Jet;

/// The ring R((t; delta)) or R((t; sigma)) truncated at t^order.
template <class R>
class JetRing {
 public:
  using Derivation = std::function<R(const R&)>;
  using AutPower = std::function<R(const R&, int)>;

  /// Derivation law; an empty function means delta = 0 (commuting variable).
  static std::shared_ptr<JetRing> with_derivation(std::string var, int order, R zero, R one, Derivation delta,
                                                  int floor = -8) {
    auto r = std::shared_ptr<JetRing>(new JetRing(std::move(var), order, floor, std::move(zero), std::move(one)));
    r->delta_ = std::move(delta);
    return r;
  }
  static std::shared_ptr<JetRing> with_automorphism(std::string var, int order, R zero, R one, AutPower sigma,
                                                    int floor = -8) {
    auto r = std::shared_ptr<JetRing>(new JetRing(std::move(var), order, floor, std::move(zero), std::move(one)));
    r->sigma_ = std::move(sigma);
    return r;
  }

  const std::string& var() const { return var_; }
  int order() const { return order_; }
  int floor() const { return floor_; }
  const R& zero() const { return zero_; }
  const R& one() const { return one_; }
  bool is_automorphism() const { return static_cast<bool>(sigma_); }
  bool has_derivation() const { return static_cast<bool>(delta_); }
  R delta(const R& a) const { return delta_ ? delta_(a) : zero_; }
  R sigma_power(const R& a, int j) const { return sigma_(a, j); }
  /// Replaces the derivation; used when a lifted derivation refers back to this ring.
  void set_derivation(Derivation delta) { delta_ = std::move(delta); }

 private:
  JetRing(std::string var, int order, int floor, R zero, R one)
      : var_(std::move(var)), order_(order), floor_(floor), zero_(std::move(zero)), one_(std::move(one)) {}

  std::string var_;
  int order_;
  int floor_;
  R zero_;
  R one_;
  Derivation delta_;
  AutPower sigma_;
};

template <class R>
using JetRingPtr = std::shared_ptr<const JetRing<R>>;

/// binom(-j, k) as a rational (an integer); zero once k > -j for j <= 0.
inline Rational crossing_binomial(int j, int k) {
  Integer num = 1;
  Integer den = 1;
  for (int m = 0; m < k; ++m) {
    num *= Integer(-j - m);
    den *= Integer(m + 1);
  }
  return Rational(Integer(num / den));
}

template <class R>
class Jet {
 public:
  using Traits = CoeffTraits<R>;

  /// Exact zero.
  explicit Jet(JetRingPtr<R> ring) : ring_(std::move(ring)), min_ord_(0), prec_(kExactPrec) {}

  static Jet constant(const JetRingPtr<R>& ring, const R& a) { return monomial(ring, a, 0); }
  static Jet one(const JetRingPtr<R>& ring) { return constant(ring, ring->one()); }
  /// t^i a, exact.
  static Jet monomial(const JetRingPtr<R>& ring, const R& a, int i) {
    Jet j(ring);
    if (i < ring->floor()) throw Error(ErrorKind::PrecisionExhausted, "exponent below the Laurent floor");
    if (Traits::is_exact_zero(a)) return j;
    if (i >= ring->order()) {
      j.prec_ = ring->order();
      return j;
    }
    j.min_ord_ = i;
    j.coeffs_.push_back(a);
    return j;
  }
  /// Dense constructor: coefficient of t^{min_ord + k} is coeffs[k].
  static Jet from_coeffs(const JetRingPtr<R>& ring, int min_ord, std::vector<R> coeffs, int prec = kExactPrec) {
    Jet j(ring);
    j.min_ord_ = min_ord;
    j.coeffs_ = std::move(coeffs);
    j.prec_ = prec;
    j.normalize();
    return j;
  }

  const JetRingPtr<R>& ring() const { return ring_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_exact() const { return prec_ >= kExactPrec; }
  /// Valid precision: the series is known modulo t^prec().
  int prec() const { return std::min(prec_, ring_->order()); }
  int raw_prec() const { return prec_; }
  /// Lowest exponent with a nonzero coefficient (prec() for zero).
  int min_ord() const { return is_zero() ? prec() : min_ord_; }
  int max_ord() const { return min_ord_ + static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<R>& coeffs() const { return coeffs_; }
  R coeff(int i) const {
    if (i < min_ord_ || i > max_ord()) return ring_->zero();
    return coeffs_[static_cast<std::size_t>(i - min_ord_)];
  }
  const R& lowest() const { return coeffs_.front(); }

  Jet operator-() const {
    Jet r = *this;
    for (auto& c : r.coeffs_) c = Traits::scale(c, Rational(-1));
    return r;
  }

  friend Jet operator+(const Jet& a, const Jet& b) { return add(a, b, false); }
  friend Jet operator-(const Jet& a, const Jet& b) { return add(a, b, true); }
  friend Jet operator*(const Jet& a, const Jet& b) { return multiply(a, b, Exec::Parallel); }
  Jet& operator+=(const Jet& b) { return *this = *this + b; }
  Jet& operator*=(const Jet& b) { return *this = *this * b; }

  Jet scaled(const Rational& q) const {
    if (q == 0) {
      Jet z(ring_);
      z.prec_ = prec_;
      return z;
    }
    Jet r = *this;
    for (auto& c : r.coeffs_) c = Traits::scale(c, q);
    return r;
  }

  /// Exact structural equality (same coefficients, same precision).
  friend bool operator==(const Jet& a, const Jet& b) {
    if (a.prec() != b.prec() || a.coeffs_.size() != b.coeffs_.size()) return false;
    if (a.is_zero()) return true;
    if (a.min_ord_ != b.min_ord_) return false;
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k)
      if (!(a.coeffs_[k] == b.coeffs_[k])) return false;
    return true;
  }

  /// Agreement modulo the smaller of the two precisions, recursively for towers.
  bool agrees_with(const Jet& b) const {
    const Jet& a = *this;
    const int p = std::min(a.prec(), b.prec());
    const int lo = std::min(a.min_ord(), b.min_ord());
    for (int i = lo; i < p; ++i)
      if (!Traits::agrees(a.coeff(i), b.coeff(i))) return false;
    return true;
  }

  /// Product; `exec` selects the output-parallel kernel or the plain loop.
  static Jet multiply(const Jet& a, const Jet& b, Exec exec);
  /// Reference product: direct accumulation over (i, j, k) triples.
  static Jet multiply_reference(const Jet& a, const Jet& b);

  /// Two-sided inverse; throws LowestCoeffNotUnit or InvertZero.
  Jet inverse() const;

  std::string str() const {
    if (is_zero()) return is_exact() ? "0" : "O(" + ring_->var() + "^" + std::to_string(prec()) + ")";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (Traits::is_exact_zero(coeffs_[k])) continue;
      if (!first) os << " + ";
      first = false;
      const int e = min_ord_ + static_cast<int>(k);
      if (e != 0) os << ring_->var() << "^" << e << "*";
      os << "(" << Traits::str(coeffs_[k]) << ")";
    }
    if (!is_exact()) os << " + O(" << ring_->var() << "^" << prec() << ")";
    return os.str();
  }

 private:
  static void require_same_ring(const Jet& a, const Jet& b) {
    if (a.ring_ != b.ring_) throw Error(ErrorKind::ContextMismatch, "jets from different rings");
  }

  void normalize() {
    const int limit = prec();
    if (!coeffs_.empty() && max_ord() >= limit) {
      const int keep = limit - min_ord_;
      coeffs_.resize(static_cast<std::size_t>(std::max(keep, 0)), ring_->zero());
      prec_ = std::min(prec_, limit);
    }
    std::size_t lead = 0;
    while (lead < coeffs_.size() && Traits::is_exact_zero(coeffs_[lead])) ++lead;
    if (lead > 0) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
      min_ord_ += static_cast<int>(lead);
    }
    while (!coeffs_.empty() && Traits::is_exact_zero(coeffs_.back())) coeffs_.pop_back();
    if (coeffs_.empty()) min_ord_ = 0;
    if (!coeffs_.empty() && min_ord_ < ring_->floor())
      throw Error(ErrorKind::PrecisionExhausted,
                  "series order " + std::to_string(min_ord_) + " below the Laurent floor " +
                      std::to_string(ring_->floor()) + " in " + ring_->var());
  }

  static Jet add(const Jet& a, const Jet& b, bool subtract) {
    require_same_ring(a, b);
    Jet r(a.ring_);
    r.prec_ = std::min(a.prec_, b.prec_);
    if (a.is_zero() && b.is_zero()) return r;
    const int lo = std::min(a.is_zero() ? b.min_ord_ : a.min_ord_, b.is_zero() ? a.min_ord_ : b.min_ord_);
    const int hi = std::max(a.is_zero() ? b.max_ord() : a.max_ord(), b.is_zero() ? a.max_ord() : b.max_ord());
    r.min_ord_ = lo;
    r.coeffs_.assign(static_cast<std::size_t>(hi - lo + 1), a.ring_->zero());
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k)
      r.coeffs_[static_cast<std::size_t>(a.min_ord_ - lo) + k] = a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) {
      auto& slot = r.coeffs_[static_cast<std::size_t>(b.min_ord_ - lo) + k];
      if (subtract)
        slot = R(slot - b.coeffs_[k]);
      else
        slot = R(slot + b.coeffs_[k]);
    }
    r.normalize();
    return r;
  }

  // Precision of a product, before the storage cap.
  static int product_prec(const Jet& a, const Jet& b) {
    const int pa = a.prec_ >= kExactPrec ? kExactPrec : sat_add(a.prec_, b.min_ord_for_prec());
    const int pb = b.prec_ >= kExactPrec ? kExactPrec : sat_add(b.prec_, a.min_ord_for_prec());
    return std::min(pa, pb);
  }
  int min_ord_for_prec() const { return is_zero() ? (is_exact() ? kExactPrec : prec_) : min_ord_; }

  // delta^k(a) for k = 0..kmax, stopping early once it vanishes.
  std::vector<R> delta_powers(const R& a, int kmax) const {
    std::vector<R> out{a};
    if (!ring_->has_derivation()) return out;
    for (int k = 1; k <= kmax; ++k) {
      R next = ring_->delta(out.back());
      if (Traits::is_exact_zero(next)) break;
      out.push_back(std::move(next));
    }
    return out;
  }

  JetRingPtr<R> ring_;
  int min_ord_;
  int prec_;
  std::vector<R> coeffs_;
};

template <class R>
Jet<R> Jet<R>::multiply_reference(const Jet& a, const Jet& b) {
  require_same_ring(a, b);
  const auto& ring = a.ring_;
  Jet r(ring);
  r.prec_ = product_prec(a, b);
  if (a.is_zero() || b.is_zero()) return r;
  const int limit = std::min(r.prec_, ring->order());
  const int lo = a.min_ord_ + b.min_ord_;
  if (lo < ring->floor())
    throw Error(ErrorKind::PrecisionExhausted, "product order below the Laurent floor in " + ring->var());
  if (lo >= limit) {
    r.prec_ = std::min(r.prec_, ring->order());
    return r;
  }
  std::vector<R> acc(static_cast<std::size_t>(limit - lo), ring->zero());
  bool dropped = false;
  for (std::size_t ia = 0; ia < a.coeffs_.size(); ++ia) {
    const R& ai = a.coeffs_[ia];
    if (Traits::is_exact_zero(ai)) continue;
    const int i = a.min_ord_ + static_cast<int>(ia);
    for (std::size_t jb = 0; jb < b.coeffs_.size(); ++jb) {
      const R& bj = b.coeffs_[jb];
      if (Traits::is_exact_zero(bj)) continue;
      const int j = b.min_ord_ + static_cast<int>(jb);
      if (ring->is_automorphism()) {
        if (i + j >= limit) {
          dropped = true;
          continue;
        }
        acc[static_cast<std::size_t>(i + j - lo)] += ring->sigma_power(ai, j) * bj;
        continue;
      }
      R dk = ai;
      for (int k = 0;; ++k) {
        if (k > 0) {
          if (!ring->has_derivation()) break;
          dk = ring->delta(dk);
          if (Traits::is_exact_zero(dk)) break;
        }
        const Rational binom = crossing_binomial(j, k);
        if (binom == 0) break;
        if (i + j + k >= limit) {
          dropped = true;
          break;
        }
        acc[static_cast<std::size_t>(i + j + k - lo)] += Traits::scale(dk, binom) * bj;
      }
    }
  }
  if (dropped) r.prec_ = std::min(r.prec_, ring->order());
  r.min_ord_ = lo;
  r.coeffs_ = std::move(acc);
  r.normalize();
  return r;
}

template <class R>
Jet<R> Jet<R>::multiply(const Jet& a, const Jet& b, Exec exec) {
  require_same_ring(a, b);
  const auto& ring = a.ring_;
  Jet r(ring);
  r.prec_ = product_prec(a, b);
  if (a.is_zero() || b.is_zero()) return r;
  const int limit = std::min(r.prec_, ring->order());
  const int lo = a.min_ord_ + b.min_ord_;
  if (lo < ring->floor())
    throw Error(ErrorKind::PrecisionExhausted, "product order below the Laurent floor in " + ring->var());
  if (lo >= limit) {
    r.prec_ = std::min(r.prec_, ring->order());
    return r;
  }
  const int na = static_cast<int>(a.coeffs_.size());
  const int nb = static_cast<int>(b.coeffs_.size());
  const int nout = limit - lo;
  bool dropped = a.max_ord() + b.max_ord() >= limit;

  // delta powers of each coefficient of a, as far as any output index needs
  std::vector<std::vector<R>> dpow(static_cast<std::size_t>(na));
  if (!ring->is_automorphism()) {
    for (int ia = 0; ia < na; ++ia) {
      const R& ai = a.coeffs_[static_cast<std::size_t>(ia)];
      if (Traits::is_exact_zero(ai)) continue;
      int kmax = limit - 1 - (a.min_ord_ + ia) - b.min_ord_;
      // binom(-j, k) vanishes for k > -j when j <= 0
      if (b.max_ord() <= 0 && -b.min_ord_ <= kmax) {
        dpow[static_cast<std::size_t>(ia)] = a.delta_powers(ai, -b.min_ord_);
        continue;
      }
      dpow[static_cast<std::size_t>(ia)] = a.delta_powers(ai, kmax + 1);
      if (static_cast<int>(dpow[static_cast<std::size_t>(ia)].size()) > kmax + 1) {
        dpow[static_cast<std::size_t>(ia)].pop_back();
        dropped = true;
      }
    }
  }

  std::vector<R> acc(static_cast<std::size_t>(nout), ring->zero());
  const bool parallel = exec == Exec::Parallel && nout >= 8 && na * nb >= 64;
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int n = 0; n < nout; ++n) {
    R sum = ring->zero();
    // contributions t^{i} a_i t^{j} b_j at index i + j + k = lo + n
    for (int ia = 0; ia < na && ia <= n; ++ia) {
      const R& ai = a.coeffs_[static_cast<std::size_t>(ia)];
      if (Traits::is_exact_zero(ai)) continue;
      const int i = a.min_ord_ + ia;
      for (int jb = 0; jb < nb && ia + jb <= n; ++jb) {
        const R& bj = b.coeffs_[static_cast<std::size_t>(jb)];
        if (Traits::is_exact_zero(bj)) continue;
        const int j = b.min_ord_ + jb;
        const int k = n - ia - jb;
        if (ring->is_automorphism()) {
          if (k == 0) sum += ring->sigma_power(ai, j) * bj;
          continue;
        }
        const auto& dp = dpow[static_cast<std::size_t>(ia)];
        if (k >= static_cast<int>(dp.size())) continue;
        const Rational binom = crossing_binomial(j, k);
        if (binom == 0) continue;
        sum += Traits::scale(dp[static_cast<std::size_t>(k)], binom) * bj;
      }
      (void)i;
    }
    acc[static_cast<std::size_t>(n)] = std::move(sum);
  }
  if (dropped) r.prec_ = std::min(r.prec_, ring->order());
  r.min_ord_ = lo;
  r.coeffs_ = std::move(acc);
  r.normalize();
  return r;
}

/// Raised when the lowest coefficient is not a unit; carries that coefficient.
class LowestCoeffNotUnitError : public Error {
 public:
  LowestCoeffNotUnitError(std::string coefficient, const std::string& where)
      : Error(ErrorKind::LowestCoeffNotUnit, "lowest coefficient " + coefficient + " of " + where + " is not a unit"),
        coefficient_(std::move(coefficient)) {}
  const std::string& coefficient() const { return coefficient_; }

 private:
  std::string coefficient_;
};

template <class R>
Jet<R> Jet<R>::inverse() const {
  if (is_zero()) throw Error(ErrorKind::InvertZero, "inverse of a zero jet in " + ring_->var());
  const auto& ring = ring_;
  const int m = min_ord_;
  auto lead_inv = Traits::unit_inverse(lowest());
  if (!lead_inv) throw LowestCoeffNotUnitError(Traits::str(lowest()), ring->var() + "-series");
  // a = t^m b with b_0 the lowest coefficient; b^{-1} by Newton, then a^{-1} = b^{-1} t^{-m}
  const Jet t_pow_neg = monomial(ring, ring->one(), -m);
  const Jet t_pow_pos = monomial(ring, ring->one(), m);
  const Jet b = multiply(t_pow_neg, *this, Exec::Parallel);
  const Jet one_jet = one(ring);
  Jet x = constant(ring, *lead_inv);
  const int target = std::min(b.prec(), ring->order());
  for (int known = 1; known < target; known *= 2) {
    // x <- x + x (1 - b x); the error order doubles each step
    const Jet residual = one_jet - multiply(b, x, Exec::Parallel);
    x = x + multiply(x, residual, Exec::Parallel);
  }
  // Newton iterates carry exact-looking precision; clamp to what b determines
  x.prec_ = std::min(x.prec_, b.prec_);
  x.normalize();
  Jet inv = multiply(x, t_pow_neg, Exec::Parallel);
  (void)t_pow_pos;
  return inv;
}

/// d^{-1} n over an automorphism ring, by forward substitution in
/// (d y)_k = sum_j sigma^j(d_{k-j}) y_j.
template <class R>
Jet<R> left_divide(const Jet<R>& d, const Jet<R>& n) {
  using Traits = CoeffTraits<R>;
  const auto& ring = d.ring();
  if (!ring->is_automorphism()) throw Error(ErrorKind::ContextMismatch, "left_divide needs an automorphism ring");
  if (d.is_zero()) throw Error(ErrorKind::InvertZero, "inverse of a zero jet in " + ring->var());
  const int m = d.min_ord();
  const std::vector<R>& dc = d.coeffs();
  // y = d'^{-1} p^{-m} n with d' = p^{-m} d
  const int dprec = d.is_exact() ? kExactPrec : d.raw_prec() - m;
  const int nprec = n.is_exact() ? kExactPrec : n.raw_prec() - m;
  if (n.is_zero()) return Jet<R>::from_coeffs(ring, 0, {}, std::min(nprec, ring->order()));
  const int k0 = n.min_ord() - m;
  const int prec = std::min({nprec, dprec >= kExactPrec ? kExactPrec : sat_add(dprec, k0), ring->order()});
  std::vector<R> y;
  for (int k = k0; k < prec; ++k) {
    R rhs = n.coeff(k + m);
    for (int j = k0; j < k; ++j) {
      const std::size_t i = static_cast<std::size_t>(k - j);
      if (i >= dc.size()) continue;
      const R& yj = y[static_cast<std::size_t>(j - k0)];
      if (Traits::is_exact_zero(yj) || Traits::is_exact_zero(dc[i])) continue;
      rhs = R(rhs - ring->sigma_power(dc[i], j) * yj);
    }
    auto lead = Traits::unit_inverse(ring->sigma_power(dc.front(), k));
    if (!lead) throw LowestCoeffNotUnitError(Traits::str(dc.front()), ring->var() + "-series");
    y.push_back(R(*lead * rhs));
  }
  return Jet<R>::from_coeffs(ring, k0, std::move(y), prec);
}

template <class R>
bool agrees(const Jet<R>& a, const Jet<R>& b) {
  return a.agrees_with(b);
}

template <class S>
struct CoeffTraits<Jet<S>> {
  using J = Jet<S>;
  static bool is_zero(const J& a) { return a.is_zero(); }
  /// Zero with no truncation: O(t^k) is not exactly zero.
  static bool is_exact_zero(const J& a) { return a.is_zero() && a.is_exact(); }
  static std::optional<J> unit_inverse(const J& a) {
    if (a.is_zero()) return std::nullopt;
    if (!CoeffTraits<S>::unit_inverse(a.lowest())) return std::nullopt;
    return a.inverse();
  }
  static J scale(const J& a, const Rational& q) { return a.scaled(q); }
  static bool agrees(const J& a, const J& b) { return freealg::agrees(a, b); }
  static std::string str(const J& a) { return a.str(); }
  static void audit(const J& a, std::vector<std::string>& trail) {
    trail.push_back(a.ring()->var() + ": lowest term at order " + std::to_string(a.min_ord()));
    if (!a.is_zero()) CoeffTraits<S>::audit(a.lowest(), trail);
  }
};

/// Result of jet_inv: the inverse, the precision lost, and the chain of
/// lowest coefficients down the tower that justified invertibility.
template <class R>
struct JetInverse {
  Jet<R> inverse;
  int overhead;
  std::vector<std::string> audit;
};

template <class R>
JetInverse<R> jet_inv(const Jet<R>& a) {
  std::vector<std::string> trail;
  CoeffTraits<Jet<R>>::audit(a, trail);
  Jet<R> inv = a.inverse();
  const int overhead = a.ring()->order() - inv.prec();
  return {std::move(inv), overhead, std::move(trail)};
}

template <class R>
Jet<R> pow(const Jet<R>& a, int n) {
  Jet<R> acc = Jet<R>::one(a.ring());
  for (int i = 0; i < n; ++i) acc = acc * a;
  return acc;
}

/// Derivation delta_s on R((t_w; delta_w)) extending delta_s on R, given
/// delta_s(w) in R:  delta_s(t_w^{-1}) = delta_s(w),  delta_s(t_w) = -t_w delta_s(w) t_w.
template <class R>
class LiftedDerivation {
 public:
  LiftedDerivation(JetRingPtr<R> ring, std::function<R(const R&)> delta_on_coeffs, R delta_of_w)
      : ring_(std::move(ring)), delta_(std::move(delta_on_coeffs)), dw_(std::move(delta_of_w)) {
    const int lo = ring_->floor();
    const int hi = ring_->order();
    powers_.assign(static_cast<std::size_t>(hi - lo), Jet<R>(ring_));
    auto slot = [&](int i) -> Jet<R>& { return powers_[static_cast<std::size_t>(i - lo)]; };
    const Jet<R> dw = Jet<R>::constant(ring_, dw_);
    const Jet<R> t = Jet<R>::monomial(ring_, ring_->one(), 1);
    const Jet<R> t_inv = Jet<R>::monomial(ring_, ring_->one(), -1);
    if (0 >= lo && 0 < hi) slot(0) = Jet<R>(ring_);
    if (1 < hi) slot(1) = -(t * dw * t);
    for (int i = 2; i < hi; ++i) slot(i) = slot(i - 1) * t + pow(t, i - 1) * slot(1);
    if (-1 >= lo) slot(-1) = dw;
    for (int i = -2; i >= lo; --i) slot(i) = slot(i + 1) * t_inv + Jet<R>::monomial(ring_, ring_->one(), i + 1) * dw;
  }

  /// delta_s(t^i)
  const Jet<R>& of_power(int i) const { return powers_[static_cast<std::size_t>(i - ring_->floor())]; }

  Jet<R> operator()(const Jet<R>& a) const {
    Jet<R> out(ring_);
    for (std::size_t k = 0; k < a.coeffs().size(); ++k) {
      const R& c = a.coeffs()[k];
      if (CoeffTraits<R>::is_exact_zero(c)) continue;
      const int i = a.min_ord() + static_cast<int>(k);
      out = out + of_power(i) * Jet<R>::constant(ring_, c);
      if (delta_) {
        R dc = delta_(c);
        if (!CoeffTraits<R>::is_exact_zero(dc)) out = out + Jet<R>::monomial(ring_, dc, i);
      }
    }
    // delta raises order, so the input's precision bounds the output's
    if (!a.is_exact()) out = out + Jet<R>::from_coeffs(ring_, 0, {}, a.prec());
    return out;
  }

 private:
  JetRingPtr<R> ring_;
  std::function<R(const R&)> delta_;
  R dw_;
  std::vector<Jet<R>> powers_;
};

/// Checks that delta_s is compatible with a w = w a + delta_w(a) on samples:
/// delta_s(delta_w(a)) - delta_w(delta_s(a)) = a delta_s(w) - delta_s(w) a.
/// Throws HypothesisViolation naming the failing sample index.
template <class R>
void check_lift_hypotheses(const std::function<R(const R&)>& delta_s, const std::function<R(const R&)>& delta_w,
                           const R& delta_s_of_w, const std::vector<R>& samples) {
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const R& a = samples[k];
    const R lhs = delta_s(delta_w(a)) - delta_w(delta_s(a));
    const R rhs = a * delta_s_of_w - delta_s_of_w * a;
    if (!CoeffTraits<R>::agrees(lhs, rhs))
      throw Error(ErrorKind::HypothesisViolation, "lifting hypothesis fails on sample " + std::to_string(k));
  }
}

/// series_hom: coefficientwise image sum t^i a_i -> sum s^i phi(a_i).
/// Checks phi(delta_w(a)) = delta_z(phi(a)) on the coefficients of `a`
/// (and on `extra_samples`), throwing CompatibilityFailure with a witness.
template <class R, class S>
Jet<S> series_hom(const JetRingPtr<S>& target, const std::function<S(const R&)>& phi, const Jet<R>& a,
                  bool check_compatibility = true) {
  const auto& src = a.ring();
  std::vector<S> out;
  out.reserve(a.coeffs().size());
  for (const R& c : a.coeffs()) {
    S img = phi(c);
    if (check_compatibility && !CoeffTraits<R>::is_zero(c)) {
      const S lhs = phi(src->delta(c));
      const S rhs = target->delta(img);
      if (!CoeffTraits<S>::agrees(lhs, rhs))
        throw Error(ErrorKind::CompatibilityFailure, "phi(delta(a)) != delta(phi(a)) for a = " + CoeffTraits<R>::str(c));
    }
    out.push_back(std::move(img));
  }
  return Jet<S>::from_coeffs(target, a.is_zero() ? 0 : a.min_ord(), std::move(out), a.raw_prec());
}

}  // namespace freealg
