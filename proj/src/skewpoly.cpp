#include "freealg/skewpoly.hpp"

#include <sstream>

namespace freealg {

void require_same_aut(const SkewPoly& a, const SkewPoly& b) {
  if (!(a.aut() == b.aut()))
    throw Error(ErrorKind::AutMismatch, "skew polynomials over different shifts (" + a.aut().c.get_str() +
                                            " vs " + b.aut().c.get_str() + ")");
}

SkewPoly::SkewPoly(ShiftAut aut, std::vector<RatFun> coeffs) : aut_(std::move(aut)), coeffs_(std::move(coeffs)) {
  trim();
}

SkewPoly SkewPoly::monomial(const ShiftAut& aut, const RatFun& a, int degree) {
  SkewPoly f(aut);
  if (a.is_zero()) return f;
  f.coeffs_.assign(static_cast<std::size_t>(degree) + 1, RatFun());
  f.coeffs_.back() = a;
  return f;
}

void SkewPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

RatFun SkewPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return {};
  return coeffs_[static_cast<std::size_t>(i)];
}

int SkewPoly::order() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return static_cast<int>(i);
  return -1;
}

SkewPoly SkewPoly::operator-() const {
  SkewPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

SkewPoly operator+(const SkewPoly& a, const SkewPoly& b) {
  require_same_aut(a, b);
  std::vector<RatFun> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.coeffs_.size()) out[i] = a.coeffs_[i];
    if (i < b.coeffs_.size()) out[i] += b.coeffs_[i];
  }
  return SkewPoly(a.aut_, std::move(out));
}

SkewPoly operator-(const SkewPoly& a, const SkewPoly& b) { return a + (-b); }

SkewPoly operator*(const SkewPoly& a, const SkewPoly& b) {
  require_same_aut(a, b);
  if (a.is_zero() || b.is_zero()) return SkewPoly(a.aut_);
  std::vector<RatFun> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out[i + j] += a.aut_.apply(a.coeffs_[i], static_cast<int>(j)) * b.coeffs_[j];
    }
  }
  return SkewPoly(a.aut_, std::move(out));
}

SkewPoly SkewPoly::left_scale(const RatFun& c) const {
  SkewPoly r(aut_);
  if (c.is_zero()) return r;
  r.coeffs_.reserve(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    r.coeffs_.push_back(aut_.apply(c, static_cast<int>(i)) * coeffs_[i]);
  r.trim();
  return r;
}

SkewPoly SkewPoly::right_scale(const RatFun& c) const {
  SkewPoly r(aut_);
  if (c.is_zero()) return r;
  r.coeffs_ = coeffs_;
  for (auto& x : r.coeffs_) x *= c;
  r.trim();
  return r;
}

RatFun SkewPoly::monic_left_unit() const {
  if (is_zero()) throw Error(ErrorKind::ZeroArgument, "monic normalization of zero");
  // c p^n a_n = p^n sigma^n(c) a_n, so sigma^n(c) = 1/a_n
  return aut_.apply(leading().inverse(), -degree());
}

std::string SkewPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const RatFun& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << "(" << c.str() << ")";
    } else {
      os << "p";
      if (i > 1) os << "^" << i;
      if (!c.is_one()) os << "*(" << c.str() << ")";
    }
  }
  return os.str();
}

DivModResult divmod(const SkewPoly& f, const SkewPoly& g, Side side) {
  require_same_aut(f, g);
  if (g.is_zero()) throw Error(ErrorKind::DivisorZero, "skew division by zero");
  const ShiftAut& aut = f.aut();
  const int m = g.degree();
  SkewPoly q(aut), r = f;
  const RatFun g_lead = g.leading();
  while (!r.is_zero() && r.degree() >= m) {
    const int n = r.degree();
    SkewPoly term(aut);
    if (side == Side::Right) {
      // (p^{n-m} c)(p^m g_m) = p^n sigma^m(c) g_m
      const RatFun c = aut.apply(r.leading() / g_lead, -m);
      term = SkewPoly::monomial(aut, c, n - m);
      r = r - term * g;
    } else {
      // (p^m g_m)(p^{n-m} c) = p^n sigma^{n-m}(g_m) c
      const RatFun c = r.leading() / aut.apply(g_lead, n - m);
      term = SkewPoly::monomial(aut, c, n - m);
      r = r - g * term;
    }
    q = q + term;
  }
  return {std::move(q), std::move(r)};
}

GcrdLlcm gcrd_llcm(const SkewPoly& f, const SkewPoly& g) {
  require_same_aut(f, g);
  if (f.is_zero() || g.is_zero()) throw Error(ErrorKind::ZeroArgument, "gcrd/llcm of a zero polynomial");
  const ShiftAut& aut = f.aut();
  // r_i = s_i f + t_i g throughout
  SkewPoly r0 = f, r1 = g;
  SkewPoly s0 = SkewPoly::one(aut), s1(aut);
  SkewPoly t0(aut), t1 = SkewPoly::one(aut);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1, Side::Right);
    SkewPoly s2 = s0 - q * s1;
    SkewPoly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  GcrdLlcm out;
  out.gcrd = r0.monic_left();
  // s1 f + t1 g = 0
  const RatFun unit = (s1 * f).monic_left_unit();
  out.a = s1.left_scale(unit);
  out.b = (-t1).left_scale(unit);
  out.llcm = out.a * f;
  return out;
}

SkewPoly gcld(const SkewPoly& f, const SkewPoly& g) {
  require_same_aut(f, g);
  if (f.is_zero() && g.is_zero()) throw Error(ErrorKind::ZeroArgument, "gcld(0, 0)");
  SkewPoly a = f, b = g;
  while (!b.is_zero()) {
    auto dm = divmod(a, b, Side::Left);
    a = std::move(b);
    b = std::move(dm.r);
  }
  // a is a common left divisor; normalize its leading coefficient on the right
  const RatFun lead_inv = a.leading().inverse();
  return a.right_scale(lead_inv);
}

}  // namespace freealg
