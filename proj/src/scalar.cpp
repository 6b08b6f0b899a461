#include "freealg/scalar.hpp"

#include <optional>
#include <ostream>
#include <sstream>

namespace freealg {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::PoleAtPoint: return "PoleAtPoint";
    case ErrorKind::AutMismatch: return "AutMismatch";
    case ErrorKind::DivisorZero: return "DivisorZero";
    case ErrorKind::ZeroArgument: return "ZeroArgument";
    case ErrorKind::InvertZero: return "InvertZero";
    case ErrorKind::BracketIncompatible: return "BracketIncompatible";
    case ErrorKind::NotGraded: return "NotGraded";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::LowestCoeffNotUnit: return "LowestCoeffNotUnit";
    case ErrorKind::HypothesisViolation: return "HypothesisViolation";
    case ErrorKind::CompatibilityFailure: return "CompatibilityFailure";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::AdapterFailure: return "AdapterFailure";
    case ErrorKind::UnknownAtomStar: return "UnknownAtomStar";
    case ErrorKind::FactFailure: return "FactFailure";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) throw Error(ErrorKind::ParseError, "empty rational");
  if (s.front() == '+') s.erase(s.begin());
  Rational q;
  if (q.set_str(s, 10) != 0) throw Error(ErrorKind::ParseError, "bad rational '" + std::string(text) + "'");
  if (q.get_den() == 0) throw Error(ErrorKind::ZeroDenominator, "rational '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational RationalSampler::next(int num_bound, int den_bound) {
  std::uniform_int_distribution<int> num(-num_bound, num_bound);
  std::uniform_int_distribution<int> den(1, den_bound);
  Rational q(num(rng_), den(rng_));
  q.canonicalize();
  return q;
}

int RationalSampler::uniform_int(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng_);
}

// ---------------------------------------------------------------- Poly

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(const Rational& c) {
  if (c != 0) coeffs_.push_back(c);
}

Poly Poly::monomial(const Rational& c, int degree) {
  Poly p;
  if (c == 0) return p;
  p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
  p.coeffs_.back() = c;
  return p;
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

namespace {

using IntPoly = std::vector<Integer>;

// p = content * primitive, primitive with positive leading coefficient
IntPoly primitive_part(const std::vector<Rational>& p, Rational& content) {
  Integer den = 1;
  for (const auto& c : p) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  IntPoly out(p.size());
  Integer g = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i] = p[i].get_num() * (den / p[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  if (g == 0) g = 1;
  if (!out.empty() && out.back() < 0) g = -g;
  for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  content = Rational(g, den);
  content.canonicalize();
  return out;
}

IntPoly int_mul(const IntPoly& a, const IntPoly& b) {
  IntPoly out(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  return out;
}

// Exact division over Z; false if g does not divide f.
bool int_divides(const IntPoly& g, IntPoly f) {
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg && !f.empty()) {
    if (f.back() == 0) {
      f.pop_back();
      continue;
    }
    if (!mpz_divisible_p(f.back().get_mpz_t(), g.back().get_mpz_t())) return false;
    const Integer q = f.back() / g.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) mpz_submul(f[i + shift].get_mpz_t(), q.get_mpz_t(), g[i].get_mpz_t());
    f.pop_back();
  }
  for (const auto& c : f)
    if (c != 0) return false;
  return true;
}

Integer max_norm(const IntPoly& p) {
  Integer m = 0;
  for (const auto& c : p)
    if (abs(c) > m) m = abs(c);
  return m;
}

// Heuristic gcd of primitive integer polynomials (evaluation at a large
// integer, symmetric xi-adic reconstruction, trial division).
std::optional<IntPoly> gcd_heuristic(const IntPoly& a, const IntPoly& b) {
  Integer xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    if (mpz_sizeinbase(xi.get_mpz_t(), 2) * std::max(a.size(), b.size()) > 200000) return std::nullopt;
    auto eval = [&](const IntPoly& p) {
      Integer acc = 0;
      for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * xi + *it;
      return acc;
    };
    Integer gamma;
    mpz_gcd(gamma.get_mpz_t(), eval(a).get_mpz_t(), eval(b).get_mpz_t());
    IntPoly g;
    const Integer half = xi / 2;
    while (gamma != 0) {
      Integer c;
      mpz_fdiv_r(c.get_mpz_t(), gamma.get_mpz_t(), xi.get_mpz_t());
      if (c > half) c -= xi;
      g.push_back(c);
      gamma = (gamma - c) / xi;
    }
    if (!g.empty()) {
      Integer cont = 0;
      for (const auto& c : g) mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), c.get_mpz_t());
      if (g.back() < 0) cont = -cont;
      for (auto& c : g) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), cont.get_mpz_t());
      if (int_divides(g, a) && int_divides(g, b)) return g;
    }
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

}  // namespace

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.coeffs_.size() >= 4 && b.coeffs_.size() >= 4) {
    Rational ca, cb;
    const IntPoly ia = primitive_part(a.coeffs_, ca);
    const IntPoly ib = primitive_part(b.coeffs_, cb);
    const IntPoly prod = int_mul(ia, ib);
    const Rational c = ca * cb;
    std::vector<Rational> out(prod.size());
    for (std::size_t i = 0; i < prod.size(); ++i) out[i] = c * Rational(prod[i]);
    return Poly(std::move(out));
  }
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(out));
}

void Poly::divmod(const Poly& f, const Poly& g, Poly& q, Poly& r) {
  if (g.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  r = f;
  q = Poly();
  if (f.degree() < g.degree()) return;
  std::vector<Rational> qc(static_cast<std::size_t>(f.degree() - g.degree()) + 1, Rational(0));
  const Rational inv_lead = 1 / g.leading();
  while (!r.is_zero() && r.degree() >= g.degree()) {
    const int shift = r.degree() - g.degree();
    const Rational c = r.leading() * inv_lead;
    qc[static_cast<std::size_t>(shift)] = c;
    for (int i = 0; i <= g.degree(); ++i)
      r.coeffs_[static_cast<std::size_t>(i + shift)] -= c * g.coeffs_[static_cast<std::size_t>(i)];
    r.trim();
  }
  q = Poly(std::move(qc));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly r = *this;
  r *= Rational(1) / leading();
  return r;
}

Poly Poly::gcd(Poly a, Poly b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly(Rational(1));
  Rational ca, cb;
  const auto g = gcd_heuristic(primitive_part(a.coeffs_, ca), primitive_part(b.coeffs_, cb));
  if (!g) return gcd_euclid(std::move(a), std::move(b));
  std::vector<Rational> out(g->size());
  for (std::size_t i = 0; i < g->size(); ++i) out[i] = Rational((*g)[i]);
  return Poly(std::move(out)).monic();
}

Poly Poly::gcd_euclid(Poly a, Poly b) {
  // monic remainder sequence keeps coefficient growth in check
  a = a.monic();
  b = b.monic();
  while (!b.is_zero()) {
    Poly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = r.monic();
  }
  return a;
}

Rational Poly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::shift(const Rational& c) const {
  if (c == 0 || is_constant()) return *this;
  // Horner in (t - c)
  const Poly lin(std::vector<Rational>{-c, Rational(1)});
  Poly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * lin + Poly(*it);
  return acc;
}

Poly Poly::scale_variable(const Rational& lambda) const {
  Poly r = *this;
  Rational pw = 1;
  for (auto& c : r.coeffs_) {
    c *= pw;
    pw *= lambda;
  }
  r.trim();
  return r;
}

std::string Poly::str(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

// ---------------------------------------------------------------- RatFun

RatFun RatFun::reduce(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw Error(ErrorKind::ZeroDenominator, "ratfun_reduce with zero denominator");
  if (num.is_zero()) return RatFun();
  Poly n = num, d = den;
  if (!d.is_constant()) {
    Poly g = Poly::gcd(n, d);
    if (!g.is_constant()) {
      Poly q, r;
      Poly::divmod(n, g, q, r);
      n = std::move(q);
      Poly::divmod(d, g, q, r);
      d = std::move(q);
    }
  }
  const Rational lead = d.leading();
  if (lead != 1) {
    const Rational inv = 1 / lead;
    n *= inv;
    d *= inv;
  }
  return RatFun(std::move(n), std::move(d), true);
}

RatFun RatFun::operator-() const { return RatFun(-num_, den_, true); }

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFun::reduce(a.num_ + b.num_, a.den_);
  return RatFun::reduce(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
  if (a.is_zero() || b.is_zero()) return RatFun();
  if (a.den_.is_constant() && b.den_.is_constant()) return RatFun(a.num_ * b.num_, Poly(1), true);
  return RatFun::reduce(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero rational function");
  return reduce(den_, num_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function division by zero");
  return a * b.inverse();
}

Rational RatFun::eval(const Rational& x) const {
  const Rational d = den_.eval(x);
  if (d == 0) throw Error(ErrorKind::PoleAtPoint, "pole at t = " + x.get_str());
  return num_.eval(x) / d;
}

RatFun RatFun::shift(const Rational& c) const {
  if (c == 0) return *this;
  // a shift maps coprime pairs to coprime pairs and keeps den monic
  return RatFun(num_.shift(c), den_.shift(c), true);
}

RatFun RatFun::scale_variable(const Rational& lambda) const {
  return reduce(num_.scale_variable(lambda), den_.scale_variable(lambda));
}

std::string RatFun::str(std::string_view var) const {
  if (den_.is_constant()) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFun& f) { return os << f.str(); }

RatFun arith(const RatFun& a, const RatFun& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  return {};
}

}  // namespace freealg
