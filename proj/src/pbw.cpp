#include "freealg/pbw.hpp"

#include <algorithm>
#include <sstream>

namespace freealg {

// ---------------------------------------------------------------- LieAlg

LieAlg::LieAlg(std::vector<std::string> names, std::vector<int> weights)
    : names_(std::move(names)), weights_(std::move(weights)) {
  if (weights_.empty()) weights_.assign(names_.size(), 1);
  if (weights_.size() != names_.size()) throw Error(ErrorKind::ParseError, "one weight per basis element expected");
  table_.assign(names_.size(), std::vector<LieVec>(names_.size()));
}

void LieAlg::set_bracket(int j, int i, LieVec value) {
  if (j <= i) throw Error(ErrorKind::ParseError, "brackets are stored as [e_j, e_i] with j > i");
  LieVec clean;
  std::sort(value.begin(), value.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [k, c] : value) {
    if (k < 0 || k >= dim()) throw Error(ErrorKind::ParseError, "bracket refers to an unknown basis element");
    if (!clean.empty() && clean.back().first == k)
      clean.back().second += c;
    else
      clean.emplace_back(k, c);
  }
  std::erase_if(clean, [](const auto& kc) { return kc.second == 0; });
  table_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = std::move(clean);
}

int LieAlg::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

LieVec LieAlg::bracket(int j, int i) const {
  if (j == i) return {};
  if (j > i) return table_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  LieVec v = table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  for (auto& kc : v) kc.second = -kc.second;
  return v;
}

LieVec LieAlg::bracket(const LieVec& a, const LieVec& b) const {
  std::vector<Rational> acc(static_cast<std::size_t>(dim()), Rational(0));
  for (const auto& [ja, ca] : a)
    for (const auto& [ib, cb] : b)
      for (const auto& [k, c] : bracket(ja, ib)) acc[static_cast<std::size_t>(k)] += ca * cb * c;
  LieVec out;
  for (int k = 0; k < dim(); ++k)
    if (acc[static_cast<std::size_t>(k)] != 0) out.emplace_back(k, acc[static_cast<std::size_t>(k)]);
  return out;
}

bool LieAlg::graded() const {
  for (int j = 0; j < dim(); ++j)
    for (int i = 0; i < j; ++i)
      for (const auto& [k, c] : bracket(j, i))
        if (weight(k) != weight(j) + weight(i)) return false;
  return true;
}

bool LieAlg::abelian() const {
  for (int j = 0; j < dim(); ++j)
    for (int i = 0; i < j; ++i)
      if (!bracket(j, i).empty()) return false;
  return true;
}

bool jacobi_check(const LieAlg& alg) {
  const int d = alg.dim();
  auto unit = [](int i) { return LieVec{{i, Rational(1)}}; };
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b)
      for (int c = b + 1; c < d; ++c) {
        // [a,[b,c]] + [b,[c,a]] + [c,[a,b]]
        std::vector<Rational> sum(static_cast<std::size_t>(d), Rational(0));
        for (const auto& v : {alg.bracket(unit(a), alg.bracket(b, c)), alg.bracket(unit(b), alg.bracket(c, a)),
                              alg.bracket(unit(c), alg.bracket(a, b))})
          for (const auto& [k, q] : v) sum[static_cast<std::size_t>(k)] += q;
        for (const auto& q : sum)
          if (q != 0) return false;
      }
  return true;
}

namespace presets {

LieAlgPtr heisenberg() {
  auto alg = std::make_shared<LieAlg>(std::vector<std::string>{"x", "y", "z"}, std::vector<int>{1, 1, 2});
  alg->set_bracket(1, 0, {{2, Rational(1)}});
  return alg;
}

LieAlgPtr two_dimensional() {
  auto alg = std::make_shared<LieAlg>(std::vector<std::string>{"e", "f"}, std::vector<int>{1, 1});
  alg->set_bracket(1, 0, {{1, Rational(-1)}});  // [f, e] = -f
  return alg;
}

LieAlgPtr free_nilpotent_class3() {
  auto alg = std::make_shared<LieAlg>(std::vector<std::string>{"u", "v", "w", "n1", "n2"},
                                      std::vector<int>{1, 1, 2, 3, 3});
  alg->set_bracket(1, 0, {{2, Rational(1)}});  // [v,u] = w
  alg->set_bracket(2, 0, {{3, Rational(1)}});  // [w,u] = n1
  alg->set_bracket(2, 1, {{4, Rational(1)}});  // [w,v] = n2
  return alg;
}

LieAlgPtr abelian(std::vector<std::string> names, std::vector<int> weights) {
  return std::make_shared<LieAlg>(std::move(names), std::move(weights));
}

}  // namespace presets

// ---------------------------------------------------------------- UElem

UElem::UElem(LieAlgPtr alg, const Rational& c) : alg_(std::move(alg)) {
  if (c != 0) terms_.emplace(Monomial(static_cast<std::size_t>(alg_->dim()), 0), c);
}

UElem UElem::generator(LieAlgPtr alg, int i) {
  Monomial m(static_cast<std::size_t>(alg->dim()), 0);
  m[static_cast<std::size_t>(i)] = 1;
  return monomial(std::move(alg), std::move(m));
}

UElem UElem::generator(const LieAlgPtr& alg, const std::string& name) {
  const int i = alg->index_of(name);
  if (i < 0) throw Error(ErrorKind::ParseError, "unknown basis element '" + name + "'");
  return generator(alg, i);
}

UElem UElem::monomial(LieAlgPtr alg, Monomial exps, const Rational& c) {
  UElem u(std::move(alg));
  if (c != 0) u.terms_.emplace(std::move(exps), c);
  return u;
}

bool UElem::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& m = terms_.begin()->first;
  return std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
}

Rational UElem::constant_term() const {
  const Monomial one(static_cast<std::size_t>(alg_->dim()), 0);
  auto it = terms_.find(one);
  return it == terms_.end() ? Rational(0) : it->second;
}

int UElem::degree() const {
  int best = -1;
  for (const auto& [m, c] : terms_) {
    int deg = 0;
    for (int e : m) deg += e;
    best = std::max(best, deg);
  }
  return best;
}

void UElem::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

UElem UElem::operator-() const {
  UElem r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

UElem& UElem::operator+=(const UElem& b) {
  for (const auto& [m, c] : b.terms_) add_term(m, c);
  return *this;
}

UElem& UElem::operator-=(const UElem& b) {
  for (const auto& [m, c] : b.terms_) add_term(m, -c);
  return *this;
}

UElem operator*(UElem a, const Rational& c) {
  if (c == 0) return UElem(a.alg_);
  for (auto& [m, x] : a.terms_) x *= c;
  return a;
}

namespace {

// Standard monomial m times the letter k, straightened. The correction term
// m' [e_j, e_k] has fewer letters, so the recursion terminates.
UElem monomial_times_letter(const LieAlgPtr& alg, const Monomial& m, int k) {
  int last = -1;
  for (int i = static_cast<int>(m.size()) - 1; i >= 0; --i)
    if (m[static_cast<std::size_t>(i)] > 0) {
      last = i;
      break;
    }
  if (last <= k) {
    Monomial out = m;
    ++out[static_cast<std::size_t>(k)];
    return UElem::monomial(alg, std::move(out));
  }
  Monomial prefix = m;
  --prefix[static_cast<std::size_t>(last)];
  // m' e_j e_k = (m' e_k) e_j + m' [e_j, e_k]
  UElem result = monomial_times_letter(alg, prefix, k).mul_letter(last);
  for (const auto& [l, c] : alg->bracket(last, k)) result += monomial_times_letter(alg, prefix, l) * c;
  return result;
}

}  // namespace

UElem UElem::mul_letter(int letter) const {
  UElem out(alg_);
  for (const auto& [m, c] : terms_) out += monomial_times_letter(alg_, m, letter) * c;
  return out;
}

UElem operator*(const UElem& a, const UElem& b) {
  UElem out(a.alg_);
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [mb, cb] : b.terms_) {
    UElem partial = a;
    for (std::size_t i = 0; i < mb.size(); ++i)
      for (int e = 0; e < mb[i]; ++e) partial = partial.mul_letter(static_cast<int>(i));
    out += partial * cb;
  }
  return out;
}

UElem UElem::pow(int n) const {
  UElem acc(alg_, Rational(1));
  for (int i = 0; i < n; ++i) acc = acc * *this;
  return acc;
}

std::string UElem::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest degree first reads more naturally
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool unit_mono = std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const Rational mag = abs(c);
    if (unit_mono) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    bool first_letter = true;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!first_letter) os << "*";
      first_letter = false;
      os << alg_->name(static_cast<int>(i));
      if (m[i] > 1) os << "^" << m[i];
    }
  }
  return os.str();
}

UElem straighten_word(const LieAlgPtr& alg, const std::vector<int>& letters) {
  UElem acc(alg, Rational(1));
  for (int l : letters) acc = acc.mul_letter(l);
  return acc;
}

UElem u_involution(const UElem& a) {
  const LieAlgPtr& alg = a.algebra();
  UElem out(alg);
  for (const auto& [m, c] : a.terms()) {
    std::vector<int> reversed;
    int deg = 0;
    for (int i = static_cast<int>(m.size()) - 1; i >= 0; --i)
      for (int e = 0; e < m[static_cast<std::size_t>(i)]; ++e) {
        reversed.push_back(i);
        ++deg;
      }
    out += straighten_word(alg, reversed) * (deg % 2 == 0 ? c : Rational(-c));
  }
  return out;
}

Rational augmentation(const UElem& a) { return a.constant_term(); }

long chi_valuation(const UElem& a) {
  long best = kValuationInfinity;
  const auto& w = a.algebra()->weights();
  for (const auto& [m, c] : a.terms()) {
    long deg = 0;
    for (std::size_t i = 0; i < m.size(); ++i) deg += static_cast<long>(m[i]) * w[i];
    best = std::min(best, -deg);
  }
  return best;
}

long laurent_chi(const std::vector<std::pair<int, UElem>>& coeffs) {
  long best = kValuationInfinity;
  for (const auto& [i, a] : coeffs) {
    const long v = chi_valuation(a);
    if (v == kValuationInfinity) continue;
    best = std::min(best, v + i);
  }
  return best;
}

LieHom<UElem> make_uelem_hom(LieAlgPtr source, LieAlgPtr target, std::vector<UElem> images) {
  UElem one(target, Rational(1));
  return LieHom<UElem>(std::move(source), std::move(images), std::move(one),
                       [](const UElem& x, const Rational& q) { return x * q; });
}

LieHom<UElem> scaling_automorphism(const LieAlgPtr& alg, const Rational& lambda) {
  if (!alg->graded()) throw Error(ErrorKind::NotGraded, "scaling needs weights compatible with the bracket");
  std::vector<UElem> images;
  for (int i = 0; i < alg->dim(); ++i) {
    Rational factor = 1;
    for (int k = 0; k < alg->weight(i); ++k) factor *= lambda;
    images.push_back(UElem::generator(alg, i) * factor);
  }
  return make_uelem_hom(alg, alg, std::move(images));
}

LieHom<UElem> class3_to_heisenberg() {
  const LieAlgPtr l = presets::free_nilpotent_class3();
  const LieAlgPtr h = presets::heisenberg();
  std::vector<UElem> images{UElem::generator(h, 0), UElem::generator(h, 1), UElem::generator(h, 2), UElem(h),
                            UElem(h)};
  return make_uelem_hom(l, h, std::move(images));
}

// ---------------------------------------------------------------- text input

namespace {

std::string trim(std::string s) {
  const auto not_space = [](unsigned char ch) { return !std::isspace(ch); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

int resolve(const std::vector<std::string>& names, const std::string& token) {
  auto it = std::find(names.begin(), names.end(), token);
  if (it != names.end()) return static_cast<int>(it - names.begin());
  try {
    std::size_t used = 0;
    const int idx = std::stoi(token, &used);
    if (used == token.size() && idx >= 0 && idx < static_cast<int>(names.size())) return idx;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::ParseError, "unknown basis element '" + token + "'");
}

}  // namespace

LieAlgPtr parse_lie_algebra(const std::string& text) {
  std::vector<std::string> names;
  std::vector<std::pair<std::pair<int, int>, LieVec>> brackets;
  std::vector<std::pair<std::string, int>> weights;
  std::vector<std::string> bracket_lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string keyword;
    ls >> keyword;
    if (keyword == "basis") {
      std::string n;
      while (ls >> n) names.push_back(n);
    } else if (keyword == "bracket") {
      bracket_lines.push_back(line);
    } else if (keyword == "weight") {
      std::string n, eq;
      int d = 0;
      if (!(ls >> n >> eq >> d) || eq != "=") throw Error(ErrorKind::ParseError, "bad weight line: " + line);
      weights.emplace_back(n, d);
    } else {
      throw Error(ErrorKind::ParseError, "unknown directive: " + line);
    }
  }
  if (names.empty()) throw Error(ErrorKind::ParseError, "missing 'basis' line");
  std::vector<int> w(names.size(), 1);
  for (const auto& [n, d] : weights) {
    if (d <= 0) throw Error(ErrorKind::ParseError, "weights must be positive");
    w[static_cast<std::size_t>(resolve(names, n))] = d;
  }
  auto alg = std::make_shared<LieAlg>(names, w);
  for (const auto& bl : bracket_lines) {
    // bracket j i = (c, k) + (c, k) ...
    const auto eq = bl.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::ParseError, "bad bracket line: " + bl);
    std::istringstream lhs(bl.substr(0, eq));
    std::string kw, sj, si;
    if (!(lhs >> kw >> sj >> si)) throw Error(ErrorKind::ParseError, "bad bracket line: " + bl);
    int j = resolve(names, sj), i = resolve(names, si);
    std::string rhs = bl.substr(eq + 1);
    LieVec value;
    std::size_t pos = 0;
    while ((pos = rhs.find('(', pos)) != std::string::npos) {
      const auto close = rhs.find(')', pos);
      const auto comma = rhs.find(',', pos);
      if (close == std::string::npos || comma == std::string::npos || comma > close)
        throw Error(ErrorKind::ParseError, "bad term in: " + bl);
      Rational c = parse_rational(trim(rhs.substr(pos + 1, comma - pos - 1)));
      int k = resolve(names, trim(rhs.substr(comma + 1, close - comma - 1)));
      value.emplace_back(k, c);
      pos = close + 1;
    }
    if (j < i) {
      std::swap(i, j);
      for (auto& kc : value) kc.second = -kc.second;
    }
    if (j == i) throw Error(ErrorKind::ParseError, "bracket of an element with itself: " + bl);
    alg->set_bracket(j, i, std::move(value));
  }
  return alg;
}

}  // namespace freealg
