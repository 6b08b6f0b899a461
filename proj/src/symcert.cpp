#include "freealg/symcert.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "freealg/series.hpp"

namespace freealg {

namespace ex {
Expr atom(int id) { return std::make_shared<ExprNode>(ExprNode{ExprOp::Atom, id, Rational(0), {}}); }
Expr constant(const Rational& c) { return std::make_shared<ExprNode>(ExprNode{ExprOp::Const, -1, c, {}}); }
Expr add(std::vector<Expr> terms) {
  return std::make_shared<ExprNode>(ExprNode{ExprOp::Add, -1, Rational(0), std::move(terms)});
}
Expr mul(std::vector<Expr> factors) {
  return std::make_shared<ExprNode>(ExprNode{ExprOp::Mul, -1, Rational(0), std::move(factors)});
}
Expr inv(Expr e) { return std::make_shared<ExprNode>(ExprNode{ExprOp::Inv, -1, Rational(0), {std::move(e)}}); }
Expr neg(Expr e) { return std::make_shared<ExprNode>(ExprNode{ExprOp::Neg, -1, Rational(0), {std::move(e)}}); }
}  // namespace ex

int FactTable::add_atom(std::string name, UElem def, bool invertible) {
  AtomFact f{std::move(name), std::move(def)};
  f.invertible = invertible;
  atoms_.push_back(std::move(f));
  return size() - 1;
}

void FactTable::set_star(int a, int sign, int b) {
  AtomFact& f = atom(a);
  f.has_star = true;
  f.star_sign = sign;
  f.star_target = b;
}

void FactTable::declare_commuting(int a, int b) {
  if (a == b) return;
  commuting_.emplace(std::min(a, b), std::max(a, b));
}

int FactTable::index_of(const std::string& name) const {
  for (int a = 0; a < size(); ++a)
    if (atom(a).name == name) return a;
  return -1;
}

bool FactTable::commute(int a, int b) const {
  return a == b || commuting_.count({std::min(a, b), std::max(a, b)}) > 0;
}

std::vector<FactCheck> verify_facts(FactTable& table) {
  std::vector<FactCheck> out;
  auto fail = [&](const FactCheck& c) {
    throw Error(ErrorKind::FactFailure, c.fact + " does not hold: " + c.witness);
  };
  for (int a = 0; a < table.size(); ++a) {
    const AtomFact& f = table.atom(a);
    if (!f.has_star) continue;
    const AtomFact& g = table.atom(f.star_target);
    const UElem lhs = u_involution(f.def);
    const UElem rhs = g.def * Rational(f.star_sign);
    FactCheck c{f.name + "* = " + (f.star_sign < 0 ? "-" : "") + g.name, lhs == rhs, lhs.str()};
    if (!c.ok) fail(c);
    out.push_back(c);
  }
  for (const auto& [a, b] : table.commuting_pairs()) {
    const UElem& x = table.atom(a).def;
    const UElem& y = table.atom(b).def;
    const UElem comm = x * y - y * x;
    FactCheck c{"[" + table.atom(a).name + ", " + table.atom(b).name + "] = 0", comm.is_zero(), comm.str()};
    if (!c.ok) fail(c);
    out.push_back(c);
  }
  for (int a = 0; a < table.size(); ++a) {
    AtomFact& f = table.atom(a);
    if (!f.invertible) continue;
    FactCheck c{f.name + " invertible", false, "no skew field image available"};
    if (table.skew_field_image()) {
      const SkewFrac img = table.skew_field_image()(f.def);
      c.ok = !img.is_zero();
      c.witness = "image " + img.str() + (c.ok ? " is nonzero" : " is zero");
    }
    if (!c.ok) fail(c);
    f.justification = c.witness;
    out.push_back(c);
  }
  return out;
}

Expr star(const Expr& e, const FactTable& table) {
  switch (e->op) {
    case ExprOp::Atom: {
      const AtomFact& f = table.atom(e->atom);
      if (!f.has_star) throw Error(ErrorKind::UnknownAtomStar, "no star fact for " + f.name);
      const Expr img = ex::atom(f.star_target);
      return f.star_sign < 0 ? ex::neg(img) : img;
    }
    case ExprOp::Const:
      return e;
    case ExprOp::Add: {
      std::vector<Expr> t;
      for (const auto& a : e->args) t.push_back(star(a, table));
      return ex::add(std::move(t));
    }
    case ExprOp::Mul: {
      std::vector<Expr> t;
      for (auto it = e->args.rbegin(); it != e->args.rend(); ++it) t.push_back(star(*it, table));
      return ex::mul(std::move(t));
    }
    case ExprOp::Inv:
      return ex::inv(star(e->args[0], table));
    case ExprOp::Neg:
      return ex::neg(star(e->args[0], table));
  }
  return e;
}

Expr substitute_scaled(const Expr& e, const FactTable& table, const LieHom<UElem>& hom) {
  std::vector<Rational> factor(static_cast<std::size_t>(table.size()));
  for (int a = 0; a < table.size(); ++a) {
    const UElem& def = table.atom(a).def;
    const UElem img = hom(def);
    if (def.is_zero()) throw Error(ErrorKind::FactFailure, "atom " + table.atom(a).name + " is zero");
    const auto& [mono, c0] = *def.terms().begin();
    const Rational c = img.terms().count(mono) ? Rational(img.terms().at(mono) / c0) : Rational(0);
    if (!(img == def * c))
      throw Error(ErrorKind::FactFailure, "atom " + table.atom(a).name + " is not homogeneous for the scaling");
    factor[static_cast<std::size_t>(a)] = c;
  }
  std::function<Expr(const Expr&)> go = [&](const Expr& n) -> Expr {
    switch (n->op) {
      case ExprOp::Atom:
        return ex::mul({ex::constant(factor[static_cast<std::size_t>(n->atom)]), n});
      case ExprOp::Const:
        return n;
      default: {
        std::vector<Expr> args;
        for (const auto& a : n->args) args.push_back(go(a));
        return std::make_shared<ExprNode>(ExprNode{n->op, -1, Rational(0), std::move(args)});
      }
    }
  };
  return go(e);
}

const char* to_string(Equality q) {
  switch (q) {
    case Equality::Equal:
      return "equal";
    case Equality::Unequal:
      return "unequal";
    case Equality::Unable:
      return "unable";
  }
  return "unable";
}

namespace {

// Commutative polynomial in atom indeterminates: exponent vector -> coefficient.
using MPoly = std::map<std::vector<int>, Rational>;

MPoly mp_const(const Rational& c, int n) {
  MPoly p;
  if (c != 0) p.emplace(std::vector<int>(static_cast<std::size_t>(n), 0), c);
  return p;
}

MPoly mp_var(int a, int n) {
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  e[static_cast<std::size_t>(a)] = 1;
  return MPoly{{e, Rational(1)}};
}

MPoly mp_mul(const MPoly& a, const MPoly& b) {
  MPoly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      Rational& slot = r[e];
      slot += ca * cb;
      if (slot == 0) r.erase(e);
    }
  return r;
}

MPoly mp_add(MPoly a, const MPoly& b, const Rational& scale = 1) {
  for (const auto& [e, c] : b) {
    Rational& slot = a[e];
    slot += c * scale;
    if (slot == 0) a.erase(e);
  }
  return a;
}

struct Segment {
  int cls;
  MPoly num;
  MPoly den;
};

bool seg_equal(const Segment& a, const Segment& b) {
  return a.cls == b.cls && mp_mul(a.num, b.den) == mp_mul(b.num, a.den);
}

// num = c * den for a rational c?
std::optional<Rational> seg_constant(const Segment& s) {
  if (s.num.empty()) return Rational(0);
  const auto& [e, dc] = *s.den.rbegin();
  auto it = s.num.find(e);
  if (it == s.num.end()) return std::nullopt;
  const Rational c = it->second / dc;
  if (mp_add(s.num, s.den, -c).empty()) return c;
  return std::nullopt;
}

struct Term {
  Rational coeff;
  std::vector<Segment> segs;
};

using NF = std::vector<Term>;

struct Unable {
  std::string why;
};

class Normalizer {
 public:
  explicit Normalizer(const FactTable& t) : table_(t), n_(t.size()) {
    // commuting classes: connected components, each required to be a clique
    cls_.assign(static_cast<std::size_t>(n_), -1);
    int next = 0;
    for (int a = 0; a < n_; ++a) {
      if (cls_[static_cast<std::size_t>(a)] >= 0) continue;
      std::vector<int> stack{a};
      cls_[static_cast<std::size_t>(a)] = next;
      while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (int y = 0; y < n_; ++y)
          if (cls_[static_cast<std::size_t>(y)] < 0 && t.commute(x, y)) {
            cls_[static_cast<std::size_t>(y)] = next;
            stack.push_back(y);
          }
      }
      ++next;
    }
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        if (cls_[static_cast<std::size_t>(a)] == cls_[static_cast<std::size_t>(b)] && !t.commute(a, b))
          clique_ = false;
  }

  NF normal_form(const Expr& e) {
    if (!clique_) throw Unable{"commuting relation is not a union of cliques"};
    return simplify(nf(e));
  }

 private:
  bool invertible_product(const Expr& e) const {
    switch (e->op) {
      case ExprOp::Atom:
        return table_.atom(e->atom).invertible;
      case ExprOp::Const:
        return e->value != 0;
      case ExprOp::Neg:
      case ExprOp::Inv:
        return invertible_product(e->args[0]);
      case ExprOp::Mul:
        return std::all_of(e->args.begin(), e->args.end(), [&](const Expr& a) { return invertible_product(a); });
      case ExprOp::Add:
        return false;
    }
    return false;
  }

  NF nf(const Expr& e) {
    if (auto it = memo_.find(e.get()); it != memo_.end()) return it->second;
    NF r;
    switch (e->op) {
      case ExprOp::Atom:
        r.push_back(Term{Rational(1), {Segment{cls_[static_cast<std::size_t>(e->atom)], mp_var(e->atom, n_),
                                                mp_const(1, n_)}}});
        break;
      case ExprOp::Const:
        if (e->value != 0) r.push_back(Term{e->value, {}});
        break;
      case ExprOp::Neg:
        r = nf(e->args[0]);
        for (auto& t : r) t.coeff = -t.coeff;
        break;
      case ExprOp::Add:
        for (const auto& a : e->args) {
          NF s = nf(a);
          r.insert(r.end(), s.begin(), s.end());
        }
        r = simplify(std::move(r));
        break;
      case ExprOp::Mul: {
        r.push_back(Term{Rational(1), {}});
        for (const auto& a : e->args) {
          const NF s = nf(a);
          NF next;
          for (const auto& x : r)
            for (const auto& y : s) {
              Term t{x.coeff * y.coeff, x.segs};
              t.segs.insert(t.segs.end(), y.segs.begin(), y.segs.end());
              next.push_back(std::move(t));
            }
          r = simplify(std::move(next));
        }
        break;
      }
      case ExprOp::Inv: {
        if (!invertible_product(e->args[0])) throw Unable{"inverse of an element not known to be invertible"};
        const NF s = nf(e->args[0]);
        if (s.size() != 1) throw Unable{"inverse of a sum spanning several segments"};
        Term t{Rational(1 / s[0].coeff), {}};
        for (auto it = s[0].segs.rbegin(); it != s[0].segs.rend(); ++it) t.segs.push_back(Segment{it->cls, it->den, it->num});
        r.push_back(std::move(t));
        r = simplify(std::move(r));
        break;
      }
    }
    memo_.emplace(e.get(), r);
    return r;
  }

  // Merge adjacent segments of one class and pull constant segments out.
  bool tidy(Term& t) const {
    std::vector<Segment> out;
    for (auto& s : t.segs) {
      if (!out.empty() && out.back().cls == s.cls) {
        out.back().num = mp_mul(out.back().num, s.num);
        out.back().den = mp_mul(out.back().den, s.den);
      } else {
        out.push_back(std::move(s));
      }
      while (!out.empty()) {
        const auto c = seg_constant(out.back());
        if (!c) break;
        t.coeff *= *c;
        out.pop_back();
      }
    }
    t.segs = std::move(out);
    return t.coeff != 0;
  }

  NF simplify(NF terms) const {
    NF live;
    for (auto& t : terms)
      if (tidy(t)) live.push_back(std::move(t));
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < live.size() && !changed; ++i) {
        for (std::size_t j = i + 1; j < live.size() && !changed; ++j) {
          Term& a = live[i];
          const Term& b = live[j];
          if (a.segs.size() != b.segs.size()) continue;
          int diff = -1;
          bool ok = true;
          for (std::size_t k = 0; k < a.segs.size() && ok; ++k) {
            if (a.segs[k].cls != b.segs[k].cls) ok = false;
            else if (!seg_equal(a.segs[k], b.segs[k])) {
              if (diff >= 0) ok = false;
              diff = static_cast<int>(k);
            }
          }
          if (!ok) continue;
          if (diff < 0) {
            a.coeff += b.coeff;
          } else {
            // c_a X s_a Y + c_b X s_b Y = X (c_a s_a + c_b s_b) Y
            Segment& sa = a.segs[static_cast<std::size_t>(diff)];
            const Segment& sb = b.segs[static_cast<std::size_t>(diff)];
            MPoly num = mp_add(mp_mul(sa.num, sb.den) , mp_mul(sb.num, sa.den), b.coeff / a.coeff);
            sa.den = mp_mul(sa.den, sb.den);
            sa.num = std::move(num);
          }
          live.erase(live.begin() + static_cast<std::ptrdiff_t>(j));
          if (!tidy(a) || std::any_of(a.segs.begin(), a.segs.end(), [](const Segment& s) { return s.num.empty(); }))
            live.erase(live.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
        }
      }
    }
    return live;
  }

  const FactTable& table_;
  int n_;
  std::vector<int> cls_;
  bool clique_ = true;
  std::unordered_map<const ExprNode*, NF> memo_;
};

}  // namespace

EqualityResult prove_equal(const Expr& e1, const Expr& e2, const FactTable& table, const WitnessFn& witness) {
  try {
    Normalizer nz(table);
    const NF diff = nz.normal_form(ex::add({e1, ex::neg(e2)}));
    if (diff.empty()) return {Equality::Equal, "normal forms agree"};
    const std::string residue = std::to_string(diff.size()) + " term(s) remain in the normal form of the difference";
    if (witness) {
      if (auto w = witness(e1, e2)) return {Equality::Unequal, *w};
    }
    return {Equality::Unable, residue};
  } catch (const Unable& u) {
    return {Equality::Unable, u.why};
  }
}

std::string to_string(const Expr& e, const FactTable& table) {
  switch (e->op) {
    case ExprOp::Atom:
      return table.atom(e->atom).name;
    case ExprOp::Const:
      return e->value.get_str();
    case ExprOp::Neg:
      return "-(" + to_string(e->args[0], table) + ")";
    case ExprOp::Inv:
      return to_string(e->args[0], table) + "^-1";
    case ExprOp::Add:
    case ExprOp::Mul: {
      std::string out = "(";
      for (std::size_t k = 0; k < e->args.size(); ++k) {
        if (k) out += e->op == ExprOp::Add ? " + " : " * ";
        out += to_string(e->args[k], table);
      }
      return out + ")";
    }
  }
  return "?";
}

SymmetryCase heisenberg_symmetry_case() {
  const LieAlgPtr H = presets::heisenberg();
  const UElem x = UElem::generator(H, "x");
  const UElem y = UElem::generator(H, "y");
  const UElem z = UElem::generator(H, "z");
  const UElem V = z * (x * y + y * x) * z * Rational(1, 2);
  const UElem z3 = z.pow(3) * Rational(1, 3);
  FactTable t(H);
  const int A = t.add_atom("A", V - z3);
  const int B = t.add_atom("B", V + z3);
  const int C = t.add_atom("C", z + y * y);
  const int D = t.add_atom("D", z - y * y);
  t.set_star(A, 1, B);
  t.set_star(B, 1, A);
  t.set_star(C, -1, D);
  t.set_star(D, -1, C);
  t.declare_commuting(A, B);
  t.declare_commuting(C, D);
  const LieHom<SkewFrac> phi = heisenberg_to_skew_field();
  t.set_skew_field_image([phi](const UElem& a) { return phi(a); });
  using namespace ex;
  const Expr S = add({mul({atom(A), inv(atom(B))}), mul({inv(atom(A)), atom(B)})});
  const Expr T = mul({inv(atom(C)), atom(D), S, atom(C), inv(atom(D))});
  return {std::move(t), S, T};
}

SymmetryCase twodim_symmetry_case() {
  const LieAlgPtr M = presets::two_dimensional();
  const UElem e = UElem::generator(M, "e");
  const UElem f = UElem::generator(M, "f");
  const UElem one(M, Rational(1));
  FactTable t(M);
  const int E1 = t.add_atom("E1", e - one * Rational(1, 3));
  const int E2 = t.add_atom("E2", e + one * Rational(1, 3));
  const int F1 = t.add_atom("F1", one - f);
  const int F2 = t.add_atom("F2", one + f);
  t.set_star(E1, -1, E2);
  t.set_star(E2, -1, E1);
  t.set_star(F1, 1, F2);
  t.set_star(F2, 1, F1);
  t.declare_commuting(E1, E2);
  t.declare_commuting(F1, F2);
  const LieHom<SkewFrac> phi = twodim_to_skew_field();
  t.set_skew_field_image([phi](const UElem& a) { return phi(a); });
  using namespace ex;
  const Expr s = mul({atom(E1), inv(atom(E2))});
  const Expr u = mul({atom(F1), inv(atom(F2))});
  const Expr S = add({s, inv(s)});
  const Expr T = mul({u, S, inv(u)});
  return {std::move(t), S, T};
}

}  // namespace freealg
