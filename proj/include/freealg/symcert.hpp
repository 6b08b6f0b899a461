#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "freealg/pbw.hpp"
#include "freealg/skewfrac.hpp"

namespace freealg {

enum class ExprOp { Atom, Const, Add, Mul, Inv, Neg };

struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

/// Node of a noncommutative fraction expression DAG; Mul is ordered.
struct ExprNode {
  ExprOp op;
  int atom = -1;
  Rational value;
  std::vector<Expr> args;
};

namespace ex {
Expr atom(int id);
Expr constant(const Rational& c);
Expr add(std::vector<Expr> terms);
Expr mul(std::vector<Expr> factors);
Expr inv(Expr e);
Expr neg(Expr e);
}  // namespace ex

struct AtomFact {
  std::string name;
  UElem def;
  bool has_star = false;
  int star_sign = 1;
  int star_target = -1;
  bool invertible = false;
  std::string justification;  // filled by verify_facts
};

/// Atoms defined in one enveloping algebra together with the facts the
/// certifier may use: star images, commuting pairs, invertibility.
class FactTable {
 public:
  explicit FactTable(LieAlgPtr alg) : alg_(std::move(alg)) {}

  int add_atom(std::string name, UElem def, bool invertible = true);
  /// a* = sign * b
  void set_star(int a, int sign, int b);
  void declare_commuting(int a, int b);
  /// Map used to justify invertibility: a nonzero image in a skew field.
  void set_skew_field_image(std::function<SkewFrac(const UElem&)> phi) { phi_ = std::move(phi); }

  const LieAlgPtr& algebra() const { return alg_; }
  int size() const { return static_cast<int>(atoms_.size()); }
  const AtomFact& atom(int a) const { return atoms_.at(static_cast<std::size_t>(a)); }
  AtomFact& atom(int a) { return atoms_.at(static_cast<std::size_t>(a)); }
  int index_of(const std::string& name) const;
  bool commute(int a, int b) const;
  const std::set<std::pair<int, int>>& commuting_pairs() const { return commuting_; }
  const std::function<SkewFrac(const UElem&)>& skew_field_image() const { return phi_; }

 private:
  LieAlgPtr alg_;
  std::vector<AtomFact> atoms_;
  std::set<std::pair<int, int>> commuting_;
  std::function<SkewFrac(const UElem&)> phi_;
};

struct FactCheck {
  std::string fact;
  bool ok;
  std::string witness;
};

/// Checks every star fact with u_involution, every commuting pair with
/// u_mul, and every invertibility flag through the skew field image.
/// Throws FactFailure naming the first failing fact.
std::vector<FactCheck> verify_facts(FactTable& table);

/// Structural involution: reverses products, commutes with Inv and Neg,
/// fixes constants, uses the atom star table. Throws UnknownAtomStar.
Expr star(const Expr& e, const FactTable& table);

/// Each atom a replaced by c_a * a where hom(def(a)) = c_a * def(a).
/// Throws FactFailure when an atom is not an eigenvector of hom.
Expr substitute_scaled(const Expr& e, const FactTable& table, const LieHom<UElem>& hom);

enum class Equality { Equal, Unequal, Unable };
const char* to_string(Equality q);

struct EqualityResult {
  Equality verdict;
  std::string detail;
};

/// Returns a description of a difference between the two sides, if one
/// can be exhibited (used to turn a failed normal form into "unequal").
using WitnessFn = std::function<std::optional<std::string>(const Expr&, const Expr&)>;

/// Normal form: sums of terms, each a scalar times a sequence of segments,
/// a segment being a commutative rational function in the atoms of one
/// commuting class. Adjacent segments of one class merge, constant
/// segments are pulled out, and terms that differ in a single segment are
/// combined. A nonzero normal form of e1 - e2 gives "unequal" only when
/// `witness` exhibits a difference, otherwise "unable".
EqualityResult prove_equal(const Expr& e1, const Expr& e2, const FactTable& table, const WitnessFn& witness = {});

std::string to_string(const Expr& e, const FactTable& table);

/// Evaluates an expression with atoms realized in a ring (DAG nodes shared).
template <class J>
J realize(const Expr& e, const std::vector<J>& atoms, const J& one) {
  std::unordered_map<const ExprNode*, J> memo;
  std::function<J(const Expr&)> go = [&](const Expr& n) -> J {
    if (auto it = memo.find(n.get()); it != memo.end()) return it->second;
    J r = one;
    switch (n->op) {
      case ExprOp::Atom:
        r = atoms.at(static_cast<std::size_t>(n->atom));
        break;
      case ExprOp::Const:
        r = one.scaled(n->value);
        break;
      case ExprOp::Add:
        r = one.scaled(Rational(0));
        for (const auto& a : n->args) r = r + go(a);
        break;
      case ExprOp::Mul:
        for (const auto& a : n->args) r = r * go(a);
        break;
      case ExprOp::Inv:
        r = go(n->args[0]).inverse();
        break;
      case ExprOp::Neg:
        r = go(n->args[0]).scaled(Rational(-1));
        break;
    }
    memo.emplace(n.get(), r);
    return r;
  };
  return go(e);
}

/// Atoms and expressions of a symmetry claim.
struct SymmetryCase {
  FactTable table;
  Expr S;
  Expr T;
};

/// A = V - z^3/3, B = V + z^3/3, C = z + y^2, D = z - y^2 in U(H), with
/// A* = B, C* = -D; S = A B^{-1} + A^{-1} B and T = C^{-1} D S C D^{-1}.
SymmetryCase heisenberg_symmetry_case();
/// E1 = e - 1/3, E2 = e + 1/3, F1 = 1 - f, F2 = 1 + f in U(M), with
/// E1* = -E2, F1* = F2; s = E1 E2^{-1}, u = F1 F2^{-1}, S = s + s^{-1},
/// T = u S u^{-1}.
SymmetryCase twodim_symmetry_case();

}  // namespace freealg
