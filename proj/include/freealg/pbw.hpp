#pragma once

#include <climits>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "freealg/scalar.hpp"

namespace freealg {

/// Sparse vector over the basis of a Lie algebra: (basis index, coefficient).
using LieVec = std::vector<std::pair<int, Rational>>;

/// Finite-dimensional Lie algebra over Q given by structure constants on an
/// ordered basis e_0 < e_1 < ... . Only [e_j, e_i] for j > i is stored.
class LieAlg {
 public:
  LieAlg(std::vector<std::string> names, std::vector<int> weights);

  /// Sets [e_j, e_i] = value for j > i (and implicitly [e_i, e_j] = -value).
  void set_bracket(int j, int i, LieVec value);

  int dim() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
  int index_of(const std::string& name) const;  // -1 if absent
  int weight(int i) const { return weights_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& weights() const { return weights_; }

  /// [e_j, e_i] for any pair.
  LieVec bracket(int j, int i) const;
  LieVec bracket(const LieVec& a, const LieVec& b) const;

  /// weight([a,b]) = weight(a) + weight(b) for every nonzero bracket term.
  bool graded() const;
  bool abelian() const;

 private:
  std::vector<std::string> names_;
  std::vector<int> weights_;
  std::vector<std::vector<LieVec>> table_;  // table_[j][i], j > i
};

using LieAlgPtr = std::shared_ptr<const LieAlg>;

/// True iff the Jacobi identity holds on all basis triples.
bool jacobi_check(const LieAlg& alg);

namespace presets {
/// x < y < z, [y, x] = z, z central; weights 1, 1, 2.
LieAlgPtr heisenberg();
/// e < f, [e, f] = f; not graded.
LieAlgPtr two_dimensional();
/// Free nilpotent of class 3 on u, v: u < v < w < n1 < n2 with w = [v,u],
/// n1 = [w,u], n2 = [w,v]; weights 1, 1, 2, 3, 3.
LieAlgPtr free_nilpotent_class3();
/// Abelian Lie algebra (its enveloping algebra is a polynomial ring).
LieAlgPtr abelian(std::vector<std::string> names, std::vector<int> weights = {});
}  // namespace presets

using Monomial = std::vector<int>;  // exponent vector, one entry per basis element

/// Element of U(L) in PBW normal form: Q-combination of standard monomials.
class UElem {
 public:
  explicit UElem(LieAlgPtr alg) : alg_(std::move(alg)) {}
  UElem(LieAlgPtr alg, const Rational& c);

  static UElem generator(LieAlgPtr alg, int i);
  static UElem generator(const LieAlgPtr& alg, const std::string& name);
  static UElem monomial(LieAlgPtr alg, Monomial exps, const Rational& c = 1);

  const LieAlgPtr& algebra() const { return alg_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the empty monomial.
  Rational constant_term() const;
  /// Total degree (number of letters) of the longest monomial; -1 for zero.
  int degree() const;

  UElem operator-() const;
  UElem& operator+=(const UElem& b);
  UElem& operator-=(const UElem& b);
  friend UElem operator+(UElem a, const UElem& b) { return a += b; }
  friend UElem operator-(UElem a, const UElem& b) { return a -= b; }
  /// u_mul: PBW straightening product.
  friend UElem operator*(const UElem& a, const UElem& b);
  friend UElem operator*(UElem a, const Rational& c);
  friend UElem operator*(const Rational& c, UElem a) { return std::move(a) * c; }
  friend bool operator==(const UElem& a, const UElem& b) { return a.terms_ == b.terms_; }

  UElem pow(int n) const;
  /// Product with a single basis letter on the right.
  UElem mul_letter(int letter) const;

  std::string str() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  LieAlgPtr alg_;
  std::map<Monomial, Rational> terms_;
};

/// Product of a word of basis letters, straightened; the oracle for u_mul.
UElem straighten_word(const LieAlgPtr& alg, const std::vector<int>& letters);

/// Principal involution: the anti-automorphism with e_i -> -e_i.
UElem u_involution(const UElem& a);
/// Augmentation: coefficient of the empty monomial.
Rational augmentation(const UElem& a);

constexpr long kValuationInfinity = LONG_MAX;
/// chi(monomial) = -(weighted degree), chi(sum) = min over terms, chi(0) = infinity.
long chi_valuation(const UElem& a);
/// chi(sum_i t^i a_i) = min_i (chi(a_i) + i).
long laurent_chi(const std::vector<std::pair<int, UElem>>& coeffs);

/// A Lie homomorphism L -> (Target, [a,b] = ab - ba), given by basis images.
/// Construction verifies bracket compatibility on all basis pairs.
template <class Target>
class LieHom {
 public:
  using Scale = std::function<Target(const Target&, const Rational&)>;

  LieHom(LieAlgPtr source, std::vector<Target> images, Target one, Scale scale)
      : source_(std::move(source)), images_(std::move(images)), one_(std::move(one)), scale_(std::move(scale)) {
    verify();
  }

  const LieAlgPtr& source() const { return source_; }
  const Target& image(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const Target& one() const { return one_; }

  Target apply_lie(const LieVec& v) const {
    Target acc = scale_(one_, Rational(0));
    for (const auto& [k, c] : v) acc = acc + scale_(images_[static_cast<std::size_t>(k)], c);
    return acc;
  }

  /// hom_apply: multiplicative extension over standard monomials.
  Target operator()(const UElem& a) const {
    Target acc = scale_(one_, Rational(0));
    std::vector<std::vector<Target>> powers(images_.size());
    for (const auto& [mono, c] : a.terms()) {
      Target term = one_;
      for (std::size_t i = 0; i < mono.size(); ++i) {
        const int e = mono[i];
        if (e == 0) continue;
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(one_);
        while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images_[i]);
        term = term * pw[static_cast<std::size_t>(e)];
      }
      acc = acc + scale_(term, c);
    }
    return acc;
  }

 private:
  void verify() const;

  LieAlgPtr source_;
  std::vector<Target> images_;
  Target one_;
  Scale scale_;
};

/// Thrown by LieHom construction; carries the offending pair (j, i).
class BracketIncompatibleError : public Error {
 public:
  BracketIncompatibleError(int j, int i, const std::string& what)
      : Error(ErrorKind::BracketIncompatible, what), j_(j), i_(i) {}
  int j() const { return j_; }
  int i() const { return i_; }

 private:
  int j_, i_;
};

template <class Target>
void LieHom<Target>::verify() const {
  const int d = source_->dim();
  if (static_cast<int>(images_.size()) != d)
    throw Error(ErrorKind::BracketIncompatible, "image count does not match the source dimension");
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < j; ++i) {
      const Target& a = images_[static_cast<std::size_t>(j)];
      const Target& b = images_[static_cast<std::size_t>(i)];
      const Target lhs = apply_lie(source_->bracket(j, i));
      const Target rhs = a * b - b * a;
      if (!(lhs == rhs))
        throw BracketIncompatibleError(j, i, "[" + source_->name(j) + ", " + source_->name(i) + "] not preserved");
    }
  }
}

LieHom<UElem> make_uelem_hom(LieAlgPtr source, LieAlgPtr target, std::vector<UElem> images);

/// Basis element of weight d maps to lambda^d times itself. Throws NotGraded.
LieHom<UElem> scaling_automorphism(const LieAlgPtr& alg, const Rational& lambda);

/// rho: L_class3 -> H, u -> x, v -> y, w -> z, n1, n2 -> 0.
LieHom<UElem> class3_to_heisenberg();

/// Parses "basis a b c", "bracket j i = (coeff, k) + ...", "weight i = d" lines.
LieAlgPtr parse_lie_algebra(const std::string& text);

}  // namespace freealg
