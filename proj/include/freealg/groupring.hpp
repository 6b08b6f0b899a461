#pragma once

#include <map>
#include <string>
#include <vector>

#include "freealg/scalar.hpp"

namespace freealg {

/// Freely reduced word in a free group; letter g+1 is generator g, -(g+1) its inverse.
class FWord {
 public:
  FWord() = default;
  explicit FWord(std::vector<int> letters);  // reduces
  static FWord generator(int g) { return FWord({g + 1}); }

  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }
  FWord inverse() const;
  friend FWord operator*(const FWord& a, const FWord& b);
  friend auto operator<=>(const FWord& a, const FWord& b) = default;
  std::string str(const std::vector<std::string>& names = {"x", "y"}) const;

 private:
  std::vector<int> letters_;
};

/// Element of the group algebra Q[F].
class GrpRingElem {
 public:
  GrpRingElem() = default;
  GrpRingElem(const Rational& c);  // NOLINT
  static GrpRingElem word(const FWord& w, const Rational& c = 1);

  const std::map<FWord, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  GrpRingElem operator-() const;
  GrpRingElem& operator+=(const GrpRingElem& b);
  friend GrpRingElem operator+(GrpRingElem a, const GrpRingElem& b) { return a += b; }
  friend GrpRingElem operator-(GrpRingElem a, const GrpRingElem& b) { return a += -b; }
  /// gr_mul
  friend GrpRingElem operator*(const GrpRingElem& a, const GrpRingElem& b);
  friend bool operator==(const GrpRingElem& a, const GrpRingElem& b) { return a.terms_ == b.terms_; }
  std::string str() const;

 private:
  void add_term(const FWord& w, const Rational& c);
  std::map<FWord, Rational> terms_;
};

/// The canonical involution sum c_g g -> sum c_g g^{-1}.
GrpRingElem involution(const GrpRingElem& a);

/// X = x + x^{-1}, Y = y + y^{-1} in Q[F(x, y)].
std::vector<GrpRingElem> symmetric_generators();

}  // namespace freealg
