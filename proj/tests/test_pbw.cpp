#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "freealg/pbw.hpp"

using namespace freealg;

namespace {

// Rewrites words of basis letters until every word is nondecreasing, picking
// a random descent each time: e_j e_i -> e_i e_j + [e_j, e_i] for j > i.
UElem rewrite_oracle(const LieAlgPtr& alg, const std::vector<int>& word, std::mt19937_64& rng) {
  std::map<std::vector<int>, Rational> todo{{word, Rational(1)}};
  UElem out(alg);
  while (!todo.empty()) {
    auto it = todo.begin();
    std::advance(it, static_cast<long>(rng() % todo.size()));
    const std::vector<int> w = it->first;
    const Rational c = it->second;
    todo.erase(it);
    if (c == 0) continue;
    std::vector<std::size_t> descents;
    for (std::size_t k = 0; k + 1 < w.size(); ++k)
      if (w[k] > w[k + 1]) descents.push_back(k);
    if (descents.empty()) {
      Monomial m(static_cast<std::size_t>(alg->dim()), 0);
      for (int l : w) ++m[static_cast<std::size_t>(l)];
      out += UElem::monomial(alg, m, c);
      continue;
    }
    const std::size_t k = descents[rng() % descents.size()];
    std::vector<int> swapped = w;
    std::swap(swapped[k], swapped[k + 1]);
    todo[swapped] += c;
    for (const auto& [idx, coeff] : alg->bracket(w[k], w[k + 1])) {
      std::vector<int> shorter(w.begin(), w.begin() + static_cast<long>(k));
      shorter.push_back(idx);
      shorter.insert(shorter.end(), w.begin() + static_cast<long>(k) + 2, w.end());
      todo[shorter] += c * coeff;
    }
  }
  return out;
}

std::vector<LieAlgPtr> all_presets() {
  return {presets::heisenberg(), presets::two_dimensional(), presets::free_nilpotent_class3()};
}

}  // namespace

TEST(LieAlg, PresetsSatisfyJacobi) {
  for (const auto& alg : all_presets()) EXPECT_TRUE(jacobi_check(*alg));
  EXPECT_TRUE(presets::heisenberg()->graded());
  EXPECT_FALSE(presets::two_dimensional()->graded());
  EXPECT_TRUE(presets::free_nilpotent_class3()->graded());
}

TEST(LieAlg, BrokenJacobiDetected) {
  auto alg = std::make_shared<LieAlg>(std::vector<std::string>{"a", "b", "c"}, std::vector<int>{1, 1, 1});
  alg->set_bracket(1, 0, {{2, Rational(1)}});
  alg->set_bracket(2, 0, {{0, Rational(1)}});
  EXPECT_FALSE(jacobi_check(*alg));
}

TEST(LieAlg, ParseMatchesPreset) {
  const LieAlgPtr a = parse_lie_algebra("basis x y z\nbracket 1 0 = (1, 2)\nweight 2 = 2\n");
  const LieAlgPtr h = presets::heisenberg();
  ASSERT_EQ(a->dim(), 3);
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i) EXPECT_EQ(a->bracket(j, i), h->bracket(j, i));
  EXPECT_THROW(parse_lie_algebra("bracket 1 0 = (1, 2)"), Error);
}

TEST(PBW, StraighteningMatchesRandomRewriting) {
  std::mt19937_64 rng(31);
  for (const auto& alg : all_presets()) {
    for (int k = 0; k < 60; ++k) {
      std::vector<int> w;
      for (int i = static_cast<int>(rng() % 6); i > 0; --i) w.push_back(static_cast<int>(rng() % alg->dim()));
      EXPECT_EQ(straighten_word(alg, w), rewrite_oracle(alg, w, rng));
    }
  }
}

TEST(PBW, ProductMatchesWordConcatenation) {
  std::mt19937_64 rng(32);
  for (const auto& alg : all_presets()) {
    for (int k = 0; k < 40; ++k) {
      std::vector<int> a, b;
      for (int i = static_cast<int>(rng() % 4); i > 0; --i) a.push_back(static_cast<int>(rng() % alg->dim()));
      for (int i = static_cast<int>(rng() % 4); i > 0; --i) b.push_back(static_cast<int>(rng() % alg->dim()));
      std::vector<int> ab = a;
      ab.insert(ab.end(), b.begin(), b.end());
      EXPECT_EQ(rewrite_oracle(alg, a, rng) * rewrite_oracle(alg, b, rng), rewrite_oracle(alg, ab, rng));
    }
  }
}

TEST(PBW, HeisenbergRelations) {
  const LieAlgPtr h = presets::heisenberg();
  const UElem x = UElem::generator(h, "x"), y = UElem::generator(h, "y"), z = UElem::generator(h, "z");
  EXPECT_EQ(y * x - x * y, z);
  EXPECT_EQ(z * x, x * z);
  // y x^2 = x^2 y + 2 x z
  EXPECT_EQ(y * x.pow(2), x.pow(2) * y + Rational(2) * x * z);
  EXPECT_EQ((x + y).pow(2).degree(), 2);
}

TEST(PBW, InvolutionAndAugmentation) {
  const LieAlgPtr h = presets::heisenberg();
  const UElem x = UElem::generator(h, "x"), y = UElem::generator(h, "y"), z = UElem::generator(h, "z");
  EXPECT_EQ(u_involution(x), -x);
  EXPECT_EQ(u_involution(x * y), y * x);
  EXPECT_EQ(u_involution(z.pow(3)), -z.pow(3));
  EXPECT_EQ(augmentation(x * y + UElem(h, Rational(5))), Rational(5));
}

TEST(PBW, ChiValuation) {
  const LieAlgPtr c = presets::free_nilpotent_class3();
  const UElem u = UElem::generator(c, "u"), v = UElem::generator(c, "v"), w = UElem::generator(c, "w");
  EXPECT_EQ(chi_valuation(u), -1);
  EXPECT_EQ(chi_valuation(w), -2);
  EXPECT_EQ(chi_valuation(u * v + v * u), -2);
  EXPECT_EQ(chi_valuation(UElem(c, Rational(3))), 0);
  EXPECT_EQ(chi_valuation(UElem(c)), kValuationInfinity);
  EXPECT_EQ(laurent_chi({{2, w}, {0, u}}), -1);
}

TEST(LieHom, ScalingAndProjection) {
  const LieAlgPtr h = presets::heisenberg();
  const auto s = scaling_automorphism(h, Rational(3));
  EXPECT_EQ(s(UElem::generator(h, "z")), UElem::generator(h, "z") * Rational(9));
  EXPECT_THROW(scaling_automorphism(presets::two_dimensional(), Rational(2)), Error);
  const auto rho = class3_to_heisenberg();
  const LieAlgPtr c = presets::free_nilpotent_class3();
  const UElem u = UElem::generator(c, "u"), v = UElem::generator(c, "v");
  EXPECT_EQ(rho(v * u - u * v), UElem::generator(h, "z"));
  EXPECT_TRUE(rho(UElem::generator(c, "n1")).is_zero());
}

TEST(LieHom, IncompatibleImagesRejected) {
  const LieAlgPtr h = presets::heisenberg();
  const LieAlgPtr a = presets::abelian({"p", "q"});
  const UElem p = UElem::generator(a, "p"), q = UElem::generator(a, "q");
  try {
    make_uelem_hom(h, a, {p, q, p});
    FAIL() << "expected BracketIncompatible";
  } catch (const BracketIncompatibleError& e) {
    EXPECT_EQ(e.j(), 1);
    EXPECT_EQ(e.i(), 0);
  }
}
