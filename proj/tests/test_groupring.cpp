#include <gtest/gtest.h>

#include "freealg/groupring.hpp"

using namespace freealg;

namespace {

Integer binom(int n, int k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

TEST(FWord, FreeReduction) {
  EXPECT_TRUE(FWord({1, -1, 2, -2}).is_identity());
  EXPECT_EQ(FWord({1, 2, -2, 1}).letters(), (std::vector<int>{1, 1}));
  const FWord a({1, 2, -1}), b({1, -2});
  EXPECT_EQ((a * b).letters(), (std::vector<int>{1}));
  EXPECT_TRUE((a * a.inverse()).is_identity());
  EXPECT_EQ(FWord({1, -2}).str(), "xy^-1");
}

TEST(GrpRing, PowersOfXHaveBinomialCoefficients) {
  const GrpRingElem X = symmetric_generators()[0];
  GrpRingElem p(Rational(1));
  for (int n = 1; n <= 8; ++n) {
    p = p * X;
    // (x + x^-1)^n = sum_k binom(n, k) x^{n - 2k}
    GrpRingElem expected;
    for (int k = 0; k <= n; ++k) {
      const int e = n - 2 * k;
      std::vector<int> letters(static_cast<std::size_t>(std::abs(e)), e > 0 ? 1 : -1);
      expected += GrpRingElem::word(FWord(letters), Rational(binom(n, k)));
    }
    EXPECT_EQ(p, expected);
  }
}

TEST(GrpRing, RingAxiomsAndInvolution) {
  RationalSampler rng(51);
  auto random_elem = [&] {
    GrpRingElem out;
    for (int k = 0; k < 3; ++k) {
      std::vector<int> letters;
      for (int i = rng.uniform_int(0, 3); i > 0; --i) {
        const int g = rng.uniform_int(1, 2);
        letters.push_back(rng.uniform_int(0, 1) ? g : -g);
      }
      out += GrpRingElem::word(FWord(letters), rng.next(5, 3));
    }
    return out;
  };
  for (int k = 0; k < 40; ++k) {
    const GrpRingElem a = random_elem(), b = random_elem(), c = random_elem();
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(involution(a * b), involution(b) * involution(a));
    EXPECT_EQ(involution(involution(a)), a);
    EXPECT_TRUE((a - a).is_zero());
  }
  for (const GrpRingElem& g : symmetric_generators()) EXPECT_EQ(involution(g), g);
}
