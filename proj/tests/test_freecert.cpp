#include <gtest/gtest.h>

#include "freealg/freecert.hpp"
#include "freealg/series.hpp"

using namespace freealg;

namespace {

// plain Gaussian elimination over Q on a dense matrix
int dense_rank(std::vector<std::vector<Rational>> m) {
  int rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[static_cast<std::size_t>(rank)]);
    const auto& p = m[static_cast<std::size_t>(rank)];
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || m[r][c] == 0) continue;
      const Rational f = m[r][c] / p[c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * p[k];
    }
    ++rank;
  }
  return rank;
}

RingAdapter<GrpRingElem> group_ring_adapter() {
  return {"group ring", GrpRingElem(Rational(1)), [](const GrpRingElem& a, const GrpRingElem& b) { return a * b; },
          nullptr, coordinatize_group_ring, true};
}

}  // namespace

TEST(Words, Counts) {
  EXPECT_EQ(enumerate_words(2, 2, false).size(), 7u);
  EXPECT_EQ(enumerate_words(2, 3, false).size(), 15u);
  EXPECT_EQ(enumerate_words(2, 4, false).size(), 31u);
  EXPECT_EQ(enumerate_words(2, 1, true).size(), 5u);
  EXPECT_EQ(enumerate_words(2, 2, true).size(), 17u);
  EXPECT_EQ(enumerate_words(2, 3, true).size(), 53u);
  for (const Word& w : enumerate_words(2, 3, true))
    for (std::size_t k = 0; k + 1 < w.letters.size(); ++k) EXPECT_NE(w.letters[k], -w.letters[k + 1]);
  const auto words = enumerate_words(2, 2, false);
  EXPECT_EQ(word_str(words[0], {"S", "T"}, false), "1");
  EXPECT_EQ(word_str(words[3], {"S", "T"}, false), "SS");
}

TEST(Rank, MatchesDenseEliminationAndRelationVanishes) {
  RationalSampler rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = rng.uniform_int(1, 6), dim = rng.uniform_int(1, 5);
    std::vector<QVec> vecs;
    std::vector<std::vector<Rational>> dense;
    for (int i = 0; i < n; ++i) {
      QVec v;
      std::vector<Rational> row(static_cast<std::size_t>(dim));
      for (int c = 0; c < dim; ++c) {
        const Rational q = rng.uniform_int(0, 2) ? rng.next(4, 3) : Rational(0);
        row[static_cast<std::size_t>(c)] = q;
        if (q != 0) v[{c}] = q;
      }
      vecs.push_back(v);
      dense.push_back(row);
    }
    const RankResult rr = rank_over_Q(vecs);
    EXPECT_EQ(rr.rank, dense_rank(dense));
    if (rr.rank < n) {
      ASSERT_TRUE(rr.relation.has_value());
      EXPECT_TRUE(relation_vanishes(vecs, *rr.relation));
    }
  }
}

TEST(Evaluation, LevelwiseMatchesReference) {
  const auto gens = symmetric_generators();
  const std::function<GrpRingElem(const GrpRingElem&, const GrpRingElem&)> mul =
      [](const GrpRingElem& a, const GrpRingElem& b) { return a * b; };
  const auto words = enumerate_words(2, 4, false);
  const auto ref = evaluate_words_reference<GrpRingElem>(words, gens, {}, GrpRingElem(Rational(1)), mul);
  EXPECT_EQ(evaluate_words<GrpRingElem>(words, gens, {}, GrpRingElem(Rational(1)), mul, Exec::Serial), ref);
  EXPECT_EQ(evaluate_words<GrpRingElem>(words, gens, {}, GrpRingElem(Rational(1)), mul, Exec::Parallel), ref);
}

TEST(Freeness, SymmetricGroupRingGeneratorsAreFree) {
  for (int L : {3, 4}) {
    const CertReport rep = certify_freeness(symmetric_generators(), group_ring_adapter(), L, WordMode::Monoid, {"X", "Y"});
    EXPECT_EQ(rep.verdict, Verdict::Certified);
    EXPECT_EQ(rep.rank, (1 << (L + 1)) - 1);
  }
}

TEST(Freeness, CommutingPairGivesRelation) {
  const GrpRingElem X = symmetric_generators()[0];
  const CertReport rep = certify_freeness(std::vector<GrpRingElem>{X, X * X}, group_ring_adapter(), 2, WordMode::Monoid, {"a", "b"});
  EXPECT_EQ(rep.verdict, Verdict::RelationFound);
  EXPECT_LT(rep.rank, 7);
  ASSERT_TRUE(rep.relation.has_value());
}

TEST(Freeness, TruncatedCoordinatesAreInconclusive) {
  const ShiftAut aut{Rational(1)};
  const auto ring = skew_laurent_ring(aut, 8);
  const JetK t = JetK::constant(ring, RatFun::variable());
  RingAdapter<JetK> adapter{"jets", JetK::one(ring), [](const JetK& a, const JetK& b) { return a * b; },
                            [](const JetK& a) { return a.inverse(); },
                            [](const std::vector<JetK>& v) { return coordinatize_jets(v, 6, 1); }, false};
  const CertReport rep = certify_freeness(std::vector<JetK>{t, t * t}, adapter, 2, WordMode::Monoid, {"a", "b"});
  EXPECT_EQ(rep.verdict, Verdict::Inconclusive);
  const CertReport grp = certify_freeness(std::vector<JetK>{t, t * t}, adapter, 1, WordMode::Group, {"a", "b"});
  EXPECT_EQ(grp.word_count, 5);
  const JetK zero(ring);
  EXPECT_THROW(certify_freeness(std::vector<JetK>{zero, t}, adapter, 1, WordMode::Group, {"a", "b"}), Error);
}

TEST(Freeness, ExactSkewFractionCoordinates) {
  const SymmetricImages im = build_heisenberg_images();
  const auto coords = coordinatize_skewfracs({im.sbar, im.sbar.scaled(Rational(3)), im.tbar});
  EXPECT_EQ(rank_over_Q(coords).rank, 2);
}
