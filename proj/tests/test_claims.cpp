#include <gtest/gtest.h>

#include "freealg/claims.hpp"

using namespace freealg;

TEST(Report, ExitCodes) {
  RunReport r{"x"};
  r.verdicts.push_back({"a", "a", Verdict::Certified});
  EXPECT_EQ(r.exit_code(), 0);
  r.verdicts.push_back({"b", "b", Verdict::Inconclusive});
  EXPECT_EQ(r.exit_code(), 3);
  r.verdicts.push_back({"c", "c", Verdict::RelationFound});
  EXPECT_EQ(r.exit_code(), 2);
}

TEST(Report, DeterministicJson) {
  RunReport r{"selftest"};
  r.elapsed_ms = 12.5;
  r.seed = 9;
  r.verdicts.push_back({"a", "lbl", Verdict::Certified, {{"x", rational_json(Rational(-3, 6))}}});
  const json d = r.to_json(true);
  EXPECT_EQ(d["schema"], 1);
  EXPECT_EQ(d["elapsed_ms"], 0);
  EXPECT_FALSE(d["params"].contains("threads"));
  EXPECT_EQ(d["verdicts"][0]["paper_label"], "lbl");
  EXPECT_EQ(d["verdicts"][0]["verdict"], "certified");
  EXPECT_EQ(d["verdicts"][0]["data"]["x"], "-1/2");
  EXPECT_TRUE(r.to_json(false)["params"].contains("threads"));
}

TEST(Claims, HeisenbergImageTable) {
  const ClaimVerdict v = heisenberg_image_table();
  EXPECT_EQ(v.verdict, Verdict::Certified);
}

TEST(Claims, ValuationTable) {
  const RunReport r = verify_valuation();
  EXPECT_EQ(r.exit_code(), 0);
}

TEST(Claims, GroupRing) {
  const RunReport r = certify_groupring(3);
  EXPECT_EQ(r.exit_code(), 0);
  bool saw_rank = false;
  for (const auto& v : r.verdicts)
    if (v.data.contains("rank")) {
      EXPECT_EQ(v.data["rank"], 15);
      saw_rank = true;
    }
  EXPECT_TRUE(saw_rank);
}

TEST(Claims, CauchonSameOrbitIsRejected) {
  CauchonOptions opt;
  opt.alpha = 0;
  opt.beta = 4;
  opt.shift = 2;
  EXPECT_EQ(certify_cauchon(opt).exit_code(), 2);
}

TEST(Claims, ScalingInvariance) {
  EXPECT_EQ(verify_scaling({Rational(2), Rational(-1, 3)}).exit_code(), 0);
}

TEST(Claims, QuickSelftest) {
  SelftestOptions opt;
  opt.quick = true;
  const RunReport r = run_selftest(opt);
  EXPECT_EQ(r.exit_code(), 0);
  for (const auto& v : r.verdicts) EXPECT_EQ(v.data["failed"], 0) << v.label;
}
