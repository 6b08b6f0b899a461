#include <gtest/gtest.h>

#include "freealg/series.hpp"
#include "freealg/symcert.hpp"

using namespace freealg;
using namespace freealg::ex;

namespace {

std::vector<JetQ3> tower_atoms(const FactTable& table, const HeisenbergTower& h) {
  const auto phi = heisenberg_to_tower(h);
  std::vector<JetQ3> out;
  for (int a = 0; a < table.size(); ++a) out.push_back(phi(table.atom(a).def));
  return out;
}

Expr random_expr(std::mt19937_64& rng, int depth) {
  if (depth == 0 || rng() % 4 == 0) {
    if (rng() % 5 == 0) return constant(Rational(static_cast<long>(rng() % 5) + 1, 2));
    return atom(static_cast<int>(rng() % 4));
  }
  switch (rng() % 3) {
    case 0:
      return add({random_expr(rng, depth - 1), random_expr(rng, depth - 1)});
    case 1:
      return mul({random_expr(rng, depth - 1), random_expr(rng, depth - 1)});
    default:
      return inv(atom(static_cast<int>(rng() % 4)));
  }
}

}  // namespace

TEST(Facts, HeisenbergFactsHold) {
  SymmetryCase c = heisenberg_symmetry_case();
  const auto checks = verify_facts(c.table);
  EXPECT_EQ(checks.size(), 10u);
  for (const auto& f : checks) EXPECT_TRUE(f.ok) << f.fact;
  EXPECT_FALSE(c.table.atom(0).justification.empty());
}

TEST(Facts, FalseStarRejected) {
  SymmetryCase c = heisenberg_symmetry_case();
  c.table.set_star(0, 1, 2);
  try {
    verify_facts(c.table);
    FAIL() << "expected FactFailure";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::FactFailure);
  }
  SymmetryCase d = heisenberg_symmetry_case();
  d.table.declare_commuting(0, 2);
  EXPECT_THROW(verify_facts(d.table), Error);
}

TEST(Star, StructuralRules) {
  const SymmetryCase c = heisenberg_symmetry_case();
  const Expr e = mul({atom(0), inv(atom(2))});
  EXPECT_EQ(to_string(star(e, c.table), c.table), "(-(D)^-1 * B)");
  FactTable bare(presets::heisenberg());
  bare.add_atom("X", UElem::generator(presets::heisenberg(), "x"));
  EXPECT_THROW(star(atom(0), bare), Error);
}

TEST(ProveEqual, SymmetricElements) {
  for (const SymmetryCase& c : {heisenberg_symmetry_case(), twodim_symmetry_case()}) {
    EXPECT_EQ(prove_equal(star(c.S, c.table), c.S, c.table).verdict, Equality::Equal);
    EXPECT_EQ(prove_equal(star(c.T, c.table), c.T, c.table).verdict, Equality::Equal);
  }
}

TEST(ProveEqual, NoncommutingAtomsAreNotIdentified) {
  const SymmetryCase c = heisenberg_symmetry_case();
  const Expr ac = mul({atom(0), atom(2)}), ca = mul({atom(2), atom(0)});
  EXPECT_EQ(prove_equal(ac, ca, c.table).verdict, Equality::Unable);
  const HeisenbergTower h(10);
  const auto atoms = tower_atoms(c.table, h);
  const WitnessFn w = [&](const Expr& a, const Expr& b) -> std::optional<std::string> {
    if (agrees(realize(a, atoms, h.constant(1)), realize(b, atoms, h.constant(1)))) return std::nullopt;
    return "jets differ";
  };
  EXPECT_EQ(prove_equal(ac, ca, c.table, w).verdict, Equality::Unequal);
  EXPECT_EQ(prove_equal(mul({atom(0), atom(1)}), mul({atom(1), atom(0)}), c.table).verdict, Equality::Equal);
}

TEST(ProveEqual, AgreesWithJetRealization) {
  // every "equal" verdict must survive evaluation in the series tower
  const SymmetryCase c = heisenberg_symmetry_case();
  const HeisenbergTower h(8);
  const auto atoms = tower_atoms(c.table, h);
  std::mt19937_64 rng(71);
  int equal = 0;
  for (int k = 0; k < 40; ++k) {
    const Expr e = random_expr(rng, 3);
    const Expr twisted = mul({atom(1), inv(atom(0)), e, atom(0), inv(atom(1))});
    const Expr padded = add({e, mul({atom(0), atom(1)}), neg(mul({atom(1), atom(0)}))});
    for (const Expr& other : {padded, twisted}) {
      const EqualityResult r = prove_equal(e, other, c.table);
      if (r.verdict != Equality::Equal) continue;
      ++equal;
      try {
        EXPECT_TRUE(agrees(realize(e, atoms, h.constant(1)), realize(other, atoms, h.constant(1))));
      } catch (const Error&) {
        // a zero subexpression under an inverse; nothing to compare
      }
    }
  }
  EXPECT_GT(equal, 20);
}

TEST(Scaling, SubstitutionPreservesS) {
  const SymmetryCase c = heisenberg_symmetry_case();
  const auto hom = scaling_automorphism(presets::heisenberg(), Rational(2));
  EXPECT_EQ(prove_equal(substitute_scaled(c.S, c.table, hom), c.S, c.table).verdict, Equality::Equal);
  EXPECT_EQ(prove_equal(substitute_scaled(c.T, c.table, hom), c.T, c.table).verdict, Equality::Equal);
  FactTable mixed(presets::heisenberg());
  const LieAlgPtr H = presets::heisenberg();
  mixed.add_atom("M", UElem::generator(H, "x") + UElem::generator(H, "z"));
  EXPECT_THROW(substitute_scaled(atom(0), mixed, hom), Error);
}
