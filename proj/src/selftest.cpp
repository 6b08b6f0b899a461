#include <chrono>
#include <functional>

#include "freealg/claims.hpp"
#include "freealg/series.hpp"
#include "freealg/skewfrac.hpp"

namespace freealg {

namespace {

using Clock = std::chrono::steady_clock;

UElem random_uelem(const LieAlgPtr& alg, RationalSampler& rng, int terms, int max_letters) {
  UElem out(alg);
  for (int k = 0; k < terms; ++k) {
    std::vector<int> word;
    const int len = rng.uniform_int(0, max_letters);
    for (int i = 0; i < len; ++i) word.push_back(rng.uniform_int(0, alg->dim() - 1));
    out += straighten_word(alg, word) * rng.next(9, 4);
  }
  return out;
}

JetQ3 random_tower_jet(const HeisenbergTower& h, RationalSampler& rng, int terms) {
  JetQ3 out(h.ring_x());
  for (int k = 0; k < terms; ++k) {
    const JetQ z = JetQ::monomial(h.ring_z(), rng.next(9, 4), rng.uniform_int(-2, 3));
    const JetQ2 y = JetQ2::monomial(h.ring_y(), z, rng.uniform_int(-2, 3));
    out += JetQ3::monomial(h.ring_x(), y, rng.uniform_int(-2, 3));
  }
  return out;
}

JetQ2 random_yz_jet(const HeisenbergTower& h, RationalSampler& rng, int terms) {
  JetQ2 out(h.ring_y());
  for (int k = 0; k < terms; ++k) {
    const JetQ z = JetQ::monomial(h.ring_z(), rng.next(9, 4), rng.uniform_int(-2, 3));
    out += JetQ2::monomial(h.ring_y(), z, rng.uniform_int(-2, 3));
  }
  return out;
}

RatFun random_ratfun(RationalSampler& rng) {
  Poly num, den = Poly::monomial(1, 0);
  for (int i = 0; i <= rng.uniform_int(0, 2); ++i) num += Poly::monomial(rng.next(9, 3), i);
  for (int i = 0; i < rng.uniform_int(0, 1); ++i) den = den * (Poly::variable() - Poly::monomial(rng.next(9, 3), 0));
  if (num.is_zero()) num = Poly::monomial(1, 0);
  return RatFun::reduce(num, den);
}

SkewPoly random_skewpoly(const ShiftAut& aut, RationalSampler& rng, int max_degree) {
  SkewPoly out(aut);
  const int d = rng.uniform_int(0, max_degree);
  for (int i = 0; i <= d; ++i) out = out + SkewPoly::monomial(aut, random_ratfun(rng), i);
  if (out.is_zero()) out = SkewPoly::one(aut);
  return out;
}

struct Suite {
  ClaimVerdict v;
  int checked = 0;
  int failed = 0;
  json failures = json::array();

  Suite(std::string claim, std::string label) : v{std::move(claim), std::move(label)} {}
  void check(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    ++failed;
    if (failures.size() < 5) failures.push_back(what);
  }
  ClaimVerdict done() {
    v.data["checked"] = checked;
    v.data["failed"] = failed;
    if (!failures.empty()) v.data["failures"] = failures;
    v.verdict = failed == 0 ? Verdict::Certified : Verdict::RelationFound;
    return v;
  }
};

ClaimVerdict pbw_associativity(std::uint64_t seed, int triples) {
  Suite s("PBW product is associative and matches word straightening", "selftest.pbw-associativity");
  RationalSampler rng(seed);
  const std::vector<std::pair<std::string, LieAlgPtr>> algs{{"heisenberg", presets::heisenberg()},
                                                            {"two_dimensional", presets::two_dimensional()},
                                                            {"free_nilpotent_class3", presets::free_nilpotent_class3()}};
  for (const auto& [name, alg] : algs) {
    s.check(jacobi_check(*alg), name + ": Jacobi identity");
    for (int k = 0; k < triples; ++k) {
      const UElem a = random_uelem(alg, rng, 3, 3);
      const UElem b = random_uelem(alg, rng, 3, 3);
      const UElem c = random_uelem(alg, rng, 3, 3);
      s.check((a * b) * c == a * (b * c), name + ": (ab)c = a(bc) sample " + std::to_string(k));
    }
    for (int k = 0; k < triples / 4; ++k) {
      std::vector<int> w1, w2;
      for (int i = rng.uniform_int(1, 4); i > 0; --i) w1.push_back(rng.uniform_int(0, alg->dim() - 1));
      for (int i = rng.uniform_int(1, 4); i > 0; --i) w2.push_back(rng.uniform_int(0, alg->dim() - 1));
      std::vector<int> w = w1;
      w.insert(w.end(), w2.begin(), w2.end());
      s.check(straighten_word(alg, w1) * straighten_word(alg, w2) == straighten_word(alg, w),
              name + ": product of straightened words");
    }
  }
  return s.done();
}

ClaimVerdict involution_axioms(std::uint64_t seed, int samples) {
  Suite s("principal involution is an anti-automorphism of order 2", "selftest.involution");
  RationalSampler rng(seed);
  for (const LieAlgPtr& alg : {presets::heisenberg(), presets::two_dimensional(), presets::free_nilpotent_class3()}) {
    for (int k = 0; k < samples; ++k) {
      const UElem a = random_uelem(alg, rng, 3, 3);
      const UElem b = random_uelem(alg, rng, 3, 3);
      const Rational q = rng.next(9, 4);
      s.check(u_involution(u_involution(a)) == a, "a** = a");
      s.check(u_involution(a * b) == u_involution(b) * u_involution(a), "(ab)* = b* a*");
      s.check(u_involution(a + b * q) == u_involution(a) + u_involution(b) * q, "linearity");
    }
  }
  return s.done();
}

ClaimVerdict valuation_axioms(std::uint64_t seed, int samples) {
  Suite s("chi is a valuation on the graded enveloping algebras", "selftest.valuation");
  RationalSampler rng(seed);
  for (const LieAlgPtr& alg : {presets::heisenberg(), presets::free_nilpotent_class3()}) {
    s.check(alg->graded(), "grading is compatible with the bracket");
    for (int k = 0; k < samples; ++k) {
      const UElem a = random_uelem(alg, rng, 3, 3);
      const UElem b = random_uelem(alg, rng, 3, 3);
      if (a.is_zero() || b.is_zero()) continue;
      s.check(chi_valuation(a * b) == chi_valuation(a) + chi_valuation(b), "chi(ab) = chi(a) + chi(b)");
      if (!(a + b).is_zero())
        s.check(chi_valuation(a + b) >= std::min(chi_valuation(a), chi_valuation(b)), "chi(a+b) >= min");
    }
  }
  s.check(chi_valuation(UElem(presets::heisenberg())) == kValuationInfinity, "chi(0) = infinity");
  return s.done();
}

ClaimVerdict skew_euclid(std::uint64_t seed, int samples) {
  Suite s("skew division and gcrd/llcm re-multiply", "selftest.skew-euclid");
  RationalSampler rng(seed);
  for (const Rational& c : {Rational(1), Rational(-1), Rational(2)}) {
    const ShiftAut aut{c};
    for (int k = 0; k < samples; ++k) {
      const SkewPoly f = random_skewpoly(aut, rng, 3);
      const SkewPoly g = random_skewpoly(aut, rng, 2);
      const DivModResult r = divmod(f, g, Side::Right);
      s.check(r.q * g + r.r == f && (r.r.is_zero() || r.r.degree() < g.degree()), "right division");
      const DivModResult l = divmod(f, g, Side::Left);
      s.check(g * l.q + l.r == f && (l.r.is_zero() || l.r.degree() < g.degree()), "left division");
      const GcrdLlcm gl = gcrd_llcm(f, g);
      s.check(gl.a * f == gl.llcm && gl.b * g == gl.llcm, "llcm = a f = b g");
      s.check(divmod(f, gl.gcrd, Side::Right).r.is_zero() && divmod(g, gl.gcrd, Side::Right).r.is_zero(),
              "gcrd divides both");
    }
  }
  return s.done();
}

ClaimVerdict fraction_jet_cross(std::uint64_t seed, int samples) {
  Suite s("skew fractions and K((p; sigma)) jets agree", "selftest.fraction-jet");
  RationalSampler rng(seed);
  for (const Rational& c : {Rational(1), Rational(-1)}) {
    const ShiftAut aut{c};
    const JetRingPtr<RatFun> ring = skew_laurent_ring(aut, kDefaultOrder);
    for (int k = 0; k < samples; ++k) {
      const SkewFrac a(random_skewpoly(aut, rng, 2), random_skewpoly(aut, rng, 2));
      const SkewFrac b(random_skewpoly(aut, rng, 2), random_skewpoly(aut, rng, 2));
      s.check(agrees(to_jet(ring, a * b), to_jet(ring, a) * to_jet(ring, b)), "product");
      s.check(agrees(to_jet(ring, a + b), to_jet(ring, a) + to_jet(ring, b)), "sum");
      if (!a.is_zero()) s.check(agrees(to_jet(ring, a.inverse()), to_jet(ring, a).inverse()), "inverse");
      s.check(equal_by_cross_llcm(a * b, a * b) && (a * b == a * b), "cross-llcm equality");
    }
  }
  return s.done();
}

ClaimVerdict series_axioms(std::uint64_t seed, int triples) {
  Suite s("series tower: associativity, Leibniz rule, inner derivation", "selftest.series-axioms");
  RationalSampler rng(seed);
  const HeisenbergTower h(kDefaultOrder);
  for (int k = 0; k < triples; ++k) {
    const JetQ3 a = random_tower_jet(h, rng, 3);
    const JetQ3 b = random_tower_jet(h, rng, 3);
    const JetQ3 c = random_tower_jet(h, rng, 3);
    s.check(agrees((a * b) * c, a * (b * c)), "associativity mod t^16");
  }
  const HeisenbergTower h14(14);
  const auto& d = h14.delta_x();
  for (int k = 0; k < triples / 10; ++k) {
    const JetQ2 a = random_yz_jet(h14, rng, 3);
    const JetQ2 b = random_yz_jet(h14, rng, 3);
    s.check(agrees(d(a * b), d(a) * b + a * d(b)), "Leibniz mod t^14");
    const JetQ3 ja = JetQ3::constant(h14.ring_x(), a);
    s.check(agrees(ja * h14.x() - h14.x() * ja, JetQ3::constant(h14.ring_x(), d(a))), "delta_x(a) = [a, x]");
  }
  for (int i = -4; i <= 4; ++i) {
    const JetQ zinv = JetQ::monomial(h.ring_z(), Rational(1), -1);
    const JetQ2 expected = JetQ2::monomial(h.ring_y(), zinv.scaled(Rational(-i)), i + 1);
    s.check(agrees(h.delta_x().of_power(i), expected), "delta_x(t_y^" + std::to_string(i) + ")");
  }
  return s.done();
}

}  // namespace

RunReport run_selftest(const SelftestOptions& opt) {
  const auto start = Clock::now();
  RunReport rep{"selftest"};
  rep.seed = opt.seed;
  const int n = opt.quick ? 20 : 200;
  rep.params = {{"quick", opt.quick}, {"samples", n}};
  const std::vector<std::function<ClaimVerdict()>> suites{
      [&] { return pbw_associativity(opt.seed, n); },
      [&] { return involution_axioms(opt.seed + 1, n / 2); },
      [&] { return valuation_axioms(opt.seed + 2, n / 2); },
      [&] { return skew_euclid(opt.seed + 3, n / 10); },
      [&] { return fraction_jet_cross(opt.seed + 4, n / 10); },
      [&] { return series_axioms(opt.seed + 5, opt.quick ? 50 : 500); },
  };
  json timings = json::array();
  for (const auto& suite : suites) {
    const auto t0 = Clock::now();
    rep.verdicts.push_back(suite());
    timings.push_back(std::chrono::duration<double, std::milli>(Clock::now() - t0).count());
  }
  rep.suite_ms = timings;
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return rep;
}

}  // namespace freealg
