#include "freealg/series.hpp"

namespace freealg {

namespace {
// delta^k of a coefficient picks up k inverse inner variables, so inner
// levels need room for about two more orders than the truncation
int inner_floor(int order, int floor) { return floor - 2 * order; }
}  // namespace

HeisenbergTower::HeisenbergTower(int order, int floor) : order_(order) {
  z_ = JetRing<Rational>::with_derivation("t_z", order, Rational(0), Rational(1), nullptr, inner_floor(order, floor));
  y_ = JetRing<JetQ>::with_derivation("t_y", order, JetQ(z_), JetQ::one(z_), nullptr, inner_floor(order, floor));
  const JetQ z_elem = JetQ::monomial(z_, Rational(1), -1);
  delta_x_ = std::make_shared<LiftedDerivation<JetQ>>(y_, nullptr, z_elem);
  auto dx = delta_x_;
  x_ = JetRing<JetQ2>::with_derivation(
      "t_x", order, JetQ2(y_), JetQ2::one(y_), [dx](const JetQ2& a) { return (*dx)(a); }, floor);
}

JetQ3 HeisenbergTower::constant(const Rational& c) const {
  return JetQ3::constant(x_, JetQ2::constant(y_, JetQ::constant(z_, c)));
}

JetQ3 HeisenbergTower::x() const { return JetQ3::monomial(x_, JetQ2::one(y_), -1); }
JetQ3 HeisenbergTower::y() const {
  return JetQ3::constant(x_, JetQ2::monomial(y_, JetQ::one(z_), -1));
}
JetQ3 HeisenbergTower::z() const {
  return JetQ3::constant(x_, JetQ2::constant(y_, JetQ::monomial(z_, Rational(1), -1)));
}

JetQ3 HeisenbergTower::embed(const UElem& a) const {
  JetQ3 out(x_);
  for (const auto& [mono, c] : a.terms()) {
    const JetQ inner = JetQ::monomial(z_, c, -mono[2]);
    const JetQ2 mid = JetQ2::monomial(y_, inner, -mono[1]);
    out = out + JetQ3::monomial(x_, mid, -mono[0]);
  }
  return out;
}

Class3Tower::Class3Tower(int order, int floor)
    : order_(order), alg_(presets::free_nilpotent_class3()), center_(presets::abelian({"n1", "n2"}, {3, 3})) {
  const UElem zero(center_);
  const UElem one(center_, Rational(1));
  const UElem n1 = UElem::generator(center_, 0);
  const UElem n2 = UElem::generator(center_, 1);
  w_ = JetRing<UElem>::with_derivation("t_w", order, zero, one, nullptr, inner_floor(order, floor));
  dv_w_ = std::make_shared<LiftedDerivation<UElem>>(w_, nullptr, n2);
  du_w_ = std::make_shared<LiftedDerivation<UElem>>(w_, nullptr, n1);
  auto dv = dv_w_;
  v_ = JetRing<JetU>::with_derivation(
      "t_v", order, JetU(w_), JetU::one(w_), [dv](const JetU& a) { return (*dv)(a); },
      inner_floor(order, floor));
  auto du_w = du_w_;
  const JetU w_elem = JetU::monomial(w_, one, -1);
  std::function<JetU(const JetU&)> du_on_w = [du_w](const JetU& a) { return (*du_w)(a); };
  std::function<JetU(const JetU&)> dv_on_w = [dv](const JetU& a) { return (*dv)(a); };
  // delta_u must respect a t_v^{-1} = t_v^{-1} a + delta_v(a) on W
  check_lift_hypotheses<JetU>(du_on_w, dv_on_w, w_elem,
                              {w_elem, JetU::constant(w_, n1), JetU::constant(w_, n2),
                               JetU::monomial(w_, one, 1), w_elem * w_elem + JetU::constant(w_, n1 * n2)});
  du_v_ = std::make_shared<LiftedDerivation<JetU>>(v_, du_on_w, w_elem);
  auto du = du_v_;
  u_ = JetRing<JetU2>::with_derivation(
      "t_u", order, JetU2(v_), JetU2::one(v_), [du](const JetU2& a) { return (*du)(a); }, floor);
}

JetU3 Class3Tower::generator(const std::string& name) const {
  return embed(UElem::generator(alg_, name));
}

JetU3 Class3Tower::embed(const UElem& a) const {
  if (a.algebra() != alg_ && a.algebra()->dim() != alg_->dim())
    throw Error(ErrorKind::ContextMismatch, "element is not in the class-3 enveloping algebra");
  JetU3 out(u_);
  for (const auto& [mono, c] : a.terms()) {
    const UElem central = UElem::monomial(center_, {mono[3], mono[4]}, c);
    const JetU inner = JetU::monomial(w_, central, -mono[2]);
    const JetU2 mid = JetU2::monomial(v_, inner, -mono[1]);
    out = out + JetU3::monomial(u_, mid, -mono[0]);
  }
  return out;
}

Class3ToHeisenberg::Class3ToHeisenberg(const Class3Tower& src, const HeisenbergTower& dst) : src_(src), dst_(dst) {
  if (src.order() != dst.order()) throw Error(ErrorKind::ContextMismatch, "towers truncated at different orders");
}

JetQ Class3ToHeisenberg::phi_w(const JetU& a) const {
  std::function<Rational(const UElem&)> eps = [](const UElem& c) { return augmentation(c); };
  return series_hom<UElem, Rational>(dst_.ring_z(), eps, a, false);
}

JetQ2 Class3ToHeisenberg::phi_v(const JetU2& a) const {
  std::function<JetQ(const JetU&)> f = [this](const JetU& c) { return phi_w(c); };
  return series_hom<JetU, JetQ>(dst_.ring_y(), f, a, false);
}

JetQ3 Class3ToHeisenberg::operator()(const JetU3& a) const {
  // delta_u on the source maps onto delta_x: checked on the coefficients of a
  std::function<JetQ2(const JetU2&)> f = [this](const JetU2& c) { return phi_v(c); };
  return series_hom<JetU2, JetQ2>(dst_.ring_x(), f, a, true);
}

JetRingPtr<RatFun> skew_laurent_ring(const ShiftAut& aut, int order, int floor) {
  return JetRing<RatFun>::with_automorphism(
      "p", order, RatFun(0), RatFun(1), [aut](const RatFun& a, int j) { return aut.apply(a, j); }, floor);
}

JetK to_jet(const JetRingPtr<RatFun>& ring, const SkewPoly& f) {
  return JetK::from_coeffs(ring, 0, f.coeffs());
}

JetK to_jet(const JetRingPtr<RatFun>& ring, const SkewFrac& f) {
  const JetK num = to_jet(ring, f.num());
  if (f.den().degree() == 0) return JetK::constant(ring, f.den().coeff(0).inverse()) * num;
  return left_divide(to_jet(ring, f.den()), num);
}

LieHom<SkewFrac> heisenberg_to_skew_field() {
  const ShiftAut aut{Rational(1)};
  const SkewFrac one(SkewPoly::one(aut));
  const SkewFrac p(SkewPoly::p(aut));
  const SkewFrac t(SkewPoly::constant(aut, RatFun::variable()));
  return LieHom<SkewFrac>(presets::heisenberg(), {p.inverse() * t, p, one}, one,
                          [](const SkewFrac& a, const Rational& c) { return a.scaled(c); });
}

LieHom<SkewFrac> twodim_to_skew_field() {
  const ShiftAut aut{Rational(-1)};
  const SkewFrac one(SkewPoly::one(aut));
  return LieHom<SkewFrac>(presets::two_dimensional(), {SkewFrac(SkewPoly::constant(aut, RatFun::variable())),
                                                       SkewFrac(SkewPoly::p(aut))},
                          one, [](const SkewFrac& a, const Rational& c) { return a.scaled(c); });
}

LieHom<JetK> twodim_to_jets(const JetRingPtr<RatFun>& ring) {
  return LieHom<JetK>(presets::two_dimensional(),
                      {JetK::constant(ring, RatFun::variable()), JetK::monomial(ring, RatFun(1), 1)}, JetK::one(ring),
                      [](const JetK& a, const Rational& c) { return a.scaled(c); });
}

LieHom<JetQ3> heisenberg_to_tower(const HeisenbergTower& tower) {
  return LieHom<JetQ3>(presets::heisenberg(), {tower.x(), tower.y(), tower.z()}, tower.constant(1),
                       [](const JetQ3& a, const Rational& c) { return a.scaled(c); });
}

}  // namespace freealg
