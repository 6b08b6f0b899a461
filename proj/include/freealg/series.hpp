#pragma once

#include <memory>
#include <string>
#include <vector>

#include "freealg/jet.hpp"
#include "freealg/pbw.hpp"
#include "freealg/skewfrac.hpp"

namespace freealg {

constexpr int kDefaultOrder = 16;

using JetQ = Jet<Rational>;
using JetQ2 = Jet<JetQ>;
using JetQ3 = Jet<JetQ2>;

/// k((t_z))((t_y))((t_x; delta_x)) with x -> t_x^{-1}, y -> t_y^{-1}, z -> t_z^{-1}.
/// delta_x vanishes on k((t_z)) and delta_x(y) = z.
class HeisenbergTower {
 public:
  explicit HeisenbergTower(int order = kDefaultOrder, int floor = -8);

  int order() const { return order_; }
  const JetRingPtr<Rational>& ring_z() const { return z_; }
  const JetRingPtr<JetQ>& ring_y() const { return y_; }
  const JetRingPtr<JetQ2>& ring_x() const { return x_; }
  const LiftedDerivation<JetQ>& delta_x() const { return *delta_x_; }

  JetQ3 x() const;
  JetQ3 y() const;
  JetQ3 z() const;
  JetQ3 constant(const Rational& c) const;
  /// Standard monomial x^a y^b z^c -> t_x^{-a} (t_y^{-b} (t_z^{-c})), summed.
  JetQ3 embed(const UElem& a) const;

 private:
  int order_;
  JetRingPtr<Rational> z_;
  JetRingPtr<JetQ> y_;
  std::shared_ptr<LiftedDerivation<JetQ>> delta_x_;
  JetRingPtr<JetQ2> x_;
};

using JetU = Jet<UElem>;
using JetU2 = Jet<JetU>;
using JetU3 = Jet<JetU2>;

/// U(N)((t_w))((t_v; delta_v))((t_u; delta_u)) for the free nilpotent algebra
/// of class 3, with N = span(n1, n2) central and U(N) = Q[n1, n2].
/// delta_v(w) = n2, delta_u(w) = n1, delta_u(v) = w = t_w^{-1}.
class Class3Tower {
 public:
  explicit Class3Tower(int order = kDefaultOrder, int floor = -8);

  int order() const { return order_; }
  const LieAlgPtr& algebra() const { return alg_; }
  const LieAlgPtr& center() const { return center_; }
  const JetRingPtr<UElem>& ring_w() const { return w_; }
  const JetRingPtr<JetU>& ring_v() const { return v_; }
  const JetRingPtr<JetU2>& ring_u() const { return u_; }
  const LiftedDerivation<UElem>& delta_v_on_w() const { return *dv_w_; }
  const LiftedDerivation<UElem>& delta_u_on_w() const { return *du_w_; }
  const LiftedDerivation<JetU>& delta_u_on_v() const { return *du_v_; }

  JetU3 generator(const std::string& name) const;
  /// u^a v^b w^c n1^d n2^e -> t_u^{-a} (t_v^{-b} (t_w^{-c} n1^d n2^e)), summed.
  JetU3 embed(const UElem& a) const;

 private:
  int order_;
  LieAlgPtr alg_;
  LieAlgPtr center_;
  JetRingPtr<UElem> w_;
  std::shared_ptr<LiftedDerivation<UElem>> dv_w_;
  std::shared_ptr<LiftedDerivation<UElem>> du_w_;
  JetRingPtr<JetU> v_;
  std::shared_ptr<LiftedDerivation<JetU>> du_v_;
  JetRingPtr<JetU2> u_;
};

/// Phi = Phi_u o Phi_v o Phi_w: the series-level image of rho, using the
/// augmentation on U(N) and acting coefficientwise above it.
class Class3ToHeisenberg {
 public:
  Class3ToHeisenberg(const Class3Tower& src, const HeisenbergTower& dst);
  JetQ phi_w(const JetU& a) const;
  JetQ2 phi_v(const JetU2& a) const;
  JetQ3 operator()(const JetU3& a) const;

 private:
  const Class3Tower& src_;
  const HeisenbergTower& dst_;
};

/// K((p; sigma)) with K = Q(t) and p a = sigma(a) p read as a p = p sigma(a).
using JetK = Jet<RatFun>;
JetRingPtr<RatFun> skew_laurent_ring(const ShiftAut& aut, int order = kDefaultOrder, int floor = -8);
JetK to_jet(const JetRingPtr<RatFun>& ring, const SkewPoly& f);
/// d^{-1} n as a series in p.
JetK to_jet(const JetRingPtr<RatFun>& ring, const SkewFrac& f);

/// Phi: U(H) -> K(p; sigma), sigma(t) = t - 1: x -> p^{-1} t, y -> p, z -> 1.
LieHom<SkewFrac> heisenberg_to_skew_field();
/// U(M) -> K(p; sigma), sigma(t) = t + 1: e -> t, f -> p.
LieHom<SkewFrac> twodim_to_skew_field();
/// The same map into K((p; sigma)) jets.
LieHom<JetK> twodim_to_jets(const JetRingPtr<RatFun>& ring);
/// Heisenberg tower realization x -> t_x^{-1}, y -> t_y^{-1}, z -> t_z^{-1}.
LieHom<JetQ3> heisenberg_to_tower(const HeisenbergTower& tower);

}  // namespace freealg
