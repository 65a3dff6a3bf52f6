#pragma once

#include <utility>

#include "qdf/chow.hpp"
#include "qdf/cohomology.hpp"

namespace qdf {

/// Numerical K-group shadow of the blown-up double cover: Chern characters
/// live in the restriction of the ambient P(E) Chow ring, the Euler pairing
/// is Hirzebruch-Riemann-Roch against the Todd class of the model.
struct XtModel {
  Space space;  // Xt, ambient ring = PE
  GradedClass td;
  std::pair<int, int> z = {1, -1};

  static XtModel make(std::pair<int, int> z = {1, -1}) {
    XtModel m;
    m.space = build_space(SpaceName::Xt);
    m.td = todd_space(m.space);
    m.z = z;
    return m;
  }

  GradedClass div(int a, int b) const {
    return Rational(a) * space.ring->var("H") + Rational(b) * space.ring->var("h");
  }

  GradedClass z_class() const { return div(z.first, z.second); }
};

/// Class in the numerical K-group shadow. The degree-0 part is the rank and
/// is always an integer (0 for pushforwards from the exceptional divisor).
struct KClass {
  GradedClass ch;

  bool operator==(const KClass& o) const { return ch == o.ch; }
  bool operator!=(const KClass& o) const { return !(*this == o); }
};

/// ch of a formal object: e^D for line bundles, e^D (1 - e^{-Z}) for
/// pushforwards i_*O_Z(D) (Grothendieck-Riemann-Roch for the divisor Z),
/// and a sign per shift.
inline KClass k_class(const XtModel& m, const FormalObject& obj) {
  if (obj.is_block()) throw Error("not representable: opaque block");
  GradedClass ch;
  switch (obj.kind) {
    case ObjKind::LineBundle: ch = exp_series(m.div(obj.a, obj.b)); break;
    case ObjKind::PushZ:
      ch = exp_series(m.div(obj.a, obj.b)) *
           (m.space.ring->one() - exp_series(-m.z_class()));
      break;
    default: throw Error("unreachable");
  }
  if (obj.shift % 2 != 0) ch = -ch;
  Rational rank = ch.constant_term();
  if (!is_integer(rank)) throw Error("k_class: non-integer rank");
  return KClass{ch};
}

/// ch of the dual: odd-degree components change sign.
inline GradedClass ch_dual(const GradedClass& c) {
  GradedClass out = c.ring()->zero();
  for (int k = 0; k <= c.ring()->truncation(); ++k) {
    GradedClass part = c.degree_part(k);
    out = out + ((k % 2) ? -part : part);
  }
  return out;
}

/// chi(E, F) = integral of ch(E)^dual ch(F) Td over the model. Exact; a
/// non-integer result means the model is inconsistent and throws.
inline long long euler_pairing(const XtModel& m, const FormalObject& e, const FormalObject& f) {
  GradedClass integrand = ch_dual(k_class(m, e).ch) * k_class(m, f).ch * m.td;
  Rational chi = integrate(m.space, integrand);
  if (!is_integer(chi))
    throw Error("euler_pairing: non-integer value " + to_string(chi));
  return to_long(chi);
}

enum class Side { Left, Right };

/// K-group conservation law of a mutation: the cone construction gives
///   [result] = [F] - chi(E, F) [E]   for a left mutation through E,
///   [result] = [F] - chi(F, E) [E]   for a right mutation through E.
/// `result` may carry a shift; its sign participates in the identity.
inline bool mutation_k_check(const XtModel& m, const FormalObject& e, const FormalObject& f,
                             const FormalObject& result, Side side) {
  long long chi = (side == Side::Left) ? euler_pairing(m, e, f) : euler_pairing(m, f, e);
  GradedClass expect = k_class(m, f).ch - Rational(chi) * k_class(m, e).ch;
  return k_class(m, result).ch == expect;
}

}  // namespace qdf
