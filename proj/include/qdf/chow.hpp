#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qdf/graded.hpp"
#include "qdf/splits.hpp"

namespace qdf {

enum class SpaceName { P3, P5, P1xP3, PF, PE, Xt, PEbar, PG, Xhat };

inline const char* space_label(SpaceName n) {
  switch (n) {
    case SpaceName::P3: return "P3";
    case SpaceName::P5: return "P5";
    case SpaceName::P1xP3: return "P1xP3";
    case SpaceName::PF: return "PF";
    case SpaceName::PE: return "PE";
    case SpaceName::Xt: return "Xt";
    case SpaceName::PEbar: return "PEbar";
    case SpaceName::PG: return "PG";
    case SpaceName::Xhat: return "Xhat";
  }
  return "?";
}

/// A space of the model with its (ambient) Chow ring. Divisors and covers
/// modeled inside an ambient projective bundle (Xt in PE, Xhat in PG) carry
/// the class of the divisor as `fundamental_factor`; integration multiplies
/// by it and integrates in the ambient ring.
///
/// Projective bundles follow the convention pushforward(O(H)) = V^dual on
/// P(V), with Grothendieck relation H^r + c1(V)H^{r-1} + ... + cr(V) = 0 and
/// Segre pushforward H^{r-1+k} -> s_k(V).
struct Space {
  SpaceName name;
  std::string label;
  RingPtr ring;
  int dimension = 0;
  GradedClass canonical_class;
  GradedClass fundamental_factor;  // ring.one() for honest ambient spaces
  std::vector<std::string> divisor_basis;

  GradedClass div(const Multidegree& d) const {
    if (d.size() != divisor_basis.size()) throw Error("multidegree size mismatch on " + label);
    GradedClass out = ring->zero();
    for (std::size_t i = 0; i < d.size(); ++i)
      out = out + Rational(d[i]) * ring->var(divisor_basis[i]);
    return out;
  }
};

/// Formal direct sum of line bundles on a space.
struct SplitBundle {
  Space space;
  Summands summands;

  std::size_t rank() const { return summands.size(); }
};

namespace detail {

inline std::shared_ptr<GradedRing> ring_with(std::vector<GradedRing::Variable> vars, int trunc) {
  return GradedRing::make(std::move(vars), trunc);
}

/// Coefficients of x/(1 - e^{-x}) as a power series, up to degree `top`.
inline std::vector<Rational> todd_series(int top) {
  auto aux = GradedRing::make({{"x", 1}}, top);
  GradedClass x = aux->var("x");
  GradedClass g = aux->zero();  // (1 - e^{-x})/x, shifted down one degree
  for (int k = 1; k <= top + 1; ++k) {
    Rational c = Rational((k % 2) ? 1 : -1) / factorial(k);
    g = g + c * x.pow(k - 1);
  }
  GradedClass phi = invert_series(g);
  std::vector<Rational> out(top + 1, Rational(0));
  for (const auto& [m, c] : phi.terms()) out[m[0]] = c;
  return out;
}

}  // namespace detail

/// Todd factor of a single divisor class: D/(1 - e^{-D}).
inline GradedClass todd_line(const GradedClass& d) {
  auto coeffs = detail::todd_series(d.ring()->truncation());
  GradedClass out = d.ring()->zero();
  GradedClass p = d.ring()->one();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] != 0) out = out + coeffs[k] * p;
    p = p * d;
    if (p.is_zero() && k + 1 < coeffs.size()) {
      // remaining powers vanish
      break;
    }
  }
  return out;
}

inline GradedClass chern_total(const SplitBundle& v) {
  GradedClass out = v.space.ring->one();
  for (const auto& d : v.summands) out = out * (v.space.ring->one() + v.space.div(d));
  return out;
}

inline GradedClass segre_total(const SplitBundle& v) { return invert_series(chern_total(v)); }

inline GradedClass chern_character(const SplitBundle& v) {
  GradedClass out = v.space.ring->zero();
  for (const auto& d : v.summands) out = out + exp_series(v.space.div(d));
  return out;
}

inline GradedClass todd_bundle(const SplitBundle& v) {
  GradedClass out = v.space.ring->one();
  for (const auto& d : v.summands) out = out * todd_line(v.space.div(d));
  return out;
}

/// Builds the named space. All rings are Q[...] with the relations induced
/// by the defining split bundles:
///   PF  = P(F),    F = O ⊕ O ⊕ O(-h)            over P3   (H^3 = h H^2)
///   PE  = P(E),    E = O(-h) ⊕ O ⊕ O ⊕ O(h)     over P3   (H^4 = h^2 H^2)
///   Xt  = divisor of class 2H+2h in PE
///   PEbar = P(Ebar), c(Ebar) = c(E)/c(O(-h)) = 1+h, rank 3 (xi^3 = -h xi^2)
///   PG  = P(G), 0 -> O(-h) -> G -> O(-xi) -> 0  over PEbar (H^2 = (h+xi)H - h xi)
///   Xhat = divisor of class H+xi+2h in PG
inline Space build_space(SpaceName name) {
  using V = GradedRing::Variable;
  Space s;
  s.name = name;
  s.label = space_label(name);
  switch (name) {
    case SpaceName::P3: {
      auto r = detail::ring_with({V{"h", 1}}, 3);
      s.ring = r;
      s.dimension = 3;
      s.divisor_basis = {"h"};
      s.canonical_class = Rational(-4) * r->var("h");
      s.fundamental_factor = r->one();
      return s;
    }
    case SpaceName::P5: {
      auto r = detail::ring_with({V{"H", 1}}, 5);
      s.ring = r;
      s.dimension = 5;
      s.divisor_basis = {"H"};
      s.canonical_class = Rational(-6) * r->var("H");
      s.fundamental_factor = r->one();
      return s;
    }
    case SpaceName::P1xP3: {
      auto r = detail::ring_with({V{"l", 1}, V{"h", 1}}, 4);
      r->add_rule("l", 2, r->zero());
      r->add_rule("h", 4, r->zero());
      s.ring = r;
      s.dimension = 4;
      s.divisor_basis = {"l", "h"};
      s.canonical_class = Rational(-2) * r->var("l") + Rational(-4) * r->var("h");
      s.fundamental_factor = r->one();
      return s;
    }
    case SpaceName::PF: {
      auto r = detail::ring_with({V{"h", 1}, V{"H", 1}}, 5);
      r->add_rule("h", 4, r->zero());
      // c(F) = 1 - h:  H^3 - h H^2 = 0
      r->add_rule("H", 3, r->var("h") * r->var("H") * r->var("H"));
      s.ring = r;
      s.dimension = 5;
      s.divisor_basis = {"H", "h"};
      // K_base + (-r H - c1(F)) = -4h - 3H + h
      s.canonical_class = Rational(-3) * r->var("H") + Rational(-3) * r->var("h");
      s.fundamental_factor = r->one();
      return s;
    }
    case SpaceName::PE:
    case SpaceName::Xt: {
      auto r = detail::ring_with({V{"h", 1}, V{"H", 1}}, 6);
      r->add_rule("h", 4, r->zero());
      // c(E) = (1-h)(1+h) = 1 - h^2:  H^4 - h^2 H^2 = 0
      GradedClass h = r->var("h"), H = r->var("H");
      r->add_rule("H", 4, h * h * H * H);
      s.ring = r;
      s.divisor_basis = {"H", "h"};
      if (name == SpaceName::PE) {
        s.dimension = 6;
        s.canonical_class = Rational(-4) * H + Rational(-4) * h;
        s.fundamental_factor = r->one();
      } else {
        s.dimension = 5;
        s.canonical_class = Rational(-2) * H + Rational(-2) * h;
        s.fundamental_factor = Rational(2) * H + Rational(2) * h;
      }
      return s;
    }
    case SpaceName::PEbar: {
      auto r = detail::ring_with({V{"h", 1}, V{"xi", 1}}, 5);
      r->add_rule("h", 4, r->zero());
      // c(Ebar) = 1 + h:  xi^3 + h xi^2 = 0
      GradedClass h = r->var("h"), xi = r->var("xi");
      r->add_rule("xi", 3, -(h * xi * xi));
      s.ring = r;
      s.dimension = 5;
      s.divisor_basis = {"xi", "h"};
      s.canonical_class = Rational(-3) * xi + Rational(-5) * h;
      s.fundamental_factor = r->one();
      return s;
    }
    case SpaceName::PG:
    case SpaceName::Xhat: {
      auto r = detail::ring_with({V{"h", 1}, V{"xi", 1}, V{"H", 1}}, 6);
      r->add_rule("h", 4, r->zero());
      GradedClass h = r->var("h"), xi = r->var("xi"), H = r->var("H");
      r->add_rule("xi", 3, -(h * xi * xi));
      // c(G) = (1-h)(1-xi):  H^2 - (h+xi)H + h xi = 0
      r->add_rule("H", 2, (h + xi) * H - h * xi);
      s.ring = r;
      s.divisor_basis = {"H", "xi", "h"};
      if (name == SpaceName::PG) {
        s.dimension = 6;
        s.canonical_class = Rational(-2) * H + Rational(-2) * xi + Rational(-4) * h;
        s.fundamental_factor = r->one();
      } else {
        s.dimension = 5;
        s.canonical_class = -H - xi + Rational(-2) * h;
        s.fundamental_factor = H + xi + Rational(2) * h;
      }
      return s;
    }
  }
  throw Error("unknown space name");
}

/// Degree of the top-dimensional component of cls; 0 when there is none.
/// The reduced monomial basis has a unique monomial in top degree for every
/// ambient ring here, which integrates to 1.
inline Rational integrate(const Space& s, const GradedClass& cls) {
  if (cls.ring() != s.ring) throw Error("integrate: class not in the ring of " + s.label);
  GradedClass c = cls * s.fundamental_factor;
  int ambient_dim = s.dimension;
  if (!(s.fundamental_factor == s.ring->one()))
    ambient_dim += 1;  // divisor class inside the ambient bundle
  Rational total = 0;
  const GradedClass top = c.degree_part(ambient_dim);
  bool seen = false;
  for (const auto& [m, coeff] : top.terms()) {
    if (seen) throw Error("integrate: non-unique top monomial in " + s.label);
    seen = true;
    total = coeff;
  }
  return total;
}

/// Todd class of the tangent sheaf of the space's model, as a class in the
/// ambient ring. Bundles use the relative Euler sequence
/// 0 -> O -> pi^*W(H) -> T_rel -> 0 times the Todd class of the base; the
/// divisor models divide the ambient Todd class by todd(O(divisor)).
inline GradedClass todd_space(const Space& s) {
  const RingPtr& r = s.ring;
  auto td = [&](const GradedClass& d) { return todd_line(d); };
  switch (s.name) {
    case SpaceName::P3: return td(r->var("h")).pow(4);
    case SpaceName::P5: return td(r->var("H")).pow(6);
    case SpaceName::P1xP3: return td(r->var("l")).pow(2) * td(r->var("h")).pow(4);
    case SpaceName::PF: {
      GradedClass h = r->var("h"), H = r->var("H");
      return td(H).pow(2) * td(H - h) * td(h).pow(4);
    }
    case SpaceName::PE:
    case SpaceName::Xt: {
      GradedClass h = r->var("h"), H = r->var("H");
      GradedClass amb = td(H - h) * td(H).pow(2) * td(H + h) * td(h).pow(4);
      if (s.name == SpaceName::PE) return amb;
      return amb * invert_series(td(Rational(2) * H + Rational(2) * h));
    }
    case SpaceName::PEbar: {
      GradedClass h = r->var("h"), xi = r->var("xi");
      return td(xi + h) * td(xi).pow(2) * td(h).pow(4);
    }
    case SpaceName::PG:
    case SpaceName::Xhat: {
      GradedClass h = r->var("h"), xi = r->var("xi"), H = r->var("H");
      GradedClass base = td(xi + h) * td(xi).pow(2) * td(h).pow(4);
      GradedClass amb = td(H - h) * td(H - xi) * base;
      if (s.name == SpaceName::PG) return amb;
      return amb * invert_series(td(H + xi + Rational(2) * h));
    }
  }
  throw Error("unknown space");
}

/// Euler characteristic of a line bundle by Hirzebruch-Riemann-Roch.
inline Rational hrr_chi(const Space& s, const GradedClass& d) {
  return integrate(s, exp_series(d) * todd_space(s));
}

/// Chern classes c_i(F^dual ⊗ O(h)) on P3 for the blow-down bundle F, then
/// the degrees of the discriminant surface [D] = 2c1 and of its corank-2
/// locus [D0] = 4(c1 c2 - c0 c3).
///
/// `fdual_twisted` defaults to F^dual ⊗ O(h) = O(h)^2 ⊕ O(2h); pass another
/// rank-3 split bundle on P3 to re-run the formulas on a control input.
inline std::pair<long long, long long> discriminant_degrees_for(const SplitBundle& fdual_twisted) {
  const Space& p3 = fdual_twisted.space;
  GradedClass c = chern_total(fdual_twisted);
  GradedClass h = p3.ring->var("h");
  GradedClass c0 = c.degree_part(0), c1 = c.degree_part(1), c2 = c.degree_part(2),
              c3 = c.degree_part(3);
  Rational degD = integrate(p3, Rational(2) * c1 * h * h);
  Rational degD0 = integrate(p3, Rational(4) * (c1 * c2 - c0 * c3));
  return {to_long(degD), to_long(degD0)};
}

inline std::pair<long long, long long> discriminant_degrees() {
  Space p3 = build_space(SpaceName::P3);
  SplitBundle fdual_h{p3, {{1}, {1}, {2}}};
  return discriminant_degrees_for(fdual_h);
}

/// Solves for n in c(Sym^2 E^dual) = c(O(-n h)) c(Sym^2 F^dual ⊕ F^dual(-m h))
/// where E = F ⊕ O(m h); the quadric bundle has m = 1. The kernel class is
/// determined in degree 1 and the identity is then verified in all degrees.
inline long long solve_relative_class(int m = 1) {
  Space p3 = build_space(SpaceName::P3);
  Summands f = {{0}, {0}, {-1}};  // F = O ⊕ O ⊕ O(-h)
  Summands e = f;
  e.push_back({m});
  SplitBundle sym2_e_dual{p3, sym2(dual(e))};
  Summands rhs_sum = sym2(dual(f));
  for (const auto& d : twist(dual(f), {-m})) rhs_sum.push_back(d);
  SplitBundle rhs{p3, rhs_sum};

  GradedClass lhs_c = chern_total(sym2_e_dual);
  GradedClass rhs_c = chern_total(rhs);
  GradedClass h = p3.ring->var("h");
  Rational lhs1 = lhs_c.degree_part(1).coefficient(Monomial{1});
  Rational rhs1 = rhs_c.degree_part(1).coefficient(Monomial{1});
  Rational n = rhs1 - lhs1;
  if (!is_integer(n)) throw Error("solve_relative_class: non-integer solution " + to_string(n));
  GradedClass kernel_c = p3.ring->one() - n * h;
  if (lhs_c != kernel_c * rhs_c)
    throw Error("solve_relative_class: no twist makes the Chern identity hold");
  return to_long(n);
}

/// deg(a1) deg(a2) deg(q) intersection number in P3, computed as an actual
/// integral rather than a product of integers.
inline long long bezout_nodes(int d1 = 3, int d2 = 3, int d3 = 2) {
  Space p3 = build_space(SpaceName::P3);
  GradedClass h = p3.ring->var("h");
  return to_long(integrate(p3, (Rational(d1) * h) * (Rational(d2) * h) * (Rational(d3) * h)));
}

/// Degree-1 coefficient vector of a class over the given divisor basis,
/// for lattice-level identities between canonical classes.
inline std::map<std::string, long long> lattice_coeffs(const Space& s, const GradedClass& cls) {
  std::map<std::string, long long> out;
  for (const auto& name : s.divisor_basis) {
    Monomial m(s.ring->nvars(), 0);
    m[s.ring->var_index(name)] = 1;
    Rational c = cls.coefficient(m);
    if (c != 0) out[name] = to_long(c);
  }
  return out;
}

}  // namespace qdf
