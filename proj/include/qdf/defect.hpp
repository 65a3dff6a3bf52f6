#pragma once

#include <optional>
#include <sstream>
#include <string>

#include "qdf/chow.hpp"
#include "qdf/cohomology.hpp"
#include "qdf/report.hpp"

namespace qdf {

/// Generalized Eagon-Northcott complex C2 -> C1 -> C0 resolving the twisted
/// ideal of the submaximal minors of a symmetric morphism
/// phi: V^dual -> V ⊗ L on P3, everything split.
struct ENComplex {
  SplitBundle c2, c1, c0;
  int target_twist = 0;  // the ideal sheaf is twisted by O(target_twist h)

  std::string target_desc() const {
    return "I(" + std::to_string(target_twist) + ")";
  }
};

/// Terms (all twisted by extra_twist):
///   C2 = Lambda^2 V^dual ⊗ L^{-2},  C1 = (V^dual ⊗ V)_0 ⊗ L^{-1},
///   C0 = Sym^2 V,  target = I ⊗ L^{r-1} ⊗ det(V)^2 ⊗ O(extra_twist).
inline ENComplex build_en(const SplitBundle& v, int l_degree, int extra_twist) {
  if (v.rank() < 2) throw Error("build_en: rank must be at least 2");
  const int r = static_cast<int>(v.rank());
  ENComplex c;
  c.c2 = SplitBundle{v.space, twist(lambda2(dual(v.summands)), {-2 * l_degree + extra_twist})};
  c.c1 = SplitBundle{v.space, twist(traceless_endos(v.summands), {-l_degree + extra_twist})};
  c.c0 = SplitBundle{v.space, twist(sym2(v.summands), {extra_twist})};
  Multidegree det_v = total_degree(v.summands);
  c.target_twist = (r - 1) * l_degree + 2 * (det_v.empty() ? 0 : det_v[0]) + extra_twist;
  return c;
}

/// The specialization resolving the ideal of the nodes of the octic: V is
/// the dual of the pushforward bundle, L = O(2h), and the whole complex is
/// twisted once more by L so the target becomes I(8).
inline ENComplex en_specialization() {
  Space p3 = build_space(SpaceName::P3);
  SplitBundle e_dual{p3, {{1}, {0}, {0}, {-1}}};
  return build_en(e_dual, 2, 2);
}

struct DefectResult {
  std::optional<long long> value;  // defect when determined
  std::string offender;            // term and table blocking the vanishing route
};

/// Cohomology route to the defect: splitting the complex into two short
/// exact sequences, H^1 of the target ideal twist receives contributions
/// only from H^1(C0), H^2(C1) and H^3(C2). If those vanish the defect is 0;
/// otherwise it is reported as undetermined (>= 0) with the offending table.
inline DefectResult defect_from_resolution(const ENComplex& c) {
  auto term_table = [](const SplitBundle& b) {
    CohTable t;
    for (const auto& d : b.summands) t = direct_sum(t, coh_Pn(3, d[0]));
    return t;
  };
  CohTable t0 = term_table(c.c0), t1 = term_table(c.c1), t2 = term_table(c.c2);
  if (t0.dim(1) == 0 && t1.dim(2) == 0 && t2.dim(3) == 0) return DefectResult{0, ""};
  std::ostringstream os;
  if (t0.dim(1) != 0) os << "H^1(C0) = " << t0.dim(1) << " ";
  if (t1.dim(2) != 0) os << "H^2(C1) = " << t1.dim(2) << " ";
  if (t2.dim(3) != 0) os << "H^3(C2) = " << t2.dim(3);
  return DefectResult{std::nullopt, os.str()};
}

/// delta = b4 - b2 = 0 implies no small resolution is projective.
inline VerificationReport projectivity_verdict(const DefectResult& d) {
  if (d.value && *d.value == 0)
    return check("defect.verdict", "3.4 non-projectivity-criterion", "paper",
                 "defect 0: no small resolution is projective",
                 "defect 0: no small resolution is projective");
  if (d.value)
    return inconclusive_record("defect.verdict", "3.4 non-projectivity-criterion",
                               "defect 0: no small resolution is projective",
                               "defect " + std::to_string(*d.value) + ": criterion inconclusive");
  return inconclusive_record("defect.verdict", "3.4 non-projectivity-criterion",
                             "defect 0: no small resolution is projective",
                             "undetermined (>= 0): " + d.offender);
}

}  // namespace qdf
