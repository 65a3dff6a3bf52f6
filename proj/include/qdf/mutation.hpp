#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qdf/ktheory.hpp"

namespace qdf {

/// Ordered collection of formal objects and blocks (a semiorthogonal
/// decomposition read left to right).
struct Collection {
  std::vector<FormalObject> entries;
  std::string space_tag = "Xt";

  bool operator==(const Collection& o) const { return entries == o.entries; }
  bool operator!=(const Collection& o) const { return !(*this == o); }

  std::string str() const {
    std::ostringstream os;
    os << "<";
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (i) os << ", ";
      os << entries[i].str();
    }
    os << ">";
    return os.str();
  }
};

struct HomRecord {
  std::string desc;
  CohTable table;
};

/// Record of one rewriting step. A step is certified only if every consumed
/// Hom table is exact and every cone output passed its K-group check.
struct StepReport {
  int step_id = 0;
  std::string rule;
  std::vector<HomRecord> homs;
  Collection before, after;
  bool k0_ok = true;
  bool certified = false;
  std::vector<std::string> notes;

  std::string summary() const {
    std::ostringstream os;
    os << "step " << step_id << " [" << rule << "] "
       << (certified ? "certified" : "NOT CERTIFIED");
    return os.str();
  }
};

/// Term-rewriting engine for collections on the blown-up double cover.
/// `z` is the declared divisor class of the exceptional divisor; the cone
/// rule table and the K-group checks both depend on it.
struct MutationEngine {
  XtModel model;

  static MutationEngine make(std::pair<int, int> z = {1, -1}) {
    return MutationEngine{XtModel::make(z)};
  }

  std::pair<int, int> z() const { return model.z; }

  CohTable hom(const FormalObject& a, const FormalObject& b) const {
    return hom_table(a, b, model.z);
  }

  // -- transposition of a completely orthogonal adjacent pair ---------------

  std::pair<Collection, StepReport> transpose_orthogonal(const Collection& c,
                                                         std::size_t i) const {
    StepReport rep;
    rep.rule = "transpose-orthogonal";
    rep.before = c;
    check_object_pair(c, i);
    const FormalObject &a = c.entries[i], &b = c.entries[i + 1];
    CohTable fwd = hom(a, b), rev = hom(b, a);
    rep.homs.push_back({"Hom(" + a.str() + ", " + b.str() + ")", fwd});
    rep.homs.push_back({"Hom(" + b.str() + ", " + a.str() + ")", rev});
    if (!fwd.empty() || !rev.empty())
      throw Error("transpose_orthogonal: pair is not completely orthogonal at " +
                  std::to_string(i));
    if (!fwd.exact || !rev.exact)
      throw Error("transpose_orthogonal: inexact Hom table, refusing to certify");
    Collection out = c;
    std::swap(out.entries[i], out.entries[i + 1]);
    rep.after = out;
    rep.certified = true;
    return {out, rep};
  }

  // -- cone mutations of an adjacent pair ------------------------------------

  /// Cone evaluation is a closed rule table; a mutation whose Hom table
  /// matches no rule is an explicit failure.
  ///
  ///   R1  (divisor section)  O(D1), O(D2) with D2-D1 = Z and Hom = {0:1}:
  ///       the cone of O(D1) -> O(D2) is i_*O_Z(D2).
  ///   R2  (restriction)      O(D), i_*O_Z(D) with Hom = {0:1}: the cone of
  ///       the canonical quotient is O(D-Z)[1].
  ///   R3  (ideal sequence)   i_*O_Z(D+Z), O(D) with Hom = {1:1}: the
  ///       extension middle term is O(D+Z).
  ///
  /// side = Left mutates entries[i+1] through entries[i], yielding
  /// <L, entries[i]>; side = Right mutates entries[i] through entries[i+1],
  /// yielding <entries[i+1], R>. Cone shifts are normalized away in the
  /// stored collection and recorded in the report; the K-group check is run
  /// on the shifted (un-normalized) object.
  std::pair<Collection, StepReport> mutate_exceptional(const Collection& c, std::size_t i,
                                                       Side side) const {
    StepReport rep;
    rep.rule = side == Side::Left ? "left-mutation" : "right-mutation";
    rep.before = c;
    check_object_pair(c, i);
    const FormalObject &a = c.entries[i], &b = c.entries[i + 1];
    // the through-object and the mutated object
    const FormalObject& through = (side == Side::Left) ? a : b;
    const FormalObject& moved = (side == Side::Left) ? b : a;
    CohTable consumed =
        (side == Side::Left) ? hom(through, moved) : hom(moved, through);
    rep.homs.push_back({(side == Side::Left)
                            ? "Hom(" + through.str() + ", " + moved.str() + ")"
                            : "Hom(" + moved.str() + ", " + through.str() + ")",
                        consumed});
    if (!consumed.exact) throw Error("mutate_exceptional: inexact Hom table, refused");

    auto [result, cone_shift, rule] = evaluate_cone(a, b, side, consumed);
    rep.rule += " " + rule;
    FormalObject shifted_result = result.shifted(cone_shift);
    rep.k0_ok = mutation_k_check(model, through, moved, shifted_result, side);
    if (cone_shift != 0)
      rep.notes.push_back("cone shift [" + std::to_string(cone_shift) +
                          "] normalized away in the stored collection");
    Collection out = c;
    if (side == Side::Left) {
      out.entries[i] = result;
      out.entries[i + 1] = a;
    } else {
      out.entries[i] = b;
      out.entries[i + 1] = result;
    }
    rep.after = out;
    rep.certified = rep.k0_ok;
    return {out, rep};
  }

  // -- Serre-functor shuttles -------------------------------------------------

  enum class End { Left, Right };

  /// Moves the end entry to the other end, twisting by omega (right to left)
  /// or omega^{-1} (left to right); omega = O(-2H-2h). Blocks move with a
  /// formal twist annotation.
  std::pair<Collection, StepReport> serre_shuttle(const Collection& c, End from) const {
    StepReport rep;
    rep.rule = "serre-shuttle";
    rep.before = c;
    if (c.entries.empty()) throw Error("serre_shuttle: empty collection");
    Collection out = c;
    if (from == End::Right) {
      FormalObject o = out.entries.back().twisted(-2, -2);
      out.entries.pop_back();
      out.entries.insert(out.entries.begin(), o);
      rep.notes.push_back("right end to left end, twisted by omega = O(-2H-2h)");
    } else {
      FormalObject o = out.entries.front().twisted(2, 2);
      out.entries.erase(out.entries.begin());
      out.entries.push_back(o);
      rep.notes.push_back("left end to right end, twisted by omega^{-1} = O(2H+2h)");
    }
    rep.after = out;
    rep.certified = true;  // no Hom table consumed, no cone formed
    return {out, rep};
  }

  /// Twists every object by O(da H + db h); blocks are annotated.
  Collection twist_all(const Collection& c, int da, int db) const {
    Collection out = c;
    for (auto& e : out.entries) e = e.twisted(da, db);
    return out;
  }

  // -- collection invariants ---------------------------------------------------

  /// Checks numerical semiorthogonality (all Homs from right to left vanish,
  /// where computable and exact) and exceptionality of every object entry.
  /// Returns a failure description, or nothing when all checks pass.
  std::optional<std::string> collection_violation(const Collection& c) const {
    for (std::size_t j = 0; j < c.entries.size(); ++j) {
      const FormalObject& ej = c.entries[j];
      if (ej.is_block()) continue;
      CohTable self = hom(ej, ej);
      if (!(self.exact && self.dims == std::map<int, long long>{{0, 1}}))
        return "entry " + ej.str() + " is not exceptional: " + self.str();
      for (std::size_t i = 0; i < j; ++i) {
        const FormalObject& ei = c.entries[i];
        if (ei.is_block()) continue;
        CohTable t = hom(ej, ei);
        if (t.exact && !t.empty())
          return "Hom(" + ej.str() + ", " + ei.str() + ") = " + t.str() + " != 0";
      }
    }
    return std::nullopt;
  }

 private:
  static void check_object_pair(const Collection& c, std::size_t i) {
    if (i + 1 >= c.entries.size()) throw Error("pair index out of range");
    if (c.entries[i].is_block() || c.entries[i + 1].is_block())
      throw Error("mutation through a block entry is not defined");
  }

  struct ConeResult {
    FormalObject object;
    int shift;
    std::string rule;
  };

  ConeResult evaluate_cone(const FormalObject& a, const FormalObject& b, Side side,
                           const CohTable& consumed) const {
    const auto [za, zb] = model.z;
    const CohTable k0 = single(0), k1 = single(1);
    if (a.kind == ObjKind::LineBundle && b.kind == ObjKind::LineBundle &&
        b.a - a.a == za && b.b - a.b == zb && consumed.same_dims(k0) && a.shift == 0 &&
        b.shift == 0) {
      // R1: the divisor section O(D2 - Z) -> O(D2)
      if (side == Side::Left) return {FormalObject::push_z(b.a, b.b), 0, "R1"};
      return {FormalObject::push_z(b.a, b.b), -1, "R1"};
    }
    if (a.kind == ObjKind::LineBundle && b.kind == ObjKind::PushZ && a.a == b.a &&
        a.b == b.b && a.shift == 0 && b.shift == 0 && consumed.same_dims(k0)) {
      // R2: canonical quotient O(D) -> i_*O_Z(D), cone O(D-Z)[1]
      if (side == Side::Right) return {FormalObject::line(a.a - za, a.b - zb), 0, "R2"};
      return {FormalObject::line(a.a - za, a.b - zb), 1, "R2"};
    }
    if (a.kind == ObjKind::PushZ && b.kind == ObjKind::LineBundle && a.a == b.a + za &&
        a.b == b.b + zb && a.shift == 0 && b.shift == 0 && consumed.same_dims(k1)) {
      // R3: extension 0 -> O(D) -> O(D+Z) -> i_*O_Z(D+Z) -> 0, either side
      return {FormalObject::line(a.a, a.b), 0, "R3"};
    }
    throw Error("cone not evaluable: no rule matches " + a.str() + ", " + b.str() +
                " with Hom " + consumed.str());
  }

  static CohTable single(int deg) {
    CohTable t;
    t.set(deg, 1);
    return t;
  }
};

// ---------------------------------------------------------------------------
// Replay of the eight-step mutation sequence

struct Figure1Result {
  std::vector<StepReport> steps;
  Collection initial, final_collection, expected;
  bool final_match = false;
  std::vector<HomRecord> quoted;  // the five displayed Hom computations

  bool all_certified() const {
    for (const auto& s : steps)
      if (!s.certified) return false;
    return true;
  }
};

inline Collection figure1_start() {
  Collection c;
  c.entries.push_back(FormalObject::block("B0"));
  for (auto [a, b] : {std::pair{0, -1}, {0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}, {1, 3}})
    c.entries.push_back(FormalObject::line(a, b));
  return c;
}

inline Collection figure1_expected() {
  // <i_*O_Z(2Z-2H), i_*O_Z(2Z-H), i_*O_Z(Z), i_*O_Z(Z+H), O, O(H), O(2H), O(3H)>
  // written in (H, h) coordinates via Z = H - h.
  Collection c;
  c.entries.push_back(FormalObject::block("B0"));
  for (auto [a, b] : {std::pair{0, -2}, {1, -2}, {1, -1}, {2, -1}})
    c.entries.push_back(FormalObject::push_z(a, b));
  for (auto [a, b] : {std::pair{0, 0}, {1, 0}, {2, 0}, {3, 0}})
    c.entries.push_back(FormalObject::line(a, b));
  return c;
}

/// The nine displayed rows of the summary figure (block leftmost), row k
/// being the collection after step k.
inline std::vector<Collection> figure1_rows() {
  auto L = [](int a, int b) { return FormalObject::line(a, b); };
  auto P = [](int a, int b) { return FormalObject::push_z(a, b); };
  std::vector<std::vector<FormalObject>> rows = {
      {L(0, -1), L(0, 0), L(0, 1), L(0, 2), L(1, 0), L(1, 1), L(1, 2), L(1, 3)},
      {L(-1, 0), L(-1, 1), L(0, -1), L(0, 0), L(0, 1), L(0, 2), L(1, 0), L(1, 1)},
      {L(-1, 0), L(0, -1), L(-1, 1), L(0, 0), L(0, 1), L(1, 0), L(0, 2), L(1, 1)},
      {L(0, -1), P(0, -1), L(0, 0), P(0, 0), P(1, 0), L(0, 1), P(1, 1), L(0, 2)},
      {P(0, -1), L(0, 0), P(0, 0), P(1, 0), L(0, 1), P(1, 1), L(0, 2), L(2, 1)},
      {P(0, -1), P(0, 0), L(-1, 1), P(1, 0), L(0, 1), L(1, 1), P(1, 1), L(2, 1)},
      {P(0, -1), P(0, 0), P(1, 0), L(-1, 1), L(0, 1), L(1, 1), L(2, 1), P(1, 1)},
      {P(-1, -1), P(0, -1), P(0, 0), P(1, 0), L(-1, 1), L(0, 1), L(1, 1), L(2, 1)},
      {P(0, -2), P(1, -2), P(1, -1), P(2, -1), L(0, 0), L(1, 0), L(2, 0), L(3, 0)}};
  std::vector<Collection> out;
  for (auto& r : rows) {
    Collection c;
    c.entries.push_back(FormalObject::block("B0"));
    for (auto& o : r) c.entries.push_back(o);
    out.push_back(c);
  }
  return out;
}

/// Runs the whole sequence, aborting on the first uncertified step; the
/// report of the failing step (with the offending Hom table) is last.
inline Figure1Result verify_figure1(const MutationEngine& eng) {
  Figure1Result res;
  Collection c = figure1_start();
  res.initial = c;
  res.expected = figure1_expected();

  // Block entries are positional placeholders; these moves record the block
  // mutations of the sequence without evaluating any Hom into the block.
  auto move_block = [](Collection col, std::size_t from, std::size_t to, const char* note) {
    FormalObject blk = col.entries[from];
    blk.block_notes.push_back(note);
    col.entries.erase(col.entries.begin() + static_cast<long>(from));
    col.entries.insert(col.entries.begin() + static_cast<long>(to), blk);
    return col;
  };

  auto finish_step = [&](int id, StepReport rep, const Collection& after,
                         const MutationEngine& e) {
    rep.step_id = id;
    rep.after = after;
    if (rep.certified) {
      if (auto viol = e.collection_violation(after)) {
        rep.certified = false;
        rep.notes.push_back("collection invariant violated: " + *viol);
      }
    }
    res.steps.push_back(std::move(rep));
    return res.steps.back().certified;
  };

  auto merge = [](StepReport& acc, const StepReport& part) {
    for (const auto& h : part.homs) acc.homs.push_back(h);
    for (const auto& n : part.notes) acc.notes.push_back(n);
    acc.k0_ok = acc.k0_ok && part.k0_ok;
    acc.certified = acc.certified && part.certified;
  };

  try {
    // Step 1: shuttle the two right-end objects to the far left, then move
    // the block back past them.
    {
      StepReport rep;
      rep.rule = "serre-shuttle x2 + block left-mutation";
      rep.before = c;
      rep.certified = true;
      auto [c1, r1] = eng.serre_shuttle(c, MutationEngine::End::Right);
      merge(rep, r1);
      auto [c2, r2] = eng.serre_shuttle(c1, MutationEngine::End::Right);
      merge(rep, r2);
      Collection c3 = move_block(c2, 2, 0, "L through <O(-H), O(-H+h)>");
      if (!finish_step(1, rep, c3, eng)) return res;
      c = c3;
    }

    // Step 2: transpose the completely orthogonal pairs.
    {
      StepReport rep;
      rep.rule = "transpose-orthogonal x2";
      rep.before = c;
      rep.certified = true;
      auto [c1, r1] = eng.transpose_orthogonal(c, 2);
      merge(rep, r1);
      auto [c2, r2] = eng.transpose_orthogonal(c1, 6);
      merge(rep, r2);
      rep.notes.push_back(
          "displayed direction: H^*(O(H-2h)) = 0; the reverse direction "
          "H^*(O(-H+2h)) = 0 is implicit in the text and verified here");
      res.quoted.push_back({"H^*(O(H-2h))", eng.hom(FormalObject::line(-1, 1),
                                                    FormalObject::line(0, -1))});
      if (!finish_step(2, rep, c2, eng)) return res;
      c = c2;
    }

    // Step 3: four divisor-section mutations produce the pushforwards.
    {
      StepReport rep;
      rep.rule = "cone-mutation x4";
      rep.before = c;
      rep.certified = true;
      Collection cur = c;
      for (auto [idx, side] : {std::pair<std::size_t, Side>{1, Side::Right},
                               {3, Side::Right},
                               {5, Side::Left},
                               {7, Side::Left}}) {
        auto [nxt, r] = eng.mutate_exceptional(cur, idx, side);
        merge(rep, r);
        cur = nxt;
      }
      res.quoted.push_back(
          {"H^*(O(H-h))", eng.hom(FormalObject::line(0, 1), FormalObject::line(1, 0))});
      if (!finish_step(3, rep, cur, eng)) return res;
      c = cur;
    }

    // Step 4: block right-mutation through O(-h), then shuttle O(-h) to the
    // far right.
    {
      StepReport rep;
      rep.rule = "block right-mutation + serre-shuttle";
      rep.before = c;
      rep.certified = true;
      Collection c1 = move_block(c, 0, 1, "R through O(-h)");
      auto [c2, r2] = eng.serre_shuttle(c1, MutationEngine::End::Left);
      merge(rep, r2);
      if (!finish_step(4, rep, c2, eng)) return res;
      c = c2;
    }

    // Step 5: restriction and ideal-sequence mutations.
    {
      StepReport rep;
      rep.rule = "cone-mutation x2";
      rep.before = c;
      rep.certified = true;
      auto [c1, r1] = eng.mutate_exceptional(c, 2, Side::Right);
      merge(rep, r1);
      auto [c2, r2] = eng.mutate_exceptional(c1, 6, Side::Left);
      merge(rep, r2);
      res.quoted.push_back(
          {"H^*(O_Z)", eng.hom(FormalObject::line(0, 0), FormalObject::push_z(0, 0))});
      res.quoted.push_back({"Hom(i_*O_Z(H+h), O(2h))",
                            eng.hom(FormalObject::push_z(1, 1), FormalObject::line(0, 2))});
      if (!finish_step(5, rep, c2, eng)) return res;
      c = c2;
    }

    // Step 6: transpose the completely orthogonal pairs.
    {
      StepReport rep;
      rep.rule = "transpose-orthogonal x2";
      rep.before = c;
      rep.certified = true;
      auto [c1, r1] = eng.transpose_orthogonal(c, 3);
      merge(rep, r1);
      auto [c2, r2] = eng.transpose_orthogonal(c1, 7);
      merge(rep, r2);
      res.quoted.push_back({"H^*(O_Z(2H-h))", eng.hom(FormalObject::line(-1, 1),
                                                      FormalObject::push_z(1, 0))});
      if (!finish_step(6, rep, c2, eng)) return res;
      c = c2;
    }

    // Step 7: shuttle i_*O_Z(H+h) to the far left, block moves back past it.
    {
      StepReport rep;
      rep.rule = "serre-shuttle + block left-mutation";
      rep.before = c;
      rep.certified = true;
      auto [c1, r1] = eng.serre_shuttle(c, MutationEngine::End::Right);
      merge(rep, r1);
      Collection c2 = move_block(c1, 1, 0, "L through i_*O_Z(-H-h)");
      if (!finish_step(7, rep, c2, eng)) return res;
      c = c2;
    }

    // Step 8: twist everything by O(H-h).
    {
      StepReport rep;
      rep.rule = "twist by O(H-h)";
      rep.before = c;
      rep.certified = true;
      Collection c1 = eng.twist_all(c, 1, -1);
      if (!finish_step(8, rep, c1, eng)) return res;
      c = c1;
    }
  } catch (const Error& err) {
    StepReport rep;
    rep.step_id = static_cast<int>(res.steps.size()) + 1;
    rep.rule = "aborted";
    rep.before = c;
    rep.after = c;
    rep.certified = false;
    rep.notes.push_back(err.what());
    res.steps.push_back(rep);
    res.final_collection = c;
    return res;
  }

  res.final_collection = c;
  res.final_match = (c == res.expected);
  return res;
}

// ---------------------------------------------------------------------------
// Divisor-ledger replay of the four-step sequence on the small resolution

/// Divisor class on the resolution in the lattice (H, Z', h); the relative
/// hyperplane class of the reduced bundle is xi = H - Z'.
struct HatDivisor {
  int H = 0, Zp = 0, h = 0;

  friend HatDivisor operator+(HatDivisor a, HatDivisor b) {
    return {a.H + b.H, a.Zp + b.Zp, a.h + b.h};
  }
  friend HatDivisor operator-(HatDivisor a, HatDivisor b) {
    return {a.H - b.H, a.Zp - b.Zp, a.h - b.h};
  }
  bool operator==(const HatDivisor& o) const { return H == o.H && Zp == o.Zp && h == o.h; }

  /// Restriction to the exceptional divisor Z', where H = h; coordinates
  /// (eta, Z'|) with eta the common restriction of H and h.
  std::pair<int, int> restrict_to_zp() const { return {H + h, Zp}; }

  std::string str() const {
    std::string s;
    auto term = [&](int c, const char* v) {
      if (c == 0) return;
      if (!s.empty() && c > 0) s += "+";
      if (c == -1)
        s += "-";
      else if (c != 1)
        s += std::to_string(c);
      s += v;
    };
    term(H, "H");
    term(Zp, "Z'");
    term(h, "h");
    return s.empty() ? "0" : s;
  }
};

inline const HatDivisor kXiDivisor{1, -1, 0};  // xi = H - Z'

/// One step of the ledger replay: the divisor arithmetic performed, the
/// recorded facts consumed (surfaced, never silent), and the resulting
/// decomposition pattern.
struct SpecialStep {
  int step_id = 0;
  std::string rule;
  std::string decomposition;
  std::vector<std::string> checks;
  std::vector<std::string> axioms;
  bool ok = false;
};

/// Replays the four mutations identifying the resolved component with the
/// derived category of the small resolution, in divisor-ledger mode on the
/// lattice (H, Z', h). Relative components over the base are defined up to
/// h-twists (pullbacks from the base absorb them). The K-group identities
/// of the two cone steps are verified exactly in the numeric model of the
/// resolution inside P(G), where Z' = H - xi and (H-h)(H-xi) = 0.
inline std::vector<SpecialStep> verify_special_steps() {
  std::vector<SpecialStep> out;
  Space xhat = build_space(SpaceName::Xhat);
  const RingPtr& R = xhat.ring;
  GradedClass Hc = R->var("H"), xic = R->var("xi"), hc = R->var("h");
  GradedClass zpc = Hc - xic;
  auto cls = [&](HatDivisor d) {
    return Rational(d.H) * Hc + Rational(d.Zp) * zpc + Rational(d.h) * hc;
  };
  auto push_ch = [&](HatDivisor d) {  // ch of i'_*O_{Z'}(d|), any lift d
    return exp_series(cls(d)) * (R->one() - exp_series(-zpc));
  };

  // -K_rel = -K + pullback of K_P3 = (H + xi + 2h) - 4h = 2H - Z' - 2h
  const HatDivisor minus_k_rel{2, -1, -2};

  {
    SpecialStep s;
    s.step_id = 0;
    s.rule = "setup";
    s.decomposition = "<P(.)⊗i_*O_Z'(Z'), Ku^, P(.)⊗O, P(.)⊗O(H)>";
    s.axioms.push_back(
        "AXIOM: pushforward of O_Z'(Z') to the base vanishes (gives the base-linear "
        "decomposition of D^b(Z') used by the setup)");
    s.checks.push_back("-K = 2H - Z' + 2h and xi = H - Z': " +
                       (-xhat.canonical_class == cls({2, -1, 2}) ? std::string("exact") :
                                                                   std::string("MISMATCH")));
    s.ok = (-xhat.canonical_class == cls({2, -1, 2}));
    out.push_back(s);
  }

  {
    SpecialStep s;
    s.step_id = 1;
    s.rule = "serre-shuttle of the pushforward component to the far right";
    HatDivisor start{0, 1, 0};  // O_Z'(Z')
    HatDivisor twisted = start + minus_k_rel;
    auto [eta, zp] = twisted.restrict_to_zp();
    s.checks.push_back("(Z' + (" + minus_k_rel.str() + "))|_Z' = " + std::to_string(zp) +
                       "Z'| + " + std::to_string(eta) + "eta (H = h on Z')");
    s.ok = (eta == 0 && zp == 0);
    s.decomposition = "<Ku^, P(.)⊗O, P(.)⊗O(H), P(.)⊗i_*O_Z'>";
    out.push_back(s);
  }

  {
    SpecialStep s;
    s.step_id = 2;
    s.rule = "right mutation of O(H) through i_*O_Z'";
    s.axioms.push_back("AXIOM: pushforward of i_*O_Z'(-h) to the base is O(-h)[0]");
    HatDivisor result = HatDivisor{1, 0, 0} - HatDivisor{0, 1, 0};  // H - Z'
    bool lattice_ok = (result == kXiDivisor);
    s.checks.push_back("H - Z' = xi: " + std::string(lattice_ok ? "exact" : "MISMATCH"));
    // K-group shadow: [O(xi)] = [O(H)] - [i_*O_Z'(h)] in the numeric model
    GradedClass lhs = exp_series(cls(kXiDivisor));
    GradedClass rhs = exp_series(cls({1, 0, 0})) - push_ch({0, 0, 1});
    bool k_ok = (lhs == rhs);
    s.checks.push_back(std::string("K-group check [O(xi)] = [O(H)] - [i_*O_Z'(h)]: ") +
                       (k_ok ? "exact" : "MISMATCH"));
    s.ok = lattice_ok && k_ok;
    s.decomposition = "<Ku^, P(.)⊗O, P(.)⊗i_*O_Z', P(.)⊗O(xi)>";
    out.push_back(s);
  }

  {
    SpecialStep s;
    s.step_id = 3;
    s.rule = "left mutation of i_*O_Z' through O";
    s.axioms.push_back("AXIOM: pushforward of O_Z' to the base is O[0]");
    // cone O -> i_*O_Z' is O(-Z')[1]; normalized to O(-Z')
    GradedClass lhs = -exp_series(cls({0, -1, 0}));
    GradedClass rhs = push_ch({0, 0, 0}) - R->one();
    bool k_ok = (lhs == rhs);
    s.checks.push_back(std::string("K-group check [O(-Z')[1]] = [i_*O_Z'] - [O]: ") +
                       (k_ok ? "exact" : "MISMATCH"));
    s.checks.push_back("cone shift [1] normalized away in the stored pattern");
    s.ok = k_ok;
    s.decomposition = "<Ku^, P(.)⊗O(-Z'), P(.)⊗O, P(.)⊗O(xi)>";
    out.push_back(s);
  }

  {
    SpecialStep s;
    s.step_id = 4;
    s.rule = "block mutation through O(-Z'), then serre-shuttle of O(-Z') to the far right";
    HatDivisor shuttled = HatDivisor{0, -1, 0} + minus_k_rel;
    HatDivisor two_xi = kXiDivisor + kXiDivisor;
    bool lattice_ok = (shuttled == two_xi + HatDivisor{0, 0, -2});
    s.checks.push_back("-Z' + (" + minus_k_rel.str() + ") = " + shuttled.str() + " = 2xi - 2h: " +
                       (lattice_ok ? "exact" : "MISMATCH"));
    s.checks.push_back(
        "h-twist absorbed into the base-linear component: O(2xi-2h) ~ O(2xi)");
    s.ok = lattice_ok;
    s.decomposition = "<R(Ku^), P(.)⊗O, P(.)⊗O(xi), P(.)⊗O(2xi)>";
    out.push_back(s);
  }

  return out;
}

}  // namespace qdf
