#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "qdf/rational.hpp"
#include "qdf/splits.hpp"

namespace qdf {

/// Finite cohomology table {degree -> dimension}. `exact` is false only when
/// an unresolved connecting map makes the table an upper bound.
struct CohTable {
  std::map<int, long long> dims;
  bool exact = true;

  void set(int deg, long long dim) {
    if (dim < 0) throw Error("negative dimension");
    if (dim != 0) dims[deg] = dim;
  }

  long long dim(int deg) const {
    auto it = dims.find(deg);
    return it == dims.end() ? 0 : it->second;
  }

  bool empty() const { return dims.empty(); }

  long long alternating_sum() const {
    long long s = 0;
    for (const auto& [d, n] : dims) s += (d % 2 == 0 ? n : -n);
    return s;
  }

  CohTable shifted_keys(int by) const {
    CohTable t;
    t.exact = exact;
    for (const auto& [d, n] : dims) t.dims[d + by] = n;
    return t;
  }

  friend CohTable direct_sum(const CohTable& a, const CohTable& b) {
    CohTable t;
    t.exact = a.exact && b.exact;
    t.dims = a.dims;
    for (const auto& [d, n] : b.dims) t.dims[d] += n;
    return t;
  }

  friend CohTable kunneth(const CohTable& a, const CohTable& b) {
    CohTable t;
    t.exact = a.exact && b.exact;
    for (const auto& [da, na] : a.dims)
      for (const auto& [db, nb] : b.dims) t.dims[da + db] += na * nb;
    return t;
  }

  bool operator==(const CohTable& o) const { return dims == o.dims && exact == o.exact; }
  bool operator!=(const CohTable& o) const { return !(*this == o); }
  bool same_dims(const CohTable& o) const { return dims == o.dims; }

  std::string str() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [d, n] : dims) {
      if (!first) os << ", ";
      first = false;
      os << d << ":" << n;
    }
    os << "}";
    if (!exact) os << " (upper bound)";
    return os.str();
  }
};

inline long long binom(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Bott's formula for O(k) on P^n.
inline CohTable coh_Pn(int n, int k) {
  if (n < 1) throw Error("coh_Pn: n must be >= 1");
  CohTable t;
  if (k >= 0)
    t.set(0, binom(n + k, n));
  else if (k <= -n - 1)
    t.set(n, binom(-k - 1, n));
  return t;
}

/// O(a) ⊠ O(b) on P1 x P3 by Kunneth.
inline CohTable coh_product(int a, int b) { return kunneth(coh_Pn(1, a), coh_Pn(3, b)); }

/// O(mH) on the double cover X -> P5 branched along a quartic:
/// the pushforward splits as O(m) ⊕ O(m-2).
inline CohTable coh_X5(int m) { return direct_sum(coh_Pn(5, m), coh_Pn(5, m - 2)); }

namespace detail {

/// Cohomology of O(aH + bh) on the projective bundle P(W) -> P3 for a split
/// bundle W (lines convention: pushforward of O(aH) is Sym^a(W^dual) for
/// a >= 0). For -(r-1) <= a <= -1 everything vanishes; below that relative
/// Serre duality gives R^{r-1} pushforward Sym^{-a-r}(W) ⊗ O(c1(W)).
inline CohTable coh_proj_bundle(const std::vector<int>& w_degrees, int a, int b) {
  const int r = static_cast<int>(w_degrees.size());
  CohTable t;
  if (a >= 0) {
    Summands w;
    for (int d : w_degrees) w.push_back({-d});
    for (const auto& d : sym_power(w, a)) t = direct_sum(t, coh_Pn(3, d[0] + b));
    return t;
  }
  if (a >= -(r - 1)) return t;
  int c1 = 0;
  Summands w;
  for (int d : w_degrees) {
    c1 += d;
    w.push_back({d});
  }
  for (const auto& d : sym_power(w, -a - r)) t = direct_sum(t, coh_Pn(3, d[0] + b + c1));
  return t.shifted_keys(r - 1);
}

}  // namespace detail

/// O(aH + bh) on the blow-up of P5 along the line, as P(F) -> P3 with
/// F = O ⊕ O ⊕ O(-h).
inline CohTable coh_PF(int a, int b) { return detail::coh_proj_bundle({0, 0, -1}, a, b); }

/// O(aH + bh) on P(E) -> P3 with E = O(-h) ⊕ O ⊕ O ⊕ O(h).
inline CohTable coh_PE(int a, int b) { return detail::coh_proj_bundle({-1, 0, 0, 1}, a, b); }

/// O(aH + bh) on the blown-up double cover: the pushforward to the blow-up
/// splits as O(aH+bh) ⊕ O((a-1)H + (b-1)h).
inline CohTable coh_Xt(int a, int b) { return direct_sum(coh_PF(a, b), coh_PF(a - 1, b - 1)); }

/// O(aH + bh) on the exceptional divisor Z, a double cover of L x P3
/// branched in 2H + 2h; restriction is H -> (1,0), h -> (0,1).
inline CohTable coh_Z(int a, int b) { return direct_sum(coh_product(a, b), coh_product(a - 1, b - 1)); }

// ---------------------------------------------------------------------------
// Formal objects

enum class ObjKind { LineBundle, PushZ, Block };

/// The object language of the mutation calculus on the blown-up double
/// cover: line bundles O(aH+bh), pushforwards i_*O_Z(aH+bh) from the
/// exceptional divisor, shifts of these, and opaque category blocks.
struct FormalObject {
  ObjKind kind = ObjKind::LineBundle;
  int a = 0, b = 0;
  int shift = 0;
  std::string block_name;
  std::vector<std::string> block_notes;  // formal twist annotations, not part of identity

  static FormalObject line(int a, int b) {
    FormalObject o;
    o.kind = ObjKind::LineBundle;
    o.a = a;
    o.b = b;
    return o;
  }
  static FormalObject push_z(int a, int b) {
    FormalObject o;
    o.kind = ObjKind::PushZ;
    o.a = a;
    o.b = b;
    return o;
  }
  static FormalObject block(std::string name) {
    FormalObject o;
    o.kind = ObjKind::Block;
    o.block_name = std::move(name);
    return o;
  }

  bool is_block() const { return kind == ObjKind::Block; }

  FormalObject shifted(int n) const {
    FormalObject o = *this;
    o.shift += n;  // shifts compose additively
    return o;
  }

  FormalObject twisted(int da, int db) const {
    FormalObject o = *this;
    if (is_block()) {
      if (da != 0 || db != 0)
        o.block_notes.push_back("twist(" + std::to_string(da) + "," + std::to_string(db) + ")");
      return o;
    }
    o.a += da;
    o.b += db;
    return o;
  }

  bool operator==(const FormalObject& o) const {
    if (kind != o.kind || shift != o.shift) return false;
    if (kind == ObjKind::Block) return block_name == o.block_name;
    return a == o.a && b == o.b;
  }
  bool operator!=(const FormalObject& o) const { return !(*this == o); }

  std::string str() const {
    auto fmt_div = [](int a, int b) {
      if (a == 0 && b == 0) return std::string();
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
      term(a, "H");
      term(b, "h");
      return s;
    };
    std::string s;
    switch (kind) {
      case ObjKind::LineBundle: {
        std::string d = fmt_div(a, b);
        s = d.empty() ? "O" : "O(" + d + ")";
        break;
      }
      case ObjKind::PushZ: {
        std::string d = fmt_div(a, b);
        s = d.empty() ? "i_*O_Z" : "i_*O_Z(" + d + ")";
        break;
      }
      case ObjKind::Block: s = "[" + block_name + "]"; break;
    }
    if (shift != 0) s += "[" + std::to_string(shift) + "]";
    return s;
  }
};

/// Exactness rule for the (PushZ, PushZ) case: the connecting map sends
/// H^{k-1}(O_Z(delta+Z)) to H^{k+1}(O_Z(delta)), so cancellation is possible
/// only when the shifted second table and the first occupy adjacent Ext
/// degrees. `t2_shifted` already carries its keys in Ext degrees.
inline bool pushforward_pair_exact(const CohTable& t1, const CohTable& t2_shifted) {
  for (const auto& [d, n] : t2_shifted.dims)
    if (n > 0 && t1.dim(d + 1) > 0) return false;
  return true;
}

/// Ext table Hom^*(src, dst) between formal objects on the blown-up double
/// cover. `z` is the divisor class of the exceptional divisor in (H, h)
/// coordinates; its restriction to Z equals z itself under H -> (1,0),
/// h -> (0,1).
///
/// The (PushZ, PushZ) case combines H^*(O_Z(delta)) with
/// H^{*-1}(O_Z(delta + Z)); the table is exact only when the connecting map
/// cannot be nonzero (pushforward_pair_exact above).
inline CohTable hom_table(const FormalObject& src, const FormalObject& dst,
                          std::pair<int, int> z = {1, -1}) {
  if (src.is_block() || dst.is_block()) throw Error("not computable: opaque block");
  const int da = dst.a - src.a;
  const int db = dst.b - src.b;
  CohTable t;
  if (src.kind == ObjKind::LineBundle && dst.kind == ObjKind::LineBundle) {
    t = coh_Xt(da, db);
  } else if (src.kind == ObjKind::LineBundle && dst.kind == ObjKind::PushZ) {
    t = coh_Z(da, db);
  } else if (src.kind == ObjKind::PushZ && dst.kind == ObjKind::LineBundle) {
    t = coh_Z(da + z.first, db + z.second).shifted_keys(1);
  } else {
    CohTable t1 = coh_Z(da, db);
    CohTable t2 = coh_Z(da + z.first, db + z.second).shifted_keys(1);
    t = direct_sum(t1, t2);
    t.exact = pushforward_pair_exact(t1, t2);
  }
  return t.shifted_keys(src.shift - dst.shift);
}

}  // namespace qdf
