#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "qdf/rational.hpp"

namespace qdf {

/// Multidegree of a line-bundle summand: one integer per divisor-class
/// generator of the ambient space.
using Multidegree = std::vector<int>;

/// Formal list of line-bundle multidegrees (a split bundle, order-insensitive).
using Summands = std::vector<Multidegree>;

inline Multidegree md_add(const Multidegree& a, const Multidegree& b) {
  Multidegree r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

inline Summands dual(const Summands& v) {
  Summands r;
  for (const auto& d : v) {
    Multidegree n(d);
    for (auto& x : n) x = -x;
    r.push_back(n);
  }
  return r;
}

inline Summands twist(const Summands& v, const Multidegree& t) {
  Summands r;
  for (const auto& d : v) r.push_back(md_add(d, t));
  return r;
}

inline Summands tensor(const Summands& a, const Summands& b) {
  Summands r;
  for (const auto& x : a)
    for (const auto& y : b) r.push_back(md_add(x, y));
  return r;
}

/// Sym^m of a split bundle: sums over index multisets i1 <= ... <= im.
inline Summands sym_power(const Summands& v, int m) {
  if (m < 0) throw Error("sym_power: negative exponent");
  Summands out;
  if (v.empty()) {
    if (m == 0) out.push_back(Multidegree{});
    return out;
  }
  std::vector<std::size_t> idx;
  Multidegree zero(v[0].size(), 0);
  auto rec = [&](auto&& self, std::size_t start, int left, const Multidegree& acc) -> void {
    if (left == 0) {
      out.push_back(acc);
      return;
    }
    for (std::size_t i = start; i < v.size(); ++i) self(self, i, left - 1, md_add(acc, v[i]));
  };
  rec(rec, 0, m, zero);
  return out;
}

inline Summands sym2(const Summands& v) { return sym_power(v, 2); }

/// Lambda^2 of a split bundle: sums over index pairs i < j.
inline Summands lambda2(const Summands& v) {
  Summands out;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) out.push_back(md_add(v[i], v[j]));
  return out;
}

/// Traceless endomorphisms (V^dual ⊗ V)_0: the full tensor square minus one
/// trivial summand (the image of the identity).
inline Summands traceless_endos(const Summands& v) {
  Summands full = tensor(dual(v), v);
  Multidegree zero(v.empty() ? Multidegree{} : Multidegree(v[0].size(), 0));
  auto it = std::find(full.begin(), full.end(), zero);
  if (it == full.end()) throw Error("traceless_endos: no trivial summand found");
  full.erase(it);
  return full;
}

inline Multidegree total_degree(const Summands& v) {
  if (v.empty()) return {};
  Multidegree t(v[0].size(), 0);
  for (const auto& d : v) t = md_add(t, d);
  return t;
}

/// Sorted copy, for order-insensitive comparison of summand lists.
inline Summands sorted(Summands v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace qdf
