#pragma once

#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qdf/rational.hpp"

namespace qdf {

/// Exponent vector, one entry per ring variable.
using Monomial = std::vector<int>;

using TermMap = std::map<Monomial, Rational>;

class GradedClass;

/// Commutative polynomial ring with exact rational coefficients, a positive
/// degree per variable, truncation above a fixed total degree, and rewrite
/// rules of the restricted shape
///
///     var^power  ->  polynomial in variables of index <= var,
///                    with exponent of var strictly below power.
///
/// The rule left-hand sides are pairwise coprime pure powers, so rewriting
/// is confluent and terminating (lexicographic descent on exponents taken in
/// decreasing variable-index order); reduced term maps are canonical forms
/// and map equality is equality in the quotient ring.
class GradedRing : public std::enable_shared_from_this<GradedRing> {
 public:
  struct Variable {
    std::string name;
    int degree;
  };

  struct Rule {
    std::size_t var;
    int power;
    TermMap rhs;
  };

  static std::shared_ptr<GradedRing> make(std::vector<Variable> vars, int truncation) {
    auto ring = std::shared_ptr<GradedRing>(new GradedRing);
    for (const auto& v : vars)
      if (v.degree <= 0) throw Error("variable degree must be positive: " + v.name);
    ring->vars_ = std::move(vars);
    ring->truncation_ = truncation;
    return ring;
  }

  std::size_t nvars() const { return vars_.size(); }
  int truncation() const { return truncation_; }
  const std::vector<Variable>& variables() const { return vars_; }

  std::size_t var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i].name == name) return i;
    throw Error("unknown ring variable: " + name);
  }

  int weighted_degree(const Monomial& m) const {
    int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * vars_[i].degree;
    return d;
  }

  // Element constructors and arithmetic are defined after GradedClass.
  GradedClass zero() const;
  GradedClass one() const;
  GradedClass scalar(const Rational& c) const;
  GradedClass var(const std::string& name) const;
  GradedClass monomial(const Monomial& m, const Rational& coeff) const;
  GradedClass from_terms(TermMap raw) const;

  /// Re-interpret a class from another ring in this one, matching variables
  /// by name. Every variable used in `other` must exist here.
  GradedClass embed(const GradedClass& other) const;

  void add_rule(const std::string& name, int power, const GradedClass& rhs);

  /// Adds c * m, reduced modulo rules and truncation, into acc.
  void reduce_into(TermMap& acc, const Monomial& m, const Rational& c) const {
    if (c == 0) return;
    if (weighted_degree(m) > truncation_) return;
    for (const auto& rule : rules_) {
      if (m[rule.var] >= rule.power) {
        Monomial rest = m;
        rest[rule.var] -= rule.power;
        for (const auto& [rm, rc] : rule.rhs) {
          Monomial prod(rest);
          for (std::size_t i = 0; i < prod.size(); ++i) prod[i] += rm[i];
          reduce_into(acc, prod, c * rc);
        }
        return;
      }
    }
    auto it = acc.find(m);
    if (it == acc.end()) {
      acc.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) acc.erase(it);
    }
  }

 private:
  GradedRing() = default;
  std::vector<Variable> vars_;
  int truncation_ = 0;
  std::vector<Rule> rules_;
};

using RingPtr = std::shared_ptr<const GradedRing>;

/// Element of a GradedRing: a reduced term map with no zero coefficients.
/// Values are immutable after construction; all operations are pure.
class GradedClass {
 public:
  GradedClass() = default;  // detached null value, only for containers

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Rational constant_term() const { return coefficient(Monomial(ring_->nvars(), 0)); }

  /// Sum of the terms of total weighted degree k.
  GradedClass degree_part(int k) const {
    TermMap out;
    for (const auto& [m, c] : terms_)
      if (ring_->weighted_degree(m) == k) out.emplace(m, c);
    return GradedClass(ring_, std::move(out));
  }

  int max_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, ring_->weighted_degree(m));
    return d;
  }

  /// Smallest degree of a nonzero term; truncation+1 when zero.
  int min_degree() const {
    int d = ring_->truncation() + 1;
    for (const auto& [m, c] : terms_) d = std::min(d, ring_->weighted_degree(m));
    return d;
  }

  friend GradedClass operator+(const GradedClass& a, const GradedClass& b) {
    check_same_ring(a, b);
    TermMap out = a.terms_;
    for (const auto& [m, c] : b.terms_) {
      auto it = out.find(m);
      if (it == out.end()) {
        out.emplace(m, c);
      } else {
        it->second += c;
        if (it->second == 0) out.erase(it);
      }
    }
    return GradedClass(a.ring_, std::move(out));
  }

  friend GradedClass operator-(const GradedClass& a, const GradedClass& b) { return a + (-b); }

  GradedClass operator-() const {
    TermMap out;
    for (const auto& [m, c] : terms_) out.emplace(m, -c);
    return GradedClass(ring_, std::move(out));
  }

  friend GradedClass operator*(const GradedClass& a, const GradedClass& b) {
    check_same_ring(a, b);
    TermMap out;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m(ma);
        for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
        a.ring_->reduce_into(out, m, ca * cb);
      }
    }
    return GradedClass(a.ring_, std::move(out));
  }

  friend GradedClass operator*(const Rational& c, const GradedClass& a) {
    if (c == 0) return GradedClass(a.ring_, {});
    TermMap out;
    for (const auto& [m, t] : a.terms_) out.emplace(m, c * t);
    return GradedClass(a.ring_, std::move(out));
  }

  friend GradedClass operator*(const GradedClass& a, const Rational& c) { return c * a; }

  GradedClass pow(int k) const {
    if (k < 0) throw Error("negative power");
    GradedClass r = ring_->one();
    for (int i = 0; i < k; ++i) r = r * (*this);
    return r;
  }

  bool operator==(const GradedClass& o) const {
    return ring_ == o.ring_ && terms_ == o.terms_;
  }
  bool operator!=(const GradedClass& o) const { return !(*this == o); }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      Rational a = c;
      if (!first) {
        os << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
      } else if (a < 0) {
        os << "-";
        a = -a;
      }
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += ring_->variables()[i].name;
        if (m[i] > 1) mono += "^" + std::to_string(m[i]);
      }
      if (mono.empty()) {
        os << to_string(a);
      } else {
        if (a != 1) os << to_string(a) << "*";
        os << mono;
      }
    }
    return os.str();
  }

 private:
  friend class GradedRing;
  GradedClass(RingPtr ring, TermMap terms) : ring_(std::move(ring)), terms_(std::move(terms)) {}

  static void check_same_ring(const GradedClass& a, const GradedClass& b) {
    if (a.ring_ != b.ring_) throw Error("ring mismatch");
  }

  RingPtr ring_;
  TermMap terms_;
};

inline GradedClass GradedRing::zero() const { return GradedClass(shared_from_this(), {}); }

inline GradedClass GradedRing::one() const { return scalar(1); }

inline GradedClass GradedRing::scalar(const Rational& c) const {
  TermMap out;
  if (c != 0) out.emplace(Monomial(nvars(), 0), c);
  return GradedClass(shared_from_this(), std::move(out));
}

inline GradedClass GradedRing::var(const std::string& name) const {
  Monomial m(nvars(), 0);
  m[var_index(name)] = 1;
  return monomial(m, 1);
}

inline GradedClass GradedRing::monomial(const Monomial& m, const Rational& coeff) const {
  if (m.size() != nvars()) throw Error("monomial size mismatch");
  TermMap out;
  reduce_into(out, m, coeff);
  return GradedClass(shared_from_this(), std::move(out));
}

inline GradedClass GradedRing::from_terms(TermMap raw) const {
  TermMap out;
  for (const auto& [m, c] : raw) {
    if (m.size() != nvars()) throw Error("monomial size mismatch");
    reduce_into(out, m, c);
  }
  return GradedClass(shared_from_this(), std::move(out));
}

inline GradedClass GradedRing::embed(const GradedClass& other) const {
  if (!other.ring()) throw Error("embed of detached class");
  std::vector<std::size_t> map;
  for (const auto& v : other.ring()->variables()) map.push_back(var_index(v.name));
  TermMap out;
  for (const auto& [m, c] : other.terms()) {
    Monomial n(nvars(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) n[map[i]] += m[i];
    reduce_into(out, n, c);
  }
  return from_terms(std::move(out));
}

inline void GradedRing::add_rule(const std::string& name, int power, const GradedClass& rhs) {
  if (rhs.ring().get() != this) throw Error("rule replacement from a different ring");
  std::size_t vi = var_index(name);
  if (power <= 0) throw Error("rule power must be positive");
  Monomial lhs(nvars(), 0);
  lhs[vi] = power;
  int lhs_deg = weighted_degree(lhs);
  for (const auto& [m, c] : rhs.terms()) {
    if (m[vi] >= power) throw Error("rule replacement not reduced in " + name);
    for (std::size_t j = vi + 1; j < nvars(); ++j)
      if (m[j] != 0) throw Error("rule replacement uses higher-precedence variable");
    if (weighted_degree(m) > lhs_deg) throw Error("rule raises degree");
  }
  rules_.push_back(Rule{vi, power, rhs.terms()});
}

/// exp(a) = sum a^k / k!, truncated. Requires zero constant term, so the sum
/// is finite: a^k vanishes for k beyond the truncation degree.
inline GradedClass exp_series(const GradedClass& a) {
  if (a.constant_term() != 0) throw Error("exp_series: nonzero constant term");
  GradedClass sum = a.ring()->one();
  GradedClass p = a.ring()->one();
  int top = a.ring()->truncation();
  for (int k = 1; k <= top; ++k) {
    p = p * a;
    if (p.is_zero()) break;
    sum = sum + Rational(1) / factorial(k) * p;
  }
  return sum;
}

/// Multiplicative inverse of a series with constant term 1:
/// 1/(1+n) = sum (-n)^k with n nilpotent in the truncated ring.
inline GradedClass invert_series(const GradedClass& a) {
  if (a.constant_term() != 1) throw Error("invert_series: constant term is not 1");
  GradedClass n = a - a.ring()->one();
  GradedClass sum = a.ring()->one();
  GradedClass p = a.ring()->one();
  int top = a.ring()->truncation();
  for (int k = 1; k <= top; ++k) {
    p = p * (-n);
    if (p.is_zero()) break;
    sum = sum + p;
  }
  return sum;
}

/// Evaluate `src` with each variable replaced by the given image (all images
/// in the target ring, one per variable of src's ring).
inline GradedClass substitute(const GradedClass& src, const std::vector<GradedClass>& images,
                              const RingPtr& target) {
  if (images.size() != src.ring()->nvars()) throw Error("substitute: image count mismatch");
  for (const auto& g : images)
    if (g.ring() != target) throw Error("substitute: image in wrong ring");
  GradedClass out = target->zero();
  for (const auto& [m, c] : src.terms()) {
    GradedClass t = target->scalar(c);
    for (std::size_t i = 0; i < m.size(); ++i)
      for (int e = 0; e < m[i]; ++e) t = t * images[i];
    out = out + t;
  }
  return out;
}

/// Formal partial derivative with respect to one variable.
inline GradedClass derivative(const GradedClass& a, std::size_t var) {
  TermMap out;
  for (const auto& [m, c] : a.terms()) {
    if (m[var] == 0) continue;
    Monomial n = m;
    n[var] -= 1;
    a.ring()->reduce_into(out, n, c * m[var]);
  }
  return a.ring()->from_terms(std::move(out));
}

}  // namespace qdf
