#include <sstream>

#include "doctest.h"
#include "qdf/discriminant.hpp"

using namespace qdf;

TEST_CASE("symbolic determinant identity and sign") {
  SymbolicForm f = SymbolicForm::make();
  GradedClass det = f.determinant();
  // degree 8 homogeneous
  CHECK(det == det.degree_part(8));
  // -4 det(A) = -(displayed octic): the recorded global sign is -1
  CHECK(Rational(-4) * det == -f.displayed_octic());
  CHECK(det_identity().status == Status::Pass);
}

TEST_CASE("diagonal instance pins the sign") {
  std::array<std::array<Rational, 4>, 4> m{};
  m[0][0] = -1;
  m[1][1] = 1;
  m[2][2] = 1;
  m[3][3] = 1;
  CHECK(det4(m) == -1);
  // all-zero matrix
  std::array<std::array<Rational, 4>, 4> z{};
  CHECK(det4(z) == 0);
  // symbolic determinant evaluated at the diagonal assignment
  SymbolicForm f = SymbolicForm::make();
  long long v = eval_mod_p(f.determinant(), {1, 0, 1, 0, 0, 1}, 7);
  CHECK(v == fp_norm(-1, 7));
}

TEST_CASE("congruence invariance of the symbolic determinant") {
  SymbolicForm f = SymbolicForm::make();
  GradedClass det = f.determinant();
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 5; ++trial) {
    // random unimodular integer matrix as a product of elementary operations
    std::array<std::array<Rational, 4>, 4> p{};
    for (int i = 0; i < 4; ++i) p[i][i] = 1;
    for (int ops = 0; ops < 6; ++ops) {
      int i = static_cast<int>(rng() % 4), j = static_cast<int>(rng() % 4);
      long long c = static_cast<long long>(rng() % 3) - 1;
      if (i == j) continue;
      for (int k = 0; k < 4; ++k) p[i][k] += Rational(c) * p[j][k];
    }
    std::array<std::array<GradedClass, 4>, 4> conj{};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        GradedClass s = f.ring->zero();
        for (int k = 0; k < 4; ++k)
          for (int l = 0; l < 4; ++l) s = s + p[i][k] * p[j][l] * f.a[k][l];
        conj[i][j] = s;
      }
    CHECK(det4(conj) == det);
  }
}

TEST_CASE("isotropy of the two sections") {
  CHECK(isotropy_check().status == Status::Pass);
  // negative control: v = (0,0,0,1) pairs to q^2 != 0
  SymbolicForm f = SymbolicForm::make();
  GradedClass q = f.ring->var("q");
  CHECK(f.a[3][3] == q * q);
}

TEST_CASE("finite field utilities") {
  CHECK(fp_inv(3, 7) == 5);
  CHECK(fp_norm(-1, 7) == 6);
  CHECK(monomials_of_degree(2).size() == 10);
  CHECK(monomials_of_degree(3).size() == 20);
  CHECK(proj3_points(7).size() == 400);
  // rank of a diagonal matrix
  CHECK(fp_rank({{1, 0}, {0, 1}}, 7) == 2);
  CHECK(fp_rank({{1, 2}, {2, 4}}, 7) == 1);
}

TEST_CASE("FpPoly evaluation and derivative") {
  // f = y0^2 + 3 y1 y3 over F_7
  FpPoly f = FpPoly::from_coeffs(7, 2, {1, 0, 0, 0, 0, 0, 3, 0, 0, 0});
  CHECK(f.eval({1, 0, 0, 0}) == 1);
  CHECK(f.eval({0, 1, 0, 1}) == 3);
  CHECK(f.eval({2, 1, 0, 1}) == 0);  // 4 + 3 = 0 mod 7
  FpPoly d0 = f.partial(0);
  CHECK(d0.eval({1, 0, 0, 0}) == 2);
  FpPoly d3 = f.partial(3);
  CHECK(d3.eval({0, 1, 0, 0}) == 3);
}

TEST_CASE("seeded instance is deterministic and well-formed") {
  FiniteFieldInstance a = make_instance(7, 0);
  FiniteFieldInstance b = make_instance(7, 0);
  CHECK(a.q.coeffs() == b.q.coeffs());
  CHECK(a.a1.coeffs() == b.a1.coeffs());
  CHECK(fp_rank(gram_of_quadric(a.q), 7) == 4);
  // the construction plants rational points on V(a1, a2, q)
  long long common = 0;
  for (const auto& y : proj3_points(7))
    if (a.q.eval(y) == 0 && a.a1.eval(y) == 0 && a.a2.eval(y) == 0) ++common;
  CHECK(common >= 3);
  CHECK_THROWS_AS(make_instance(17, 0), Error);
}

TEST_CASE("instance file round trip") {
  FiniteFieldInstance a = make_instance(7, 3);
  std::string text = serialize_instance(a);
  std::istringstream in(text);
  FiniteFieldInstance b = parse_instance(in);
  CHECK(a.p == b.p);
  CHECK(a.b11.coeffs() == b.b11.coeffs());
  CHECK(a.b12.coeffs() == b.b12.coeffs());
  CHECK(a.b22.coeffs() == b.b22.coeffs());
  CHECK(a.a1.coeffs() == b.a1.coeffs());
  CHECK(a.a2.coeffs() == b.a2.coeffs());
  CHECK(a.q.coeffs() == b.q.coeffs());
  std::istringstream bad("beta11 = 1 2 3\n");
  CHECK_THROWS_AS(parse_instance(bad), Error);
}

TEST_CASE("node geometry over F_7, seed 0") {
  FiniteFieldInstance inst = make_instance(7, 0);
  auto reports = finite_field_nodes(inst);
  REQUIRE(reports.size() == 5);
  for (const auto& r : reports) CHECK(r.status == Status::Pass);
}

TEST_CASE("degenerate control: cubics identically zero") {
  // with a1 = a2 = 0 the whole quadric V(q) consists of singular points of
  // the octic (which degenerates to -q^2 (4 b11 b22 - b12^2) / 4)
  FiniteFieldInstance inst = make_instance(7, 0);
  inst.a1 = FpPoly::from_coeffs(7, 3, std::vector<long long>(20, 0));
  inst.a2 = FpPoly::from_coeffs(7, 3, std::vector<long long>(20, 0));
  SymbolicForm f = SymbolicForm::make();
  GradedClass det = f.determinant();
  std::vector<GradedClass> partials;
  for (std::size_t v = 0; v < 6; ++v) partials.push_back(derivative(det, v));
  std::array<const FpPoly*, 6> polys = {&inst.b11, &inst.b12, &inst.b22,
                                        &inst.a1, &inst.a2, &inst.q};
  long long on_q = 0, singular = 0;
  for (const auto& y : proj3_points(7)) {
    if (inst.q.eval(y) != 0) continue;
    ++on_q;
    std::vector<long long> vals;
    for (const auto* poly : polys) vals.push_back(poly->eval(y));
    bool sing = (eval_mod_p(det, vals, 7) == 0);
    for (int j = 0; j < 4 && sing; ++j) {
      long long d = 0;
      for (std::size_t v = 0; v < 6; ++v)
        d = (d + eval_mod_p(partials[v], vals, 7) * polys[v]->partial(j).eval(y)) % 7;
      sing = (d == 0);
    }
    if (sing) ++singular;
  }
  CHECK(on_q > 0);
  CHECK(on_q == singular);
}
