#include "doctest.h"
#include "qdf/localgeom.hpp"

using namespace qdf;

TEST_CASE("coordinate change is an exact polynomial identity") {
  CHECK(coordinate_change_check().status == Status::Pass);
}

TEST_CASE("identity substitution leaves a nonzero difference") {
  GradedClass before = localdetail::equation_before();
  GradedClass after = localdetail::equation_after();
  GradedClass diff = before - after;
  CHECK_FALSE(diff.is_zero());
  auto r = localdetail::model_ring();
  CHECK(diff == r->var("x0") * r->var("y3") *
                    (r->var("x0") * r->var("y3") - r->var("y0")));
}

TEST_CASE("the shift alone is an involution with flipped sign") {
  auto r = localdetail::model_ring();
  GradedClass before = localdetail::equation_before();
  GradedClass once = substitute(before, localdetail::change_images(1, Rational(1)), r);
  GradedClass back = substitute(once, localdetail::change_images(-1, Rational(1)), r);
  CHECK(back == before);
}

TEST_CASE("jacobian smoothness on the default model") {
  LocalModel m;
  for (long long p : {7, 11, 13}) {
    VerificationReport r = jacobian_smoothness(m, p);
    CHECK(r.status == Status::Pass);
  }
  CHECK_THROWS_AS(jacobian_smoothness(m, 17), Error);
}

TEST_CASE("degenerate binary form is caught") {
  LocalModel m;
  m.b11 = 0;
  m.b12 = 0;
  m.b22 = 0;
  VerificationReport r = jacobian_smoothness(m, 11);
  CHECK(r.status == Status::Fail);
}

TEST_CASE("tangent cone rank") {
  std::vector<std::vector<Rational>> coords(5, std::vector<Rational>(6, 0));
  for (int i = 0; i < 5; ++i) coords[i][i] = 1;
  CHECK(tangent_cone_rank(coords).status == Status::Pass);
  // repeated form: rank 4
  coords[4] = coords[3];
  CHECK(tangent_cone_rank(coords).status == Status::Fail);
  // random full-rank integer sample
  std::vector<std::vector<Rational>> rnd = {
      {2, 1, 0, -1, 3, 5}, {0, 1, 1, 1, 0, 2}, {1, 0, 2, 0, 1, 0},
      {3, -1, 0, 0, 2, 1}, {0, 0, 1, 2, -2, 4}};
  CHECK(tangent_cone_rank(rnd).status == Status::Pass);
  CHECK_THROWS_AS(tangent_cone_rank({{}}), Error);
}
