#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubic/plane.hpp"

using namespace cubic;

TEST_CASE("point enumeration") {
  Plane p3(Field::make(3));
  CHECK(p3.n_points() == 13);
  CHECK(p3.points()[0] == Point3{1, 0, 0});
  Plane p4(Field::make(4));
  CHECK(p4.n_points() == 21);

  // canonical: first nonzero coordinate is 1, no duplicates
  for (int i = 0; i < p3.n_points(); ++i) {
    const Point3& P = p3.points()[i];
    Elt first = P[0] ? P[0] : (P[1] ? P[1] : P[2]);
    CHECK(first == 1);
    CHECK(p3.point_index(P) == i);
  }
  // scaled representatives resolve to the same index
  const Field& F = p3.field();
  for (int i = 0; i < p3.n_points(); ++i) {
    Point3 P = p3.points()[i];
    Point3 scaled{F.mul(P[0], 2), F.mul(P[1], 2), F.mul(P[2], 2)};
    CHECK(p3.point_index(scaled) == i);
  }
}

TEST_CASE("monomials") {
  CHECK(monomials(1).size() == 3);
  CHECK(monomials(2).size() == 6);
  CHECK(monomials(3).size() == 10);
  CHECK(monomials(3)[0] == std::array<int, 3>{3, 0, 0});
  CHECK(monomials(3)[9] == std::array<int, 3>{0, 0, 3});
  for (int d : {1, 2, 3, 4})
    for (size_t m = 0; m < monomials(d).size(); ++m) {
      auto e = monomials(d)[m];
      CHECK(monomial_index(d, e[0], e[1], e[2]) == (int)m);
    }
}

TEST_CASE("evaluate_form examples") {
  Field F = Field::make(3);
  Form xyz{3, std::vector<Elt>(10, 0)};
  xyz.c[monomial_index(3, 1, 1, 1)] = 1;
  CHECK(evaluate_form(F, xyz, {1, 1, 1}) == 1);

  Form x{1, {1, 0, 0}};
  CHECK(evaluate_form(F, x, {0, 1, 0}) == 0);

  Form f{2, std::vector<Elt>(6, 0)};
  f.c[monomial_index(2, 2, 0, 0)] = 1;
  f.c[monomial_index(2, 0, 2, 0)] = 1;
  CHECK(evaluate_form(F, f, {1, 1, 0}) == F.from_int(2));
}

TEST_CASE("line incidence") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    Plane pl(Field::make(q));
    // every line has q+1 points
    for (const auto& lp : pl.line_points()) CHECK((int)lp.size() == q + 1);
    // every point lies on q+1 lines
    std::vector<int> oncount(pl.n_points(), 0);
    for (const auto& lm : pl.line_masks())
      for (int p = 0; p < pl.n_points(); ++p)
        if (lm.test(p)) ++oncount[p];
    for (int c : oncount) CHECK(c == q + 1);
  }
}

TEST_CASE("class indexing round trip") {
  Field F = Field::make(4);
  int K = form_dim(2);
  uint64_t M = class_count(4, K);
  CHECK(M == 1365);
  CHECK(class_count(3, 10) == 29524);
  CHECK(class_count(3, 3) == 13);
  for (uint64_t i = 0; i < M; i += 7) {
    auto rep = class_rep(F, K, i);
    CHECK(class_index(F, rep) == i);
    // scaling does not change the class
    std::vector<Elt> scaled(rep.size());
    for (size_t j = 0; j < rep.size(); ++j) scaled[j] = F.mul(rep[j], 3);
    CHECK(class_index(F, scaled) == i);
  }
}

TEST_CASE("zero set is scaling invariant") {
  Field F = Field::make(5);
  Plane pl(F);
  Form f{2, {1, 2, 0, 3, 0, 4}};
  Mask2 base = pl.support_mask(f);
  for (Elt a = 2; a < 5; ++a) {
    CHECK(pl.support_mask(form_scale(F, f, a)) == base);
  }
}

TEST_CASE("divide_linear and form_mul are inverse") {
  Field F = Field::make(4);
  for (Elt a = 0; a < 4; ++a)
    for (Elt b = 1; b < 4; ++b) {
      Point3 line{a, b, 1};
      Form L{1, {line[0], line[1], line[2]}};
      Form g{2, {1, a, b, 2, 0, 3}};
      Form prod = form_mul(F, L, g);
      auto quo = divide_linear(F, prod, line);
      REQUIRE(quo.has_value());
      Form back = form_mul(F, L, *quo);
      CHECK(back.c == prod.c);
      // x^3 is not divisible by lines with a y or z coefficient
      Form x3{3, std::vector<Elt>(10, 0)};
      x3.c[0] = 1;
      CHECK(!divide_linear(F, x3, Point3{1, 1, 0}).has_value());
    }
}

TEST_CASE("derivative in characteristic p") {
  Field F = Field::make(3);
  Form x3{3, std::vector<Elt>(10, 0)};
  x3.c[monomial_index(3, 3, 0, 0)] = 1; // x^3: derivative vanishes in char 3
  CHECK(derivative(F, x3, 0).is_zero());
  Form x2y{3, std::vector<Elt>(10, 0)};
  x2y.c[monomial_index(3, 2, 1, 0)] = 1;
  Form dx = derivative(F, x2y, 0); // 2xy
  CHECK(evaluate_form(F, dx, {1, 1, 0}) == F.from_int(2));
}

TEST_CASE("substitute composes with evaluation") {
  Field F = Field::make(5);
  Plane pl(F);
  Form f{3, std::vector<Elt>(10, 0)};
  f.c[0] = 2;
  f.c[4] = 1;
  f.c[9] = 3;
  std::array<Point3, 3> M = {Point3{1, 2, 0}, Point3{0, 1, 0}, Point3{3, 0, 1}};
  Form g = substitute(F, f, M);
  for (const Point3& P : pl.points()) {
    Point3 MP{F.add(F.mul(1, P[0]), F.mul(2, P[1])), P[1],
              F.add(F.mul(3, P[0]), P[2])};
    CHECK(evaluate_form(F, g, P) == evaluate_form(F, f, MP));
  }
}

TEST_CASE("evaluation is linear in the form") {
  Field F = Field::make(5);
  Plane pl(F);
  Form f{3, {1, 2, 0, 3, 0, 0, 4, 1, 0, 2}};
  Form g{3, {0, 1, 1, 0, 2, 0, 0, 3, 0, 4}};
  for (Elt a = 0; a < 5; ++a) {
    Form comb = form_add(F, form_scale(F, f, a), g);
    for (const Point3& P : pl.points())
      CHECK(evaluate_form(F, comb, P) ==
            F.add(F.mul(a, evaluate_form(F, f, P)), evaluate_form(F, g, P)));
  }
}
