#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubic/gf.hpp"

using namespace cubic;

TEST_CASE("make_field basics") {
  Field f3 = Field::make(3);
  CHECK(f3.p() == 3);
  CHECK(f3.v() == 1);

  Field f4 = Field::make(4);
  CHECK(f4.p() == 2);
  CHECK(f4.v() == 2);
  // t^2 + t + 1, the unique irreducible quadratic over F_2
  CHECK(f4.modulus() == std::vector<int>{1, 1, 1});

  CHECK_THROWS_AS(Field::make(6), FieldError);
  CHECK_THROWS_AS(Field::make(1), FieldError);
  CHECK_THROWS_AS(Field::make(65), FieldError);
  CHECK_THROWS_AS(Field::make(128), FieldError);
}

TEST_CASE("arith examples") {
  Field f4 = Field::make(4);
  // generator is t; t*t = t+1 is forced by the modulus
  Elt t = f4.generator();
  Elt t1 = f4.add(t, 1);
  CHECK(f4.mul(t, t) == t1);

  Field f3 = Field::make(3);
  Elt two = f3.from_int(2);
  CHECK(f3.inv(two) == two);
  CHECK_THROWS_AS(f3.inv(0), FieldError);

  Field f5 = Field::make(5);
  CHECK(f5.pow(f5.from_int(2), 4) == f5.one());
  CHECK(f5.pow(0, 0) == 1);
  CHECK(f5.pow(0, 3) == 0);
}

TEST_CASE("field axioms") {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
    Field F = Field::make(q);
    for (Elt a = 0; a < (Elt)q; ++a) {
      if (a) CHECK(F.mul(a, F.inv(a)) == 1);
      CHECK(F.add(a, F.neg(a)) == 0);
      for (Elt b = 0; b < (Elt)q; ++b)
        for (Elt c = 0; c < (Elt)q; ++c) {
          CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
          CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
        }
    }
    // Frobenius is additive
    for (Elt a = 0; a < (Elt)q; ++a)
      for (Elt b = 0; b < (Elt)q; ++b)
        CHECK(F.frob(F.add(a, b)) == F.add(F.frob(a), F.frob(b)));
  }
  // sampled checks above the exhaustive range
  for (int q : {25, 27, 32, 49, 64}) {
    Field F = Field::make(q);
    for (int i = 0; i < 200; ++i) {
      Elt a = (Elt)((i * 2654435761u) % q);
      Elt b = (Elt)((i * 40503u + 7) % q);
      Elt c = (Elt)((i * 9176u + 3) % q);
      CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
      CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      CHECK(F.frob(F.add(a, b)) == F.add(F.frob(a), F.frob(b)));
    }
  }
}

TEST_CASE("exp/log tables invert each other") {
  for (int q : {4, 9, 27, 64}) {
    Field F = Field::make(q);
    for (Elt a = 1; a < (Elt)q; ++a) CHECK(F.exp(F.log(a)) == a);
    for (int e = 0; e < q - 1; ++e) CHECK(F.log(F.exp(e)) == e);
  }
}

TEST_CASE("extend_field") {
  Field f3 = Field::make(3);
  FieldExtension e = extend_field(f3, 2);
  CHECK(e.field.q() == 9);
  CHECK(e.embed[0] == 0);
  CHECK(e.embed[1] == 1);
  // image closed under arithmetic
  for (Elt a = 0; a < 3; ++a)
    for (Elt b = 0; b < 3; ++b) {
      CHECK(e.embed[f3.add(a, b)] == e.field.add(e.embed[a], e.embed[b]));
      CHECK(e.embed[f3.mul(a, b)] == e.field.mul(e.embed[a], e.embed[b]));
    }
  // -1 becomes a square in F_9 (x^2 + 1 splits)
  Elt minus1 = e.embed[f3.neg(1)];
  bool has_root = false;
  for (Elt y = 0; y < 9; ++y)
    if (e.field.mul(y, y) == minus1) has_root = true;
  CHECK(has_root);
  // and is not one in F_3 itself
  bool base_root = false;
  for (Elt y = 0; y < 3; ++y)
    if (f3.mul(y, y) == f3.neg(1)) base_root = true;
  CHECK(!base_root);

  FieldExtension e3 = extend_field(Field::make(4), 3);
  CHECK(e3.field.q() == 64);
  Field f4 = Field::make(4);
  for (Elt a = 0; a < 4; ++a)
    for (Elt b = 0; b < 4; ++b)
      CHECK(e3.embed[f4.add(a, b)] == e3.field.add(e3.embed[a], e3.embed[b]));

  CHECK_THROWS_AS(extend_field(f3, 4), FieldError);
}

TEST_CASE("restriction of the extension reproduces base tables") {
  for (int q : {3, 4, 5, 8}) {
    Field F = Field::make(q);
    for (int deg : {2, 3}) {
      FieldExtension e = extend_field(F, deg);
      for (Elt a = 0; a < (Elt)q; ++a)
        for (Elt b = 0; b < (Elt)q; ++b) {
          CHECK(e.field.add(e.embed[a], e.embed[b]) == e.embed[F.add(a, b)]);
          CHECK(e.field.mul(e.embed[a], e.embed[b]) == e.embed[F.mul(a, b)]);
          if (a) CHECK(e.field.inv(e.embed[a]) == e.embed[F.inv(a)]);
        }
    }
  }
}

TEST_CASE("explicit modulus constructor") {
  // t^2 + 1 is the canonical choice for F_9; t^2 + t + 2 is another
  Field f9 = Field::make(9);
  CHECK(f9.modulus() == std::vector<int>{1, 0, 1});
  Field alt = Field::make_with_modulus(3, {2, 1, 1});
  CHECK(alt.q() == 9);
  CHECK(alt.fingerprint() != f9.fingerprint());
  // (t+1)^2 is reducible
  CHECK_THROWS_AS(Field::make_with_modulus(3, {1, 2, 1}), FieldError);
}
