#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubic/classnum.hpp"
#include "cubic/gf.hpp"

using namespace cubic;

TEST_CASE("class numbers by reduced forms") {
  CHECK(class_number(-3) == 1);
  CHECK(class_number(-4) == 1);
  CHECK(class_number(-23) == 3);
  CHECK(class_number(-8) == 1);
  CHECK(class_number(-11) == 1);
  CHECK(class_number(-12) == 1);
  CHECK(class_number(-163) == 1);
  CHECK(class_number(-15) == 2);
  CHECK_THROWS_AS(class_number(-5), std::invalid_argument); // -5 = 3 mod 4
  CHECK_THROWS_AS(class_number(4), std::invalid_argument);
}

TEST_CASE("Hurwitz class numbers") {
  CHECK(hurwitz_H(-3) == mpq_class(1, 3));
  CHECK(hurwitz_H(-4) == mpq_class(1, 2));
  CHECK(hurwitz_H(-12) == mpq_class(4, 3));
  CHECK(hurwitz_H(-8) == 1);
  CHECK(hurwitz_H(-11) == 1);
  CHECK(hurwitz_H(-16) == mpq_class(3, 2));
  CHECK_THROWS_AS(hurwitz_H(-6), std::invalid_argument);
}

TEST_CASE("kronecker symbol") {
  CHECK(kronecker(3, 2) == -1); // 3 = -5 mod 8
  CHECK(kronecker(7, 2) == 1);
  CHECK(kronecker(4, 2) == 0);
  for (long n = 1; n <= 30; ++n) CHECK(kronecker(1, n) == 1);
  // completely multiplicative in n
  for (long a : {-4L, -3L, 5L, 7L})
    for (long n1 = 1; n1 <= 12; ++n1)
      for (long n2 = 1; n2 <= 12; ++n2)
        CHECK(kronecker(a, n1 * n2) == kronecker(a, n1) * kronecker(a, n2));
  CHECK_THROWS_AS(kronecker(3, 0), std::invalid_argument);
}

TEST_CASE("trace probabilities") {
  CHECK(trace_probability(3, 0) == mpq_class(2, 9));
  CHECK(trace_probability(3, 3) == mpq_class(1, 18));
  CHECK(trace_probability(3, -3) == mpq_class(1, 18));
  CHECK(trace_probability(3, 4) == 0); // outside the Hasse range
  CHECK(trace_probability(3, 1) == mpq_class(1, 6));
  // square q: the p | t branches
  CHECK(trace_probability(4, 0) == mpq_class(1, 16)); // (-4/2) = 0 at p = 2
  CHECK(trace_probability(4, 2) == mpq_class(1, 12)); // t^2 = q branch
  CHECK(trace_probability(4, 4) == mpq_class(1, 96)); // t^2 = 4q branch
  CHECK(trace_probability(9, 6) == mpq_class(1, 108));

  // the case table is exhaustive: probabilities sum to one for every q
  for (int q = 2; q <= 64; ++q) {
    if (!is_prime_power(q)) continue;
    CHECK(sum_trace_probabilities(q) == 1);
  }
}

TEST_CASE("predicted smooth enumerator") {
  WeightEnum w3 = predict_smooth_enumerator(3);
  CHECK(w3.counts[9] == 7488); // t = 0: 26*24*18*3 * 2/9
  mpz_class total = (pow_z(3, 3) - 1) * (pow_z(3, 3) - 3) * (pow_z(3, 3) - 9) * 3;
  CHECK(w3.total() == total);
  for (int q : {4, 5, 7, 8, 9}) {
    WeightEnum w = predict_smooth_enumerator(q);
    mpz_class tot = (pow_z(q, 3) - 1) * (pow_z(q, 3) - q) * (pow_z(q, 3) - q * q) * q;
    CHECK(w.total() == tot);
  }
  CHECK_THROWS_AS(predict_smooth_enumerator(2), std::invalid_argument);
}
