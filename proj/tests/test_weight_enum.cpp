#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cubic/weight_enum.hpp"

using namespace cubic;

TEST_CASE("binomials and powers") {
  CHECK(binom(5, 2) == 10);
  CHECK(binom(4, 7) == 0);
  CHECK(binom(91, 45) == mpz_class("205397724721029574666088520"));
  CHECK(pow_z(3, 20) == mpz_class("3486784401"));
}

TEST_CASE("macwilliams trivial codes") {
  const int n = 13, q = 3;
  // the full space F_q^n: W = (X + (q-1)Y)^n, dual is {0}
  WeightEnum full(n);
  for (int i = 0; i <= n; ++i) full.counts[i] = binom(n, i) * pow_z(q - 1, i);
  WeightEnum dual = macwilliams(full, q, pow_z(q, n));
  CHECK(dual.counts[0] == 1);
  for (int i = 1; i <= n; ++i) CHECK(dual.counts[i] == 0);

  // {0}: W = X^n transforms to (X + (q-1)Y)^n
  WeightEnum zero(n);
  zero.counts[0] = 1;
  CHECK(macwilliams(zero, q, 1) == full);
}

TEST_CASE("non-exact division is rejected") {
  WeightEnum w(4);
  w.counts[0] = 1;
  w.counts[3] = 5; // not a valid enumerator for a code of size 9
  CHECK_THROWS_AS(macwilliams(w, 3, 9), std::domain_error);
}

TEST_CASE("substitution involution on random enumerators") {
  std::mt19937_64 rng(2024);
  for (int rep = 0; rep < 100; ++rep) {
    int n = 5 + (int)(rng() % 20);
    WeightEnum w(n);
    for (int i = 0; i <= n; ++i) w.counts[i] = mpz_class((unsigned long)(rng() % 1000000));
    for (mpz_class c : {mpz_class(2), mpz_class(8), mpz_class(48)}) {
      WeightEnum t = transform_subst(w, c);
      CHECK(inverse_subst(t, c) == w);
    }
  }
}

TEST_CASE("second transform double application scales by q^2n") {
  WeightEnum w(7);
  w.counts[0] = 1;
  w.counts[3] = 12;
  w.counts[7] = 14;
  int q = 3;
  mpz_class c = mpz_class(q) * q - 1;
  WeightEnum twice = transform_subst(transform_subst(w, c), c);
  WeightEnum scaled = w;
  for (auto& v : scaled.counts) v *= pow_z(q, 2 * 7);
  CHECK(twice == scaled);
}

TEST_CASE("total and add") {
  WeightEnum a(3), b(3);
  a.counts[1] = 5;
  b.counts[2] = 7;
  a.add(b, 2);
  CHECK(a.counts[2] == 14);
  CHECK(a.total() == 19);
}
