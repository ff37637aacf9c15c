#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubic/closed_forms.hpp"

using namespace cubic;

TEST_CASE("hamming closed forms") {
  WeightEnum w22 = closed_form_w_conic(3);
  CHECK(w22.counts[0] == 1);
  CHECK(w22.counts[6] == 156);
  CHECK(w22.counts[9] == 494);
  CHECK(w22.counts[12] == 78);

  for (int q : {3, 4, 5, 7, 9}) {
    CHECK(closed_form_w_conic(q).total() == pow_z(q, 6));
    CHECK(closed_form_w_affine_conic(q).total() == pow_z(q, 6));
    CHECK(closed_form_w_cubic(q).total() == pow_z(q, 10));
  }
}

TEST_CASE("census closed forms at small q") {
  auto cc3 = closed_form_census(PairCase::CubicCubic, 3);
  std::vector<mpz_class> expect{754121472, 1225444896, 919024704, 421241184, 129100608,
                                26822016,  3541824,    258336,    0,         624};
  CHECK(cc3 == expect);
  auto conic3 = closed_form_census(PairCase::ConicConic, 3);
  CHECK(conic3 == std::vector<mpz_class>{117936, 177840, 146016, 67392, 11232});
  auto aff3 = closed_form_census(PairCase::AffineConic, 3);
  CHECK(aff3 == std::vector<mpz_class>{184080, 206496, 103680, 24192, 2592});
  auto cb3 = closed_form_census(PairCase::ConicCubic, 3);
  CHECK(cb3 == std::vector<mpz_class>{9371700, 14944176, 11473488, 5239728, 1440504, 252720,
                                      8424});
}

TEST_CASE("assembled second enumerators conserve pair counts") {
  for (int q : {3, 4, 5}) {
    for (PairCase c : {PairCase::ConicConic, PairCase::AffineConic, PairCase::ConicCubic,
                       PairCase::CubicCubic})
      CHECK(assemble_second_enumerator(c, q).total() == pair_case_size_product(c, q));
  }
}

TEST_CASE("dual low-weight coefficients") {
  auto b3 = dual_low_coeffs_cubic(3);
  CHECK(b3 == std::vector<mpz_class>{1, 0, 0, 0, 0, 0, 0, 0, 0, 26});
  auto b4 = dual_low_coeffs_cubic(4);
  CHECK(b4 == std::vector<mpz_class>{1, 0, 0, 0, 0, 63, 0, 0, 630, 5460});
  auto b5 = dual_low_coeffs_cubic(5);
  CHECK(b5 == std::vector<mpz_class>{1, 0, 0, 0, 0, 744, 0, 0, 46500, 449500});
  auto c3 = dual_low_coeffs_conic(3);
  CHECK(c3 == std::vector<mpz_class>{1, 0, 0, 0, 26, 0, 156});

  // transform of the closed-form enumerator reproduces them (q=7 pins the
  // binom(q+1,8) reading of the weight-8 coefficient)
  WeightEnum d23 = macwilliams(closed_form_w_cubic(7), 7, pow_z(7, 10));
  auto b7 = dual_low_coeffs_cubic(7);
  for (int i = 0; i <= 9; ++i) CHECK(d23.counts[i] == b7[i]);
  CHECK(d23.counts[8] == 11869452);
}

TEST_CASE("solver reproduces the registered censuses") {
  for (int q : {3, 4, 5, 7})
    CHECK(solve_low_coefficients(PairCase::ConicConic, q) ==
          closed_form_census(PairCase::ConicConic, q));
  for (int q : {3, 4, 5})
    CHECK(solve_low_coefficients(PairCase::AffineConic, q) ==
          closed_form_census(PairCase::AffineConic, q));
  for (int q : {3, 4})
    CHECK(solve_low_coefficients(PairCase::ConicCubic, q) ==
          closed_form_census(PairCase::ConicCubic, q));
  for (int q : {3, 4, 5})
    CHECK(solve_low_coefficients(PairCase::CubicCubic, q) ==
          closed_form_census(PairCase::CubicCubic, q));
}

TEST_CASE("single-unknown solve sanity") {
  // with a zero known part and only the constant slot unknown, the solve
  // reduces to c_0 = |C1||C2| B_0 / M_00 with M_00 = 1
  int q = 3, n = 13;
  WeightEnum known(n);
  std::vector<mpz_class> targets{7};
  auto sol = solve_low_coefficients(known, targets, q, mpz_class(81));
  REQUIRE(sol.size() == 1);
  CHECK(sol[0] == 81 * 7);
}

TEST_CASE("second macwilliams on assembled enumerators") {
  for (int q : {3, 4}) {
    for (PairCase c : {PairCase::ConicConic, PairCase::AffineConic, PairCase::ConicCubic,
                       PairCase::CubicCubic}) {
      WeightEnum tr = macwilliams2(assemble_second_enumerator(c, q), q,
                                   pair_case_size_product(c, q));
      auto targets = dual_pair_low_coeffs(c, q);
      for (size_t i = 0; i < targets.size(); ++i) CHECK(tr.counts[i] == targets[i]);
    }
  }
}
