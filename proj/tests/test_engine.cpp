#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubic/census.hpp"
#include "cubic/closed_forms.hpp"
#include "cubic/classnum.hpp"
#include "cubic/enum_engine.hpp"

using namespace cubic;

TEST_CASE("hamming enumerator frozen values") {
  Geometry g(3);
  const Plane& pl = g.plane();
  WeightEnum w21 = hamming_enumerator(build_projective_code(pl, 1));
  CHECK(w21.counts[0] == 1);
  CHECK(w21.counts[9] == 26);
  for (int i = 1; i <= 13; ++i)
    if (i != 9) CHECK(w21.counts[i] == 0);

  WeightEnum w22 = hamming_enumerator(build_projective_code(pl, 2));
  CHECK(w22 == closed_form_w_conic(3));
}

TEST_CASE("zero-dimensional code") {
  LinearCode trivial{Field::make(3), CodeKind::Dual, 0, 5, 0, {}};
  WeightEnum w = hamming_enumerator(trivial);
  CHECK(w.counts[0] == 1);
  CHECK(w.total() == 1);
  WeightEnum w2 = second_enumerator(trivial, trivial);
  CHECK(w2.counts[0] == 1);
  CHECK(w2.total() == 1);
}

TEST_CASE("second enumerator totals and symmetry") {
  Geometry g(3);
  const Plane& pl = g.plane();
  LinearCode c22 = build_projective_code(pl, 2);
  LinearCode c23 = build_projective_code(pl, 3);
  WeightEnum ab = second_enumerator(c22, c23);
  CHECK(ab.total() == pow_z(3, 16));
  WeightEnum ba = second_enumerator(c23, c22);
  CHECK(ab == ba);
  WeightEnum aa = second_enumerator(c23, c23);
  CHECK(aa.total() == pow_z(3, 20));
}

TEST_CASE("support subspace enumerators") {
  Geometry g(3);
  LinearCode c22 = build_projective_code(g.plane(), 2);
  SupportEnums se = support_r_enumerators(c22);
  // number of 1-dim subspaces
  CHECK(se.w1.total() == (pow_z(3, 6) - 1) / 2);
  // number of 2-dim subspaces: (q^k-1)(q^k-q) / ((q^2-1)(q^2-q))
  CHECK(se.w2.total() == (pow_z(3, 6) - 1) * (pow_z(3, 6) - 3) / ((9 - 1) * (9 - 3)));
  // W = X^n + (q-1) W^(1)
  WeightEnum w = hamming_enumerator(c22);
  WeightEnum rec(13);
  rec.counts[0] = 1;
  rec.add(se.w1, 2);
  CHECK(rec == w);
  // the full support identity
  WeightEnum w2 = second_enumerator(c22, c22);
  WeightEnum rec2(13);
  rec2.counts[0] = 1;
  rec2.add(se.w1, 8);
  rec2.add(se.w2, 8 * 6);
  CHECK(rec2 == w2);
}

TEST_CASE("budget errors") {
  Geometry g5(5);
  CHECK_THROWS_AS(pair_census(g5, 3, 3, {}), BudgetError);
  EngineOptions ext;
  ext.extended = true;
  CHECK_THROWS_AS(pair_census(g5, 3, 3, ext), BudgetError); // still beyond the lifted budget
  // hamming budget: dual of the conic code at q=9 has dimension 85
  Geometry g9(9);
  LinearCode d = dual_code(build_projective_code(g9.plane(), 2));
  CHECK_THROWS_AS(hamming_enumerator(d), BudgetError);
  try {
    pair_census(g5, 3, 3, {});
  } catch (const BudgetError& e) {
    CHECK(e.required > e.limit);
    CHECK(std::string(e.what()).find("budget") != std::string::npos);
  }
}

TEST_CASE("census frozen values at q=3") {
  Geometry g(3);
  CensusTable cc = pair_census(g, 3, 3);
  auto expect = closed_form_census(PairCase::CubicCubic, 3);
  for (int k = 0; k <= 9; ++k) CHECK(cc.coprime[k] == expect[k]);
  CHECK(cc.grand_total() == pow_z(3, 20));
  CHECK(cc.zero_pairs == 2 * pow_z(3, 10) - 1);
  CHECK(cc.proportional_pairs == (pow_z(3, 10) - 1) * 2);
  auto com = closed_form_common_by_zeros(PairCase::CubicCubic, 3);
  CHECK(cc.shared == com);

  CensusTable at = affine_pair_census(g);
  auto aexpect = closed_form_census(PairCase::AffineConic, 3);
  for (int k = 0; k <= 4; ++k) CHECK(at.coprime[k] == aexpect[k]);
  CHECK(at.shared == closed_form_common_by_zeros(PairCase::AffineConic, 3));
}

TEST_CASE("mixed census orientation") {
  Geometry g(3);
  CensusTable a = pair_census(g, 2, 3);
  CensusTable b = pair_census(g, 3, 2);
  CHECK(a.coprime == b.coprime);
  CHECK(a.shared == b.shared);
}

TEST_CASE("smooth scan matches the class-number prediction at q=4") {
  Geometry g(4);
  auto hist = smooth_cubic_class_hist(g);
  WeightEnum predicted = predict_smooth_enumerator(4);
  WeightEnum scanned(predicted.n);
  for (int i = 0; i <= predicted.n; ++i)
    scanned.counts[predicted.n - i] = mpz_class(hist[i]) * 3;
  CHECK(scanned == predicted);
}

TEST_CASE("thread count invariance") {
  Geometry g(4);
  EngineOptions one;
  one.threads = 1;
  EngineOptions four;
  four.threads = 4;
  CHECK(hamming_enumerator(build_projective_code(g.plane(), 2), one) ==
        hamming_enumerator(build_projective_code(g.plane(), 2), four));
  CensusTable t1 = pair_census(g, 2, 2, one);
  CensusTable t4 = pair_census(g, 2, 2, four);
  CHECK(t1.coprime == t4.coprime);
  CHECK(t1.shared == t4.shared);
}

TEST_CASE("second enumerator coefficient decomposition at q=3") {
  // A2_9 for the conic code: 11232 coprime 4-point pairs, plus 4*494 pairs
  // with a zero or proportional member, plus 2496 shared-component pairs
  Geometry g(3);
  LinearCode c22 = build_projective_code(g.plane(), 2);
  WeightEnum w2 = second_enumerator(c22, c22);
  CHECK(w2.counts[9] == 11232 + 4 * 494 + 2496);
}
