#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubic/qpoly.hpp"

using namespace cubic;

TEST_CASE("polynomial arithmetic") {
  QPoly q = QPoly::x();
  QPoly p = (q + 1) * (q - 1); // q^2 - 1
  CHECK(p.degree() == 2);
  CHECK(p.eval(mpq_class(5)) == 24);
  CHECK((p - (q * q - 1)).degree() == -1);
  CHECK((mpq_class(1, 2) * q.pow(3)).leading() == mpq_class(1, 2));
  CHECK(QPoly().eval(mpq_class(7)) == 0);
}

TEST_CASE("eval_int rejects non-integral values") {
  QPoly half = mpq_class(1, 2) * QPoly::x();
  CHECK(half.eval_int(4) == 2);
  CHECK_THROWS_AS(half.eval_int(3), std::domain_error);
}

TEST_CASE("binom_poly") {
  QPoly q = QPoly::x();
  QPoly b = binom_poly(q + 1, 4); // (q+1)q(q-1)(q-2)/24
  CHECK(b.eval(mpq_class(3)) == 1);
  CHECK(b.eval(mpq_class(7)) == 70);
  CHECK(binom_poly(q, 2).eval(mpq_class(9)) == 36);
}

TEST_CASE("derangements and fixed point proportions") {
  CHECK(derangements(0) == 1);
  CHECK(derangements(1) == 0);
  CHECK(derangements(4) == 9);
  CHECK(derangements(9) == 133496);
  CHECK(fixed_point_proportion(9, 9) == mpq_class(1, 362880));
  CHECK(fixed_point_proportion(8, 9) == 0); // cannot fix exactly m-1 points
  CHECK(fixed_point_proportion(0, 9) == mpq_class(16687, 45360)); // = 133496/362880
  CHECK(fixed_point_proportion(0, 4) == mpq_class(3, 8));
  mpq_class sum = 0;
  for (int k = 0; k <= 9; ++k) sum += fixed_point_proportion(k, 9);
  CHECK(sum == 1);
}

TEST_CASE("registry basics") {
  const auto& reg = FormulaRegistry::instance();
  CHECK(reg.all().size() >= 60);
  CHECK(reg.find("c9_cubic_cubic") != nullptr);
  CHECK(reg.find("nonexistent") == nullptr);
  CHECK_THROWS_AS(reg.get("nonexistent"), std::invalid_argument);
  // ids are unique and each entry carries a source label
  for (size_t i = 0; i < reg.all().size(); ++i) {
    CHECK(!reg.all()[i].source.empty());
    for (size_t j = i + 1; j < reg.all().size(); ++j)
      CHECK(reg.all()[i].id != reg.all()[j].id);
  }
}

TEST_CASE("registry evaluation and validity") {
  const auto& reg = FormulaRegistry::instance();
  CHECK(reg.eval("I9", 3) == 13);
  CHECK(reg.eval("I9", 4) == 1400);
  CHECK(reg.eval("J8", 4) == 12600);
  CHECK(reg.eval("c9_cubic_cubic", 3) == 624);
  CHECK(reg.eval("c8_cubic_cubic", 3) == 0);
  CHECK(reg.eval("c7_cubic_cubic", 3) == 258336);
  CHECK_THROWS_AS(reg.eval("c9_cubic_cubic", 2), std::domain_error);
  CHECK(reg.eval("c9_cubic_cubic", 2, true) == 0); // informational: (q-2) factor
  CHECK(reg.eval("I9", 2, true) == 0);
  CHECK(reg.eval("two_triples_8sets", 3) == 0); // (q-3) factor
  CHECK(reg.eval("two_triples_8sets", 4) == 30240);
  CHECK(reg.eval("L_ge4", 3) == 1170);
  CHECK(reg.eval("L_ge4", 4) == 160650);
  CHECK(reg.eval("no4no7", 4) == 42840);
  CHECK(reg.eval("C_ge7", 3) == 0);
}

TEST_CASE("g formulas match their explicit expansions") {
  const auto& reg = FormulaRegistry::instance();
  QPoly q = QPoly::x();
  CHECK(reg.get("g3_5").poly == (q - 1).pow(2));
  CHECK(reg.get("g3_6").poly == (q * q + 2 * q - 5) * (q - 1).pow(2));
  // the general pair formula forces +2q^3 here
  CHECK(reg.get("g3_7").poly ==
        (q.pow(4) + 2 * q.pow(3) - 4 * q * q - 12 * q + 15) * (q - 1).pow(2));
  CHECK(reg.get("g3_8").poly ==
        (q.pow(5) + 3 * q.pow(4) - 2 * q.pow(3) - 14 * q * q - 7 * q + 35) * (q - 1).pow(3));
  CHECK(reg.get("g3_9").poly == (q.pow(8) + 2 * q.pow(7) - 6 * q.pow(6) - 14 * q.pow(5) +
                                 14 * q.pow(4) + 40 * q.pow(3) - 112 * q + 70) *
                                    (q - 1).pow(2));
  CHECK(reg.get("f3_5").poly == q - 1);
  CHECK(reg.get("f3_4").poly == QPoly());
}

TEST_CASE("common-component coefficients assemble from the affine and conic censuses") {
  const auto& reg = FormulaRegistry::instance();
  QPoly q = QPoly::x();
  QPoly N = q * q + q + 1;
  QPoly smooth_conics = q.pow(5) - q.pow(2);
  // cubics sharing exactly one rational line: the line at infinity view gives
  // N * (affine census coefficient); the shared-smooth-conic cases add the
  // q+1 and q+2 slots
  CHECK(reg.get("a_q3_common").poly == N * reg.get("c2_affine_conic").poly);
  CHECK(reg.get("a_q4_common").poly == N * reg.get("c3_affine_conic").poly);
  CHECK(reg.get("a_q5_common").poly == N * reg.get("c4_affine_conic").poly);
  CHECK(reg.get("a_q1_common").poly ==
        N * reg.get("c0_affine_conic").poly + smooth_conics * (q + 1).pow(2) * q * (q - 1).pow(2));
  CHECK(reg.get("a_q2_common").poly ==
        N * reg.get("c1_affine_conic").poly + smooth_conics * q.pow(3) * (q + 1) * (q - 1).pow(2));
  // lines avoiding four points in general position
  CHECK(reg.get("a_q5_common").poly ==
        reg.get("c4_conic_conic").poly * (q * q - 3 * q + 3));
  // each nine-point base locus carries (q^2-1)(q^2-q) ordered coprime pairs
  CHECK(reg.get("c9_cubic_cubic").poly ==
        reg.get("I9").poly * q * (q + 1) * (q - 1).pow(2));
}
