#include "cubic/qpoly.hpp"

#include <algorithm>

namespace cubic {

namespace {
mpq_class frac(long a, long b) { return mpq_class(a, b); }

// f_d(m): full-support vectors in the dual subspace on m collinear points
QPoly f_dm_poly(int d, int m) {
  QPoly q = QPoly::x();
  QPoly s;
  for (int i = 0; i <= m - d - 2; ++i) {
    mpz_class bi;
    mpz_bin_uiui(bi.get_mpz_t(), m, i);
    QPoly term = (q.pow(m - d - 1 - i) - 1) * QPoly(mpq_class(bi));
    s = (i % 2 == 0) ? s + term : s - term;
  }
  return s;
}

// g_d(m): ordered pairs of nonzero vectors with full support union
QPoly g_dm_poly(int d, int m) {
  QPoly s;
  for (int a = d + 2; a <= m; ++a)
    for (int b = d + 2; b <= m; ++b) {
      if (a + b < m) continue;
      mpz_class c1, c2;
      mpz_bin_uiui(c1.get_mpz_t(), m, a);
      mpz_bin_uiui(c2.get_mpz_t(), a, b + a - m);
      s = s + QPoly(mpq_class(c1 * c2)) * f_dm_poly(d, a) * f_dm_poly(d, b);
    }
  return s;
}
} // namespace

FormulaRegistry::FormulaRegistry() {
  QPoly q = QPoly::x();
  QPoly N = q * q + q + 1;
  auto add = [&](const std::string& id, QPoly p, const std::string& src, int qmin) {
    entries_.push_back({id, std::move(p), src, qmin});
  };

  // ---- cubic-cubic census: ordered nonzero pairs, no common component,
  //      exactly k common rational points ----
  add("c0_cubic_cubic",
      frac(16687, 45360) * (q + 1).pow(2) * (q - 1).pow(3) * q.pow(5) * N *
          (q.pow(8) - q.pow(7) + frac(15988, 16687) * q.pow(6) + frac(882, 16687) * q.pow(5) -
           frac(126, 451) * q.pow(4) + frac(3192, 16687) * q.pow(3) +
           frac(4397, 16687) * q.pow(2) - frac(2507, 16687) * q - QPoly(frac(2170, 16687))),
      "cubic-cubic census, k=0", 3);
  add("c1_cubic_cubic",
      frac(2119, 5760) * (q + 1) * (q - 1).pow(2) * q.pow(3) * N *
          (q.pow(12) - frac(1, 14833) * q.pow(11) + frac(2390, 2119) * q.pow(10) -
           frac(10240, 14833) * q.pow(9) + frac(2459, 2119) * q.pow(8) +
           frac(99, 2119) * q.pow(7) + frac(3440, 2119) * q.pow(6) -
           frac(8630, 14833) * q.pow(5) - frac(4748, 2119) * q.pow(4) +
           frac(76978, 14833) * q.pow(3) + frac(100, 2119) * q.pow(2) -
           frac(14160, 2119) * q + QPoly(frac(5760, 2119))),
      "cubic-cubic census, k=1", 3);
  add("c2_cubic_cubic",
      frac(103, 560) * (q - 1).pow(2) * (q + 1).pow(2) * q.pow(4) * N *
          (q.pow(10) + frac(1, 927) * q.pow(9) + frac(1634, 927) * q.pow(8) +
           frac(742, 927) * q.pow(7) + frac(1589, 927) * q.pow(6) + frac(1729, 927) * q.pow(5) +
           frac(4106, 927) * q.pow(4) - frac(2818, 103) * q.pow(3) +
           frac(21608, 309) * q.pow(2) - frac(22610, 309) * q + QPoly(frac(2520, 103))),
      "cubic-cubic census, k=2", 3);
  add("c3_cubic_cubic",
      frac(53, 864) * (q + 1).pow(2) * (q - 1).pow(3) * q.pow(4) * N *
          (q.pow(9) + frac(527, 265) * q.pow(8) + frac(221, 53) * q.pow(7) +
           frac(1533, 265) * q.pow(6) + frac(738, 53) * q.pow(5) + frac(5958, 265) * q.pow(4) -
           frac(3956, 53) * q.pow(3) + frac(67402, 265) * q.pow(2) - frac(11348, 53) * q +
           QPoly(frac(2376, 53))),
      "cubic-cubic census, k=3", 3);
  add("c4_cubic_cubic",
      frac(11, 720) * (q + 1).pow(2) * (q - 1).pow(3) * q.pow(4) * N *
          (q.pow(9) + frac(34, 11) * q.pow(8) + frac(48, 11) * q.pow(7) +
           frac(182, 11) * q.pow(6) + frac(109, 11) * q.pow(5) - frac(1564, 11) * q.pow(4) +
           712 * q.pow(3) - frac(13292, 11) * q.pow(2) + frac(7120, 11) * q -
           QPoly(frac(600, 11))),
      "cubic-cubic census, k=4", 3);
  add("c5_cubic_cubic",
      frac(1, 320) * (q + 1).pow(2) * (q - 1).pow(4) * q.pow(4) * N *
          (q.pow(8) + frac(40, 9) * q.pow(7) + frac(151, 9) * q.pow(6) + frac(50, 9) * q.pow(5) -
           frac(874, 9) * q.pow(4) + frac(2890, 3) * q.pow(3) - frac(7022, 3) * q.pow(2) +
           frac(4940, 3) * q - 40),
      "cubic-cubic census, k=5", 3);
  add("c6_cubic_cubic",
      frac(1, 2160) * (q + 1).pow(2) * (q - 1).pow(4) * q.pow(5) * N *
          (q.pow(7) + 9 * q.pow(6) - 5 * q.pow(5) - 17 * q.pow(4) + 910 * q.pow(3) -
           4316 * q.pow(2) + 7416 * q - 4670),
      "cubic-cubic census, k=6", 3);
  add("c7_cubic_cubic",
      frac(1, 10080) * (q - 2) * (q + 1).pow(2) * (q - 1).pow(4) * q.pow(5) * N *
          (q.pow(6) + 2 * q.pow(5) + 25 * q.pow(4) + 288 * q.pow(3) - 1692 * q.pow(2) +
           3574 * q - 3290),
      "cubic-cubic census, k=7", 3);
  add("c8_cubic_cubic",
      frac(1, 5040) * (q - 3) * (q - 2) * (q + 1).pow(2) * (q - 1).pow(4) * q.pow(5) * N *
          (q.pow(4) + 6 * q.pow(3) - 31 * q.pow(2) + 69 * q - 105),
      "cubic-cubic census, k=8", 3);
  add("c9_cubic_cubic",
      frac(1, 362880) * (q - 2) * (q + 1).pow(2) * (q - 1).pow(4) * q.pow(5) * N *
          (q.pow(6) + 2 * q.pow(5) - 73 * q.pow(4) + 344 * q.pow(3) - 838 * q.pow(2) +
           1754 * q - 2030),
      "cubic-cubic census, k=9", 3);

  // ---- cubic-cubic common-component contribution, by common zero count ----
  add("a_1_common", frac(1, 2) * (q - 1).pow(2) * N * (q * q - q) * (q + 1) * q,
      "distinct cubics sharing a conjugate line pair, 1 point", 3);
  add("a_2_common", frac(1, 2) * (q - 1).pow(2) * N * (q * q - q) * (q * q + q) * (q + 1) * q,
      "distinct cubics sharing a conjugate line pair, 2 points", 3);
  add("a_2q1_common", frac(1, 2) * N * (2 * q + 1) * (q - 1).pow(2) * q.pow(2) * (q + 1).pow(2),
      "distinct cubics sharing two rational lines, 2q+1 points", 3);
  add("a_2q2_common", frac(1, 2) * N * (q - 1).pow(2) * (q * q + q).pow(2) * (q * q - q),
      "distinct cubics sharing two rational lines, 2q+2 points", 3);
  add("a_q1_common",
      frac(1, 24) *
          (9 * q.pow(8) + 8 * q.pow(7) + 21 * q.pow(6) - 19 * q.pow(5) + 66 * q.pow(4) +
           59 * q.pow(3) - 48 * q.pow(2) + 24) *
          N * (q + 1) * (q - 1).pow(2) * q,
      "distinct cubics sharing a component, q+1 points", 3);
  add("a_q2_common",
      frac(1, 6) * (2 * q.pow(5) + 2 * q.pow(4) - 7 * q.pow(3) + 42 * q.pow(2) - 33 * q + 6) *
          N * (q + 1).pow(2) * (q - 1).pow(2) * q.pow(3),
      "distinct cubics sharing a component, q+2 points", 3);
  add("a_q3_common",
      frac(1, 4) * (q.pow(3) - 2 * q.pow(2) + 14 * q - 11) * N * (q + 1).pow(2) *
          (q - 1).pow(3) * q.pow(4),
      "distinct cubics sharing a component, q+3 points", 3);
  add("a_q4_common", frac(1, 6) * N * (4 * q - 5) * (q + 1).pow(2) * (q - 1).pow(4) * q.pow(4),
      "distinct cubics sharing a component, q+4 points", 3);
  add("a_q5_common",
      frac(1, 24) * (q - 1).pow(4) * q.pow(4) * (q + 1).pow(2) * N * (q.pow(2) - 3 * q + 3),
      "distinct cubics sharing a component, q+5 points", 3);

  // ---- conic-conic census ----
  add("c0_conic_conic", frac(1, 8) * (q + 1) * (q - 1).pow(3) * q.pow(4) * (3 * q * q + 1) * N,
      "conic-conic census, k=0", 2);
  add("c1_conic_conic",
      frac(1, 6) * (q + 1) * (q - 1).pow(2) * q.pow(2) * N *
          (2 * q.pow(5) + q.pow(4) - 2 * q.pow(3) + 5 * q.pow(2) + 6 * q - 6),
      "conic-conic census, k=1", 2);
  add("c2_conic_conic",
      frac(1, 4) * (q - 1).pow(2) * (q + 1).pow(2) * q.pow(3) * N *
          (q.pow(3) - 2 * q.pow(2) + 7 * q - 4),
      "conic-conic census, k=2", 2);
  add("c3_conic_conic", frac(1, 2) * (q + 1).pow(2) * (q - 1).pow(3) * q.pow(4) * N,
      "conic-conic census, k=3", 2);
  add("c4_conic_conic", frac(1, 24) * (q + 1).pow(2) * (q - 1).pow(4) * q.pow(4) * N,
      "conic-conic census, k=4", 2);
  add("com_conic_q2", N * (q * q + q) * q.pow(2) * (q - 1).pow(2),
      "distinct conics sharing a line, q+2 points", 2);
  add("com_conic_q1", (q * q - 1) * (q * q - q) * N * (q + 1),
      "distinct conics sharing a line, q+1 points", 2);

  // ---- affine conic-conic census (q > 2) ----
  add("c0_affine_conic",
      frac(3, 8) * q * (q + 1) * (q - 1).pow(2) *
          (q.pow(8) + frac(8, 9) * q.pow(7) + frac(7, 3) * q.pow(6) - frac(19, 9) * q.pow(5) +
           frac(14, 3) * q.pow(4) + frac(59, 9) * q.pow(3) - frac(8, 3) * q.pow(2) +
           QPoly(frac(8, 3))),
      "affine conic census, k=0", 3);
  // the q^3 term is +29/2: the -29/2 variant breaks the exact pair-count
  // conservation identity and disagrees with the brute force at q=3
  add("c1_affine_conic",
      frac(1, 3) * (q + 1) * (q - 1).pow(2) * q.pow(3) *
          (q.pow(6) + 2 * q.pow(5) - frac(5, 2) * q.pow(4) + frac(29, 2) * q.pow(3) +
           frac(15, 2) * q.pow(2) - frac(27, 2) * q + 3),
      "affine conic census, k=1", 3);
  add("c2_affine_conic",
      frac(1, 4) * (q + 1).pow(2) * (q - 1).pow(3) * q.pow(4) *
          (q.pow(3) - 2 * q.pow(2) + 14 * q - 11),
      "affine conic census, k=2", 3);
  add("c3_affine_conic",
      frac(2, 3) * (q - QPoly(frac(5, 4))) * (q + 1).pow(2) * (q - 1).pow(4) * q.pow(4),
      "affine conic census, k=3", 3);
  add("c4_affine_conic",
      frac(1, 24) * (q + 1).pow(2) * (q - 1).pow(4) * q.pow(4) * (q.pow(2) - 3 * q + 3),
      "affine conic census, k=4", 3);
  add("com_affine_q0", (2 * q + 1) * (q + 1).pow(2) * (q - 1).pow(2) * q.pow(2),
      "distinct affine conics sharing a line, q points", 3);
  add("com_affine_q1", (q + 1).pow(2) * (q - 1).pow(3) * q.pow(3),
      "distinct affine conics sharing a line, q+1 points", 3);

  // ---- conic-cubic census (q > 2) ----
  add("c0_conic_cubic",
      frac(53, 144) * (q - 1).pow(3) * q.pow(6) * N *
          (q.pow(5) + q.pow(4) + frac(9, 53) * q.pow(3) + frac(27, 53) * q.pow(2) +
           frac(58, 53) * q - QPoly(frac(32, 53))),
      "conic-cubic census, k=0", 3);
  add("c1_conic_cubic",
      frac(11, 30) * q.pow(4) * (q - 1).pow(2) * N * (q + 1) *
          (q.pow(7) + frac(1, 44) * q.pow(6) + frac(5, 11) * q.pow(5) + frac(20, 11) * q.pow(4) -
           frac(31, 11) * q.pow(3) + frac(159, 44) * q.pow(2) + frac(15, 11) * q -
           QPoly(frac(30, 11))),
      "conic-cubic census, k=1", 3);
  add("c2_conic_cubic",
      frac(3, 16) * (q - 1).pow(2) * (q + 1).pow(2) * q.pow(5) * N *
          (q.pow(5) - frac(2, 9) * q.pow(4) + frac(35, 9) * q.pow(3) - frac(70, 9) * q.pow(2) +
           frac(160, 9) * q - QPoly(frac(32, 3))),
      "conic-cubic census, k=2", 3);
  add("c3_conic_cubic",
      frac(1, 18) * (q + 1) * (q - 1).pow(3) * q.pow(5) * N *
          (q.pow(5) + frac(9, 2) * q.pow(4) + frac(3, 2) * q.pow(3) + frac(39, 2) * q.pow(2) +
           frac(79, 2) * q - 9),
      "conic-cubic census, k=3", 3);
  add("c4_conic_cubic",
      frac(1, 48) * (q + 1) * (q - 1).pow(3) * q.pow(6) * N *
          (q.pow(4) + 13 * q.pow(2) + 26 * q - 48),
      "conic-cubic census, k=4", 3);
  add("c5_conic_cubic",
      frac(1, 24) * (q + 1) * (q - 1).pow(4) * q.pow(6) * N * (q.pow(2) + 2 * q - 5),
      "conic-cubic census, k=5", 3);
  add("c6_conic_cubic",
      frac(1, 720) * (q - 2) * (q + 1) * (q - 1).pow(4) * q.pow(6) * N * (q.pow(2) + 3 * q - 8),
      "conic-cubic census, k=6", 3);
  add("com_concub_1", frac(1, 2) * (q * q - q) * (q - 1).pow(2) * N.pow(2),
      "conic and cubic sharing a conjugate line pair, 1 point", 3);
  add("com_concub_2q1", frac(1, 2) * q * (q + 1) * (q.pow(3) - 1).pow(2),
      "conic and cubic sharing a component, 2q+1 points", 3);
  add("com_concub_q3", frac(1, 2) * N * (q + 1) * (q - 1).pow(3) * q.pow(5),
      "conic and cubic sharing a component, q+3 points", 3);
  add("com_concub_q2", 2 * N * (q + 1) * (q - 1).pow(2) * q.pow(5),
      "conic and cubic sharing a component, q+2 points", 3);
  add("com_concub_q1",
      frac(1, 2) * N * (q - 1).pow(2) *
          (q.pow(7) + 5 * q.pow(5) + 4 * q.pow(4) + 2 * q.pow(3) + 2 * q + 2),
      "conic and cubic sharing a component, q+1 points", 3);

  // ---- Hamming enumerators, coefficients keyed by zero count ----
  add("w22_zeros_1", frac(1, 2) * N * q * (q - 1).pow(2), "conics with 1 point", 2);
  add("w22_zeros_q1", (q.pow(3) - q.pow(2) + 1) * N * (q - 1), "conics with q+1 points", 2);
  add("w22_zeros_2q1", frac(1, 2) * N * (q + 1) * q * (q - 1), "conics with 2q+1 points", 2);

  add("w22a_zeros_0", frac(1, 2) * (q - 1) * (q.pow(3) - q + 2), "affine conics, 0 points", 3);
  add("w22a_zeros_1", frac(1, 2) * (q - 1).pow(2) * q.pow(3), "affine conics, 1 point", 3);
  add("w22a_zeros_qm1", frac(1, 2) * (q - 1).pow(2) * q.pow(3) * (q + 1),
      "affine conics, q-1 points", 3);
  add("w22a_zeros_q", (q.pow(3) - q) * (q.pow(2) - q + 2), "affine conics, q points", 3);
  add("w22a_zeros_q1", frac(1, 2) * (q - 1).pow(3) * q.pow(3), "affine conics, q+1 points", 3);
  add("w22a_zeros_2qm1", frac(1, 2) * (q - 1) * (q + 1) * q.pow(3),
      "affine conics, 2q-1 points", 3);
  add("w22a_zeros_2q", frac(1, 2) * q * (q + 1) * (q - 1).pow(2), "affine conics, 2q points", 3);

  add("wsing_zeros_3q1", frac(1, 6) * (q.pow(3) - 1) * (q.pow(3) - q),
      "singular cubics, 3q+1 points", 3);
  add("wsing_zeros_3q", frac(1, 6) * (q.pow(3) - 1) * (q.pow(4) + q.pow(3)),
      "singular cubics, 3q points", 3);
  add("wsing_zeros_2q2", frac(1, 2) * (q.pow(3) - 1) * (q.pow(3) - q.pow(2)) * (q.pow(2) - q),
      "singular cubics, 2q+2 points", 3);
  add("wsing_zeros_2q1", (q.pow(3) - 1) * (q.pow(2) + q) * (q.pow(2) - q + 1),
      "singular cubics, 2q+1 points", 3);
  add("wsing_zeros_2q", frac(1, 2) * (q.pow(6) - q.pow(3)) * (q.pow(2) - 1),
      "singular cubics, 2q points", 3);
  add("wsing_zeros_q2", frac(1, 2) * (q.pow(3) - 1) * (q.pow(6) - q.pow(5)),
      "singular cubics, q+2 points", 3);
  add("wsing_zeros_q1", frac(1, 2) * (q.pow(3) - 1) * (2 * q.pow(5) - q.pow(3) - q + 2),
      "singular cubics, q+1 points", 3);
  add("wsing_zeros_q", frac(1, 2) * (q.pow(3) - 1) * (q.pow(3) - q) * (q.pow(3) - q.pow(2)),
      "singular cubics, q points", 3);
  add("wsing_zeros_1", frac(1, 3) * (q.pow(3) - 1) * (q.pow(3) - q),
      "singular cubics, 1 point", 3);
  add("wsing_zeros_0", frac(1, 3) * (q - 1) * (q.pow(3) - q) * (q.pow(3) - q.pow(2)),
      "singular cubics, 0 points", 3);

  // ---- dual code low-weight coefficients ----
  add("B4_dual_conic", (q - 1) * N * binom_poly(q + 1, 4), "conic dual, weight 4", 2);
  add("B5_dual_conic", ((q * q - 1) - 5 * (q - 1)) * N * binom_poly(q + 1, 5),
      "conic dual, weight 5", 2);
  add("B6_dual_conic",
      f_dm_poly(2, 6) * N * binom_poly(q + 1, 6) +
          (q - 1) * (q.pow(5) - q.pow(2)) * binom_poly(q + 1, 6) +
          (q - 1) * binom_poly(N, 2) * binom_poly(q, 3).pow(2),
      "conic dual, weight 6", 2);
  add("B4_dual_affine_conic", (q - 1) * (q * q + q) * binom_poly(q, 4),
      "affine conic dual, weight 4", 3);

  add("B5_dual_cubic", (q - 1) * N * binom_poly(q + 1, 5), "cubic dual, weight 5", 3);
  add("B6_dual_cubic", ((q * q - 1) - 6 * (q - 1)) * N * binom_poly(q + 1, 6),
      "cubic dual, weight 6", 3);
  add("B7_dual_cubic", ((q.pow(3) - 1) - 7 * (q * q - 1) + 21 * (q - 1)) * N * binom_poly(q + 1, 7),
      "cubic dual, weight 7", 3);
  // first factor multiplies binom(q+1,8): the binom(q+1,7) variant disagrees
  // with the exact transform of the full enumerator at q=7
  add("B8_dual_cubic",
      f_dm_poly(3, 8) * N * binom_poly(q + 1, 8) +
          (q - 1) * (q.pow(5) - q.pow(2)) * binom_poly(q + 1, 8) +
          (q - 1) * binom_poly(N, 2) * binom_poly(q, 4).pow(2),
      "cubic dual, weight 8", 3);

  QPoly I9 = frac(1, 362880) *
             (q.pow(6) + 2 * q.pow(5) - 73 * q.pow(4) + 344 * q.pow(3) - 838 * q.pow(2) +
              1754 * q - 2030) *
             (q.pow(3) - 1) * (q + 1) * (q - 1) * (q - 2) * q.pow(4);
  add("I9", I9, "9-point sets cut out by a component-free cubic pair", 3);
  add("J8", 9 * I9, "8-point sets with a distinct ninth base point", 3);

  add("B9_dual_cubic",
      (q - 1) * I9 + (q.pow(5) - q.pow(2)) * binom_poly(q + 1, 9) * ((q * q - 1) - 9 * (q - 1)) +
          N * binom_poly(q + 1, 9) * f_dm_poly(3, 9) +
          2 * binom_poly(N, 2) * binom_poly(q, 5) * binom_poly(q, 4) *
              (q.pow(2) - 6 * q + 5) +
          binom_poly(N, 2) * binom_poly(q, 4).pow(2) * (q.pow(2) - 3 * q + 2),
      "cubic dual, weight 9", 3);

  // ---- joint second-enumerator dual coefficients ----
  add("B4_pair_dual_conic", (q * q - 1) * N * binom_poly(q + 1, 4),
      "conic dual pair, union weight 4", 2);
  add("B4_pair_dual_affine", (q * q - 1) * (q * q + q) * binom_poly(q, 4),
      "affine conic dual pair, union weight 4", 3);
  add("B5_pair_extra_concub", (q.pow(3) - 1) * (q * q - 1) * binom_poly(q + 1, 5),
      "conic+cubic dual pair, both nonzero, union weight 5", 3);
  add("B6_pair_extra_concub", (q.pow(3) - 1) * (q * q - 1) * (q * q + q - 5) * binom_poly(q + 1, 6),
      "conic+cubic dual pair, both nonzero, union weight 6", 3);

  // the collinear-support formulas need m <= q+1 points on a line
  for (int m = 5; m <= 9; ++m)
    add("g3_" + std::to_string(m), g_dm_poly(3, m),
        "cubic dual pairs with full union on " + std::to_string(m) + " collinear points",
        std::max(3, m - 1));
  for (int m = 4; m <= 9; ++m)
    add("f3_" + std::to_string(m), f_dm_poly(3, m),
        "full-support cubic dual words on " + std::to_string(m) + " collinear points",
        std::max(3, m - 1));
  for (int m = 4; m <= 8; ++m)
    add("f2_" + std::to_string(m), f_dm_poly(2, m),
        "full-support conic dual words on " + std::to_string(m) + " collinear points",
        std::max(2, m - 1));
  for (int m = 4; m <= 8; ++m)
    add("g2_" + std::to_string(m), g_dm_poly(2, m),
        "conic dual pairs with full union on " + std::to_string(m) + " collinear points",
        std::max(2, m - 1));

  QPoly B28_extra_conic = (q.pow(5) - q.pow(2)) * binom_poly(q + 1, 8) * (q - 1).pow(2);
  QPoly B28_extra_lines = binom_poly(N, 2) * binom_poly(q, 4).pow(2) * (q - 1).pow(2);
  add("B8_pair_extra_cubic", B28_extra_conic + B28_extra_lines,
      "cubic dual pairs, union weight 8, non-collinear support", 3);
  add("B9_pair_extra_cubic",
      2 * binom_poly(N, 2) * binom_poly(q, 4) * binom_poly(q, 5) *
              (q.pow(4) - 8 * q.pow(2) + 12 * q - 5) +
          binom_poly(N, 2) * binom_poly(q, 4).pow(2) * (q.pow(4) - 5 * q.pow(2) + 6 * q - 2) +
          (q.pow(5) - q.pow(2)) * binom_poly(q + 1, 9) *
              (q.pow(4) - 11 * q.pow(2) + 18 * q - 8) +
          I9 * (q - 1).pow(2),
      "cubic dual pairs, union weight 9, non-collinear support", 3);

  // ---- configuration counts (8-point subsets) ----
  QPoly C_ge7 = (q.pow(5) - q.pow(2)) * (binom_poly(q + 1, 8) + binom_poly(q + 1, 7) * q.pow(2));
  add("C_ge7", C_ge7, "8-sets with at least 7 points on a smooth conic", 2);
  QPoly L_ge4 =
      N * (binom_poly(q + 1, 8) + binom_poly(q + 1, 7) * q.pow(2) +
           binom_poly(q + 1, 6) * binom_poly(q * q, 2) + binom_poly(q + 1, 5) * binom_poly(q * q, 3) +
           binom_poly(q + 1, 4) * binom_poly(q * q, 4)) -
      N * (q * q + q) * binom_poly(q, 4) * binom_poly(q, 3) -
      binom_poly(N, 2) * binom_poly(q, 4).pow(2) -
      binom_poly(N, 2) * binom_poly(q, 3).pow(2) * (q * q - q);
  add("L_ge4", L_ge4, "8-sets with at least 4 collinear points", 2);
  add("no4no7", binom_poly(N, 8) - C_ge7 - L_ge4,
      "8-sets with no 4 collinear and no 7 on a conic", 2);
  add("absirred_8sets",
      N * (q.pow(3) - q) * q.pow(2) * binom_poly(q, 7) +
          N * (q.pow(3) - q) * (frac(1, 2) * (q.pow(3) - q.pow(2))) * binom_poly(q - 1, 7) +
          N * (q.pow(3) - q) * (frac(1, 2) * (q.pow(3) - q.pow(2))) * binom_poly(q + 1, 7),
      "8-sets on an absolutely irreducible singular cubic, one at the node", 3);
  add("conic6_line2_8sets",
      (q.pow(5) - q.pow(2)) * binom_poly(q + 1, 6) *
          (6 * (q - 5) * binom_poly(q - 1, 2) + 6 * binom_poly(q, 2)),
      "6 points on a smooth conic plus 2 on a line through exactly one", 3);
  add("two_triples_8sets",
      binom_poly(N, 2) * binom_poly(q, 3).pow(2) * 3 * (q - 3) * binom_poly(q - 1, 2),
      "two collinear triples plus 2 on a line through exactly one", 3);

  // census totals for integrity checks
  add("cubic_pair_space", q.pow(20), "ordered cubic pairs", 2);
  add("conic_pair_space", q.pow(12), "ordered conic pairs", 2);
  add("smooth_conic_count", q.pow(5) - q.pow(2), "smooth conics", 2);
  add("smooth_cubic_form_count", (q.pow(3) - 1) * (q.pow(3) - q) * (q.pow(3) - q.pow(2)) * q,
      "smooth cubic forms", 3);
}

} // namespace cubic
