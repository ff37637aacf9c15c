#include "cubic/closed_forms.hpp"

#include <stdexcept>

#include "cubic/classnum.hpp"

namespace cubic {

namespace {
const FormulaRegistry& reg() { return FormulaRegistry::instance(); }

mpz_class ev(const std::string& id, int q) {
  mpq_class v = reg().eval(id, q, /*allow_out_of_range=*/q >= 2);
  v.canonicalize();
  if (v.get_den() != 1)
    throw std::logic_error("formula " + id + " non-integral at q=" + std::to_string(q));
  return v.get_num();
}
} // namespace

int pair_case_length(PairCase c, int q) {
  return c == PairCase::AffineConic ? q * q : q * q + q + 1;
}

int pair_case_unknowns(PairCase c) {
  switch (c) {
    case PairCase::ConicConic:
    case PairCase::AffineConic: return 5;
    case PairCase::ConicCubic: return 7;
    case PairCase::CubicCubic: return 10;
  }
  return 0;
}

mpz_class pair_case_size_product(PairCase c, int q) {
  switch (c) {
    case PairCase::ConicConic:
    case PairCase::AffineConic: return pow_z(q, 12);
    case PairCase::ConicCubic: return pow_z(q, 16);
    case PairCase::CubicCubic: return pow_z(q, 20);
  }
  return 0;
}

const char* pair_case_name(PairCase c) {
  switch (c) {
    case PairCase::ConicConic: return "conic-conic";
    case PairCase::AffineConic: return "affine-conic";
    case PairCase::ConicCubic: return "conic-cubic";
    case PairCase::CubicCubic: return "cubic-cubic";
  }
  return "?";
}

WeightEnum closed_form_w_conic(int q) {
  int n = q * q + q + 1;
  WeightEnum w(n);
  w.counts[0] = 1;
  w.counts[n - 1] = ev("w22_zeros_1", q);
  w.counts[n - (q + 1)] = ev("w22_zeros_q1", q);
  w.counts[n - (2 * q + 1)] = ev("w22_zeros_2q1", q);
  if (w.total() != pow_z(q, 6)) throw std::logic_error("conic enumerator total mismatch");
  return w;
}

WeightEnum closed_form_w_affine_conic(int q) {
  int n = q * q;
  WeightEnum w(n);
  w.counts[0] = 1;
  auto slot = [&](int zeros, const char* id) { w.counts[n - zeros] += ev(id, q); };
  slot(0, "w22a_zeros_0");
  slot(1, "w22a_zeros_1");
  slot(q - 1, "w22a_zeros_qm1");
  slot(q, "w22a_zeros_q");
  slot(q + 1, "w22a_zeros_q1");
  slot(2 * q - 1, "w22a_zeros_2qm1");
  slot(2 * q, "w22a_zeros_2q");
  if (w.total() != pow_z(q, 6)) throw std::logic_error("affine enumerator total mismatch");
  return w;
}

WeightEnum closed_form_w_cubic_singular(int q) {
  int n = q * q + q + 1;
  WeightEnum w(n);
  w.counts[0] = 1;
  auto slot = [&](int zeros, const char* id) { w.counts[n - zeros] += ev(id, q); };
  slot(3 * q + 1, "wsing_zeros_3q1");
  slot(3 * q, "wsing_zeros_3q");
  slot(2 * q + 2, "wsing_zeros_2q2");
  slot(2 * q + 1, "wsing_zeros_2q1");
  slot(2 * q, "wsing_zeros_2q");
  slot(q + 2, "wsing_zeros_q2");
  slot(q + 1, "wsing_zeros_q1");
  slot(q, "wsing_zeros_q");
  slot(1, "wsing_zeros_1");
  slot(0, "wsing_zeros_0");
  return w;
}

WeightEnum closed_form_w_cubic(int q) {
  WeightEnum w = closed_form_w_cubic_singular(q);
  w.add(predict_smooth_enumerator(q));
  if (w.total() != pow_z(q, 10)) throw std::logic_error("cubic enumerator total mismatch");
  return w;
}

std::vector<mpz_class> closed_form_census(PairCase c, int q) {
  std::vector<mpz_class> out;
  auto grab = [&](const char* stem, int u) {
    for (int k = 0; k < u; ++k) out.push_back(ev("c" + std::to_string(k) + stem, q));
  };
  switch (c) {
    case PairCase::ConicConic: grab("_conic_conic", 5); break;
    case PairCase::AffineConic: grab("_affine_conic", 5); break;
    case PairCase::ConicCubic: grab("_conic_cubic", 7); break;
    case PairCase::CubicCubic: grab("_cubic_cubic", 10); break;
  }
  return out;
}

std::vector<mpz_class> closed_form_common_by_zeros(PairCase c, int q) {
  int n = pair_case_length(c, q);
  std::vector<mpz_class> out(n + 1, 0);
  auto slot = [&](int k, const char* id) { out[k] += ev(id, q); };
  switch (c) {
    case PairCase::ConicConic:
      slot(q + 2, "com_conic_q2");
      slot(q + 1, "com_conic_q1");
      break;
    case PairCase::AffineConic:
      slot(q, "com_affine_q0");
      slot(q + 1, "com_affine_q1");
      break;
    case PairCase::ConicCubic:
      slot(1, "com_concub_1");
      slot(2 * q + 1, "com_concub_2q1");
      slot(q + 3, "com_concub_q3");
      slot(q + 2, "com_concub_q2");
      slot(q + 1, "com_concub_q1");
      break;
    case PairCase::CubicCubic:
      slot(1, "a_1_common");
      slot(2, "a_2_common");
      slot(2 * q + 1, "a_2q1_common");
      slot(2 * q + 2, "a_2q2_common");
      slot(q + 1, "a_q1_common");
      slot(q + 2, "a_q2_common");
      slot(q + 3, "a_q3_common");
      slot(q + 4, "a_q4_common");
      slot(q + 5, "a_q5_common");
      break;
  }
  return out;
}

WeightEnum assemble_known_part(PairCase c, int q) {
  int n = pair_case_length(c, q);
  WeightEnum w(n);
  if (c == PairCase::ConicCubic) {
    w.add(closed_form_w_conic(q));
    w.add(closed_form_w_cubic(q));
    w.counts[0] -= 1;
  } else {
    WeightEnum h = (c == PairCase::ConicConic)   ? closed_form_w_conic(q)
                   : (c == PairCase::AffineConic) ? closed_form_w_affine_conic(q)
                                                  : closed_form_w_cubic(q);
    w.add(h, q + 1);
    w.counts[0] -= q;
  }
  auto com = closed_form_common_by_zeros(c, q);
  for (int k = 0; k <= n; ++k) w.counts[n - k] += com[k];
  return w;
}

WeightEnum assemble_second_enumerator(PairCase c, int q) {
  int n = pair_case_length(c, q);
  WeightEnum w = assemble_known_part(c, q);
  auto census = closed_form_census(c, q);
  for (size_t k = 0; k < census.size(); ++k) w.counts[n - (int)k] += census[k];
  if (w.total() != pair_case_size_product(c, q))
    throw std::logic_error("assembled second enumerator total mismatch");
  return w;
}

std::vector<mpz_class> dual_low_coeffs_conic(int q) {
  return {1, 0, 0, 0, ev("B4_dual_conic", q), ev("B5_dual_conic", q), ev("B6_dual_conic", q)};
}

std::vector<mpz_class> dual_low_coeffs_cubic(int q) {
  return {1, 0, 0, 0, 0,
          ev("B5_dual_cubic", q), ev("B6_dual_cubic", q), ev("B7_dual_cubic", q),
          ev("B8_dual_cubic", q), ev("B9_dual_cubic", q)};
}

std::vector<mpz_class> dual_low_coeffs_affine_conic(int q) {
  return {1, 0, 0, 0, ev("B4_dual_affine_conic", q)};
}

std::vector<mpz_class> dual_pair_low_coeffs(PairCase c, int q) {
  mpz_class N = mpz_class(q) * q + q + 1;
  switch (c) {
    case PairCase::ConicConic:
      return {1, 0, 0, 0, ev("B4_pair_dual_conic", q)};
    case PairCase::AffineConic:
      return {1, 0, 0, 0, ev("B4_pair_dual_affine", q)};
    case PairCase::ConicCubic: {
      auto b22 = dual_low_coeffs_conic(q);
      auto b23 = dual_low_coeffs_cubic(q);
      return {1, 0, 0, 0,
              b22[4],
              b22[5] + b23[5] + ev("B5_pair_extra_concub", q),
              b22[6] + b23[6] + ev("B6_pair_extra_concub", q)};
    }
    case PairCase::CubicCubic: {
      auto b23 = dual_low_coeffs_cubic(q);
      std::vector<mpz_class> out{1, 0, 0, 0, 0};
      for (int i = 5; i <= 9; ++i) {
        mpz_class v = 2 * b23[i] + N * binom(q + 1, i) * ev("g3_" + std::to_string(i), q);
        if (i == 8) v += ev("B8_pair_extra_cubic", q);
        if (i == 9) v += ev("B9_pair_extra_cubic", q);
        out.push_back(v);
      }
      return out;
    }
  }
  return {};
}

std::vector<mpq_class> solve_low_coefficients(const WeightEnum& known,
                                              const std::vector<mpz_class>& dual_targets,
                                              int q, const mpz_class& size_product) {
  const int n = known.n;
  const int u = (int)dual_targets.size();
  const mpz_class c2 = mpz_class(q) * q - 1;
  // M[i][j] = coefficient of X^(n-i) Y^i in (X + (q^2-1) Y)^j (X - Y)^(n-j)
  std::vector<std::vector<mpq_class>> M(u, std::vector<mpq_class>(u));
  for (int i = 0; i < u; ++i)
    for (int j = 0; j < u; ++j) {
      mpz_class coef = 0;
      for (int s = 0; s <= std::min(i, j); ++s) {
        mpz_class term = binom(j, s) * pow_z(c2, s) * binom(n - j, i - s);
        if ((i - s) & 1) coef -= term;
        else coef += term;
      }
      M[i][j] = mpq_class(coef);
    }
  WeightEnum kt = transform_subst(known, c2);
  std::vector<mpq_class> rhs(u);
  for (int i = 0; i < u; ++i) rhs[i] = mpq_class(size_product * dual_targets[i] - kt.counts[i]);

  // exact Gaussian elimination
  for (int col = 0; col < u; ++col) {
    int piv = -1;
    for (int r = col; r < u; ++r)
      if (M[r][col] != 0) { piv = r; break; }
    if (piv < 0) throw std::logic_error("solve_low_coefficients: singular system");
    std::swap(M[col], M[piv]);
    std::swap(rhs[col], rhs[piv]);
    mpq_class inv = 1 / M[col][col];
    for (int j = col; j < u; ++j) M[col][j] *= inv;
    rhs[col] *= inv;
    for (int r = 0; r < u; ++r) {
      if (r == col || M[r][col] == 0) continue;
      mpq_class f = M[r][col];
      for (int j = col; j < u; ++j) M[r][j] -= f * M[col][j];
      rhs[r] -= f * rhs[col];
    }
  }
  return rhs;
}

std::vector<mpz_class> solve_low_coefficients(PairCase c, int q) {
  WeightEnum known = assemble_known_part(c, q);
  auto targets = dual_pair_low_coeffs(c, q);
  auto sol = solve_low_coefficients(known, targets, q, pair_case_size_product(c, q));
  std::vector<mpz_class> out;
  for (auto& v : sol) {
    v.canonicalize();
    if (v.get_den() != 1)
      throw std::logic_error("solve_low_coefficients: non-integral census coefficient");
    out.push_back(v.get_num());
  }
  return out;
}

} // namespace cubic
