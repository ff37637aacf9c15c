#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "cubic/gf.hpp"

namespace cubic {

using Point3 = std::array<Elt, 3>;

// Homogeneous form of degree d in x,y,z.  Coefficients follow the degree-d
// monomial list in graded-lexicographic exponent order (x^d first, z^d last).
struct Form {
  int d = 0;
  std::vector<Elt> c;

  bool is_zero() const {
    for (Elt e : c)
      if (e) return false;
    return true;
  }
};

inline int form_dim(int d) { return (d + 1) * (d + 2) / 2; }

// Exponent triples (i,j,k), i+j+k = d, graded-lex order.
const std::vector<std::array<int, 3>>& monomials(int d);
int monomial_index(int d, int i, int j, int k);

Elt evaluate_form(const Field& F, const Form& f, const Point3& pt);
Form form_mul(const Field& F, const Form& a, const Form& b);
Form form_add(const Field& F, const Form& a, const Form& b);
Form form_scale(const Field& F, const Form& a, Elt s);
Form derivative(const Field& F, const Form& f, int var);

// Scales so the first nonzero coefficient is 1 (identity on the zero form).
Form canonical_form(const Field& F, const Form& f);

// Exact division by the linear form a*x+b*y+c*z; nullopt when not divisible.
std::optional<Form> divide_linear(const Field& F, const Form& f, const Point3& line);

// g(x) = f(M x) with (M x)_r = sum_s M[r][s] x_s.
Form substitute(const Field& F, const Form& f, const std::array<Point3, 3>& M);

// Projective classes of nonzero degree-d forms: canonical representative has
// first nonzero coefficient 1; classes are indexed by pivot position blocks,
// then by the remaining coefficients read as a big-endian base-q number.
uint64_t class_count(int q, int ncoeff);
std::vector<Elt> class_rep(const Field& F, int ncoeff, uint64_t index);
uint64_t class_index(const Field& F, const std::vector<Elt>& coeffs);

} // namespace cubic
