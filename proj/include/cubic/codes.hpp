#pragma once

#include <string>
#include <vector>

#include "cubic/gf.hpp"
#include "cubic/mask.hpp"
#include "cubic/plane.hpp"

namespace cubic {

enum class CodeKind { Projective, Affine, Dual };

struct LinearCode {
  Field F;
  CodeKind kind;
  int degree; // degree of the defining forms; for duals, of the parent code
  int n = 0, k = 0;
  std::vector<std::vector<Elt>> gen; // k rows of length n

  std::string kind_tag() const;
};

struct Codeword {
  std::vector<Elt> symbols;
  Mask2 mask;
  int weight() const { return mask.popcount(); }
};

// Evaluation code of degree-d forms at the canonical points of P^2(F_q).
// Requires q > d so the evaluation map is injective.
LinearCode build_projective_code(const Plane& plane, int d);

// Evaluation code of polynomials of degree <= d in two variables at the q^2
// affine points, ordered lexicographically.  Requires q - 1 >= d.
// Monomial order mirrors the projective one: degree-descending graded-lex
// (x^2, xy, y^2, x, y, 1 for d = 2).
LinearCode build_affine_code(const Field& F, int d);

// Basis of the null space of the generator matrix under <x,y> = sum x_i y_i.
LinearCode dual_code(const LinearCode& c);

Codeword encode(const LinearCode& c, const std::vector<Elt>& message);

// Affine monomials (i,j) with i+j <= d, degree-descending graded-lex.
std::vector<std::array<int, 2>> affine_monomials(int d);

} // namespace cubic
