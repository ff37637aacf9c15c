#pragma once

#include <vector>

#include "cubic/qpoly.hpp"
#include "cubic/weight_enum.hpp"

namespace cubic {

enum class PairCase { ConicConic, AffineConic, ConicCubic, CubicCubic };

int pair_case_length(PairCase c, int q);      // evaluation domain size
int pair_case_unknowns(PairCase c);           // de + 1
mpz_class pair_case_size_product(PairCase c, int q);
const char* pair_case_name(PairCase c);

// Hamming enumerators from the registered coefficient formulas.
WeightEnum closed_form_w_conic(int q);
WeightEnum closed_form_w_affine_conic(int q);
WeightEnum closed_form_w_cubic_singular(int q); // zero form included
WeightEnum closed_form_w_cubic(int q);          // singular + class-number smooth part

// c_0..c_de for the case, exact integers.
std::vector<mpz_class> closed_form_census(PairCase c, int q);

// common-component pair counts indexed by common zero count k (length n+1).
std::vector<mpz_class> closed_form_common_by_zeros(PairCase c, int q);

// The full second weight enumerator of the case at numeric q, assembled from
// the Hamming enumerators, the common-component contribution and the census
// coefficients.
WeightEnum assemble_second_enumerator(PairCase c, int q);

// Everything of the assembly except the unknown c_j slots.
WeightEnum assemble_known_part(PairCase c, int q);

// Low-weight coefficients of the dual-side enumerators.
std::vector<mpz_class> dual_low_coeffs_conic(int q);        // B_0..B_6
std::vector<mpz_class> dual_low_coeffs_cubic(int q);        // B_0..B_9
std::vector<mpz_class> dual_low_coeffs_affine_conic(int q); // B_0..B_4
std::vector<mpz_class> dual_pair_low_coeffs(PairCase c, int q); // B{[2]}_0..u-1

// Solve the u x u system for the unknown low coefficients from the dual-side
// targets; reproduces closed_form_census exactly.
std::vector<mpz_class> solve_low_coefficients(PairCase c, int q);

// Generic form: known part of the second enumerator, dual-side targets for
// weights 0..u-1, returns the unique exact solution.
std::vector<mpq_class> solve_low_coefficients(const WeightEnum& known,
                                              const std::vector<mpz_class>& dual_targets,
                                              int q, const mpz_class& size_product);

} // namespace cubic
