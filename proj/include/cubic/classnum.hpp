#pragma once

#include <gmpxx.h>

#include "cubic/weight_enum.hpp"

namespace cubic {

// Class number h(d) of the imaginary quadratic order of discriminant d < 0,
// d = 0,1 mod 4, counted by reduced primitive forms (a,b,c): b^2-4ac = d,
// |b| <= a <= c, gcd = 1, and b >= 0 when |b| = a or a = c.
long class_number(long d);

// Weighted class number: h(-3)/3, h(-4)/2, h(d) otherwise (0 off the lattice).
mpq_class h_weighted(long d);

// Hurwitz class number H(D) = sum over f^2 | D of h_w(D / f^2).
mpq_class hurwitz_H(long D);

// Kronecker symbol (a/n) for n >= 1, completely multiplicative in n.
int kronecker(long a, long n);

// Probability that a uniformly chosen (Aut-weighted) elliptic curve class
// over F_q has Frobenius trace t; exact rational, zero outside the admissible
// cases.  The table is exhaustive: the probabilities sum to 1 for every
// prime power q (checked in sum_trace_probabilities).
mpq_class trace_probability(int q, long t);

mpq_class sum_trace_probabilities(int q);

// Predicted Hamming enumerator contribution of smooth cubics:
// coefficient of X^(q+1-t) Y^(q^2+t) is (q^3-1)(q^3-q)(q^3-q^2) q P_q(C(t)).
// Every coefficient must come out a nonnegative integer.
WeightEnum predict_smooth_enumerator(int q);

} // namespace cubic
