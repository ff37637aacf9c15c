#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace cubic {

// Length-(n+1) vector of exact counts: counts[i] pairs with X^(n-i) Y^i, so
// the index is the weight (or support-union size) and the X-exponent n-i is
// the number of coordinates that vanish.
struct WeightEnum {
  int n = 0;
  std::vector<mpz_class> counts;

  WeightEnum() = default;
  explicit WeightEnum(int len) : n(len), counts(len + 1, mpz_class(0)) {}

  mpz_class total() const;
  bool operator==(const WeightEnum& o) const { return n == o.n && counts == o.counts; }

  WeightEnum& add(const WeightEnum& o, const mpz_class& scale = 1);
  std::string to_string() const; // nonzero terms, for diagnostics
};

// W(X + cY, X - Y), exact.
WeightEnum transform_subst(const WeightEnum& w, const mpz_class& c);

// Classical MacWilliams: W_dual = (1/|C|) W(X+(q-1)Y, X-Y).  Division must be
// exact; a remainder means the input enumerator is inconsistent.
WeightEnum macwilliams(const WeightEnum& w, int q, const mpz_class& code_size);

// Second-enumerator MacWilliams: substitute (X+(q^2-1)Y, X-Y) and divide by
// |C1|*|C2|.
WeightEnum macwilliams2(const WeightEnum& w, int q, const mpz_class& size_product);

// Inverse of the substitution: recovers W from W(X+cY, X-Y) exactly.
WeightEnum inverse_subst(const WeightEnum& w, const mpz_class& c);

mpz_class binom(long n, long k);
mpz_class pow_z(const mpz_class& b, long e);

} // namespace cubic
