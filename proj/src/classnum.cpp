#include "cubic/classnum.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "cubic/gf.hpp"

namespace cubic {

long class_number(long d) {
  if (d >= 0 || ((d % 4 + 4) % 4 != 0 && (d % 4 + 4) % 4 != 1))
    throw std::invalid_argument("class_number: discriminant must be negative, 0 or 1 mod 4");
  long count = 0;
  for (long a = 1; 3 * a * a <= -d; ++a) {
    for (long b = -a; b <= a; ++b) {
      long num = b * b - d;
      if (num % (4 * a)) continue;
      long c = num / (4 * a);
      if (c < a) continue;
      if ((b < 0) && (-b == a || a == c)) continue;
      if (std::gcd(std::gcd(a, std::abs(b)), c) != 1) continue;
      ++count;
    }
  }
  return count;
}

mpq_class h_weighted(long d) {
  if (d >= 0) return 0;
  long m = ((d % 4) + 4) % 4;
  if (m != 0 && m != 1) return 0;
  if (d == -3) return mpq_class(1, 3);
  if (d == -4) return mpq_class(1, 2);
  return mpq_class(class_number(d));
}

mpq_class hurwitz_H(long D) {
  long m = ((D % 4) + 4) % 4;
  if (D >= 0 || (m != 0 && m != 1))
    throw std::invalid_argument("hurwitz_H: discriminant must be negative, 0 or 1 mod 4");
  mpq_class s = 0;
  for (long f = 1; f * f <= -D; ++f)
    if (D % (f * f) == 0) s += h_weighted(D / (f * f));
  return s;
}

static int kronecker_prime(long a, long p) {
  if (p == 2) {
    if (a % 2 == 0) return 0;
    long m = ((a % 8) + 8) % 8;
    return (m == 1 || m == 7) ? 1 : -1;
  }
  long m = ((a % p) + p) % p;
  if (m == 0) return 0;
  // Euler's criterion
  long r = 1, base = m, e = (p - 1) / 2;
  while (e) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

int kronecker(long a, long n) {
  if (n < 1) throw std::invalid_argument("kronecker: n must be positive");
  int out = 1;
  for (long p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      out *= kronecker_prime(a, p);
      n /= p;
    }
  if (n > 1) out *= kronecker_prime(a, n);
  return out;
}

mpq_class trace_probability(int q, long t) {
  int p, v;
  if (!is_prime_power(q, &p, &v))
    throw std::invalid_argument("trace_probability: q must be a prime power");
  if (t * t > 4L * q) return 0;
  bool square = (v % 2 == 0);
  if (t * t < 4L * q && t % p != 0) return hurwitz_H(t * t - 4L * q) / (2 * q);
  auto canon = [](mpq_class v) {
    v.canonicalize();
    return v;
  };
  if (!square) {
    if (t == 0) return hurwitz_H(-4L * p) / (2 * q);
    if (t * t == 2L * q && p == 2) return canon(mpq_class(1, 4 * q));
    if (t * t == 3L * q && p == 3) return canon(mpq_class(1, 6 * q));
    return 0;
  }
  if (t == 0) return canon(mpq_class(1 - kronecker(-4, p), 4 * q));
  if (t * t == (long)q) return canon(mpq_class(1 - kronecker(-3, p), 6 * q));
  if (t * t == 4L * q) return canon(mpq_class(p - 1, 24 * q));
  return 0;
}

mpq_class sum_trace_probabilities(int q) {
  mpq_class s = 0;
  long b = (long)std::sqrt(4.0 * q) + 2;
  for (long t = -b; t <= b; ++t)
    if (t * t <= 4L * q) s += trace_probability(q, t);
  return s;
}

WeightEnum predict_smooth_enumerator(int q) {
  if (q <= 2) throw std::invalid_argument("predict_smooth_enumerator: needs q > 2");
  int n = q * q + q + 1;
  WeightEnum w(n);
  mpz_class pref = (pow_z(q, 3) - 1) * (pow_z(q, 3) - q) * (pow_z(q, 3) - q * q) * q;
  long b = (long)std::sqrt(4.0 * q) + 2;
  for (long t = -b; t <= b; ++t) {
    if (t * t > 4L * q) continue;
    mpq_class pr = trace_probability(q, t);
    if (pr == 0) continue;
    mpq_class coeff = mpq_class(pref) * pr;
    coeff.canonicalize();
    if (coeff.get_den() != 1)
      throw std::logic_error("predict_smooth_enumerator: non-integral coefficient at t=" +
                             std::to_string(t));
    if (coeff < 0)
      throw std::logic_error("predict_smooth_enumerator: negative coefficient at t=" +
                             std::to_string(t));
    w.counts[q * q + t] += coeff.get_num();
  }
  return w;
}

} // namespace cubic
