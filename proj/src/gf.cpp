#include "cubic/gf.hpp"

#include <algorithm>
#include <numeric>

namespace cubic {

namespace {

// dense polynomial arithmetic over F_p, coefficients as ints in [0,p)

std::vector<int> poly_mulmod(const std::vector<int>& a, const std::vector<int>& b,
                             const std::vector<int>& mod, int p) {
  std::vector<int> prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  int v = (int)mod.size() - 1;
  for (int d = (int)prod.size() - 1; d >= v; --d) {
    int c = prod[d];
    if (!c) continue;
    prod[d] = 0;
    for (int i = 0; i < v; ++i)
      prod[d - v + i] = ((prod[d - v + i] - c * mod[i]) % p + p * p) % p;
  }
  prod.resize(v);
  return prod;
}

std::vector<int> poly_powmod(std::vector<int> base, long long e,
                             const std::vector<int>& mod, int p) {
  int v = (int)mod.size() - 1;
  std::vector<int> r(v, 0);
  r[0] = 1;
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, mod, p);
    base = poly_mulmod(base, base, mod, p);
    e >>= 1;
  }
  return r;
}

bool poly_is_one_x(const std::vector<int>& a) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != (i == 1 ? 1 : 0)) return false;
  return true;
}

std::vector<int> poly_gcd(std::vector<int> a, std::vector<int> b, int p) {
  auto deg = [](const std::vector<int>& f) {
    for (int i = (int)f.size() - 1; i >= 0; --i)
      if (f[i]) return i;
    return -1;
  };
  auto invmod = [&](int x) {
    int r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = r * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return r;
  };
  while (deg(b) >= 0) {
    int db = deg(b), da = deg(a);
    if (da < db) { std::swap(a, b); continue; }
    int f = a[da] * invmod(b[db]) % p;
    for (int i = 0; i <= db; ++i)
      a[da - db + i] = ((a[da - db + i] - f * b[i]) % p + p) % p;
    // loop continues until deg drops
    while (deg(a) >= deg(b) && deg(b) >= 0 && deg(a) >= 0) {
      da = deg(a); db = deg(b);
      if (da < db) break;
      f = a[da] * invmod(b[db]) % p;
      for (int i = 0; i <= db; ++i)
        a[da - db + i] = ((a[da - db + i] - f * b[i]) % p + p) % p;
    }
    std::swap(a, b);
  }
  return a;
}

bool is_irreducible(const std::vector<int>& mod, int p) {
  int v = (int)mod.size() - 1;
  if (v == 1) return true;
  // x^(p^v) == x mod f, and gcd(x^(p^(v/r)) - x, f) = 1 for prime r | v
  std::vector<int> x(v, 0);
  if (v == 1) x.resize(1);
  x[1 % v] = 1;
  long long pv = 1;
  for (int i = 0; i < v; ++i) pv *= p;
  auto xq = poly_powmod(x, pv, mod, p);
  if (!poly_is_one_x(xq)) return false;
  for (int r = 2; r <= v; ++r) {
    if (v % r) continue;
    bool rprime = true;
    for (int s = 2; s < r; ++s)
      if (r % s == 0) rprime = false;
    if (!rprime) continue;
    long long pe = 1;
    for (int i = 0; i < v / r; ++i) pe *= p;
    auto xe = poly_powmod(x, pe, mod, p);
    // gcd(xe - x, mod)
    std::vector<int> d(v, 0);
    for (int i = 0; i < v; ++i) d[i] = ((xe[i] - (i == 1 ? 1 : 0)) % p + p) % p;
    auto g = poly_gcd(d, mod, p);
    int dg = -1;
    for (int i = (int)g.size() - 1; i >= 0; --i)
      if (g[i]) { dg = i; break; }
    if (dg != 0) return false;
  }
  return true;
}

std::vector<int> least_irreducible(int p, int v) {
  // modulus = x^v + sum c_i x^i; scan non-leading coefficient codes upward
  long long limit = 1;
  for (int i = 0; i < v; ++i) limit *= p;
  for (long long code = 0; code < limit; ++code) {
    std::vector<int> mod(v + 1, 0);
    long long c = code;
    for (int i = 0; i < v; ++i) { mod[i] = (int)(c % p); c /= p; }
    mod[v] = 1;
    if (is_irreducible(mod, p)) return mod;
  }
  throw FieldError("no irreducible polynomial found (unreachable)");
}

std::vector<int> factorize(long long n) {
  std::vector<int> fs;
  for (long long d = 2; d * d <= n; ++d)
    while (n % d == 0) {
      if (fs.empty() || fs.back() != d) fs.push_back((int)d);
      n /= d;
    }
  if (n > 1) fs.push_back((int)n);
  return fs;
}

} // namespace

bool is_prime_power(int q, int* p_out, int* v_out) {
  if (q < 2) return false;
  int p = 0;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) { p = d; break; }
  if (p == 0) p = q;
  int v = 0, m = q;
  while (m % p == 0) { m /= p; ++v; }
  if (m != 1) return false;
  if (p_out) *p_out = p;
  if (v_out) *v_out = v;
  return true;
}

Field Field::make(int q) {
  int p, v;
  if (q < 2 || q > 64)
    throw FieldError("field size " + std::to_string(q) + " out of range [2,64]");
  if (!is_prime_power(q, &p, &v))
    throw FieldError("field size " + std::to_string(q) + " is not a prime power");
  return build(p, v, least_irreducible(p, v));
}

Field Field::make_with_modulus(int p, const std::vector<int>& modulus) {
  int pp, vv;
  if (!is_prime_power(p, &pp, &vv) || vv != 1)
    throw FieldError("characteristic must be prime");
  if (modulus.size() < 2 || modulus.back() != 1)
    throw FieldError("modulus must be monic of degree >= 1");
  if (!is_irreducible(modulus, p)) throw FieldError("modulus is reducible");
  return build(p, (int)modulus.size() - 1, modulus);
}

Field Field::build(int p, int v, const std::vector<int>& modulus) {
  Field F;
  F.p_ = p;
  F.v_ = v;
  long long q = 1;
  for (int i = 0; i < v; ++i) q *= p;
  if (q > (1 << 18)) throw FieldError("field of size " + std::to_string(q) +
                                      " exceeds table limit 2^18");
  F.q_ = (int)q;
  F.modulus_ = modulus;

  // elements as coefficient codes; multiplication via poly_mulmod
  auto code_mul = [&](long long a, long long b) {
    std::vector<int> pa(v, 0), pb(v, 0);
    for (int i = 0; i < v; ++i) { pa[i] = (int)(a % p); a /= p; }
    for (int i = 0; i < v; ++i) { pb[i] = (int)(b % p); b /= p; }
    auto pr = poly_mulmod(pa, pb, modulus, p);
    long long c = 0;
    for (int i = v - 1; i >= 0; --i) c = c * p + pr[i];
    return c;
  };
  auto order_of = [&](long long a) {
    long long n = q - 1;
    long long ord = n;
    for (int r : factorize(n)) {
      while (ord % r == 0) {
        // a^(ord/r) == 1 ?
        long long e = ord / r, acc = 1, base = a;
        while (e) {
          if (e & 1) acc = code_mul(acc, base);
          base = code_mul(base, base);
          e >>= 1;
        }
        if (acc == 1) ord /= r;
        else break;
      }
    }
    return ord;
  };

  long long gen = 0;
  for (long long cand = 2; cand < q; ++cand)
    if (order_of(cand) == q - 1) { gen = cand; break; }
  if (q == 2) gen = 1;

  // index assignment: 0 -> 0, g^e -> 1+e
  std::vector<Elt> code_to_idx(q, 0);
  std::vector<long long> idx_to_code(q, 0);
  long long acc = 1;
  for (int e = 0; e < q - 1; ++e) {
    code_to_idx[acc] = (Elt)(1 + e);
    idx_to_code[1 + e] = acc;
    acc = code_mul(acc, gen);
  }

  F.exp_.resize(2 * (q - 1));
  F.log_.assign(q, -1);
  for (int e = 0; e < q - 1; ++e) {
    F.exp_[e] = (Elt)(1 + e);
    F.exp_[e + q - 1] = (Elt)(1 + e);
    F.log_[1 + e] = e;
  }

  // addition on codes is digitwise mod p
  auto code_add = [&](long long a, long long b) {
    long long r = 0, m = 1;
    for (int i = 0; i < v; ++i) {
      r += ((a % p + b % p) % p) * m;
      a /= p; b /= p; m *= p;
    }
    return r;
  };

  F.zech_.assign(q - 1, ZECH_NONE);
  for (int e = 0; e < q - 1; ++e) {
    long long s = code_add(1, idx_to_code[1 + e]);
    if (s != 0) F.zech_[e] = code_to_idx[s]; // stores index of 1+g^e
  }

  F.negtab_.resize(q);
  F.negtab_[0] = 0;
  for (int a = 1; a < q; ++a) {
    long long c = idx_to_code[a];
    long long n = 0, m = 1;
    for (int i = 0; i < v; ++i) { n += ((p - c % p) % p) * m; c /= p; m *= p; }
    F.negtab_[a] = code_to_idx[n];
  }
  F.invtab_.resize(q);
  F.invtab_[0] = 0;
  for (int a = 1; a < q; ++a) F.invtab_[a] = F.exp_[(q - 1 - F.log_[a]) % (q - 1)];

  if (q <= 64) {
    F.dense_ = true;
    F.addtab_.resize(q * q);
    F.multab_.resize(q * q);
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        F.addtab_[a * q + b] = code_to_idx[code_add(idx_to_code[a], idx_to_code[b])];
        F.multab_[a * q + b] = code_to_idx[code_mul(idx_to_code[a], idx_to_code[b])];
      }
  }
  return F;
}

Elt Field::zech_add(Elt a, Elt b) const {
  if (a == 0) return b;
  if (b == 0) return a;
  int la = log_[a], lb = log_[b];
  int d = lb - la;
  if (d < 0) { std::swap(la, lb); d = -d; }
  Elt z = zech_[d];
  if (z == ZECH_NONE) return 0; // 1 + g^d = 0
  return exp_[la + log_[z]];
}

Elt Field::pow(Elt a, long long e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  long long r = e % (q_ - 1);
  if (r < 0) r += q_ - 1;
  return exp_[(size_t)(((long long)log_[a] * r) % (q_ - 1))];
}

Elt Field::from_int(long long n) const {
  long long r = n % p_;
  if (r < 0) r += p_;
  Elt acc = 0;
  for (long long i = 0; i < r; ++i) acc = add(acc, 1);
  return acc;
}

uint64_t Field::fingerprint() const {
  uint64_t h = 1469598103934665603ull;
  auto mix = [&](uint64_t x) { h ^= x; h *= 1099511628211ull; };
  mix((uint64_t)q_);
  for (int c : modulus_) mix((uint64_t)c);
  for (Elt e : zech_) mix(e);
  return h;
}

FieldExtension extend_field(const Field& base, int degree) {
  if (degree != 2 && degree != 3)
    throw FieldError("extension degree must be 2 or 3");
  long long Q = 1;
  for (int i = 0; i < degree; ++i) Q *= base.q();
  if (Q > (1 << 18))
    throw FieldError("extension table size " + std::to_string(Q) +
                     " exceeds limit " + std::to_string(1 << 18));
  Field ext = Field::build(base.p(), base.v() * degree,
                           least_irreducible(base.p(), base.v() * degree));

  int q = base.q();
  long long step = (Q - 1) / (q - 1);
  // candidates for the image of the base generator: elements of order q-1
  // whose induced map is additive; among the valid conjugates take the one
  // with the least element index.
  Elt best = 0;
  std::vector<Elt> best_map;
  for (long long s = 1; s < q - 1 + 1; ++s) {
    if (std::gcd(s, (long long)(q - 1)) != 1 && q > 2) continue;
    if (q == 2 && s > 1) break;
    Elt h = ext.exp((int)((s * step) % (Q - 1)));
    std::vector<Elt> map(q, 0);
    map[0] = 0;
    for (int e = 0; e < q - 1; ++e) map[1 + e] = ext.pow(h, e);
    bool ok = true;
    for (int a = 0; a < q && ok; ++a)
      for (int b = 0; b < q && ok; ++b)
        if (map[base.add((Elt)a, (Elt)b)] != ext.add(map[a], map[b])) ok = false;
    if (ok && (best == 0 || h < best)) {
      best = h;
      best_map = std::move(map);
    }
  }
  if (best_map.empty()) throw FieldError("no additive embedding found (bug)");
  // ring homomorphism: multiplicativity holds by construction; spot-checked
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      if (best_map[base.mul((Elt)a, (Elt)b)] != ext.mul(best_map[a], best_map[b]))
        throw FieldError("embedding not multiplicative (bug)");
  return FieldExtension{std::move(ext), std::move(best_map)};
}

} // namespace cubic
