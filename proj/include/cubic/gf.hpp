#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubic {

// Element of a finite field, identified by its position in the field's
// canonical numbering: index 0 is the zero element, index 1 is one, and
// index 1+e is g^e for the canonical generator g.
using Elt = uint32_t;

class FieldError : public std::runtime_error {
public:
  explicit FieldError(const std::string& what) : std::runtime_error(what) {}
};

class Field;
struct FieldExtension;
FieldExtension extend_field(const Field& base, int degree);

// Arithmetic tables for F_q, q = p^v.  Immutable after construction and
// safe to share across threads.  Base fields (q <= 64) carry dense q*q
// add/mul tables; extension fields up to 2^18 elements use exp/log plus a
// Zech table for addition.
class Field {
public:
  // Canonical field of size q, 2 <= q <= 64, q a prime power.  The defining
  // modulus is the monic irreducible of degree v over F_p with the least
  // coefficient code sum(c_i p^i), so every downstream enumeration is
  // reproducible across runs and platforms.
  static Field make(int q);

  // Construction with an explicit modulus (coefficients c_0..c_v over F_p,
  // monic).  Exists so tests can confirm counted quantities do not depend
  // on the modulus choice.
  static Field make_with_modulus(int p, const std::vector<int>& modulus);

  int q() const { return q_; }
  int p() const { return p_; }
  int v() const { return v_; }
  const std::vector<int>& modulus() const { return modulus_; }

  Elt zero() const { return 0; }
  Elt one() const { return 1; }
  Elt generator() const { return q_ == 2 ? 1 : 2; }

  Elt add(Elt a, Elt b) const {
    if (dense_) return addtab_[a * q_ + b];
    return zech_add(a, b);
  }
  Elt sub(Elt a, Elt b) const { return add(a, neg(b)); }
  Elt neg(Elt a) const { return negtab_[a]; }
  Elt mul(Elt a, Elt b) const {
    if (dense_) return multab_[a * q_ + b];
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Elt inv(Elt a) const {
    if (a == 0) throw FieldError("inverse of zero in F_" + std::to_string(q_));
    return invtab_[a];
  }

  // Square-and-multiply; the exponent is reduced mod q-1 for nonzero bases.
  // pow(a, 0) is 1 for every a, including a = 0.
  Elt pow(Elt a, long long e) const;

  // Image of the integer n under Z -> F_q (n times one).
  Elt from_int(long long n) const;

  // Frobenius x -> x^p.
  Elt frob(Elt a) const { return pow(a, p_); }

  int log(Elt a) const { return a == 0 ? -1 : log_[a]; }
  Elt exp(int e) const { return exp_[((e % (q_ - 1)) + (q_ - 1)) % (q_ - 1)]; }

  const Elt* add_table() const { return dense_ ? addtab_.data() : nullptr; }
  const Elt* mul_table() const { return dense_ ? multab_.data() : nullptr; }

  // Stable fingerprint of the construction (modulus + element numbering).
  uint64_t fingerprint() const;

private:
  friend FieldExtension extend_field(const Field&, int);
  static Field build(int p, int v, const std::vector<int>& modulus);

  Elt zech_add(Elt a, Elt b) const;

  int q_ = 0, p_ = 0, v_ = 0;
  bool dense_ = false;
  std::vector<int> modulus_;
  std::vector<Elt> exp_;     // exp_[e], e in [0, 2(q-1)) to skip one reduction
  std::vector<int32_t> log_; // log_[idx] for idx >= 1
  std::vector<Elt> zech_;    // index z with 1 + g^e = g^z, or ZECH_NONE
  std::vector<Elt> negtab_;
  std::vector<Elt> invtab_;
  std::vector<Elt> addtab_, multab_;

  static constexpr Elt ZECH_NONE = 0xffffffffu;
};

// F_{q^degree} together with the embedding table F_q -> F_{q^degree}.
struct FieldExtension {
  Field field;
  std::vector<Elt> embed; // embed[a] for every a in the base field
};

// degree in {2,3}; requires q^degree <= 2^18.  The embedding preserves 0, 1,
// addition and multiplication (verified during construction).
FieldExtension extend_field(const Field& base, int degree);

bool is_prime_power(int q, int* p_out = nullptr, int* v_out = nullptr);

} // namespace cubic
