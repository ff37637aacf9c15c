#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace cubic {

// Univariate polynomial in q with exact rational coefficients, stored
// expanded, ascending powers.
class QPoly {
public:
  QPoly() = default;
  explicit QPoly(mpq_class c0) : c_{std::move(c0)} { trim(); }
  static QPoly x() { return QPoly(std::vector<mpq_class>{0, 1}); }
  explicit QPoly(std::vector<mpq_class> c) : c_(std::move(c)) { trim(); }

  int degree() const { return (int)c_.size() - 1; } // -1 for the zero poly
  mpq_class leading() const { return c_.empty() ? mpq_class(0) : c_.back(); }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  mpq_class eval(const mpq_class& q) const;
  // evaluation that must land in Z (count-valued formulas)
  mpz_class eval_int(long q) const;

  QPoly pow(int e) const;

  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a) { return QPoly(mpq_class(-1)) * a; }
  friend QPoly operator+(const QPoly& a, long b) { return a + QPoly(mpq_class(b)); }
  friend QPoly operator-(const QPoly& a, long b) { return a - QPoly(mpq_class(b)); }
  friend QPoly operator+(long a, const QPoly& b) { return QPoly(mpq_class(a)) + b; }
  friend QPoly operator-(long a, const QPoly& b) { return QPoly(mpq_class(a)) - b; }
  friend QPoly operator*(const mpq_class& a, const QPoly& b) { return QPoly(a) * b; }
  friend QPoly operator*(long a, const QPoly& b) { return QPoly(mpq_class(a)) * b; }
  friend QPoly operator*(const QPoly& a, long b) { return a * QPoly(mpq_class(b)); }
  bool operator==(const QPoly& o) const { return c_ == o.c_; }

  std::string to_string() const;

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<mpq_class> c_;
};

// product top (top-1) ... (top-k+1) / k!
QPoly binom_poly(const QPoly& top, int k);

// pi(k,m)/m!: proportion of permutations in S_m with exactly k fixed points.
mpq_class fixed_point_proportion(int k, int m);
mpz_class derangements(int m);

struct FormulaInfo {
  std::string id;
  QPoly poly;
  std::string source; // what the value counts
  int q_min;          // smallest q the formula is asserted for
};

class FormulaRegistry {
public:
  static const FormulaRegistry& instance();
  const FormulaInfo* find(const std::string& id) const;
  const FormulaInfo& get(const std::string& id) const; // throws on unknown id
  const std::vector<FormulaInfo>& all() const { return entries_; }

  // exact evaluation with validity enforcement (override for informational use)
  mpq_class eval(const std::string& id, long q, bool allow_out_of_range = false) const;

private:
  FormulaRegistry();
  std::vector<FormulaInfo> entries_;
};

} // namespace cubic
