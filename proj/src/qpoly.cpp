#include "cubic/qpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace cubic {

mpq_class QPoly::eval(const mpq_class& q) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

mpz_class QPoly::eval_int(long q) const {
  mpq_class v = eval(mpq_class(q));
  v.canonicalize();
  if (v.get_den() != 1)
    throw std::domain_error("QPoly::eval_int: non-integral value at q=" + std::to_string(q));
  return v.get_num();
}

QPoly QPoly::pow(int e) const {
  QPoly r(mpq_class(1));
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<mpq_class> c(std::max(a.c_.size(), b.c_.size()), mpq_class(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return QPoly(std::move(c));
}

QPoly operator-(const QPoly& a, const QPoly& b) {
  std::vector<mpq_class> c(std::max(a.c_.size(), b.c_.size()), mpq_class(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return QPoly(std::move(c));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.c_.empty() || b.c_.empty()) return QPoly();
  std::vector<mpq_class> c(a.c_.size() + b.c_.size() - 1, mpq_class(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return QPoly(std::move(c));
}

std::string QPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = (int)c_.size() - 1; i >= 0; --i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    os << c_[i].get_str();
    if (i > 0) os << "*q^" << i;
    first = false;
  }
  return os.str();
}

QPoly binom_poly(const QPoly& top, int k) {
  QPoly r(mpq_class(1));
  mpz_class kf = 1;
  for (int i = 0; i < k; ++i) {
    r = r * (top - i);
    kf *= (i + 1);
  }
  return mpq_class(1, kf) * r;
}

mpz_class derangements(int m) {
  mpz_class a = 1, b = 0; // D_0, D_1
  if (m == 0) return 1;
  if (m == 1) return 0;
  for (int i = 2; i <= m; ++i) {
    mpz_class d = (i - 1) * (b + a);
    a = b;
    b = d;
  }
  return b;
}

mpq_class fixed_point_proportion(int k, int m) {
  if (k < 0 || k > m) throw std::invalid_argument("fixed_point_proportion: k out of range");
  mpz_class mf = 1;
  for (int i = 2; i <= m; ++i) mf *= i;
  mpz_class cnt;
  mpz_bin_uiui(cnt.get_mpz_t(), m, k);
  mpq_class r(cnt * derangements(m - k), mf);
  r.canonicalize();
  return r;
}

const FormulaRegistry& FormulaRegistry::instance() {
  static FormulaRegistry reg;
  return reg;
}

const FormulaInfo* FormulaRegistry::find(const std::string& id) const {
  for (const auto& e : entries_)
    if (e.id == id) return &e;
  return nullptr;
}

const FormulaInfo& FormulaRegistry::get(const std::string& id) const {
  const FormulaInfo* f = find(id);
  if (!f) throw std::invalid_argument("unknown formula id: " + id);
  return *f;
}

mpq_class FormulaRegistry::eval(const std::string& id, long q, bool allow_out_of_range) const {
  const FormulaInfo& f = get(id);
  if (q < f.q_min && !allow_out_of_range)
    throw std::domain_error("formula " + id + " is asserted for q >= " +
                            std::to_string(f.q_min) + "; evaluation at q=" +
                            std::to_string(q) + " needs the informational override");
  return f.poly.eval(mpq_class(q));
}

} // namespace cubic
