#include "cubic/weight_enum.hpp"

#include <sstream>
#include <stdexcept>

namespace cubic {

mpz_class WeightEnum::total() const {
  mpz_class t = 0;
  for (const auto& v : counts) t += v;
  return t;
}

WeightEnum& WeightEnum::add(const WeightEnum& o, const mpz_class& scale) {
  if (n != o.n) throw std::invalid_argument("WeightEnum::add length mismatch");
  for (int i = 0; i <= n; ++i) counts[i] += o.counts[i] * scale;
  return *this;
}

std::string WeightEnum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= n; ++i) {
    if (counts[i] == 0) continue;
    if (!first) os << " + ";
    os << counts[i].get_str() << "*X^" << (n - i) << "Y^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

mpz_class binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), (unsigned long)n, (unsigned long)k);
  return r;
}

mpz_class pow_z(const mpz_class& b, long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), (unsigned long)e);
  return r;
}

WeightEnum transform_subst(const WeightEnum& w, const mpz_class& c) {
  const int n = w.n;
  std::vector<mpz_class> cpow(n + 1);
  cpow[0] = 1;
  for (int i = 1; i <= n; ++i) cpow[i] = cpow[i - 1] * c;

  WeightEnum out(n);
  // A_i X^{n-i} Y^i -> A_i (X+cY)^{n-i} (X-Y)^i
  for (int i = 0; i <= n; ++i) {
    if (w.counts[i] == 0) continue;
    for (int j = 0; j <= n; ++j) {
      mpz_class coef = 0;
      int tlo = std::max(0, j - (n - i));
      int thi = std::min(i, j);
      for (int t = tlo; t <= thi; ++t) {
        mpz_class term = binom(n - i, j - t) * cpow[j - t] * binom(i, t);
        if (t & 1) coef -= term;
        else coef += term;
      }
      out.counts[j] += w.counts[i] * coef;
    }
  }
  return out;
}

static WeightEnum divide_exact(WeightEnum w, const mpz_class& d, const char* what) {
  for (auto& v : w.counts) {
    mpz_class qv, r;
    mpz_tdiv_qr(qv.get_mpz_t(), r.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
    if (r != 0)
      throw std::domain_error(std::string(what) + ": non-exact division, enumerator inconsistent");
    v = qv;
  }
  return w;
}

WeightEnum macwilliams(const WeightEnum& w, int q, const mpz_class& code_size) {
  return divide_exact(transform_subst(w, q - 1), code_size, "macwilliams");
}

WeightEnum macwilliams2(const WeightEnum& w, int q, const mpz_class& size_product) {
  return divide_exact(transform_subst(w, mpz_class(q) * q - 1), size_product, "macwilliams2");
}

WeightEnum inverse_subst(const WeightEnum& w, const mpz_class& c) {
  return divide_exact(transform_subst(w, c), pow_z(c + 1, w.n), "inverse_subst");
}

} // namespace cubic
