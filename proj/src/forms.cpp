#include "cubic/forms.hpp"

#include <map>
#include <stdexcept>

namespace cubic {

const std::vector<std::array<int, 3>>& monomials(int d) {
  static std::map<int, std::vector<std::array<int, 3>>> cache;
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  std::vector<std::array<int, 3>> out;
  for (int i = d; i >= 0; --i)
    for (int j = d - i; j >= 0; --j)
      out.push_back({i, j, d - i - j});
  return cache.emplace(d, std::move(out)).first->second;
}

int monomial_index(int d, int i, int j, int k) {
  (void)k;
  // position of (i,j,k) in the graded-lex list for degree d
  int idx = 0;
  for (int ii = d; ii > i; --ii) idx += d - ii + 1;
  idx += (d - i) - j;
  return idx;
}

Elt evaluate_form(const Field& F, const Form& f, const Point3& pt) {
  const auto& ms = monomials(f.d);
  Elt acc = 0;
  for (size_t m = 0; m < ms.size(); ++m) {
    if (!f.c[m]) continue;
    Elt t = F.mul(f.c[m], F.mul(F.pow(pt[0], ms[m][0]),
                                F.mul(F.pow(pt[1], ms[m][1]), F.pow(pt[2], ms[m][2]))));
    acc = F.add(acc, t);
  }
  return acc;
}

Form form_mul(const Field& F, const Form& a, const Form& b) {
  Form out{a.d + b.d, std::vector<Elt>(form_dim(a.d + b.d), 0)};
  const auto& ma = monomials(a.d);
  const auto& mb = monomials(b.d);
  for (size_t i = 0; i < ma.size(); ++i) {
    if (!a.c[i]) continue;
    for (size_t j = 0; j < mb.size(); ++j) {
      if (!b.c[j]) continue;
      int idx = monomial_index(out.d, ma[i][0] + mb[j][0], ma[i][1] + mb[j][1],
                               ma[i][2] + mb[j][2]);
      out.c[idx] = F.add(out.c[idx], F.mul(a.c[i], b.c[j]));
    }
  }
  return out;
}

Form form_add(const Field& F, const Form& a, const Form& b) {
  if (a.d != b.d) throw std::invalid_argument("form_add: degree mismatch");
  Form out = a;
  for (size_t i = 0; i < out.c.size(); ++i) out.c[i] = F.add(a.c[i], b.c[i]);
  return out;
}

Form form_scale(const Field& F, const Form& a, Elt s) {
  Form out = a;
  for (auto& e : out.c) e = F.mul(e, s);
  return out;
}

Form derivative(const Field& F, const Form& f, int var) {
  Form out{f.d - 1, std::vector<Elt>(form_dim(f.d - 1), 0)};
  const auto& ms = monomials(f.d);
  for (size_t m = 0; m < ms.size(); ++m) {
    if (!f.c[m]) continue;
    int e = ms[m][var];
    if (e == 0) continue;
    Elt coef = F.mul(f.c[m], F.from_int(e));
    if (!coef) continue;
    std::array<int, 3> nm = ms[m];
    nm[var] -= 1;
    int idx = monomial_index(out.d, nm[0], nm[1], nm[2]);
    out.c[idx] = F.add(out.c[idx], coef);
  }
  return out;
}

Form canonical_form(const Field& F, const Form& f) {
  for (Elt e : f.c)
    if (e) return form_scale(F, f, F.inv(e));
  return f;
}

namespace {
// binary forms in the two non-pivot variables, coefficient of u^(deg-j) v^j at [j]
using BForm = std::vector<Elt>;

BForm bmul(const Field& F, const BForm& a, const BForm& b) {
  BForm out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
  return out;
}
} // namespace

std::optional<Form> divide_linear(const Field& F, const Form& f, const Point3& line) {
  int t = line[0] ? 0 : line[1] ? 1 : 2;
  if (!line[t]) throw std::invalid_argument("divide_linear: zero line");
  int u = (t == 0) ? 1 : 0;
  int v = (t == 2) ? 1 : 2;
  int d = f.d;
  Elt it = F.inv(line[t]);
  // x_t = rho(u,v) + line/line_t ; rho = -(L_u u + L_v v)/L_t
  BForm rho = {F.neg(F.mul(line[u], it)), F.neg(F.mul(line[v], it))};

  const auto& ms = monomials(d);
  // A[e][j]: coeff of x_t^e u^(d-e-j) v^j
  std::vector<BForm> A(d + 1);
  for (int e = 0; e <= d; ++e) A[e].assign(d - e + 1, 0);
  for (size_t m = 0; m < ms.size(); ++m) {
    if (!f.c[m]) continue;
    int e = ms[m][t];
    A[e][ms[m][v]] = f.c[m];
  }
  // Horner: B_{e-1} = A_e + rho * B_e, remainder = A_0 + rho * B_0
  std::vector<BForm> B(d);
  B[d - 1] = A[d];
  for (int e = d - 1; e >= 1; --e) {
    BForm rb = bmul(F, rho, B[e]);
    B[e - 1] = A[e];
    for (size_t j = 0; j < rb.size(); ++j) B[e - 1][j] = F.add(B[e - 1][j], rb[j]);
  }
  BForm rem = bmul(F, rho, B[0]);
  for (size_t j = 0; j < A[0].size(); ++j) rem[j] = F.add(rem[j], A[0][j]);
  for (Elt e : rem)
    if (e) return std::nullopt;

  Form g{d - 1, std::vector<Elt>(form_dim(d - 1), 0)};
  for (int e = 0; e <= d - 1; ++e)
    for (size_t j = 0; j < B[e].size(); ++j) {
      if (!B[e][j]) continue;
      std::array<int, 3> exps{};
      exps[t] = e;
      exps[u] = (int)(B[e].size() - 1 - j);
      exps[v] = (int)j;
      int idx = monomial_index(d - 1, exps[0], exps[1], exps[2]);
      g.c[idx] = F.add(g.c[idx], F.mul(B[e][j], it));
    }
  return g;
}

Form substitute(const Field& F, const Form& f, const std::array<Point3, 3>& M) {
  Form out{f.d, std::vector<Elt>(form_dim(f.d), 0)};
  const auto& ms = monomials(f.d);
  for (size_t m = 0; m < ms.size(); ++m) {
    if (!f.c[m]) continue;
    Form acc{0, {f.c[m]}};
    for (int var = 0; var < 3; ++var)
      for (int rep = 0; rep < ms[m][var]; ++rep) {
        Form lin{1, {M[var][0], M[var][1], M[var][2]}};
        acc = form_mul(F, acc, lin);
      }
    out = form_add(F, out, acc);
  }
  return out;
}

uint64_t class_count(int q, int ncoeff) {
  uint64_t total = 1;
  for (int i = 0; i < ncoeff; ++i) total *= (uint64_t)q;
  return (total - 1) / (uint64_t)(q - 1);
}

std::vector<Elt> class_rep(const Field& F, int ncoeff, uint64_t index) {
  int q = F.q();
  std::vector<Elt> c(ncoeff, 0);
  uint64_t block = 1;
  for (int i = 0; i < ncoeff - 1; ++i) block *= (uint64_t)q;
  int pivot = 0;
  while (index >= block) {
    index -= block;
    block /= (uint64_t)q;
    ++pivot;
  }
  c[pivot] = 1;
  for (int i = ncoeff - 1; i > pivot; --i) {
    c[i] = (Elt)(index % q);
    index /= q;
  }
  return c;
}

uint64_t class_index(const Field& F, const std::vector<Elt>& coeffs) {
  int q = F.q();
  int ncoeff = (int)coeffs.size();
  int pivot = -1;
  for (int i = 0; i < ncoeff; ++i)
    if (coeffs[i]) { pivot = i; break; }
  if (pivot < 0) throw std::invalid_argument("class_index: zero form");
  Elt inv = F.inv(coeffs[pivot]);
  uint64_t idx = 0;
  uint64_t block = 1;
  for (int i = 0; i < ncoeff - 1; ++i) block *= (uint64_t)q;
  for (int i = 0; i < pivot; ++i) {
    idx += block;
    block /= (uint64_t)q;
  }
  uint64_t suffix = 0;
  for (int i = pivot + 1; i < ncoeff; ++i) suffix = suffix * q + F.mul(coeffs[i], inv);
  return idx + suffix;
}

} // namespace cubic
