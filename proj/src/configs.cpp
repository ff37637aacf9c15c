#include "cubic/configs.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "cubic/class_scan.hpp"
#include "cubic/linalg.hpp"
#include "cubic/qpoly.hpp"

namespace cubic {

bool next_combination(std::vector<int>& idx, int n) {
  int k = (int)idx.size();
  for (int i = k - 1; i >= 0; --i) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

static std::vector<std::vector<Elt>> eval_rows(const Geometry& g,
                                               const std::vector<int>& pts, int d) {
  const auto& E = g.plane().eval_matrix(d);
  int K = form_dim(d), N = g.plane().n_points();
  std::vector<std::vector<Elt>> rows(pts.size(), std::vector<Elt>(K));
  for (size_t r = 0; r < pts.size(); ++r)
    for (int m = 0; m < K; ++m) rows[r][m] = E[(size_t)m * N + pts[r]];
  return rows;
}

int gamma_dim(const Geometry& g, const std::vector<int>& pts, int d) {
  if (d != 2 && d != 3) throw std::invalid_argument("gamma_dim: d must be 2 or 3");
  return form_dim(d) - rank(g.field(), eval_rows(g, pts, d), form_dim(d));
}

bool imposes_independent(const Geometry& g, const std::vector<int>& pts, int d) {
  return gamma_dim(g, pts, d) == form_dim(d) - (int)pts.size();
}

namespace {

Mask2 set_mask(const std::vector<int>& pts) {
  Mask2 m;
  for (int p : pts) m.set(p);
  return m;
}

// zero masks of curves in the pencil spanned by two forms: f2 and f1 + a*f2
std::vector<Form> pencil_members(const Field& F, const Form& f1, const Form& f2) {
  std::vector<Form> out;
  for (int a = 0; a < F.q(); ++a) {
    Form h = f1;
    for (size_t i = 0; i < h.c.size(); ++i) h.c[i] = F.add(f1.c[i], F.mul((Elt)a, f2.c[i]));
    out.push_back(std::move(h));
  }
  out.push_back(f2);
  return out;
}

bool pencil_has_coprime_pair(const Geometry& g, const Form& f1, const Form& f2) {
  auto members = pencil_members(g.field(), f1, f2);
  std::vector<Factorization> fac;
  fac.reserve(members.size());
  for (const auto& m : members) fac.push_back(factor_form(g, m));
  for (size_t i = 0; i < fac.size(); ++i)
    for (size_t j = i + 1; j < fac.size(); ++j)
      if (common_component_degree(fac[i], fac[j]) == 0) return true;
  return false;
}

} // namespace

ConfigClass classify_failing(const Geometry& g, const std::vector<int>& pts, int d) {
  const int k = (int)pts.size();
  if (k > 2 * d + 3)
    throw std::invalid_argument("classify_failing: set size beyond the analyzed range");
  if (imposes_independent(g, pts, d))
    throw std::invalid_argument("classify_failing: set imposes independent conditions");
  const Plane& pl = g.plane();
  ConfigClass out;
  out.k = k;

  Mask2 sm = set_mask(pts);
  // all collinear?
  if (k >= 2) {
    int li = pl.line_through(pts[0], pts[1]);
    if (sm.subset_of(pl.line_masks()[li])) {
      out.tag = ConfigClass::Tag::Collinear;
      return out;
    }
  }
  // all on one smooth conic?
  {
    auto ns = nullspace(g.field(), eval_rows(g, pts, 2), form_dim(2));
    for (const auto& v : ns) {
      Form conic{2, v};
      if (classify_conic(g, conic) == ConicClass::Smooth) {
        out.tag = ConfigClass::Tag::ConicSmooth;
        return out;
      }
    }
  }
  // two lines covering the set
  for (int l1 = 0; l1 < pl.n_points(); ++l1) {
    Mask2 on1 = sm & pl.line_masks()[l1];
    int c1 = on1.popcount();
    if (c1 < 2) continue;
    for (int l2 = l1 + 1; l2 < pl.n_points(); ++l2) {
      Mask2 on2 = sm & pl.line_masks()[l2];
      if (on2.popcount() < 2) continue;
      if (sm.subset_of(pl.line_masks()[l1] | pl.line_masks()[l2])) {
        Mask2 both = pl.line_masks()[l1] & pl.line_masks()[l2] & sm;
        out.tag = ConfigClass::Tag::TwoLines;
        out.with_intersection = !both.none();
        int shared = both.popcount();
        out.a = c1 - shared;
        out.b = on2.popcount() - shared;
        if (out.a < out.b) std::swap(out.a, out.b);
        // pencil-base sets also sit on no line pair; reaching here means a
        // genuine two-line configuration
        return out;
      }
    }
  }
  // nine points cut out by a component-free cubic pencil
  if (d == 3 && k == 9 && gamma_dim(g, pts, 3) == 2) {
    bool sub_ok = true;
    std::vector<int> sub(pts.begin(), pts.end());
    for (int drop = 0; drop < 9 && sub_ok; ++drop) {
      std::vector<int> s8;
      for (int i = 0; i < 9; ++i)
        if (i != drop) s8.push_back(pts[i]);
      if (!imposes_independent(g, s8, 3)) sub_ok = false;
    }
    if (sub_ok) {
      auto ns = nullspace(g.field(), eval_rows(g, pts, 3), form_dim(3));
      Form f1{3, ns[0]}, f2{3, ns[1]};
      Mask2 base = pl.zero_mask(f1) & pl.zero_mask(f2);
      if (base == sm && pencil_has_coprime_pair(g, f1, f2)) {
        out.tag = ConfigClass::Tag::CubicPencilBase;
        return out;
      }
    }
  }
  out.tag = ConfigClass::Tag::Other;
  return out;
}

// ---------------------------------------------------------------------------
// subset scans

namespace {

struct ScanContext {
  const Geometry* g;
  int q, N;
  std::vector<Mask2> line_mask;
  std::vector<Mask2> smooth_conic_zero; // zero sets of smooth conics
  std::vector<Elt> E3;                  // 10 x N monomial values
  std::array<std::vector<Elt>, 3> D3;   // gradient value tables, 10 x N
};

ScanContext make_context(const Geometry& g) {
  ScanContext cx;
  cx.g = &g;
  const Plane& pl = g.plane();
  const Field& F = g.field();
  cx.q = F.q();
  cx.N = pl.n_points();
  cx.line_mask = pl.line_masks();
  cx.E3 = pl.eval_matrix(3);

  const auto& ms = monomials(3);
  for (int var = 0; var < 3; ++var) {
    cx.D3[var].assign(ms.size() * cx.N, 0);
    for (size_t m = 0; m < ms.size(); ++m) {
      Form mono{3, std::vector<Elt>(form_dim(3), 0)};
      mono.c[m] = 1;
      Form dm = derivative(F, mono, var);
      for (int j = 0; j < cx.N; ++j)
        cx.D3[var][m * cx.N + j] = evaluate_form(F, dm, pl.points()[j]);
    }
  }

  // smooth conic zero sets: q+1 points, no full line inside
  LinearCode c22 = build_projective_code(pl, 2);
  ClassDB db = build_class_db(c22);
  for (uint64_t i = 0; i < db.count; ++i) {
    if (db.weights[i] != cx.N - (cx.q + 1)) continue;
    Mask2 zero = db.masks[i].complement(cx.N);
    bool hasline = false;
    for (const Mask2& lm : cx.line_mask)
      if (lm.subset_of(zero)) { hasline = true; break; }
    if (!hasline) cx.smooth_conic_zero.push_back(zero);
  }
  return cx;
}

// rank and (for rank == K - 2) the nullspace of the |S| x 10 evaluation matrix
int subset_rank(const ScanContext& cx, const std::vector<int>& pts, int d,
                std::vector<std::vector<Elt>>* null_basis = nullptr) {
  const Field& F = cx.g->field();
  int K = form_dim(d);
  const auto& E = cx.g->plane().eval_matrix(d);
  std::vector<std::vector<Elt>> rows(pts.size(), std::vector<Elt>(K));
  for (size_t r = 0; r < pts.size(); ++r)
    for (int m = 0; m < K; ++m) rows[r][m] = E[(size_t)m * cx.N + pts[r]];
  if (!null_basis) return rank(F, std::move(rows), K);
  auto rr = rref(F, std::move(rows), K);
  if (null_basis) {
    std::vector<bool> is_pivot(K, false);
    for (int c : rr.pivot_cols) is_pivot[c] = true;
    null_basis->clear();
    for (int fc = 0; fc < K; ++fc) {
      if (is_pivot[fc]) continue;
      std::vector<Elt> v(K, 0);
      v[fc] = 1;
      for (size_t pr = 0; pr < rr.pivot_cols.size(); ++pr)
        v[rr.pivot_cols[pr]] = F.neg(rr.rows[pr][fc]);
      null_basis->push_back(std::move(v));
    }
  }
  return rr.rank();
}

// gradient of the form with the given coefficients at point j
bool gradient_vanishes(const ScanContext& cx, const std::vector<Elt>& coeffs, int j) {
  const Field& F = cx.g->field();
  for (int var = 0; var < 3; ++var) {
    Elt acc = 0;
    for (int m = 0; m < 10; ++m)
      if (coeffs[m]) acc = F.add(acc, F.mul(coeffs[m], cx.D3[var][(size_t)m * cx.N + j]));
    if (acc) return false;
  }
  return true;
}

// tangent cone of a cubic at a singular point: false when locally of
// multiplicity three (the concurrent conjugate-line triple)
bool tangent_cone_nonzero(const ScanContext& cx, const Form& f, int pt) {
  const Field& F = cx.g->field();
  const Point3& P = cx.g->plane().points()[pt];
  int pivot = P[0] ? 0 : (P[1] ? 1 : 2);
  int a = (pivot == 0) ? 1 : 0;
  int b = (pivot == 2) ? 1 : 2;
  std::array<Point3, 3> M{};
  for (int r = 0; r < 3; ++r) M[r] = {Elt(r == a), Elt(r == b), P[r]};
  Form h = substitute(F, f, M);
  return h.c[monomial_index(3, 2, 0, 1)] || h.c[monomial_index(3, 1, 1, 1)] ||
         h.c[monomial_index(3, 0, 2, 1)];
}

struct Counters {
  AppendixCounts a;
  uint64_t i9 = 0;
  void operator+=(const Counters& o) {
    a.total_8sets += o.a.total_8sets;
    a.c_ge7 += o.a.c_ge7;
    a.l_ge4 += o.a.l_ge4;
    a.no4no7 += o.a.no4no7;
    a.absirred += o.a.absirred;
    a.conic6_line2 += o.a.conic6_line2;
    a.conic6_line2_witnesses += o.a.conic6_line2_witnesses;
    a.two_triples += o.a.two_triples;
    a.two_triples_decompositions += o.a.two_triples_decompositions;
    a.j8 += o.a.j8;
    i9 += o.i9;
  }
};

void scan_8subsets_from(const ScanContext& cx, int first, Counters& ct) {
  const Plane& pl = cx.g->plane();
  const Field& F = cx.g->field();
  std::vector<int> pts(8);
  pts[0] = first;
  std::vector<int> tail(7);
  for (int i = 0; i < 7; ++i) tail[i] = first + 1 + i;
  if (first + 7 >= cx.N) return;
  do {
    for (int i = 0; i < 7; ++i) pts[i + 1] = tail[i];
    ++ct.a.total_8sets;
    Mask2 sm = set_mask(pts);
    int maxline = 0;
    for (const Mask2& lm : cx.line_mask) maxline = std::max(maxline, (sm & lm).popcount());
    if (maxline >= 4) {
      ++ct.a.l_ge4;
      continue;
    }
    int maxconic = 0;
    for (const Mask2& cm : cx.smooth_conic_zero)
      maxconic = std::max(maxconic, (sm & cm).popcount());
    if (maxconic >= 7) {
      ++ct.a.c_ge7;
      continue;
    }
    ++ct.a.no4no7;

    // condition (2): some cubic through S, absolutely irreducible, singular
    // at a point of S
    std::vector<std::vector<Elt>> ns;
    int rk = subset_rank(cx, pts, 3, &ns);
    if (rk != 8 || ns.size() != 2)
      throw std::logic_error("no4no7 8-set with dependent conditions (bug)");
    bool cond2 = false;
    auto members = pencil_members(F, Form{3, ns[0]}, Form{3, ns[1]});
    for (const Form& h : members) {
      for (int pi : pts) {
        if (!gradient_vanishes(cx, h.c, pi)) continue;
        // irreducible over F_q: no rational line inside the zero set
        Mask2 zero = pl.zero_mask(h);
        bool hasline = false;
        for (const Mask2& lm : cx.line_mask)
          if (lm.subset_of(zero)) { hasline = true; break; }
        if (hasline) continue;
        if (tangent_cone_nonzero(cx, h, pi)) { cond2 = true; break; }
      }
      if (cond2) break;
    }
    if (cond2) ++ct.a.absirred;

    // condition (3): 6 on a smooth conic, other 2 on a line through exactly 1
    uint64_t w3 = 0;
    for (const Mask2& cm : cx.smooth_conic_zero) {
      Mask2 six = sm & cm;
      if (six.popcount() != 6) continue;
      Mask2 rest = sm & cm.complement(cx.N);
      int r[2], nr = 0;
      for (int p : pts)
        if (rest.test(p)) r[nr++] = p;
      int li = pl.line_through(r[0], r[1]);
      if ((pl.line_masks()[li] & six).popcount() == 1) ++w3;
    }
    if (w3) ++ct.a.conic6_line2;
    ct.a.conic6_line2_witnesses += w3;

    // condition (4): two disjoint collinear triples avoiding the intersection
    // point, remaining 2 on a line through exactly one of the six
    uint64_t w4 = 0;
    std::vector<int> trip;
    for (int li = 0; li < cx.N; ++li)
      if ((sm & cx.line_mask[li]).popcount() == 3) trip.push_back(li);
    for (size_t i = 0; i < trip.size(); ++i)
      for (size_t j = i + 1; j < trip.size(); ++j) {
        Mask2 on1 = sm & cx.line_mask[trip[i]];
        Mask2 on2 = sm & cx.line_mask[trip[j]];
        if (!((on1 & on2).none())) continue;
        Mask2 inter = cx.line_mask[trip[i]] & cx.line_mask[trip[j]];
        if (!((inter & sm).none())) continue;
        Mask2 six = on1 | on2;
        Mask2 rest = sm & six.complement(cx.N);
        if (rest.popcount() != 2) continue;
        int r[2], nr = 0;
        for (int p : pts)
          if (rest.test(p)) r[nr++] = p;
        int li = pl.line_through(r[0], r[1]);
        if ((pl.line_masks()[li] & six).popcount() == 1) ++w4;
      }
    if (w4) ++ct.a.two_triples;
    ct.a.two_triples_decompositions += w4;

    if (!cond2 && !w3 && !w4) ++ct.a.j8;
  } while (next_combination(tail, cx.N));
}

void scan_9subsets_from(const ScanContext& cx, int first, Counters& ct) {
  const Plane& pl = cx.g->plane();
  if (first + 8 >= cx.N) return;
  std::vector<int> pts(9);
  pts[0] = first;
  std::vector<int> tail(8);
  for (int i = 0; i < 8; ++i) tail[i] = first + 1 + i;
  do {
    for (int i = 0; i < 8; ++i) pts[i + 1] = tail[i];
    std::vector<std::vector<Elt>> ns;
    int rk = subset_rank(cx, pts, 3, &ns);
    if (rk != 8) continue;
    Form f1{3, ns[0]}, f2{3, ns[1]};
    Mask2 base = pl.zero_mask(f1) & pl.zero_mask(f2);
    if (!(base == set_mask(pts))) continue;
    if (pencil_has_coprime_pair(*cx.g, f1, f2)) ++ct.i9;
  } while (next_combination(tail, cx.N));
}

void check_scan_budget(const Geometry& g, const EngineOptions& opt) {
  int q = g.field().q();
  if (q <= 4) return;
  if (q == 5 && opt.extended) return;
  throw BudgetError((uint64_t)1 << 40, pair_budget(opt),
                    q == 5 ? "q=5 subset scan needs --extended" : "subset scan over budget");
}

template <typename ScanFn>
Counters parallel_subset_scan(const Geometry& g, const EngineOptions& opt, ScanFn&& fn) {
  ScanContext cx = make_context(g);
  g.warm_extensions();
  int T = resolve_threads(opt.threads);
  std::vector<Counters> per((size_t)cx.N);
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < T; ++t)
    pool.emplace_back([&] {
      for (;;) {
        int first = next.fetch_add(1);
        if (first >= cx.N) break;
        fn(cx, first, per[first]);
      }
    });
  for (auto& th : pool) th.join();
  Counters total;
  for (const auto& c : per) total += c;
  return total;
}

} // namespace

AppendixCounts appendix_config_counts(const Geometry& g, const EngineOptions& opt) {
  check_scan_budget(g, opt);
  return parallel_subset_scan(g, opt, [](const ScanContext& cx, int first, Counters& ct) {
           scan_8subsets_from(cx, first, ct);
         })
      .a;
}

uint64_t count_J8(const Geometry& g, const EngineOptions& opt) {
  return appendix_config_counts(g, opt).j8;
}

uint64_t count_I9(const Geometry& g, const EngineOptions& opt) {
  check_scan_budget(g, opt);
  return parallel_subset_scan(g, opt, [](const ScanContext& cx, int first, Counters& ct) {
           scan_9subsets_from(cx, first, ct);
         })
      .i9;
}

CollinearDualCounts collinear_dual_counts(const Geometry& g, int d, int m) {
  const Field& F = g.field();
  const Plane& pl = g.plane();
  int q = F.q();
  if (m < d + 2 || m > q + 1)
    throw std::invalid_argument("collinear_dual_counts: need d+2 <= m <= q+1");

  const auto& pts_on_line = pl.line_points()[0];
  std::vector<int> pts(pts_on_line.begin(), pts_on_line.begin() + m);

  // dual vectors supported on the m points: nullspace over y of sum_s y_s
  // mono(P_s) = 0 for every monomial
  int K = form_dim(d);
  const auto& E = pl.eval_matrix(d);
  std::vector<std::vector<Elt>> rows(K, std::vector<Elt>(m));
  for (int mm = 0; mm < K; ++mm)
    for (int s = 0; s < m; ++s) rows[mm][s] = E[(size_t)mm * pl.n_points() + pts[s]];
  auto basis = nullspace(F, rows, m);
  int dim = (int)basis.size();

  CollinearDualCounts out;
  out.m = m;
  out.d = d;
  out.dim = dim;
  out.dim_formula = std::max(m - d - 1, 0);

  // enumerate the subspace, bucket by support mask (m <= 8 -> 256 buckets)
  std::vector<uint64_t> bucket(1u << m, 0);
  std::vector<Elt> vec(m);
  uint64_t total = 1;
  for (int i = 0; i < dim; ++i) total *= q;
  for (uint64_t code = 0; code < total; ++code) {
    std::fill(vec.begin(), vec.end(), 0);
    uint64_t c = code;
    for (int b = 0; b < dim; ++b) {
      Elt coef = (Elt)(c % q);
      c /= q;
      if (coef)
        for (int s = 0; s < m; ++s) vec[s] = F.add(vec[s], F.mul(coef, basis[b][s]));
    }
    unsigned mask = 0;
    for (int s = 0; s < m; ++s)
      if (vec[s]) mask |= 1u << s;
    ++bucket[mask];
  }
  const unsigned full = (1u << m) - 1;
  out.f_count = bucket[full];
  mpz_class gpairs = 0;
  bucket[0] -= 1; // drop the zero vector: pairs must be both nonzero
  for (unsigned m1 = 0; m1 <= full; ++m1) {
    if (!bucket[m1]) continue;
    for (unsigned m2 = 0; m2 <= full; ++m2) {
      if (!bucket[m2] || (m1 | m2) != full) continue;
      gpairs += mpz_class(bucket[m1]) * bucket[m2];
    }
  }
  out.g_count = gpairs;

  const auto& reg = FormulaRegistry::instance();
  out.f_formula = reg.get("f" + std::to_string(d) + "_" + std::to_string(m)).poly.eval_int(q);
  out.g_formula = reg.get("g" + std::to_string(d) + "_" + std::to_string(m)).poly.eval_int(q);
  return out;
}

} // namespace cubic
