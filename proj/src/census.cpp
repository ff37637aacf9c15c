#include "cubic/census.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "cubic/class_scan.hpp"

namespace cubic {

mpz_class CensusTable::grand_total() const {
  mpz_class t = zero_pairs + proportional_pairs;
  for (const auto& v : coprime) t += v;
  for (const auto& v : shared) t += v;
  return t;
}

namespace {

FactorDB::Entry factor_entry(const Geometry& g, const Form& f) {
  auto fac = factor_form(g, f);
  FactorDB::Entry e;
  for (const auto& fe : fac) {
    e.id[e.nf] = fe.id;
    e.mult[e.nf] = (uint8_t)fe.mult;
    ++e.nf;
  }
  return e;
}

// affine polynomial (deg <= 2 in x,y) -> quadratic form in (x,y,w)
Form homogenize_affine(const std::vector<Elt>& ac) {
  static const int map6[6] = {0, 1, 3, 2, 4, 5}; // x2,xy,y2,x,y,1 -> graded-lex
  Form f{2, std::vector<Elt>(6, 0)};
  for (int i = 0; i < 6; ++i) f.c[map6[i]] = ac[i];
  return f;
}

} // namespace

FactorDB build_factor_db(const Geometry& g, int d, const ClassDB& db, int threads) {
  const Field& F = g.field();
  FactorDB out;
  out.entries.resize(db.count);
  int T = resolve_threads(threads);
  std::atomic<uint64_t> next{0};
  const uint64_t chunk = 4096;
  std::vector<std::thread> pool;
  for (int t = 0; t < T; ++t)
    pool.emplace_back([&] {
      for (;;) {
        uint64_t lo = next.fetch_add(chunk);
        if (lo >= db.count) break;
        uint64_t hi = std::min<uint64_t>(db.count, lo + chunk);
        for (uint64_t i = lo; i < hi; ++i) {
          Form f{d, class_rep(F, form_dim(d), i)};
          out.entries[i] = factor_entry(g, f);
        }
      }
    });
  for (auto& th : pool) th.join();
  return out;
}

// affine variant: factor the homogenized quadratic and drop w-components
static FactorDB build_affine_factor_db(const Geometry& g, const LinearCode& code,
                                       uint64_t count, int threads) {
  const Field& F = g.field();
  const uint64_t w_line_id = ((uint64_t)1 << 32) | class_index(F, {0, 0, 1});
  FactorDB out;
  out.entries.resize(count);
  int T = resolve_threads(threads);
  std::atomic<uint64_t> next{0};
  const uint64_t chunk = 4096;
  std::vector<std::thread> pool;
  for (int t = 0; t < T; ++t)
    pool.emplace_back([&] {
      for (;;) {
        uint64_t lo = next.fetch_add(chunk);
        if (lo >= count) break;
        uint64_t hi = std::min<uint64_t>(count, lo + chunk);
        for (uint64_t i = lo; i < hi; ++i) {
          auto ac = class_rep(F, code.k, i);
          auto full = factor_entry(g, homogenize_affine(ac));
          FactorDB::Entry e;
          for (int s = 0; s < full.nf; ++s)
            if (full.id[s] != w_line_id) {
              e.id[e.nf] = full.id[s];
              e.mult[e.nf] = full.mult[s];
              ++e.nf;
            }
          out.entries[i] = e;
        }
      }
    });
  for (auto& th : pool) th.join();
  return out;
}

namespace {

// smallest factor id shared by two entries, or 0 when disjoint
uint64_t min_shared(const FactorDB::Entry& a, const FactorDB::Entry& b) {
  uint64_t best = 0;
  for (int i = 0; i < a.nf; ++i)
    for (int j = 0; j < b.nf; ++j)
      if (a.id[i] == b.id[j] && (best == 0 || a.id[i] < best)) best = a.id[i];
  return best;
}

std::map<uint64_t, std::vector<uint32_t>> invert(const FactorDB& db) {
  std::map<uint64_t, std::vector<uint32_t>> idx;
  for (uint32_t i = 0; i < db.entries.size(); ++i)
    for (int s = 0; s < db.entries[i].nf; ++s) idx[db.entries[i].id[s]].push_back(i);
  return idx;
}

// histogram (by support-union popcount) of unordered same-list pairs i<j that
// share a component, each pair counted once
std::vector<uint64_t> shared_pairs_hist_same(const FactorDB& fdb, const ClassDB& db, int n) {
  auto idx = invert(fdb);
  std::vector<uint64_t> hist(n + 1, 0);
  for (const auto& [fid, classes] : idx) {
    for (size_t a = 0; a < classes.size(); ++a)
      for (size_t b = a + 1; b < classes.size(); ++b) {
        uint32_t i = classes[a], j = classes[b];
        if (min_shared(fdb.entries[i], fdb.entries[j]) != fid) continue;
        Mask2 u = db.masks[i] | db.masks[j];
        ++hist[u.popcount()];
      }
  }
  return hist;
}

std::vector<uint64_t> shared_pairs_hist_cross(const FactorDB& fa, const ClassDB& da,
                                              const FactorDB& fb, const ClassDB& dbB,
                                              int n) {
  auto ia = invert(fa);
  auto ib = invert(fb);
  std::vector<uint64_t> hist(n + 1, 0);
  for (const auto& [fid, alist] : ia) {
    auto it = ib.find(fid);
    if (it == ib.end()) continue;
    for (uint32_t i : alist)
      for (uint32_t j : it->second) {
        if (min_shared(fa.entries[i], fb.entries[j]) != fid) continue;
        Mask2 u = da.masks[i] | dbB.masks[j];
        ++hist[u.popcount()];
      }
  }
  return hist;
}

CensusTable assemble_same(const Geometry& g, int d, const LinearCode& code,
                          const ClassDB& db, const FactorDB& fdb, bool affine,
                          const EngineOptions& opt) {
  const Field& F = g.field();
  const int q = F.q();
  const int n = code.n;
  const int K = code.k;
  auto all = pair_weight_hist(db.masks, db.masks, true, n, opt);
  auto com = shared_pairs_hist_same(fdb, db, n);

  CensusTable t;
  t.q = q;
  t.d = t.e = d;
  t.affine = affine;
  t.n = n;
  t.coprime.assign(n + 1, 0);
  t.shared.assign(n + 1, 0);
  mpz_class scale = mpz_class(2) * (q - 1) * (q - 1);
  for (int w = 0; w <= n; ++w) {
    if (all[w] < com[w]) throw std::logic_error("census: shared pairs exceed total (bug)");
    t.coprime[n - w] = scale * (all[w] - com[w]);
    t.shared[n - w] = scale * com[w];
  }
  t.zero_pairs = 2 * pow_z(q, K) - 1;
  t.proportional_pairs = (pow_z(q, K) - 1) * (q - 1);
  if (t.grand_total() != pow_z(q, 2 * K))
    throw std::logic_error("census: grand total mismatch (bug)");
  int de = affine ? 4 : d * d;
  for (int k = de + 1; k <= n; ++k)
    if (t.coprime[k] != 0)
      throw std::logic_error("census: component-free pair beyond the degree bound (bug)");
  return t;
}

} // namespace

CensusTable pair_census(const Geometry& g, int d, int e, const EngineOptions& opt) {
  if (d < 1 || d > 3 || e < 1 || e > 3)
    throw std::invalid_argument("pair_census: degrees must be in {1,2,3}");
  if (d > e) std::swap(d, e);
  if (e == 3 && g.field().q() <= 2)
    throw std::invalid_argument("pair_census: cubics need q > 2");
  // budget gate before any work starts
  {
    uint64_t md = class_count(g.field().q(), form_dim(d));
    uint64_t me = class_count(g.field().q(), form_dim(e));
    uint64_t work = md * me;
    if (work > pair_budget(opt))
      throw BudgetError(work, pair_budget(opt), "pair census over budget");
  }
  const Plane& pl = g.plane();
  LinearCode cd = build_projective_code(pl, d);
  ClassDB dbd = build_class_db(cd, opt);
  FactorDB fdd = build_factor_db(g, d, dbd, opt.threads);

  if (d == e) return assemble_same(g, d, cd, dbd, fdd, false, opt);

  LinearCode ce = build_projective_code(pl, e);
  ClassDB dbe = build_class_db(ce, opt);
  FactorDB fde = build_factor_db(g, e, dbe, opt.threads);

  const int q = g.field().q();
  const int n = cd.n;
  auto all = pair_weight_hist(dbd.masks, dbe.masks, false, n, opt);
  auto com = shared_pairs_hist_cross(fdd, dbd, fde, dbe, n);

  CensusTable t;
  t.q = q;
  t.d = d;
  t.e = e;
  t.n = n;
  t.coprime.assign(n + 1, 0);
  t.shared.assign(n + 1, 0);
  mpz_class scale = mpz_class(q - 1) * (q - 1);
  for (int w = 0; w <= n; ++w) {
    if (all[w] < com[w]) throw std::logic_error("census: shared pairs exceed total (bug)");
    t.coprime[n - w] = scale * (all[w] - com[w]);
    t.shared[n - w] = scale * com[w];
  }
  t.zero_pairs = pow_z(q, cd.k) + pow_z(q, ce.k) - 1;
  t.proportional_pairs = 0;
  if (t.grand_total() != pow_z(q, cd.k + ce.k))
    throw std::logic_error("census: grand total mismatch (bug)");
  for (int k = d * e + 1; k <= n; ++k)
    if (t.coprime[k] != 0)
      throw std::logic_error("census: component-free pair beyond the degree bound (bug)");
  return t;
}

CensusTable affine_pair_census(const Geometry& g, const EngineOptions& opt) {
  const Field& F = g.field();
  if (F.q() <= 2) throw std::invalid_argument("affine census needs q > 2");
  LinearCode code = build_affine_code(F, 2);
  ClassDB db = build_class_db(code, opt);
  FactorDB fdb = build_affine_factor_db(g, code, db.count, opt.threads);
  return assemble_same(g, 2, code, db, fdb, true, opt);
}

} // namespace cubic
