#include "cubic/enum_engine.hpp"

#include <atomic>
#include <cmath>
#include <thread>

#include "cubic/class_scan.hpp"
#include "cubic/kernels.hpp"

namespace cubic {

uint64_t pair_budget(const EngineOptions& opt) {
  if (opt.budget_override) return opt.budget_override;
  return opt.extended ? kPairBudgetExtended : kPairBudget;
}

static void check_hamming_budget(const LinearCode& code) {
  // q^k codewords; overflow-safe for the supported sizes (q <= 64, k <= 21)
  long double est = powl((long double)code.F.q(), code.k);
  if (est > (long double)kHammingBudget)
    throw BudgetError((uint64_t)est, kHammingBudget, "hamming enumeration over budget");
}

std::vector<uint64_t> class_weight_hist(const LinearCode& code, const EngineOptions& opt) {
  check_hamming_budget(code);
  int T = resolve_threads(opt.threads);
  std::vector<std::vector<uint64_t>> hists(T, std::vector<uint64_t>(code.n + 1, 0));
  scan_classes_parallel(code.F, code.gen, opt.threads, [&](int tid) {
    uint64_t* h = hists[tid].data();
    return [h](uint64_t, const Elt*, const uint8_t*, int w) { ++h[w]; };
  });
  std::vector<uint64_t> out(code.n + 1, 0);
  for (const auto& h : hists)
    for (int i = 0; i <= code.n; ++i) out[i] += h[i];
  return out;
}

WeightEnum hamming_enumerator(const LinearCode& code, const EngineOptions& opt) {
  auto hist = class_weight_hist(code, opt);
  WeightEnum w(code.n);
  for (int i = 0; i <= code.n; ++i) w.counts[i] = mpz_class(hist[i]) * (code.F.q() - 1);
  w.counts[0] += 1; // zero word
  return w;
}

ClassDB build_class_db(const LinearCode& code, const EngineOptions& opt) {
  check_hamming_budget(code);
  ClassDB db;
  db.count = class_count(code.F.q(), code.k);
  db.masks.w0.assign(db.count, 0);
  db.masks.w1.assign(db.count, 0);
  db.weights.assign(db.count, 0);
  scan_classes_parallel(code.F, code.gen, opt.threads, [&](int) {
    return [&db, n = code.n](uint64_t idx, const Elt*, const uint8_t* values, int w) {
      Mask2 m;
      for (int i = 0; i < n; ++i)
        if (values[i]) m.set(i);
      db.masks.w0[idx] = m.w0;
      db.masks.w1[idx] = m.w1;
      db.weights[idx] = (uint8_t)w;
    };
  });
  return db;
}

std::vector<uint64_t> pair_weight_hist(const MaskSoA& a, const MaskSoA& b, bool same_list,
                                       int n, const EngineOptions& opt) {
  const uint64_t na = a.size(), nb = b.size();
  uint64_t work = same_list ? na * na : na * nb; // ordered-pair estimate
  if (work > pair_budget(opt))
    throw BudgetError(work, pair_budget(opt), "pair enumeration over budget");

  PairHistKernel kern = active_pair_hist_kernel();
  int T = resolve_threads(opt.threads);
  const uint64_t block = 64;
  const uint64_t nblocks = (na + block - 1) / block;
  std::atomic<uint64_t> next{0};
  std::vector<std::vector<uint64_t>> hists(T, std::vector<uint64_t>(129, 0));
  std::vector<std::thread> pool;
  for (int tid = 0; tid < T; ++tid)
    pool.emplace_back([&, tid] {
      uint64_t* h = hists[tid].data();
      for (;;) {
        uint64_t bi = next.fetch_add(1);
        if (bi >= nblocks) break;
        uint64_t lo = bi * block, hi = std::min(na, lo + block);
        kern(a.w0.data(), a.w1.data(), lo, hi, b.w0.data(), b.w1.data(), nb,
             same_list, h);
      }
    });
  for (auto& th : pool) th.join();

  std::vector<uint64_t> out(n + 1, 0);
  for (const auto& h : hists)
    for (int w = 0; w <= n && w < 129; ++w) out[w] += h[w];
  return out;
}

WeightEnum second_enumerator(const LinearCode& c1, const LinearCode& c2,
                             const EngineOptions& opt) {
  if (c1.n != c2.n) throw std::invalid_argument("second_enumerator: length mismatch");
  const int q = c1.F.q();
  const mpz_class scale = mpz_class(q - 1) * (q - 1);

  WeightEnum h1 = hamming_enumerator(c1, opt);
  bool same = (c1.gen == c2.gen);
  WeightEnum h2 = same ? h1 : hamming_enumerator(c2, opt);

  ClassDB db1 = build_class_db(c1, opt);
  WeightEnum out(c1.n);
  // pairs with a zero member reduce to the Hamming enumerators
  out.add(h1);
  out.add(h2);
  out.counts[0] -= 1; // (0,0) counted twice

  if (same) {
    auto upper = pair_weight_hist(db1.masks, db1.masks, true, c1.n, opt);
    std::vector<uint64_t> diag(c1.n + 1, 0);
    for (uint64_t i = 0; i < db1.count; ++i) ++diag[db1.weights[i]];
    for (int w = 0; w <= c1.n; ++w)
      out.counts[w] += scale * (mpz_class(2) * upper[w] + diag[w]);
  } else {
    ClassDB db2 = build_class_db(c2, opt);
    auto cross = pair_weight_hist(db1.masks, db2.masks, false, c1.n, opt);
    for (int w = 0; w <= c1.n; ++w) out.counts[w] += scale * cross[w];
  }
  mpz_class expect = pow_z(q, c1.k) * pow_z(q, c2.k);
  if (out.total() != expect)
    throw std::logic_error("second_enumerator: pair count conservation failed (bug)");
  return out;
}

SupportEnums support_r_enumerators(const LinearCode& code, const EngineOptions& opt) {
  const int q = code.F.q();
  auto chist = class_weight_hist(code, opt);
  ClassDB db = build_class_db(code, opt);
  auto upper = pair_weight_hist(db.masks, db.masks, true, code.n, opt);

  SupportEnums se{WeightEnum(code.n), WeightEnum(code.n)};
  // 1-dim subspaces are exactly the projective classes
  for (int w = 0; w <= code.n; ++w) se.w1.counts[w] = chist[w];
  // each 2-dim subspace contains binom(q+1, 2) unordered class pairs, all with
  // the same support union
  mpz_class per = mpz_class(q + 1) * q / 2;
  for (int w = 0; w <= code.n; ++w) {
    mpz_class v = upper[w], r;
    mpz_fdiv_qr(se.w2.counts[w].get_mpz_t(), r.get_mpz_t(), v.get_mpz_t(), per.get_mpz_t());
    if (r != 0) throw std::logic_error("support_r_enumerators: pair count not divisible (bug)");
  }
  return se;
}

std::vector<uint64_t> smooth_cubic_class_hist(const Geometry& g, const EngineOptions& opt) {
  const Plane& pl = g.plane();
  const Field& F = pl.field();
  const int q = F.q(), n = pl.n_points();
  LinearCode code = build_projective_code(pl, 3);
  check_hamming_budget(code);

  // gradient evaluation tables: D[var][m*n + j] = d(mono_m)/d(var) at point j
  std::array<std::vector<uint8_t>, 3> D;
  const auto& ms = monomials(3);
  for (int var = 0; var < 3; ++var) {
    D[var].assign(ms.size() * n, 0);
    for (size_t m = 0; m < ms.size(); ++m) {
      Form mono{3, std::vector<Elt>(form_dim(3), 0)};
      mono.c[m] = 1;
      Form dm = derivative(F, mono, var);
      for (int j = 0; j < n; ++j)
        D[var][m * n + j] = (uint8_t)evaluate_form(F, dm, pl.points()[j]);
    }
  }
  const auto& lines = pl.line_masks();
  const Elt* multab = F.mul_table();
  const Elt* addtab = F.add_table();

  int T = resolve_threads(opt.threads);
  std::vector<std::vector<uint64_t>> hists(T, std::vector<uint64_t>(n + 1, 0));
  scan_classes_parallel(F, code.gen, opt.threads, [&](int tid) {
    uint64_t* h = hists[tid].data();
    return [&, h](uint64_t, const Elt* coeffs, const uint8_t* values, int w) {
      if (w == n) return; // no rational point: conjugate line triple
      if (w <= q * q) {   // room for a full line of zeros
        Mask2 supp;
        for (int i = 0; i < n; ++i)
          if (values[i]) supp.set(i);
        for (const Mask2& lm : lines)
          if ((supp & lm).none()) return; // rational line in the zero set
      }
      // singular iff some zero of f kills all three partials
      for (int j = 0; j < n; ++j) {
        if (values[j]) continue;
        bool sing = true;
        for (int var = 0; var < 3 && sing; ++var) {
          Elt acc = 0;
          const uint8_t* col = &D[var][0];
          for (int m = 0; m < 10; ++m)
            if (coeffs[m]) acc = addtab[acc * q + multab[coeffs[m] * q + col[m * n + j]]];
          if (acc) sing = false;
        }
        if (sing) return;
      }
      ++h[n - w]; // index by rational point count
    };
  });
  std::vector<uint64_t> out(n + 1, 0);
  for (const auto& hh : hists)
    for (int i = 0; i <= n; ++i) out[i] += hh[i];
  return out;
}

} // namespace cubic
