#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <thread>
#include <vector>

#include "cubic/codes.hpp"
#include "cubic/forms.hpp"
#include "cubic/gf.hpp"

namespace cubic {

// Enumerates projective classes of the row space of a generator matrix in
// canonical class-index order (pivot blocks, then big-endian suffix), keeping
// the codeword value vector updated incrementally: one odometer step touches
// one generator row per changed digit, amortized q/(q-1) rows per class.
//
// Visitor signature: void(uint64_t idx, const Elt* coeffs, const uint8_t* values, int weight)
template <typename Visitor>
void scan_classes_range(const Field& F, const std::vector<std::vector<Elt>>& gen,
                        uint64_t begin, uint64_t end, Visitor&& visit) {
  const int q = F.q();
  const int k = (int)gen.size();
  const int n = k ? (int)gen[0].size() : 0;
  const Elt* addtab = F.add_table();
  if (!addtab) throw std::logic_error("scan_classes_range requires a dense field");

  // scaled[t][delta][i] = delta * gen[t][i]
  std::vector<uint8_t> scaled((size_t)k * q * n);
  for (int t = 0; t < k; ++t)
    for (int d = 0; d < q; ++d)
      for (int i = 0; i < n; ++i)
        scaled[((size_t)t * q + d) * n + i] = (uint8_t)F.mul((Elt)d, gen[t][i]);

  std::vector<Elt> coeffs(k);
  std::vector<uint8_t> values(n);

  auto encode_current = [&]() {
    std::memset(values.data(), 0, n);
    for (int t = 0; t < k; ++t) {
      if (!coeffs[t]) continue;
      const uint8_t* row = &scaled[((size_t)t * q + coeffs[t]) * n];
      for (int i = 0; i < n; ++i) values[i] = (uint8_t)addtab[values[i] * q + row[i]];
    }
  };
  auto apply_delta = [&](int t, Elt delta) {
    const uint8_t* row = &scaled[((size_t)t * q + delta) * n];
    for (int i = 0; i < n; ++i) values[i] = (uint8_t)addtab[values[i] * q + row[i]];
  };

  if (begin >= end) return;
  auto rep = class_rep(F, k, begin);
  std::copy(rep.begin(), rep.end(), coeffs.begin());
  int pivot = 0;
  while (!coeffs[pivot]) ++pivot;
  encode_current();

  for (uint64_t idx = begin; idx < end; ++idx) {
    int w = 0;
    for (int i = 0; i < n; ++i) w += values[i] != 0;
    visit(idx, coeffs.data(), values.data(), w);

    if (idx + 1 == end) break;
    // odometer step on the suffix (positions k-1 down to pivot+1)
    int t = k - 1;
    while (t > pivot) {
      Elt oldv = coeffs[t];
      if ((int)oldv + 1 < q) {
        coeffs[t] = oldv + 1;
        apply_delta(t, F.sub(coeffs[t], oldv));
        break;
      }
      coeffs[t] = 0;
      apply_delta(t, F.sub(0, oldv));
      --t;
    }
    if (t == pivot) { // pivot block exhausted
      std::fill(coeffs.begin(), coeffs.end(), 0);
      ++pivot;
      coeffs[pivot] = 1;
      encode_current();
    }
  }
}

inline int resolve_threads(int threads) {
  if (threads > 0) return threads;
  if (const char* env = std::getenv("CUBIC_CENSUS_THREADS")) {
    int t = std::atoi(env);
    if (t > 0) return t;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? (int)hc : 1;
}

// Parallel scan over all classes.  make_visitor(tid) returns the per-thread
// visitor; merging the per-thread accumulators is the caller's business (all
// uses are commutative histogram sums, so results are thread-count invariant).
template <typename MakeVisitor>
void scan_classes_parallel(const Field& F, const std::vector<std::vector<Elt>>& gen,
                           int threads, MakeVisitor&& make_visitor) {
  const uint64_t total = class_count(F.q(), (int)gen.size());
  int T = resolve_threads(threads);
  if ((uint64_t)T * 4 > total) T = std::max<uint64_t>(1, total / 4);
  const uint64_t nchunks = std::min<uint64_t>(total, (uint64_t)T * 16);
  std::atomic<uint64_t> next{0};
  std::vector<std::thread> pool;
  for (int tid = 0; tid < T; ++tid)
    pool.emplace_back([&, tid] {
      auto visitor = make_visitor(tid);
      for (;;) {
        uint64_t c = next.fetch_add(1);
        if (c >= nchunks) break;
        uint64_t lo = total * c / nchunks;
        uint64_t hi = total * (c + 1) / nchunks;
        scan_classes_range(F, gen, lo, hi, visitor);
      }
    });
  for (auto& th : pool) th.join();
}

} // namespace cubic
