#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace cubic {

// Inner loop of the pair censuses: for mask rows i in [i_begin, i_end) of A,
// OR each against rows of B and histogram the popcount of the union.
// same_list restricts to j > i (A and B must then alias the same arrays).
// hist must have at least 129 slots; counters are plain uint64 (all supported
// budgets stay far below 2^63 pairs).
using PairHistKernel = void (*)(const uint64_t* aw0, const uint64_t* aw1,
                                size_t i_begin, size_t i_end,
                                const uint64_t* bw0, const uint64_t* bw1, size_t nb,
                                bool same_list, uint64_t* hist);

struct KernelInfo {
  std::string name;
  PairHistKernel fn;
  bool runtime_ok; // CPU supports it
};

// All kernels compiled into this binary (scalar first).
const std::vector<KernelInfo>& pair_hist_kernels();

// Runtime-selected kernel: best available, overridable with the
// CUBIC_CENSUS_KERNEL environment variable (scalar|avx2|neon).
PairHistKernel active_pair_hist_kernel();
std::string active_pair_hist_kernel_name();

void pair_hist_scalar(const uint64_t* aw0, const uint64_t* aw1, size_t i_begin,
                      size_t i_end, const uint64_t* bw0, const uint64_t* bw1,
                      size_t nb, bool same_list, uint64_t* hist);
#if defined(CUBIC_HAVE_AVX2_TU)
void pair_hist_avx2(const uint64_t* aw0, const uint64_t* aw1, size_t i_begin,
                    size_t i_end, const uint64_t* bw0, const uint64_t* bw1,
                    size_t nb, bool same_list, uint64_t* hist);
#endif
#if defined(CUBIC_HAVE_NEON_TU)
void pair_hist_neon(const uint64_t* aw0, const uint64_t* aw1, size_t i_begin,
                    size_t i_end, const uint64_t* bw0, const uint64_t* bw1,
                    size_t nb, bool same_list, uint64_t* hist);
#endif

} // namespace cubic
