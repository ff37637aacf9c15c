#include "cubic/kernels.hpp"

#include <cstdlib>

namespace cubic {

const std::vector<KernelInfo>& pair_hist_kernels() {
  static const std::vector<KernelInfo> ks = [] {
    std::vector<KernelInfo> v;
    v.push_back({"scalar", &pair_hist_scalar, true});
#if defined(CUBIC_HAVE_AVX2_TU)
    v.push_back({"avx2", &pair_hist_avx2, (bool)__builtin_cpu_supports("avx2")});
#endif
#if defined(CUBIC_HAVE_NEON_TU)
    v.push_back({"neon", &pair_hist_neon, true});
#endif
    return v;
  }();
  return ks;
}

static const KernelInfo& select_kernel() {
  static const KernelInfo* chosen = [] {
    const auto& ks = pair_hist_kernels();
    if (const char* env = std::getenv("CUBIC_CENSUS_KERNEL")) {
      for (const auto& k : ks)
        if (k.name == env && k.runtime_ok) return &k;
    }
    const KernelInfo* best = &ks.front();
    for (const auto& k : ks)
      if (k.runtime_ok) best = &k; // later entries are the wider ones
    return best;
  }();
  return *chosen;
}

PairHistKernel active_pair_hist_kernel() { return select_kernel().fn; }
std::string active_pair_hist_kernel_name() { return select_kernel().name; }

} // namespace cubic
