#include "cubic/kernels.hpp"

#if defined(CUBIC_HAVE_NEON_TU)

#include <arm_neon.h>

#include <bit>

namespace cubic {

void pair_hist_neon(const uint64_t* aw0, const uint64_t* aw1, size_t i_begin,
                    size_t i_end, const uint64_t* bw0, const uint64_t* bw1,
                    size_t nb, bool same_list, uint64_t* hist) {
  for (size_t i = i_begin; i < i_end; ++i) {
    const uint64_t a0s = aw0[i], a1s = aw1[i];
    const uint64x2_t a0 = vdupq_n_u64(a0s);
    const uint64x2_t a1 = vdupq_n_u64(a1s);
    size_t j = same_list ? i + 1 : 0;
    for (; j + 2 <= nb; j += 2) {
      uint64x2_t u0 = vorrq_u64(a0, vld1q_u64(bw0 + j));
      uint64x2_t u1 = vorrq_u64(a1, vld1q_u64(bw1 + j));
      uint64x2_t c0 = vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(vcntq_u8(vreinterpretq_u8_u64(u0)))));
      uint64x2_t c1 = vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(vcntq_u8(vreinterpretq_u8_u64(u1)))));
      uint64x2_t w = vaddq_u64(c0, c1);
      ++hist[vgetq_lane_u64(w, 0)];
      ++hist[vgetq_lane_u64(w, 1)];
    }
    for (; j < nb; ++j)
      ++hist[std::popcount(a0s | bw0[j]) + std::popcount(a1s | bw1[j])];
  }
}

} // namespace cubic

#endif
