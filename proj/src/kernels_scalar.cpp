#include <bit>

#include "cubic/kernels.hpp"

namespace cubic {

void pair_hist_scalar(const uint64_t* aw0, const uint64_t* aw1, size_t i_begin,
                      size_t i_end, const uint64_t* bw0, const uint64_t* bw1,
                      size_t nb, bool same_list, uint64_t* hist) {
  for (size_t i = i_begin; i < i_end; ++i) {
    const uint64_t a0 = aw0[i], a1 = aw1[i];
    size_t j0 = same_list ? i + 1 : 0;
    for (size_t j = j0; j < nb; ++j) {
      int w = std::popcount(a0 | bw0[j]) + std::popcount(a1 | bw1[j]);
      ++hist[w];
    }
  }
}

} // namespace cubic
