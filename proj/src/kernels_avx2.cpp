#include "cubic/kernels.hpp"

#if defined(CUBIC_HAVE_AVX2_TU)

#include <immintrin.h>

#include <bit>

namespace cubic {

namespace {

// per-64-bit-lane popcount via nibble lookup
inline __m256i popcount_epi64(__m256i v) {
  const __m256i lut =
      _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low = _mm256_set1_epi8(0x0f);
  __m256i lo = _mm256_and_si256(v, low);
  __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
  __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
  return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

} // namespace

void pair_hist_avx2(const uint64_t* aw0, const uint64_t* aw1, size_t i_begin,
                    size_t i_end, const uint64_t* bw0, const uint64_t* bw1,
                    size_t nb, bool same_list, uint64_t* hist) {
  alignas(32) uint64_t wbuf[4];
  for (size_t i = i_begin; i < i_end; ++i) {
    const uint64_t a0s = aw0[i], a1s = aw1[i];
    const __m256i a0 = _mm256_set1_epi64x((long long)a0s);
    const __m256i a1 = _mm256_set1_epi64x((long long)a1s);
    size_t j = same_list ? i + 1 : 0;
    for (; j + 4 <= nb; j += 4) {
      __m256i u0 = _mm256_or_si256(a0, _mm256_loadu_si256((const __m256i*)(bw0 + j)));
      __m256i u1 = _mm256_or_si256(a1, _mm256_loadu_si256((const __m256i*)(bw1 + j)));
      __m256i w = _mm256_add_epi64(popcount_epi64(u0), popcount_epi64(u1));
      _mm256_store_si256((__m256i*)wbuf, w);
      ++hist[wbuf[0]];
      ++hist[wbuf[1]];
      ++hist[wbuf[2]];
      ++hist[wbuf[3]];
    }
    for (; j < nb; ++j)
      ++hist[std::popcount(a0s | bw0[j]) + std::popcount(a1s | bw1[j])];
  }
}

} // namespace cubic

#endif
