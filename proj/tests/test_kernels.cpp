#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cubic/kernels.hpp"
#include "cubic/mask.hpp"

using namespace cubic;

namespace {
MaskSoA random_masks(size_t n, int bits, uint64_t seed) {
  std::mt19937_64 rng(seed);
  MaskSoA out;
  for (size_t i = 0; i < n; ++i) {
    Mask2 m;
    m.w0 = rng();
    m.w1 = rng();
    if (bits <= 64) {
      m.w0 &= (bits == 64) ? ~0ull : ((1ull << bits) - 1);
      m.w1 = 0;
    } else {
      m.w1 &= (bits == 128) ? ~0ull : ((1ull << (bits - 64)) - 1);
    }
    out.push_back(m);
  }
  return out;
}
} // namespace

TEST_CASE("kernel registry") {
  const auto& ks = pair_hist_kernels();
  REQUIRE(!ks.empty());
  CHECK(ks.front().name == "scalar");
  CHECK(ks.front().runtime_ok);
  // the active kernel is one of the registered ones
  bool found = false;
  for (const auto& k : ks)
    if (k.name == active_pair_hist_kernel_name()) found = k.runtime_ok;
  CHECK(found);
}

TEST_CASE("all kernels match scalar") {
  for (int bits : {13, 57, 91, 128}) {
    MaskSoA a = random_masks(337, bits, 12345 + bits);
    MaskSoA b = random_masks(251, bits, 999 + bits);

    std::vector<uint64_t> ref_same(129, 0), ref_cross(129, 0);
    pair_hist_scalar(a.w0.data(), a.w1.data(), 0, a.size(), a.w0.data(), a.w1.data(),
                     a.size(), true, ref_same.data());
    pair_hist_scalar(a.w0.data(), a.w1.data(), 0, a.size(), b.w0.data(), b.w1.data(),
                     b.size(), false, ref_cross.data());

    for (const auto& k : pair_hist_kernels()) {
      if (!k.runtime_ok) continue;
      std::vector<uint64_t> hs(129, 0), hc(129, 0);
      k.fn(a.w0.data(), a.w1.data(), 0, a.size(), a.w0.data(), a.w1.data(), a.size(), true,
           hs.data());
      k.fn(a.w0.data(), a.w1.data(), 0, a.size(), b.w0.data(), b.w1.data(), b.size(), false,
           hc.data());
      CHECK(hs == ref_same);
      CHECK(hc == ref_cross);
    }
  }
}

TEST_CASE("split ranges accumulate to the full histogram") {
  MaskSoA a = random_masks(500, 91, 77);
  std::vector<uint64_t> whole(129, 0);
  pair_hist_scalar(a.w0.data(), a.w1.data(), 0, a.size(), a.w0.data(), a.w1.data(), a.size(),
                   true, whole.data());
  for (const auto& k : pair_hist_kernels()) {
    if (!k.runtime_ok) continue;
    std::vector<uint64_t> parts(129, 0);
    for (size_t lo = 0; lo < a.size(); lo += 97)
      k.fn(a.w0.data(), a.w1.data(), lo, std::min(a.size(), lo + 97), a.w0.data(),
           a.w1.data(), a.size(), true, parts.data());
    CHECK(parts == whole);
  }
}

TEST_CASE("pair count conservation") {
  MaskSoA a = random_masks(100, 64, 5);
  std::vector<uint64_t> h(129, 0);
  active_pair_hist_kernel()(a.w0.data(), a.w1.data(), 0, a.size(), a.w0.data(), a.w1.data(),
                            a.size(), true, h.data());
  uint64_t total = 0;
  for (uint64_t v : h) total += v;
  CHECK(total == 100 * 99 / 2);
}
