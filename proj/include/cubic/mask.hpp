#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace cubic {

// Packed support mask over up to 128 coordinates.  Bits >= n stay zero.
struct Mask2 {
  uint64_t w0 = 0, w1 = 0;

  void set(int i) {
    if (i < 64) w0 |= uint64_t(1) << i;
    else w1 |= uint64_t(1) << (i - 64);
  }
  bool test(int i) const {
    return i < 64 ? (w0 >> i) & 1 : (w1 >> (i - 64)) & 1;
  }
  int popcount() const { return std::popcount(w0) + std::popcount(w1); }

  friend Mask2 operator|(Mask2 a, Mask2 b) { return {a.w0 | b.w0, a.w1 | b.w1}; }
  friend Mask2 operator&(Mask2 a, Mask2 b) { return {a.w0 & b.w0, a.w1 & b.w1}; }
  friend Mask2 operator^(Mask2 a, Mask2 b) { return {a.w0 ^ b.w0, a.w1 ^ b.w1}; }
  friend bool operator==(Mask2 a, Mask2 b) { return a.w0 == b.w0 && a.w1 == b.w1; }
  bool none() const { return w0 == 0 && w1 == 0; }
  bool subset_of(Mask2 b) const { return (w0 & ~b.w0) == 0 && (w1 & ~b.w1) == 0; }
  Mask2 complement(int n) const {
    Mask2 full;
    for (int i = 0; i < n; ++i) full.set(i);
    return {full.w0 & ~w0, full.w1 & ~w1};
  }
};

// Struct-of-arrays layout for the pair kernels.
struct MaskSoA {
  std::vector<uint64_t> w0, w1;
  size_t size() const { return w0.size(); }
  void push_back(Mask2 m) { w0.push_back(m.w0); w1.push_back(m.w1); }
  Mask2 operator[](size_t i) const { return {w0[i], w1[i]}; }
};

} // namespace cubic
