#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubic/classify.hpp"
#include "cubic/codes.hpp"
#include "cubic/mask.hpp"
#include "cubic/weight_enum.hpp"

namespace cubic {

struct BudgetError : std::runtime_error {
  uint64_t required;
  uint64_t limit;
  BudgetError(uint64_t req, uint64_t lim, const std::string& what)
      : std::runtime_error(what + " (required ~" + std::to_string(req) +
                           " operations, budget " + std::to_string(lim) + ")"),
        required(req), limit(lim) {}
};

struct EngineOptions {
  int threads = 0;          // 0: CUBIC_CENSUS_THREADS env or hardware
  bool extended = false;    // lifts the pair budget for the long runs
  uint64_t budget_override = 0;
};

constexpr uint64_t kHammingBudget = 1ull << 32;          // codewords
constexpr uint64_t kPairBudget = 3'000'000'000ull;       // class pairs
constexpr uint64_t kPairBudgetExtended = 250'000'000'000ull;

uint64_t pair_budget(const EngineOptions& opt);

// Histogram of projective classes of the row space by weight (length n+1).
std::vector<uint64_t> class_weight_hist(const LinearCode& code, const EngineOptions& opt = {});

// Exact Hamming weight enumerator of the full code (zero word included).
WeightEnum hamming_enumerator(const LinearCode& code, const EngineOptions& opt = {});

// Support masks and weights of every projective class, in class-index order.
struct ClassDB {
  uint64_t count = 0;
  MaskSoA masks;
  std::vector<uint8_t> weights;
};
ClassDB build_class_db(const LinearCode& code, const EngineOptions& opt = {});

// Histogram over class pairs of popcount(union of supports); same_list
// restricts to unordered pairs i < j.
std::vector<uint64_t> pair_weight_hist(const MaskSoA& a, const MaskSoA& b, bool same_list,
                                       int n, const EngineOptions& opt = {});

WeightEnum second_enumerator(const LinearCode& c1, const LinearCode& c2,
                             const EngineOptions& opt = {});

struct SupportEnums {
  WeightEnum w1, w2;
};
// W^(1), W^(2) over 1- and 2-dimensional subspaces; satisfies
// W2 = X^n + (q^2-1) W^(1) + (q^2-1)(q^2-q) W^(2) and W = X^n + (q-1) W^(1).
SupportEnums support_r_enumerators(const LinearCode& code, const EngineOptions& opt = {});

// Per-class histogram of smooth cubics by rational point count (index =
// number of points, 0..n).  Classes, not forms.
std::vector<uint64_t> smooth_cubic_class_hist(const Geometry& g, const EngineOptions& opt = {});

} // namespace cubic
