#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "cubic/classify.hpp"
#include "cubic/enum_engine.hpp"

namespace cubic {

// dim of the space of degree-d forms vanishing on the point set
int gamma_dim(const Geometry& g, const std::vector<int>& pts, int d);
bool imposes_independent(const Geometry& g, const std::vector<int>& pts, int d);

struct ConfigClass {
  enum class Tag { Collinear, ConicSmooth, TwoLines, CubicPencilBase, Other };
  Tag tag = Tag::Other;
  int k = 0;              // set size
  int a = 0, b = 0;       // points per line for TwoLines
  bool with_intersection = false;
};
// Classification of a failing point set per the low-weight support analysis;
// requires |S| <= 2d+3 and that S imposes dependent conditions.
ConfigClass classify_failing(const Geometry& g, const std::vector<int>& pts, int d);

// 9-point sets that are exactly the common zeros of two cubic forms without a
// common component (gamma_dim = 2, base locus = S, some component-free pair).
uint64_t count_I9(const Geometry& g, const EngineOptions& opt = {});

// 8-point sets: no 4 collinear, no 7 on a conic, and none of the three
// excluded configurations. Satisfies J8 = 9 * I9.
uint64_t count_J8(const Geometry& g, const EngineOptions& opt = {});

struct AppendixCounts {
  uint64_t total_8sets = 0;
  uint64_t c_ge7 = 0;       // >= 7 points on a smooth conic
  uint64_t l_ge4 = 0;       // >= 4 collinear
  uint64_t no4no7 = 0;
  uint64_t absirred = 0;    // on an abs. irred. singular cubic, node in the set
  uint64_t conic6_line2 = 0;
  uint64_t conic6_line2_witnesses = 0;
  uint64_t two_triples = 0;
  uint64_t two_triples_decompositions = 0;
  uint64_t j8 = 0;
};
AppendixCounts appendix_config_counts(const Geometry& g, const EngineOptions& opt = {});

struct CollinearDualCounts {
  int m = 0, d = 0;
  int dim = 0;            // nullspace dimension, enumerated
  int dim_formula = 0;    // max(m-d-1, 0)
  mpz_class f_count, f_formula;
  mpz_class g_count, g_formula;
};
// Direct enumeration of the dual-code subspace supported on m collinear
// points, next to the closed forms f_d(m), g_d(m).
CollinearDualCounts collinear_dual_counts(const Geometry& g, int d, int m);

bool next_combination(std::vector<int>& idx, int n);

} // namespace cubic
