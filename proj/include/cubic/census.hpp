#pragma once

#include <gmpxx.h>

#include <vector>

#include "cubic/classify.hpp"
#include "cubic/enum_engine.hpp"

namespace cubic {

// Exhaustive census of ordered pairs of nonzero forms, split by whether the
// pair shares an irreducible component and by the number of common zeros.
struct CensusTable {
  int q = 0, d = 0, e = 0;
  bool affine = false;
  int n = 0; // evaluation domain size: q^2+q+1 projective, q^2 affine
  std::vector<mpz_class> coprime; // [k] = ordered pairs, no common component, k common zeros
  std::vector<mpz_class> shared;  // [k] = ordered non-proportional pairs with one
  mpz_class zero_pairs = 0;        // pairs with at least one zero form
  mpz_class proportional_pairs = 0;

  mpz_class grand_total() const;
};

// Projective census for degrees d, e in {1,2,3}.
CensusTable pair_census(const Geometry& g, int d, int e, const EngineOptions& opt = {});

// Affine conic-conic census (polynomials of degree <= 2 in two variables).
CensusTable affine_pair_census(const Geometry& g, const EngineOptions& opt = {});

// Per-class factor ids (degree << 32 | class index), shared-component keys.
struct FactorDB {
  struct Entry {
    uint64_t id[3];
    uint8_t mult[3];
    uint8_t nf = 0;
  };
  std::vector<Entry> entries;
};
FactorDB build_factor_db(const Geometry& g, int d, const ClassDB& db, int threads);

} // namespace cubic
