#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "cubic/forms.hpp"
#include "cubic/gf.hpp"
#include "cubic/plane.hpp"

namespace cubic {

enum class ConicClass { Zero, DoubleLine, TwoRationalLines, ConjugateLinePair, Smooth };
enum class SingularCubicType { Smooth, Cuspidal, SplitNodal, NonsplitNodal, Reducible };

// One irreducible-over-F_q factor.  id = (degree << 32) | projective class
// index of the canonical factor, usable as a shared-component key across any
// two forms over the same field.
struct FactorEntry {
  uint64_t id;
  int degree;
  int mult;
  Form form; // canonical
};
using Factorization = std::vector<FactorEntry>;

// Classification context for one base field: the plane plus lazily built
// degree-2/3 extensions (construction is serialized, so a shared Geometry is
// safe across threads).
class Geometry {
public:
  explicit Geometry(int q) : plane_(Field::make(q)) {}
  explicit Geometry(Field F) : plane_(std::move(F)) {}

  const Plane& plane() const { return plane_; }
  const Field& field() const { return plane_.field(); }
  const FieldExtension& ext2() const;
  const FieldExtension& ext3() const;

  void warm_extensions() const { ext2(); ext3(); }

private:
  Plane plane_;
  mutable std::once_flag once2_, once3_;
  mutable std::unique_ptr<FieldExtension> ext2_, ext3_;
};

// Complete factorization into irreducible-over-F_q factors (product of the
// canonical factors equals the input up to a nonzero scalar).
Factorization factor_form(const Geometry& g, const Form& f);

// Degree of gcd(f1, f2); equals the gcd degree over the algebraic closure.
int common_component_degree(const Geometry& g, const Form& f1, const Form& f2);
int common_component_degree(const Factorization& a, const Factorization& b);

int common_zero_count(const Geometry& g, const Form& f1, const Form& f2);

ConicClass classify_conic(const Geometry& g, const Form& f);
int conic_point_count(ConicClass c, int q); // rational points of each class

// Trial division by every linear form over F_{q^3}; pre: f irreducible /F_q.
bool absolutely_irreducible_cubic(const Geometry& g, const Form& f);

SingularCubicType classify_singular_cubic(const Geometry& g, const Form& f);

// Rational points P with f(P) = 0 and all three partials zero.  The vanishing
// of f is required explicitly: in characteristic dividing deg f the Euler
// relation degenerates and vanishing partials do not imply f(P) = 0.
std::vector<int> singular_points(const Geometry& g, const Form& f);

// Fast smooth test used by the big scans; equivalent to
// classify_singular_cubic(f) == Smooth for nonzero cubics (tested exhaustively
// at q = 3).
bool smooth_cubic(const Geometry& g, const Form& f);

Form embed_form(const Field& base, const FieldExtension& ext, const Form& f);

} // namespace cubic
