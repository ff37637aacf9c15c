#include "cubic/classify.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cubic {

const FieldExtension& Geometry::ext2() const {
  std::call_once(once2_, [&] { ext2_ = std::make_unique<FieldExtension>(extend_field(field(), 2)); });
  return *ext2_;
}
const FieldExtension& Geometry::ext3() const {
  std::call_once(once3_, [&] { ext3_ = std::make_unique<FieldExtension>(extend_field(field(), 3)); });
  return *ext3_;
}

Form embed_form(const Field& base, const FieldExtension& ext, const Form& f) {
  (void)base;
  Form out{f.d, std::vector<Elt>(f.c.size())};
  for (size_t i = 0; i < f.c.size(); ++i) out.c[i] = ext.embed[f.c[i]];
  return out;
}

static uint64_t factor_id(const Field& F, const Form& f) {
  return ((uint64_t)f.d << 32) | class_index(F, f.c);
}

Factorization factor_form(const Geometry& g, const Form& f) {
  const Field& F = g.field();
  const Plane& pl = g.plane();
  if (f.is_zero()) throw std::invalid_argument("factor_form: zero form");
  Factorization out;
  Form rest = canonical_form(F, f);
  // strip rational linear factors, lines in canonical point order
  for (int li = 0; li < pl.n_points() && rest.d >= 1; ++li) {
    const Point3& L = pl.points()[li];
    while (rest.d >= 1) {
      auto quo = divide_linear(F, rest, L);
      if (!quo) break;
      Form lf{1, {L[0], L[1], L[2]}};
      if (!out.empty() && out.back().degree == 1 && out.back().form.c == lf.c)
        out.back().mult += 1;
      else
        out.push_back({factor_id(F, lf), 1, 1, lf});
      rest = canonical_form(F, *quo);
    }
  }
  if (rest.d >= 2) // irreducible residual conic or cubic
    out.push_back({factor_id(F, rest), rest.d, 1, rest});
  return out;
}

int common_component_degree(const Factorization& a, const Factorization& b) {
  int deg = 0;
  for (const auto& fa : a)
    for (const auto& fb : b)
      if (fa.id == fb.id) deg += fa.degree * std::min(fa.mult, fb.mult);
  return deg;
}

int common_component_degree(const Geometry& g, const Form& f1, const Form& f2) {
  if (f1.is_zero() || f2.is_zero())
    throw std::invalid_argument("common_component_degree: zero input");
  return common_component_degree(factor_form(g, f1), factor_form(g, f2));
}

int common_zero_count(const Geometry& g, const Form& f1, const Form& f2) {
  Mask2 u = g.plane().support_mask(f1) | g.plane().support_mask(f2);
  return g.plane().n_points() - u.popcount();
}

// divisibility of an embedded form by some linear form over the extension
static bool has_linear_factor_over(const Field& E, const Form& fe) {
  int q = E.q();
  auto try_line = [&](Elt a, Elt b, Elt c) {
    return divide_linear(E, fe, Point3{a, b, c}).has_value();
  };
  for (int y = 0; y < q; ++y)
    for (int z = 0; z < q; ++z)
      if (try_line(1, (Elt)y, (Elt)z)) return true;
  for (int z = 0; z < q; ++z)
    if (try_line(0, 1, (Elt)z)) return true;
  return try_line(0, 0, 1);
}

ConicClass classify_conic(const Geometry& g, const Form& f) {
  if (f.d != 2) throw std::invalid_argument("classify_conic: degree must be 2");
  if (f.is_zero()) return ConicClass::Zero;
  auto fac = factor_form(g, f);
  if (fac.size() == 1 && fac[0].degree == 2) {
    const auto& E2 = g.ext2();
    Form fe = embed_form(g.field(), E2, fac[0].form);
    return has_linear_factor_over(E2.field, fe) ? ConicClass::ConjugateLinePair
                                                : ConicClass::Smooth;
  }
  if (fac.size() == 1 && fac[0].mult == 2) return ConicClass::DoubleLine;
  return ConicClass::TwoRationalLines;
}

int conic_point_count(ConicClass c, int q) {
  switch (c) {
    case ConicClass::DoubleLine: return q + 1;
    case ConicClass::TwoRationalLines: return 2 * q + 1;
    case ConicClass::ConjugateLinePair: return 1;
    case ConicClass::Smooth: return q + 1;
    case ConicClass::Zero: return q * q + q + 1;
  }
  return -1;
}

bool absolutely_irreducible_cubic(const Geometry& g, const Form& f) {
  const auto& E3 = g.ext3();
  Form fe = embed_form(g.field(), E3, f);
  return !has_linear_factor_over(E3.field, fe);
}

std::vector<int> singular_points(const Geometry& g, const Form& f) {
  const Plane& pl = g.plane();
  const Field& F = g.field();
  Form dx = derivative(F, f, 0), dy = derivative(F, f, 1), dz = derivative(F, f, 2);
  std::vector<int> out;
  for (int pi = 0; pi < pl.n_points(); ++pi) {
    const Point3& P = pl.points()[pi];
    if (evaluate_form(F, f, P)) continue;
    if (evaluate_form(F, dx, P) || evaluate_form(F, dy, P) || evaluate_form(F, dz, P))
      continue;
    out.push_back(pi);
  }
  return out;
}

namespace {

// number of projective roots of a*u^2 + b*uv + c*v^2 over the given field
int binary_quadratic_roots(const Field& F, Elt a, Elt b, Elt c) {
  int roots = 0;
  for (int t = 0; t < F.q(); ++t) {
    Elt tt = (Elt)t;
    Elt val = F.add(a, F.add(F.mul(b, tt), F.mul(c, F.mul(tt, tt))));
    if (val == 0) ++roots;
  }
  if (c == 0) ++roots; // [u:v] = [1:0]... root at v=0 iff coeff of u^2*?  a u^2 at (1,0)
  return roots;
}

} // namespace

SingularCubicType classify_singular_cubic(const Geometry& g, const Form& f) {
  if (f.d != 3) throw std::invalid_argument("classify_singular_cubic: degree must be 3");
  if (f.is_zero()) throw std::invalid_argument("classify_singular_cubic: zero form");
  const Field& F = g.field();

  auto fac = factor_form(g, f);
  if (fac.size() != 1 || fac[0].degree != 3) return SingularCubicType::Reducible;
  if (!absolutely_irreducible_cubic(g, f)) return SingularCubicType::Reducible;

  // absolutely irreducible: a singular point, if any, is unique and rational;
  // the degree-2 extension search below is a belt on top of that fact.
  auto sing = singular_points(g, f);
  int sp = -1;
  if (!sing.empty()) {
    sp = sing[0];
  } else {
    const auto& E2 = g.ext2();
    const Field& E = E2.field;
    Form fe = embed_form(F, E2, f);
    Form dx = derivative(E, fe, 0), dy = derivative(E, fe, 1), dz = derivative(E, fe, 2);
    for (const Point3& P : enumerate_points(E)) {
      if (evaluate_form(E, fe, P)) continue;
      if (evaluate_form(E, dx, P) || evaluate_form(E, dy, P) || evaluate_form(E, dz, P))
        continue;
      throw std::logic_error("absolutely irreducible cubic with non-rational singular point");
    }
    return SingularCubicType::Smooth;
  }

  // tangent cone at the singular point: move P to [0:0:1]
  const Point3& P = g.plane().points()[sp];
  int pivot = P[0] ? 0 : (P[1] ? 1 : 2);
  int a = (pivot == 0) ? 1 : 0;
  int b = (pivot == 2) ? 1 : 2;
  std::array<Point3, 3> M{}; // rows; columns are e_a, e_b, P
  for (int r = 0; r < 3; ++r) M[r] = {Elt(r == a), Elt(r == b), P[r]};
  Form h = substitute(F, f, M);
  if (h.c[monomial_index(3, 0, 0, 3)] != 0 ||
      h.c[monomial_index(3, 1, 0, 2)] != 0 || h.c[monomial_index(3, 0, 1, 2)] != 0)
    throw std::logic_error("tangent cone extraction: point not singular (bug)");
  Elt qa = h.c[monomial_index(3, 2, 0, 1)];
  Elt qb = h.c[monomial_index(3, 1, 1, 1)];
  Elt qc = h.c[monomial_index(3, 0, 2, 1)];
  if (qa == 0 && qb == 0 && qc == 0)
    throw std::logic_error("vanishing tangent cone on absolutely irreducible cubic (bug)");

  int base_roots = binary_quadratic_roots(F, qa, qb, qc);
  const auto& E2 = g.ext2();
  int ext_roots = binary_quadratic_roots(E2.field, E2.embed[qa], E2.embed[qb], E2.embed[qc]);
  if (ext_roots == 1) return SingularCubicType::Cuspidal;
  if (base_roots == 2) return SingularCubicType::SplitNodal;
  return SingularCubicType::NonsplitNodal;
}

bool smooth_cubic(const Geometry& g, const Form& f) {
  if (f.is_zero()) return false;
  const Plane& pl = g.plane();
  Mask2 supp = pl.support_mask(f);
  int w = supp.popcount();
  if (w == pl.n_points()) return false; // no rational point: three conjugate lines
  int q = g.field().q();
  if (w <= q * q) {
    for (const Mask2& lm : pl.line_masks())
      if ((supp & lm).none()) return false; // a full rational line of zeros
  }
  return singular_points(g, f).empty();
}

} // namespace cubic
