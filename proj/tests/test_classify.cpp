#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubic/classify.hpp"
#include "cubic/forms.hpp"

using namespace cubic;

namespace {
Form mono_form(int d, int i, int j, int k, Elt c = 1) {
  Form f{d, std::vector<Elt>(form_dim(d), 0)};
  f.c[monomial_index(d, i, j, k)] = c;
  return f;
}
} // namespace

TEST_CASE("classify_conic examples") {
  Geometry g(3);
  const Field& F = g.field();

  CHECK(classify_conic(g, mono_form(2, 1, 0, 1)) == ConicClass::TwoRationalLines); // xz
  CHECK(classify_conic(g, mono_form(2, 2, 0, 0)) == ConicClass::DoubleLine);       // x^2

  Form f = mono_form(2, 2, 0, 0);
  f.c[monomial_index(2, 0, 2, 0)] = 1; // x^2 + y^2 over F_3: conjugate pair
  CHECK(classify_conic(g, f) == ConicClass::ConjugateLinePair);

  Form smooth = mono_form(2, 1, 1, 0);
  smooth.c[monomial_index(2, 0, 0, 2)] = F.neg(1); // xy - z^2
  CHECK(classify_conic(g, smooth) == ConicClass::Smooth);

  CHECK(classify_conic(g, Form{2, std::vector<Elt>(6, 0)}) == ConicClass::Zero);
}

TEST_CASE("conic class inventory") {
  for (int q : {3, 4, 5}) {
    Geometry g(q);
    const Field& F = g.field();
    uint64_t M = class_count(q, 6);
    long dbl = 0, two = 0, conj = 0, smooth = 0;
    for (uint64_t i = 0; i < M; ++i) {
      Form f{2, class_rep(F, 6, i)};
      ConicClass c = classify_conic(g, f);
      int pts = g.plane().n_points() - g.plane().support_mask(f).popcount();
      CHECK(pts == conic_point_count(c, q));
      switch (c) {
        case ConicClass::DoubleLine: ++dbl; break;
        case ConicClass::TwoRationalLines: ++two; break;
        case ConicClass::ConjugateLinePair: ++conj; break;
        case ConicClass::Smooth: ++smooth; break;
        default: FAIL("zero class in enumeration");
      }
    }
    long N = q * q + q + 1;
    CHECK(dbl == N);
    CHECK(two == N * (N - 1) / 2);
    CHECK(conj == N * (q * q - q) / 2);
    CHECK(smooth == (long)std::pow(q, 5) - q * q);
  }
}

TEST_CASE("factorization reconstructs the form") {
  Geometry g(3);
  const Field& F = g.field();
  uint64_t M = class_count(3, 10);
  for (uint64_t i = 0; i < M; i += 11) { // a third of all cubic classes
    Form f{3, class_rep(F, 10, i)};
    auto fac = factor_form(g, f);
    Form prod{0, {1}};
    for (const auto& fe : fac)
      for (int m = 0; m < fe.mult; ++m) prod = form_mul(F, prod, fe.form);
    REQUIRE(prod.d == 3);
    CHECK(canonical_form(F, prod).c == canonical_form(F, f).c);
  }
}

TEST_CASE("common_component_degree examples") {
  Geometry g(3);
  const Field& F = g.field();
  Form x3 = mono_form(3, 3, 0, 0);
  Form y3 = mono_form(3, 0, 3, 0);
  CHECK(common_component_degree(g, x3, y3) == 0);

  Form x = mono_form(1, 1, 0, 0);
  Form conic = mono_form(2, 0, 2, 0);
  conic.c[monomial_index(2, 1, 0, 1)] = F.neg(1); // y^2 - xz, smooth
  Form f1 = form_mul(F, x, conic);
  Form xz2 = mono_form(3, 1, 0, 2);
  CHECK(common_component_degree(g, f1, xz2) >= 1);

  Form L1 = mono_form(1, 0, 0, 1);
  Form L2 = mono_form(1, 0, 1, 0);
  CHECK(common_component_degree(g, form_mul(F, conic, L1), form_mul(F, conic, L2)) == 2);

  CHECK_THROWS_AS(common_component_degree(g, Form{3, std::vector<Elt>(10, 0)}, x3),
                  std::invalid_argument);
}

TEST_CASE("common_zero_count examples") {
  Geometry g(3);
  Form x = mono_form(1, 1, 0, 0);
  Form y = mono_form(1, 0, 1, 0);
  CHECK(common_zero_count(g, x, y) == 1); // only [0:0:1]
  CHECK(common_zero_count(g, x, x) == 4); // zeros of x itself
}

TEST_CASE("classify_singular_cubic examples") {
  for (int q : {3, 4, 5, 7}) {
    Geometry g(q);
    const Field& F = g.field();
    // y^2 z - x^3: cusp with q+1 points
    Form cusp = mono_form(3, 0, 2, 1);
    cusp.c[monomial_index(3, 3, 0, 0)] = F.neg(1);
    CHECK(classify_singular_cubic(g, cusp) == SingularCubicType::Cuspidal);
    CHECK(g.plane().n_points() - g.plane().support_mask(cusp).popcount() == q + 1);

    if (q % 2) {
      // y^2 z - x^2 (x + z): split node with q points
      Form f = mono_form(3, 0, 2, 1);
      f.c[monomial_index(3, 3, 0, 0)] = F.neg(1);
      f.c[monomial_index(3, 2, 0, 1)] = F.neg(1);
      CHECK(classify_singular_cubic(g, f) == SingularCubicType::SplitNodal);
      CHECK(g.plane().n_points() - g.plane().support_mask(f).popcount() == q);
    }

    Form red = form_mul(F, mono_form(1, 1, 0, 0), [&] {
      Form c = mono_form(2, 0, 2, 0);
      c.c[monomial_index(2, 1, 0, 1)] = F.neg(1);
      return c;
    }());
    CHECK(classify_singular_cubic(g, red) == SingularCubicType::Reducible);
  }
}

TEST_CASE("singular point counts by type at q=3") {
  Geometry g(3);
  const Field& F = g.field();
  long cusp = 0, split = 0, nonsplit = 0, smooth = 0, reducible = 0;
  uint64_t M = class_count(3, 10);
  for (uint64_t i = 0; i < M; ++i) {
    Form f{3, class_rep(F, 10, i)};
    SingularCubicType t = classify_singular_cubic(g, f);
    switch (t) {
      case SingularCubicType::Cuspidal: ++cusp; break;
      case SingularCubicType::SplitNodal: ++split; break;
      case SingularCubicType::NonsplitNodal: ++nonsplit; break;
      case SingularCubicType::Smooth: ++smooth; break;
      case SingularCubicType::Reducible: ++reducible; break;
    }
    if (smooth_cubic(g, f) != (t == SingularCubicType::Smooth)) {
      CHECK(smooth_cubic(g, f) == (t == SingularCubicType::Smooth));
    }
  }
  // absolutely irreducible singular classes per type, and smooth classes
  CHECK(cusp == 2808);
  CHECK(split == 2808);
  CHECK(nonsplit == 2808);
  CHECK(smooth == 16848);
  CHECK(reducible == (long)M - 3 * 2808 - 16848);

  // point counts: cusp q+1, split q, nonsplit q+2 (checked via a sample)
  int seen = 0;
  for (uint64_t i = 0; i < M && seen < 200; ++i) {
    Form f{3, class_rep(F, 10, i)};
    auto t = classify_singular_cubic(g, f);
    int pts = g.plane().n_points() - g.plane().support_mask(f).popcount();
    if (t == SingularCubicType::Cuspidal) CHECK(pts == 4);
    if (t == SingularCubicType::SplitNodal) CHECK(pts == 3);
    if (t == SingularCubicType::NonsplitNodal) CHECK(pts == 5);
    if (t != SingularCubicType::Reducible) ++seen;
  }
}

TEST_CASE("singular_points examples") {
  Geometry g(3);
  const Field& F = g.field();
  Form smooth = mono_form(2, 1, 1, 0);
  smooth.c[monomial_index(2, 0, 0, 2)] = F.neg(1); // xy - z^2
  CHECK(singular_points(g, smooth).empty());

  Form x3 = mono_form(3, 3, 0, 0); // all partials are multiples of x^2
  auto sp = singular_points(g, x3);
  CHECK(sp.size() == 4); // the whole line x = 0
  for (int p : sp) CHECK(g.plane().points()[p][0] == 0);

  Form cusp = mono_form(3, 0, 2, 1);
  cusp.c[monomial_index(3, 3, 0, 0)] = F.neg(1);
  auto cp = singular_points(g, cusp);
  REQUIRE(cp.size() == 1);
  CHECK(g.plane().points()[cp[0]] == Point3{0, 0, 1});
}

TEST_CASE("coprime pairs respect the degree bound over extensions") {
  Geometry g(3);
  const Field& F = g.field();
  // random-ish pairs of cubics without common component have at most 9 common
  // zeros over F_q (the closure statement pins the gcd; rational points bound it)
  uint64_t M = class_count(3, 10);
  for (uint64_t i = 1; i < M; i += 2477) {
    for (uint64_t j = i + 1; j < M; j += 3911) {
      Form f{3, class_rep(F, 10, i)}, h{3, class_rep(F, 10, j)};
      if (common_component_degree(g, f, h) == 0) CHECK(common_zero_count(g, f, h) <= 9);
    }
  }
}

TEST_CASE("absolute irreducibility matches structure at q=3") {
  Geometry g(3);
  const Field& F = g.field();
  // conjugate-line triples: irreducible over F_q, reducible over F_{q^3};
  // 248 classes at q=3
  uint64_t M = class_count(3, 10);
  long conj_triples = 0;
  for (uint64_t i = 0; i < M; ++i) {
    Form f{3, class_rep(F, 10, i)};
    auto fac = factor_form(g, f);
    if (fac.size() == 1 && fac[0].degree == 3 && !absolutely_irreducible_cubic(g, f))
      ++conj_triples;
  }
  CHECK(conj_triples == 248);
}

TEST_CASE("coprime pairs stay within the degree bound over extensions") {
  Geometry g(3);
  const Field& F = g.field();
  uint64_t M = class_count(3, 10);
  int tested = 0;
  for (uint64_t i = 5; i < M && tested < 6; i += 4999) {
    for (uint64_t j = i + 3000; j < M && tested < 6; j += 7919) {
      Form f{3, class_rep(F, 10, i)}, h{3, class_rep(F, 10, j)};
      if (common_component_degree(g, f, h) != 0) continue;
      ++tested;
      for (int deg : {2, 3}) {
        const FieldExtension& E = deg == 2 ? g.ext2() : g.ext3();
        Form fe = embed_form(F, E, f), he = embed_form(F, E, h);
        int common = 0;
        for (const Point3& P : enumerate_points(E.field))
          if (evaluate_form(E.field, fe, P) == 0 && evaluate_form(E.field, he, P) == 0)
            ++common;
        CHECK(common <= 9);
      }
    }
  }
  CHECK(tested > 0);
}
