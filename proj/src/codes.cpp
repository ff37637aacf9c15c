#include "cubic/codes.hpp"

#include <stdexcept>

#include "cubic/linalg.hpp"

namespace cubic {

std::string LinearCode::kind_tag() const {
  switch (kind) {
    case CodeKind::Projective: return "projective(" + std::to_string(degree) + ")";
    case CodeKind::Affine: return "affine(" + std::to_string(degree) + ")";
    case CodeKind::Dual: return "dual(" + std::to_string(degree) + ")";
  }
  return "?";
}

LinearCode build_projective_code(const Plane& plane, int d) {
  const Field& F = plane.field();
  // injectivity of the evaluation map needs q >= d (no degree-d form vanishes
  // on all of P^2 then); for cubics that is exactly the q > 2 requirement
  if (F.q() < d)
    throw std::invalid_argument("projective degree-" + std::to_string(d) +
                                " code needs q >= " + std::to_string(d) +
                                ", got q = " + std::to_string(F.q()));
  LinearCode c{F, CodeKind::Projective, d, 0, 0, {}};
  c.n = plane.n_points();
  c.k = form_dim(d);
  const auto& E = plane.eval_matrix(d);
  c.gen.resize(c.k);
  for (int m = 0; m < c.k; ++m)
    c.gen[m].assign(E.begin() + (size_t)m * c.n, E.begin() + (size_t)(m + 1) * c.n);
  if (rank(F, c.gen, c.n) != c.k)
    throw std::logic_error("projective generator rows not independent (bug)");
  return c;
}

std::vector<std::array<int, 2>> affine_monomials(int d) {
  std::vector<std::array<int, 2>> out;
  for (int deg = d; deg >= 0; --deg)
    for (int i = deg; i >= 0; --i) out.push_back({i, deg - i});
  return out;
}

LinearCode build_affine_code(const Field& F, int d) {
  if (F.q() - 1 < d)
    throw std::invalid_argument("affine degree-" + std::to_string(d) +
                                " code needs q - 1 >= " + std::to_string(d) +
                                ", got q = " + std::to_string(F.q()));
  int q = F.q();
  LinearCode c{F, CodeKind::Affine, d, 0, 0, {}};
  c.n = q * q;
  auto ms = affine_monomials(d);
  c.k = (int)ms.size();
  c.gen.assign(c.k, std::vector<Elt>(c.n));
  for (int m = 0; m < c.k; ++m)
    for (int x = 0; x < q; ++x)
      for (int y = 0; y < q; ++y)
        c.gen[m][x * q + y] = F.mul(F.pow((Elt)x, ms[m][0]), F.pow((Elt)y, ms[m][1]));
  if (rank(F, c.gen, c.n) != c.k)
    throw std::logic_error("affine generator rows not independent (bug)");
  return c;
}

LinearCode dual_code(const LinearCode& c) {
  LinearCode d{c.F, CodeKind::Dual, c.degree, 0, 0, {}};
  d.n = c.n;
  d.gen = nullspace(c.F, c.gen, c.n);
  d.k = (int)d.gen.size();
  for (const auto& row : d.gen)
    for (const auto& g : c.gen) {
      Elt ip = 0;
      for (int i = 0; i < c.n; ++i) ip = c.F.add(ip, c.F.mul(row[i], g[i]));
      if (ip) throw std::logic_error("dual basis row not orthogonal (bug)");
    }
  return d;
}

Codeword encode(const LinearCode& c, const std::vector<Elt>& message) {
  if ((int)message.size() != c.k)
    throw std::invalid_argument("encode: message length " + std::to_string(message.size()) +
                                " != dimension " + std::to_string(c.k));
  Codeword w;
  w.symbols.assign(c.n, 0);
  for (int m = 0; m < c.k; ++m) {
    if (!message[m]) continue;
    for (int i = 0; i < c.n; ++i)
      w.symbols[i] = c.F.add(w.symbols[i], c.F.mul(message[m], c.gen[m][i]));
  }
  for (int i = 0; i < c.n; ++i)
    if (w.symbols[i]) w.mask.set(i);
  return w;
}

} // namespace cubic
