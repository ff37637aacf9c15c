#include "cubic/plane.hpp"

#include <stdexcept>

namespace cubic {

std::vector<Point3> enumerate_points(const Field& F, PointOrder order) {
  int q = F.q();
  std::vector<Point3> pts;
  pts.reserve(q * q + q + 1);
  if (order == PointOrder::Canonical) {
    for (int y = 0; y < q; ++y)
      for (int z = 0; z < q; ++z) pts.push_back({1, (Elt)y, (Elt)z});
    for (int z = 0; z < q; ++z) pts.push_back({0, 1, (Elt)z});
    pts.push_back({0, 0, 1});
  } else {
    // last nonzero coordinate scaled to 1; used to confirm representative
    // independence of the counted quantities
    pts.push_back({1, 0, 0});
    for (int x = 0; x < q; ++x) pts.push_back({(Elt)x, 1, 0});
    for (int x = 0; x < q; ++x)
      for (int y = 0; y < q; ++y) pts.push_back({(Elt)x, (Elt)y, 1});
  }
  return pts;
}

Plane::Plane(Field F) : F_(std::move(F)) {
  int q = F_.q();
  N_ = q * q + q + 1;
  pts_ = enumerate_points(F_);

  if (N_ <= 128) {
    line_mask_.resize(N_);
    line_pts_.resize(N_);
    for (int li = 0; li < N_; ++li) {
      const Point3& L = pts_[li];
      for (int pi = 0; pi < N_; ++pi) {
        const Point3& P = pts_[pi];
        Elt s = F_.add(F_.mul(L[0], P[0]), F_.add(F_.mul(L[1], P[1]), F_.mul(L[2], P[2])));
        if (s == 0) {
          line_mask_[li].set(pi);
          line_pts_[li].push_back((uint16_t)pi);
        }
      }
    }
    line_of_pair_.assign((size_t)N_ * N_, -1);
    for (int li = 0; li < N_; ++li)
      for (size_t a = 0; a < line_pts_[li].size(); ++a)
        for (size_t b = a + 1; b < line_pts_[li].size(); ++b) {
          int p1 = line_pts_[li][a], p2 = line_pts_[li][b];
          line_of_pair_[p1 * N_ + p2] = (int16_t)li;
          line_of_pair_[p2 * N_ + p1] = (int16_t)li;
        }
  }
}

int Plane::point_index(const Point3& raw) const {
  int q = F_.q();
  if (raw[0]) {
    Elt inv = F_.inv(raw[0]);
    return (int)F_.mul(raw[1], inv) * q + (int)F_.mul(raw[2], inv);
  }
  if (raw[1]) {
    Elt inv = F_.inv(raw[1]);
    return q * q + (int)F_.mul(raw[2], inv);
  }
  if (raw[2]) return q * q + q;
  throw std::invalid_argument("point_index: zero triple");
}

const std::vector<Elt>& Plane::eval_matrix(int d) const {
  if ((int)eval_.size() <= d) eval_.resize(d + 1);
  if (eval_[d].empty()) {
    const auto& ms = monomials(d);
    std::vector<Elt> E(ms.size() * N_);
    for (size_t m = 0; m < ms.size(); ++m)
      for (int n = 0; n < N_; ++n) {
        const Point3& P = pts_[n];
        E[m * N_ + n] = F_.mul(F_.pow(P[0], ms[m][0]),
                               F_.mul(F_.pow(P[1], ms[m][1]), F_.pow(P[2], ms[m][2])));
      }
    eval_[d] = std::move(E);
  }
  return eval_[d];
}

Mask2 Plane::support_mask(const Form& f) const {
  const auto& E = eval_matrix(f.d);
  Mask2 m;
  for (int n = 0; n < N_; ++n) {
    Elt acc = 0;
    for (size_t mi = 0; mi < f.c.size(); ++mi)
      if (f.c[mi]) acc = F_.add(acc, F_.mul(f.c[mi], E[mi * N_ + n]));
    if (acc) m.set(n);
  }
  return m;
}

Mask2 Plane::zero_mask(const Form& f) const { return support_mask(f).complement(N_); }

uint64_t Plane::point_order_hash() const {
  uint64_t h = 1469598103934665603ull;
  auto mix = [&](uint64_t x) { h ^= x; h *= 1099511628211ull; };
  for (const auto& P : pts_) {
    mix(P[0]);
    mix(P[1]);
    mix(P[2]);
  }
  return h;
}

} // namespace cubic
