#pragma once

#include <cstdint>
#include <vector>

#include "cubic/forms.hpp"
#include "cubic/gf.hpp"
#include "cubic/mask.hpp"

namespace cubic {

// Point ordering convention: canonical representatives (first nonzero
// coordinate equal to 1) listed chart by chart, [1:y:z] with (y,z) ascending,
// then [0:1:z], then [0:0:1].  The first point is [1:0:0].
enum class PointOrder { Canonical, LastPivot };

std::vector<Point3> enumerate_points(const Field& F, PointOrder order = PointOrder::Canonical);

// Incidence tables for P^2(F_q).  Line i is the zero set of the linear form
// whose coefficients are points()[i]; masks exist when N <= 128.
class Plane {
public:
  explicit Plane(Field F);

  const Field& field() const { return F_; }
  int n_points() const { return N_; }
  const std::vector<Point3>& points() const { return pts_; }

  // canonical index of an arbitrary nonzero coordinate triple
  int point_index(const Point3& raw) const;

  const std::vector<Mask2>& line_masks() const { return line_mask_; }
  const std::vector<std::vector<uint16_t>>& line_points() const { return line_pts_; }
  // index of the line through two distinct points
  int line_through(int p1, int p2) const { return line_of_pair_[p1 * N_ + p2]; }

  // eval_matrix(d)[m*N + n] = value of monomial m at point n
  const std::vector<Elt>& eval_matrix(int d) const;

  Mask2 support_mask(const Form& f) const; // coordinates where f is nonzero
  Mask2 zero_mask(const Form& f) const;

  uint64_t point_order_hash() const;

private:
  Field F_;
  int N_;
  std::vector<Point3> pts_;
  std::vector<Mask2> line_mask_;
  std::vector<std::vector<uint16_t>> line_pts_;
  std::vector<int16_t> line_of_pair_;
  mutable std::vector<std::vector<Elt>> eval_; // per degree, lazily built
};

} // namespace cubic
