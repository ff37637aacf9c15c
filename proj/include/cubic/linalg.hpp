#pragma once

#include <vector>

#include "cubic/gf.hpp"

namespace cubic {

// Row-reduction over F_q with deterministic pivoting (first nonzero column,
// first row).  Matrices are row-major vectors of Elt.
struct Rref {
  std::vector<std::vector<Elt>> rows;
  std::vector<int> pivot_cols;
  int rank() const { return (int)pivot_cols.size(); }
};

inline Rref rref(const Field& F, std::vector<std::vector<Elt>> rows, int ncols) {
  Rref out;
  int r0 = 0;
  int nrows = (int)rows.size();
  for (int c = 0; c < ncols && r0 < nrows; ++c) {
    int pr = -1;
    for (int r = r0; r < nrows; ++r)
      if (rows[r][c]) { pr = r; break; }
    if (pr < 0) continue;
    std::swap(rows[r0], rows[pr]);
    Elt inv = F.inv(rows[r0][c]);
    for (int j = 0; j < ncols; ++j) rows[r0][j] = F.mul(rows[r0][j], inv);
    for (int r = 0; r < nrows; ++r) {
      if (r == r0 || !rows[r][c]) continue;
      Elt f = rows[r][c];
      for (int j = 0; j < ncols; ++j)
        rows[r][j] = F.sub(rows[r][j], F.mul(f, rows[r0][j]));
    }
    out.pivot_cols.push_back(c);
    ++r0;
  }
  rows.resize(r0);
  out.rows = std::move(rows);
  return out;
}

inline int rank(const Field& F, std::vector<std::vector<Elt>> rows, int ncols) {
  return rref(F, std::move(rows), ncols).rank();
}

// Basis of {x : A x = 0}, one vector per free column, ascending free column.
inline std::vector<std::vector<Elt>> nullspace(const Field& F,
                                               std::vector<std::vector<Elt>> rows,
                                               int ncols) {
  Rref rr = rref(F, std::move(rows), ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (int c : rr.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Elt>> basis;
  for (int fc = 0; fc < ncols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<Elt> v(ncols, 0);
    v[fc] = 1;
    for (size_t pr = 0; pr < rr.pivot_cols.size(); ++pr)
      v[rr.pivot_cols[pr]] = F.neg(rr.rows[pr][fc]);
    basis.push_back(std::move(v));
  }
  return basis;
}

} // namespace cubic
