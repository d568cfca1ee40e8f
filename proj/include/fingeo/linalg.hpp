#pragma once

// Gaussian elimination over GF(q).

#include <vector>

#include "fingeo/gf.hpp"

namespace fingeo {

using Row = std::vector<Elem>;

/// Reduced row echelon form in place; zero rows are dropped. Returns pivot columns.
inline std::vector<int> rref(const Field& F, std::vector<Row>& rows) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  const int cols = static_cast<int>(rows[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    int sel = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (!rows[i][c].is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(rows[r], rows[sel]);
    const Elem inv = F.inv(rows[r][c]);
    for (auto& x : rows[r]) x = F.mul(x, inv);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const Elem f = rows[i][c];
      for (int j = 0; j < cols; ++j) rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

inline int rank(const Field& F, std::vector<Row> rows) { return static_cast<int>(rref(F, rows).size()); }

/// Basis of {x : rows * x = 0}, each vector with a 1 in its free column.
inline std::vector<Row> nullspace(const Field& F, std::vector<Row> rows, int cols) {
  const auto piv = rref(F, rows);
  std::vector<char> is_piv(cols, 0);
  for (int c : piv) is_piv[c] = 1;
  std::vector<Row> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_piv[free]) continue;
    Row v(cols, F.zero());
    v[free] = F.one();
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = F.neg(rows[i][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace fingeo
