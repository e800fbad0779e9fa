#pragma once

/**
 * @file linalg.hpp
 * @brief Exact Gaussian elimination over GF(p): rank and nullspace.
 */

#include <vector>

#include "gf.hpp"

namespace knets {

using Row = std::vector<Scalar>;
using Matrix = std::vector<Row>;

namespace detail {

/// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(Matrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    Scalar inv = m[r][c].inv();
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Scalar f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

inline std::size_t rank(Matrix m) {
  if (m.empty()) return 0;
  return detail::rref(m, m[0].size()).size();
}

/// Basis of { x : m x = 0 } for an r x cols matrix.
inline std::vector<Row> nullspace(Matrix m, Field F, std::size_t cols) {
  auto pivots = detail::rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Row> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Row v(cols, F.zero());
    v[free] = F.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace knets
