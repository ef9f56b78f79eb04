#pragma once

#include "kkm/rational.hpp"

#include <vector>

namespace kkm::detail {

struct LinearSolution {
  bool consistent = false;
  std::size_t rank = 0;
  std::vector<Rational> x;  // one solution (free variables set to zero)
};

/// Exact Gauss-Jordan elimination of rows * x = rhs.
inline LinearSolution solve_linear(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs) {
  const std::size_t m = rows.size();
  const std::size_t n = m == 0 ? 0 : rows.front().size();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && rows[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(rows[p], rows[r]);
    std::swap(rhs[p], rhs[r]);
    const Rational inv = 1 / rows[r][c];
    for (std::size_t k = c; k < n; ++k) rows[r][k] *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t k = c; k < n; ++k) rows[i][k] -= f * rows[r][k];
      rhs[i] -= f * rhs[r];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  LinearSolution out;
  out.rank = r;
  out.consistent = true;
  for (std::size_t i = r; i < m; ++i) {
    if (rhs[i] != 0) out.consistent = false;
  }
  out.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < r; ++i) out.x[pivot_cols[i]] = rhs[i];
  return out;
}

}  // namespace kkm::detail
