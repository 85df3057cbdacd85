#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

namespace qconst {

/// Dense row-major matrix over an exact field F (Scalar or Cyclotomic).
template <class F>
using Matrix = std::vector<std::vector<F>>;

/// Reduced row echelon form: rows[i] has a 1 in column pivots[i] and zeros in
/// every other pivot column.
template <class F>
struct Echelon {
  Matrix<F> rows;
  std::vector<std::size_t> pivots;
  std::size_t cols = 0;

  std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination. Columns are scanned left to right (the first
/// column with a nonzero entry below the current pivot row gets the next
/// pivot); among candidate rows the one with the smallest entry weight wins,
/// ties broken by row order, so the result is deterministic.
template <class F>
Echelon<F> row_reduce(Matrix<F> m, std::size_t cols)
{
  Echelon<F> e;
  e.cols = cols;
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols && next < m.size(); ++c) {
    std::size_t best = m.size();
    std::size_t best_weight = std::numeric_limits<std::size_t>::max();
    for (std::size_t r = next; r < m.size(); ++r) {
      if (m[r][c].is_zero())
        continue;
      const std::size_t w = m[r][c].weight();
      if (w < best_weight) {
        best = r;
        best_weight = w;
      }
    }
    if (best == m.size())
      continue;
    std::swap(m[next], m[best]);
    auto& prow = m[next];
    const F inv = prow[c].inverse();
    for (std::size_t j = c; j < cols; ++j)
      if (!prow[j].is_zero())
        prow[j] *= inv;
    std::vector<std::size_t> support;
    for (std::size_t j = c; j < cols; ++j)
      if (!prow[j].is_zero())
        support.push_back(j);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == next || m[r][c].is_zero())
        continue;
      const F f = m[r][c];
      for (std::size_t j : support)
        m[r][j] -= f * prow[j];
    }
    e.pivots.push_back(c);
    ++next;
  }
  m.resize(next);
  e.rows = std::move(m);
  return e;
}

template <class F>
std::size_t rank_of(const Matrix<F>& m, std::size_t cols)
{
  return row_reduce(m, cols).rank();
}

/// Basis of {x : m x = 0}: one vector per non-pivot column f, with x_f = 1.
template <class F>
std::vector<std::vector<F>> nullspace_from(const Echelon<F>& e)
{
  std::vector<bool> is_pivot(e.cols, false);
  for (std::size_t p : e.pivots)
    is_pivot[p] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t f = 0; f < e.cols; ++f) {
    if (is_pivot[f])
      continue;
    std::vector<F> v(e.cols);
    v[f] = F(1);
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      if (!e.rows[i][f].is_zero())
        v[e.pivots[i]] = -e.rows[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
std::vector<std::vector<F>> nullspace(const Matrix<F>& m, std::size_t cols)
{
  return nullspace_from(row_reduce(m, cols));
}

/// Coefficients x with sum_i x_i * vectors[i] = target, or nullopt when target
/// is outside the span. All vectors have the same length.
template <class F>
std::optional<std::vector<F>> solve_combination(const std::vector<std::vector<F>>& vectors, const std::vector<F>& target)
{
  const std::size_t n = vectors.size();
  const std::size_t len = target.size();
  Matrix<F> m(len, std::vector<F>(n + 1));
  for (std::size_t r = 0; r < len; ++r) {
    for (std::size_t i = 0; i < n; ++i)
      m[r][i] = vectors[i][r];
    m[r][n] = target[r];
  }
  const Echelon<F> e = row_reduce(std::move(m), n + 1);
  std::vector<F> x(n);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == n)
      return std::nullopt;
    x[e.pivots[i]] = e.rows[i][n];
  }
  return x;
}

/// Rank of a list of vectors of equal length.
template <class F>
std::size_t rank_of_vectors(const std::vector<std::vector<F>>& vectors)
{
  if (vectors.empty())
    return 0;
  return rank_of(vectors, vectors.front().size());
}

} // namespace qconst
