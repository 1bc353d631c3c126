#include "catmag/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "catmag/errors.hpp"
#include "catmag/kernels.hpp"

namespace catmag {

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

RrefResult rref(const Matrix& a) {
  RrefResult out{a, {}, 0};
  Matrix& m = out.rref;
  const kernels::Shape shape{m.rows(), m.cols()};
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t r = pivot_row;
    while (r < m.rows() && m(r, col).is_zero()) ++r;
    if (r == m.rows()) continue;
    if (r != pivot_row) {
      std::swap_ranges(m.row(r).begin(), m.row(r).end(), m.row(pivot_row).begin());
    }
    const Rational inv = m(pivot_row, col).reciprocal();
    for (std::size_t j = col; j < m.cols(); ++j) m(pivot_row, j) *= inv;
    kernels::parallel::eliminate_column(m.data(), shape, pivot_row, col);
    out.pivot_cols.push_back(col);
    ++pivot_row;
  }
  out.rank = out.pivot_cols.size();
  return out;
}

std::size_t rank(const Matrix& a) { return rref(a).rank; }

RankFactors rank_decompose(const Matrix& a) {
  RrefResult r = rref(a);
  return {a.select_columns(r.pivot_cols), r.rref.first_rows(r.rank), r.rank};
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (!a.square()) throw ShapeError("inverse of non-square matrix " + a.shape_string());
  const std::size_t n = a.rows();
  RrefResult r = rref(a.hconcat(Matrix::identity(n)));
  // invertible iff the pivots are exactly the first n columns
  if (r.rank < n || (n > 0 && r.pivot_cols[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.rref(i, n + j);
  return inv;
}

Matrix pinv(const Matrix& a) {
  RankFactors f = rank_decompose(a);
  if (f.rank == 0) return Matrix::zeros(a.cols(), a.rows());
  const Matrix bt = transpose(f.b);
  const Matrix ct = transpose(f.c);
  // full-rank Gram matrices are always invertible
  const Matrix cct_inv = *inverse(f.c * ct);
  const Matrix btb_inv = *inverse(bt * f.b);
  return (ct * cct_inv) * (btb_inv * bt);
}

PenroseReport penrose_check(const Matrix& a, const Matrix& candidate) {
  if (candidate.rows() != a.cols() || candidate.cols() != a.rows()) {
    throw ShapeError("candidate pseudoinverse of " + a.shape_string() + " must be " +
                     std::to_string(a.cols()) + "x" + std::to_string(a.rows()) + ", got " +
                     candidate.shape_string());
  }
  const Matrix ax = a * candidate;
  const Matrix xa = candidate * a;
  PenroseReport report;
  report.reproduces = ax * a == a;
  report.reflexive = xa * candidate == candidate;
  report.left_symmetric = transpose(ax) == ax;
  report.right_symmetric = transpose(xa) == xa;
  return report;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  kernels::parallel::kronecker(a.data(), {a.rows(), a.cols()}, b.data(), {b.rows(), b.cols()},
                               out.data());
  return out;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

Matrix kronecker(std::span<const Matrix> factors) {
  Matrix acc = Matrix::identity(1);
  for (const auto& f : factors) acc = kronecker(acc, f);
  return acc;
}

Matrix direct_sum(std::span<const Matrix> summands) {
  Matrix acc;
  for (const auto& s : summands) acc = direct_sum(acc, s);
  return acc;
}

Rational entry_sum(const Matrix& a) { return kernels::parallel::sum(a.data()); }

Matrix nullspace(const Matrix& a) {
  const RrefResult r = rref(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : r.pivot_cols) is_pivot[p] = true;

  Matrix basis(n, n - r.rank);
  std::size_t k = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    basis(free, k) = 1;
    for (std::size_t i = 0; i < r.rank; ++i) basis(r.pivot_cols[i], k) = -r.rref(i, free);
    ++k;
  }
  return basis;
}

Matrix permutation_matrix(std::span<const std::size_t> perm) {
  const std::size_t n = perm.size();
  std::vector<bool> seen(n, false);
  Matrix p(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (perm[i] >= n || seen[perm[i]]) throw std::invalid_argument("not a permutation");
    seen[perm[i]] = true;
    p(i, perm[i]) = 1;
  }
  return p;
}

}  // namespace catmag
