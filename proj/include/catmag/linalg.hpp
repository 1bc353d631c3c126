#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "catmag/matrix.hpp"

namespace catmag {

Matrix transpose(const Matrix& a);

struct RrefResult {
  Matrix rref;
  std::vector<std::size_t> pivot_cols;  // strictly increasing
  std::size_t rank = 0;
};

/// Gauss-Jordan elimination: leftmost nonzero column, topmost eligible
/// row. No magnitude pivoting; arithmetic is exact.
RrefResult rref(const Matrix& a);

std::size_t rank(const Matrix& a);

/// A = B C with B the pivot columns of A (original order) and C the nonzero
/// rows of rref(A). Rank 0 gives B: m x 0 and C: 0 x n.
struct RankFactors {
  Matrix b;
  Matrix c;
  std::size_t rank = 0;
};

RankFactors rank_decompose(const Matrix& a);

/// Two-sided inverse, or std::nullopt when singular. Throws ShapeError on a
/// non-square argument.
std::optional<Matrix> inverse(const Matrix& a);

/// Moore-Penrose pseudoinverse via the rank factorization A = BC:
///
///   A+ = C^T (C C^T)^-1 (B^T B)^-1 B^T
///
/// Entries are rational, so the conjugate transpose is the plain transpose.
/// Zero-rank input (including empty shapes) yields the zero matrix of
/// transposed shape.
Matrix pinv(const Matrix& a);

/// The four Penrose equations, each checked by exact equality.
struct PenroseReport {
  bool reproduces = false;       // A X A = A
  bool reflexive = false;        // X A X = X
  bool left_symmetric = false;   // (A X)^T = A X
  bool right_symmetric = false;  // (X A)^T = X A

  bool all() const { return reproduces && reflexive && left_symmetric && right_symmetric; }
};

/// Throws ShapeError unless `candidate` has the transposed shape of `a`.
PenroseReport penrose_check(const Matrix& a, const Matrix& candidate);

Matrix kronecker(const Matrix& a, const Matrix& b);
Matrix direct_sum(const Matrix& a, const Matrix& b);
/// Left folds; an empty list gives [[1]] and the 0x0 matrix respectively.
Matrix kronecker(std::span<const Matrix> factors);
Matrix direct_sum(std::span<const Matrix> summands);

Rational entry_sum(const Matrix& a);

/// Columns form a basis of {x : A x = 0}; shape n x (n - rank).
Matrix nullspace(const Matrix& a);

/// Permutation matrix P with P(i, perm[i]) = 1, so (P A)(i, :) = A(perm[i], :).
Matrix permutation_matrix(std::span<const std::size_t> perm);

}  // namespace catmag
