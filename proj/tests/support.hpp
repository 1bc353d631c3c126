#pragma once

// Test-only oracles and random generators. Nothing here calls rref(),
// inverse() or pinv(); the oracles are independent routes to the values the
// library computes.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "catmag/category.hpp"
#include "catmag/matrix.hpp"

namespace catmag::testing {

using Rng = std::mt19937_64;

/// p/q with |p| <= max_abs, 1 <= q <= max_den.
Rational random_rational(Rng& rng, int max_abs = 4, int max_den = 3);
Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int max_abs = 4, int max_den = 3);
/// Product of random rows x r and r x cols factors, so rank <= r.
Matrix random_matrix_with_rank(Rng& rng, std::size_t rows, std::size_t cols, std::size_t r);
std::vector<std::size_t> random_permutation(Rng& rng, std::size_t n);

/// Rank by fraction-free (Bareiss) elimination over the integers, after
/// clearing denominators row by row.
std::size_t bareiss_rank(const Matrix& m);
/// True iff M x = b has a solution (Rouche-Capelli with bareiss_rank).
bool solvable(const Matrix& m, const Matrix& b);

/// Classical number-theoretic Mobius function by the recursion
/// mu(1) = 1, sum_{e | d} mu(e) = 0 for d > 1.
Integer classical_mobius(std::size_t d);

/// Every partial order on {0..n-1} compatible with the natural order
/// (a < b only if a < b as integers). Each isomorphism class appears at
/// least once.
std::vector<Poset> naturally_labelled_posets(std::size_t n);
/// Members of naturally_labelled_posets(k), k <= max_size, with a distinct
/// minimum and maximum.
std::vector<Poset> bounded_posets(std::size_t max_size);

Poset random_poset(Rng& rng, std::size_t n, double p);
/// A random subcategory of finite sets: objects are small sets, morphisms
/// the closure under composition of a few random functions. Zeta matrices
/// of these are often singular.
FinCategory random_concrete_category(Rng& rng);
/// Any of the above, a generator, or a product/coproduct of two such.
FinCategory random_category(Rng& rng);

/// Elementwise exact comparison for column vectors held as std::vector.
Matrix column(const std::vector<Rational>& v);
Matrix row(const std::vector<Rational>& v);

}  // namespace catmag::testing
