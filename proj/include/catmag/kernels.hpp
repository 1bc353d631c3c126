#pragma once

#include <cstddef>
#include <span>

#include "catmag/rational.hpp"

// Dense inner loops shared by the linear-algebra layer. Each kernel has a
// serial reference and an OpenMP version with an identical contract; the
// OpenMP versions fall back to one thread below `kParallelThreshold` units
// of work. Arithmetic is exact, so both agree entry for entry.
//
// Storage is row-major, shapes are passed explicitly.
namespace catmag::kernels {

inline constexpr std::size_t kParallelThreshold = 4096;

struct Shape {
  std::size_t rows;
  std::size_t cols;
};

namespace serial {

/// c = a * b, with a: m x k, b: k x n, c: m x n (overwritten).
void multiply(std::span<const Rational> a, std::span<const Rational> b, std::span<Rational> c,
              std::size_t m, std::size_t k, std::size_t n);

/// Subtracts multiples of row `pivot_row` from every other row so that column
/// `pivot_col` becomes zero outside the pivot. The pivot entry must be 1.
void eliminate_column(std::span<Rational> data, Shape shape, std::size_t pivot_row,
                      std::size_t pivot_col);

/// out = a (x) b, block row-major; out: (ma*mb) x (na*nb).
void kronecker(std::span<const Rational> a, Shape sa, std::span<const Rational> b, Shape sb,
               std::span<Rational> out);

/// In-place reflexive-transitive closure of an n x n 0/1 relation.
void transitive_closure(std::span<unsigned char> rel, std::size_t n);

Rational sum(std::span<const Rational> values);

}  // namespace serial

namespace parallel {

void multiply(std::span<const Rational> a, std::span<const Rational> b, std::span<Rational> c,
              std::size_t m, std::size_t k, std::size_t n);
void eliminate_column(std::span<Rational> data, Shape shape, std::size_t pivot_row,
                      std::size_t pivot_col);
void kronecker(std::span<const Rational> a, Shape sa, std::span<const Rational> b, Shape sb,
               std::span<Rational> out);
void transitive_closure(std::span<unsigned char> rel, std::size_t n);
Rational sum(std::span<const Rational> values);

}  // namespace parallel

/// Threads the OpenMP kernels may use (1 when built without OpenMP).
int max_threads();

}  // namespace catmag::kernels
