// Reference kernels. Kept single-threaded and straightforward so the OpenMP
// versions in kernels_parallel.cpp can be checked against them.
#include "catmag/kernels.hpp"

namespace catmag::kernels::serial {

void multiply(std::span<const Rational> a, std::span<const Rational> b, std::span<Rational> c,
              std::size_t m, std::size_t k, std::size_t n) {
  for (auto& x : c) x = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t l = 0; l < k; ++l) {
      const Rational& a_il = a[i * k + l];
      if (a_il.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) c[i * n + j].add_product(a_il, b[l * n + j]);
    }
  }
}

void eliminate_column(std::span<Rational> data, Shape shape, std::size_t pivot_row,
                      std::size_t pivot_col) {
  const std::size_t cols = shape.cols;
  for (std::size_t r = 0; r < shape.rows; ++r) {
    if (r == pivot_row) continue;
    const Rational factor = data[r * cols + pivot_col];
    if (factor.is_zero()) continue;
    for (std::size_t j = 0; j < cols; ++j)
      data[r * cols + j].sub_product(factor, data[pivot_row * cols + j]);
  }
}

void kronecker(std::span<const Rational> a, Shape sa, std::span<const Rational> b, Shape sb,
               std::span<Rational> out) {
  const std::size_t out_cols = sa.cols * sb.cols;
  for (std::size_t i = 0; i < sa.rows; ++i)
    for (std::size_t p = 0; p < sb.rows; ++p)
      for (std::size_t j = 0; j < sa.cols; ++j)
        for (std::size_t q = 0; q < sb.cols; ++q)
          out[(i * sb.rows + p) * out_cols + j * sb.cols + q] =
              a[i * sa.cols + j] * b[p * sb.cols + q];
}

void transitive_closure(std::span<unsigned char> rel, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) rel[i * n + i] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!rel[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) rel[i * n + j] |= rel[k * n + j];
    }
}

Rational sum(std::span<const Rational> values) {
  Rational total;
  for (const auto& v : values) total += v;
  return total;
}

}  // namespace catmag::kernels::serial
