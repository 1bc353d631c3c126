#include <cstdint>

#include "catmag/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace catmag::kernels {

namespace parallel {

void multiply(std::span<const Rational> a, std::span<const Rational> b, std::span<Rational> c,
              std::size_t m, std::size_t k, std::size_t n) {
  const auto rows = static_cast<std::int64_t>(m);
  const bool wide = m * k * n >= kParallelThreshold;
#pragma omp parallel for schedule(dynamic) if (wide)
  for (std::int64_t i = 0; i < rows; ++i) {
    Rational* c_row = c.data() + static_cast<std::size_t>(i) * n;
    for (std::size_t j = 0; j < n; ++j) c_row[j] = 0;
    for (std::size_t l = 0; l < k; ++l) {
      const Rational& a_il = a[static_cast<std::size_t>(i) * k + l];
      if (a_il.is_zero()) continue;
      const Rational* b_row = b.data() + l * n;
      for (std::size_t j = 0; j < n; ++j) c_row[j].add_product(a_il, b_row[j]);
    }
  }
}

void eliminate_column(std::span<Rational> data, Shape shape, std::size_t pivot_row,
                      std::size_t pivot_col) {
  const std::size_t cols = shape.cols;
  const auto rows = static_cast<std::int64_t>(shape.rows);
  const Rational* pivot = data.data() + pivot_row * cols;
  const bool wide = shape.rows * cols >= kParallelThreshold;
#pragma omp parallel for schedule(static) if (wide)
  for (std::int64_t r = 0; r < rows; ++r) {
    if (static_cast<std::size_t>(r) == pivot_row) continue;
    Rational* row = data.data() + static_cast<std::size_t>(r) * cols;
    const Rational factor = row[pivot_col];
    if (factor.is_zero()) continue;
    for (std::size_t j = 0; j < cols; ++j) row[j].sub_product(factor, pivot[j]);
  }
}

void kronecker(std::span<const Rational> a, Shape sa, std::span<const Rational> b, Shape sb,
               std::span<Rational> out) {
  const std::size_t out_cols = sa.cols * sb.cols;
  const auto out_rows = static_cast<std::int64_t>(sa.rows * sb.rows);
  const bool wide = static_cast<std::size_t>(out_rows) * out_cols >= kParallelThreshold;
#pragma omp parallel for schedule(static) if (wide)
  for (std::int64_t r = 0; r < out_rows; ++r) {
    const std::size_t i = static_cast<std::size_t>(r) / sb.rows;
    const std::size_t p = static_cast<std::size_t>(r) % sb.rows;
    Rational* dst = out.data() + static_cast<std::size_t>(r) * out_cols;
    for (std::size_t j = 0; j < sa.cols; ++j) {
      const Rational& a_ij = a[i * sa.cols + j];
      for (std::size_t q = 0; q < sb.cols; ++q) {
        dst[j * sb.cols + q] = a_ij;
        dst[j * sb.cols + q] *= b[p * sb.cols + q];
      }
    }
  }
}

void transitive_closure(std::span<unsigned char> rel, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) rel[i * n + i] = 1;
  const auto rows = static_cast<std::int64_t>(n);
  const bool wide = n * n >= kParallelThreshold;
  for (std::size_t k = 0; k < n; ++k) {
    // row k is not modified during step k (rel[k][k] = 1 already), so the
    // i != k rows may be updated concurrently
#pragma omp parallel for schedule(static) if (wide)
    for (std::int64_t i = 0; i < rows; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      if (ui == k || !rel[ui * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) rel[ui * n + j] |= rel[k * n + j];
    }
  }
}

Rational sum(std::span<const Rational> values) {
  Rational total;
  const auto count = static_cast<std::int64_t>(values.size());
  const bool wide = values.size() >= kParallelThreshold;
#pragma omp parallel if (wide)
  {
    Rational partial;
#pragma omp for schedule(static) nowait
    for (std::int64_t t = 0; t < count; ++t) partial += values[static_cast<std::size_t>(t)];
#pragma omp critical(catmag_sum)
    total += partial;
  }
  return total;
}

}  // namespace parallel

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace catmag::kernels
