#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "catmag/rational.hpp"

namespace catmag {

/// Dense row-major matrix of exact rationals. Zero-row and zero-column
/// shapes are legal.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  /// Throws ShapeError on ragged input.
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix zeros(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix identity(std::size_t n);
  static Matrix ones(std::size_t rows, std::size_t cols);
  /// Throws ShapeError on ragged input.
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }
  bool square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  /// Bounds-checked access; throws std::out_of_range.
  const Rational& at(std::size_t i, std::size_t j) const;

  std::span<Rational> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Rational> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<Rational> data() noexcept { return data_; }
  std::span<const Rational> data() const noexcept { return data_; }

  Matrix column(std::size_t j) const;
  /// Columns listed in `indices`, in that order.
  Matrix select_columns(std::span<const std::size_t> indices) const;
  Matrix first_rows(std::size_t count) const;
  /// Principal submatrix on `indices` (rows and columns).
  Matrix principal(std::span<const std::size_t> indices) const;
  Matrix hconcat(const Matrix& right) const;

  std::string shape_string() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& s, const Matrix& m);

}  // namespace catmag
