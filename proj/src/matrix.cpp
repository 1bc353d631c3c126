#include "catmag/matrix.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "catmag/errors.hpp"
#include "catmag/kernels.hpp"

namespace catmag {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw ShapeError("matrix " + shape_string() + " given " + std::to_string(data_.size()) +
                     " entries");
  }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::ones(std::size_t rows, std::size_t cols) {
  return Matrix(rows, cols, std::vector<Rational>(rows * cols, Rational(1)));
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  std::vector<Rational> data;
  data.reserve(r * c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) {
      throw ShapeError("ragged matrix: row " + std::to_string(i) + " has " +
                       std::to_string(rows[i].size()) + " entries, expected " + std::to_string(c));
    }
    data.insert(data.end(), rows[i].begin(), rows[i].end());
  }
  return Matrix(r, c, std::move(data));
}

const Rational& Matrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) {
    throw std::out_of_range("index (" + std::to_string(i) + "," + std::to_string(j) +
                            ") outside " + shape_string());
  }
  return (*this)(i, j);
}

Matrix Matrix::column(std::size_t j) const {
  const std::size_t idx[] = {j};
  return select_columns(idx);
}

Matrix Matrix::select_columns(std::span<const std::size_t> indices) const {
  Matrix out(rows_, indices.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < indices.size(); ++k) out(i, k) = at(i, indices[k]);
  return out;
}

Matrix Matrix::first_rows(std::size_t count) const {
  count = std::min(count, rows_);
  return Matrix(count, cols_,
                std::vector<Rational>(data_.begin(),
                                      data_.begin() + static_cast<std::ptrdiff_t>(count * cols_)));
}

Matrix Matrix::principal(std::span<const std::size_t> indices) const {
  Matrix out(indices.size(), indices.size());
  for (std::size_t a = 0; a < indices.size(); ++a)
    for (std::size_t b = 0; b < indices.size(); ++b) out(a, b) = at(indices[a], indices[b]);
  return out;
}

Matrix Matrix::hconcat(const Matrix& right) const {
  if (rows_ != right.rows_) {
    throw ShapeError("hconcat row mismatch: " + shape_string() + " | " + right.shape_string());
  }
  Matrix out(rows_, cols_ + right.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::copy(row(i).begin(), row(i).end(), out.row(i).begin());
    std::copy(right.row(i).begin(), right.row(i).end(),
              out.row(i).begin() + static_cast<std::ptrdiff_t>(cols_));
  }
  return out;
}

std::string Matrix::shape_string() const {
  return std::to_string(rows_) + "x" + std::to_string(cols_);
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << "]";
  }
  return os << "]";
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("cannot multiply " + a.shape_string() + " by " + b.shape_string());
  }
  Matrix c(a.rows(), b.cols());
  kernels::parallel::multiply(a.data(), b.data(), c.data(), a.rows(), a.cols(), b.cols());
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError("cannot add " + a.shape_string() + " and " + b.shape_string());
  }
  Matrix c = a;
  for (std::size_t k = 0; k < c.data().size(); ++k) c.data()[k] += b.data()[k];
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError("cannot subtract " + b.shape_string() + " from " + a.shape_string());
  }
  Matrix c = a;
  for (std::size_t k = 0; k < c.data().size(); ++k) c.data()[k] -= b.data()[k];
  return c;
}

Matrix operator*(const Rational& s, const Matrix& m) {
  Matrix c = m;
  for (auto& x : c.data()) x *= s;
  return c;
}

}  // namespace catmag
