#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "eisenlat/error.hpp"
#include "eisenlat/integer.hpp"

namespace eisenlat {

// Dense row-major matrix over an exact ring. Dimensions may be zero: rank-0
// lattices and empty kernels are ordinary values here.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows);

  static Matrix identity(std::size_t n);
  // Columns given as vectors of equal length `rows`.
  static Matrix from_columns(const std::vector<std::vector<T>>& columns,
                             std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::vector<T> column(std::size_t j) const;
  std::vector<T> row(std::size_t i) const;
  Matrix transpose() const;
  bool is_symmetric() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const T& factor);
  void add_col_multiple(std::size_t dst, std::size_t src, const T& factor);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b);
template <class T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b);
template <class T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b);
template <class T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& v);
template <class T>
Matrix<T> scaled(const Matrix<T>& a, const T& factor);
template <class T>
Matrix<T> block_diagonal(const Matrix<T>& a, const Matrix<T>& b);
template <class T>
Matrix<T> power(const Matrix<T>& a, unsigned exponent);

RatMatrix to_rational(const IntMatrix& m);
// Throws Error(NonIntegralScale) if some entry is not an integer.
IntMatrix to_integer(const RatMatrix& m);
RatVector to_rational(const IntVector& v);

Integer dot(const IntVector& a, const IntVector& b);
// x^T G y
Integer bilinear(const IntMatrix& gram, const IntVector& x, const IntVector& y);
Rational bilinear(const RatMatrix& gram, const RatVector& x, const RatVector& y);

// Fraction-free (Bareiss) determinant; 0x0 has determinant 1.
Integer determinant(const IntMatrix& m);
Rational determinant(const RatMatrix& m);
std::size_t rank(const IntMatrix& m);
// Throws Error(DegenerateForm) for singular input.
RatMatrix inverse(const RatMatrix& m);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace eisenlat
