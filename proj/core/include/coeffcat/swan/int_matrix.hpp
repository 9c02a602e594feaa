#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "coeffcat/errors.hpp"

namespace coeffcat {

using Integer = boost::multiprecision::cpp_int;

/// A dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix fromRows(const std::vector<std::vector<Integer>>& rows);
  /// Nested arrays of integers (or decimal strings for large entries).
  static IntMatrix fromJson(const Json& j);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const IntMatrix&) const = default;

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  IntMatrix operator-() const;

  bool isSquare() const { return rows_ == cols_; }
  bool isZero() const;
  /// Fraction-free Gaussian elimination (Bareiss).
  Integer determinant() const;
  /// Entry (i * o.rows() + a, j * o.cols() + b) is this(i, j) * o(a, b).
  IntMatrix kronecker(const IntMatrix& o) const;

  Json toJson() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Small integers as JSON numbers, anything else as a decimal string.
Json integerJson(const Integer& n);

}  // namespace coeffcat
