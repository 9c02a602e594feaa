#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "coeffcat/base/ring.hpp"

namespace coeffcat {

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::uint32_t rows, std::uint32_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(std::size_t{rows} * cols, fill) {}

  std::uint32_t rows() const { return rows_; }
  std::uint32_t cols() const { return cols_; }
  T& operator()(std::uint32_t i, std::uint32_t j) { return data_[std::size_t{i} * cols_ + j]; }
  const T& operator()(std::uint32_t i, std::uint32_t j) const { return data_[std::size_t{i} * cols_ + j]; }
  const std::vector<T>& data() const { return data_; }
  std::vector<T>& data() { return data_; }

  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }
  bool operator<(const Matrix& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    return data_ < o.data_;
  }

 private:
  std::uint32_t rows_ = 0;
  std::uint32_t cols_ = 0;
  std::vector<T> data_;
};

using RingMatrix = Matrix<RingElem>;

RingMatrix identityMatrix(const FiniteRing& r, std::uint32_t n);
/// Ordinary product (AB)_{ik} = sum_j A_{ij} B_{jk}.
RingMatrix matMul(const FiniteRing& r, const RingMatrix& a, const RingMatrix& b);
RingMatrix matAdd(const FiniteRing& r, const RingMatrix& a, const RingMatrix& b);
RingMatrix matNeg(const FiniteRing& r, const RingMatrix& a);
bool isZeroMatrix(const RingMatrix& a);
Json matrixToJson(const FiniteRing& r, const RingMatrix& a);

/// Index <-> matrix bijection for enumerating all rows x cols matrices over r;
/// entry (i, j) is digit i*cols+j in base |r|.
RingMatrix matrixFromIndex(const FiniteRing& r, std::uint32_t rows, std::uint32_t cols, std::uint64_t index);

}  // namespace coeffcat
