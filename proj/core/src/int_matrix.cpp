#include "coeffcat/swan/int_matrix.hpp"

#include <limits>
#include <utility>

namespace coeffcat {

namespace {

void requireShape(bool ok, const char* what) {
  if (!ok) throw MismatchError(std::string("integer matrix: ") + what);
}

Integer parseInteger(const Json& v) {
  if (v.is_number_integer()) return Integer(v.get<long long>());
  if (v.is_string()) return Integer(v.get<std::string>());
  throw Error("integer matrix: entries must be integers or decimal strings");
}

}  // namespace

Json integerJson(const Integer& n) {
  if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max())
    return Json(static_cast<long long>(n));
  return Json(n.str());
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::fromRows(const std::vector<std::vector<Integer>>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    requireShape(rows[i].size() == c, "ragged rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::fromJson(const Json& j) {
  if (!j.is_array()) throw Error("integer matrix: expected an array of rows");
  std::vector<std::vector<Integer>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw Error("integer matrix: expected an array of rows");
    std::vector<Integer> row;
    for (const auto& v : r) row.push_back(parseInteger(v));
    rows.push_back(std::move(row));
  }
  return fromRows(rows);
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  requireShape(cols_ == o.rows_, "product of incompatible shapes");
  IntMatrix m(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) m(i, j) += a * o(k, j);
    }
  return m;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  requireShape(rows_ == o.rows_ && cols_ == o.cols_, "sum of different shapes");
  IntMatrix m = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] += o.data_[i];
  return m;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const { return *this + (-o); }

IntMatrix IntMatrix::operator-() const {
  IntMatrix m = *this;
  for (auto& v : m.data_) v = -v;
  return m;
}

bool IntMatrix::isZero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

Integer IntMatrix::determinant() const {
  requireShape(isSquare(), "determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix a = *this;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntMatrix IntMatrix::kronecker(const IntMatrix& o) const {
  IntMatrix m(rows_ * o.rows_, cols_ * o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      for (std::size_t a = 0; a < o.rows_; ++a)
        for (std::size_t b = 0; b < o.cols_; ++b) m(i * o.rows_ + a, j * o.cols_ + b) = (*this)(i, j) * o(a, b);
  return m;
}

Json IntMatrix::toJson() const {
  Json out = Json::array();
  for (std::size_t i = 0; i < rows_; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < cols_; ++j) row.push_back(integerJson((*this)(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace coeffcat
