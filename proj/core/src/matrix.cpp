#include "coeffcat/base/matrix.hpp"

#include "coeffcat/base/semilinear.hpp"

namespace coeffcat {

RingMatrix identityMatrix(const FiniteRing& r, std::uint32_t n) {
  RingMatrix m(n, n, r.zero());
  for (std::uint32_t i = 0; i < n; ++i) m(i, i) = r.one();
  return m;
}

RingMatrix matMul(const FiniteRing& r, const RingMatrix& a, const RingMatrix& b) {
  if (a.cols() != b.rows()) throw MismatchError("matrix dimensions do not match");
  RingMatrix c(a.rows(), b.cols(), r.zero());
  for (std::uint32_t i = 0; i < a.rows(); ++i)
    for (std::uint32_t j = 0; j < a.cols(); ++j) {
      const RingElem x = a(i, j);
      if (x == 0) continue;
      for (std::uint32_t k = 0; k < b.cols(); ++k) c(i, k) = r.add(c(i, k), r.mul(x, b(j, k)));
    }
  return c;
}

RingMatrix matAdd(const FiniteRing& r, const RingMatrix& a, const RingMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw MismatchError("matrix dimensions do not match");
  RingMatrix c = a;
  for (std::size_t i = 0; i < c.data().size(); ++i) c.data()[i] = r.add(a.data()[i], b.data()[i]);
  return c;
}

RingMatrix matNeg(const FiniteRing& r, const RingMatrix& a) {
  RingMatrix c = a;
  for (auto& x : c.data()) x = r.neg(x);
  return c;
}

bool isZeroMatrix(const RingMatrix& a) {
  for (auto x : a.data())
    if (x != 0) return false;
  return true;
}

Json matrixToJson(const FiniteRing& r, const RingMatrix& a) {
  Json rows = Json::array();
  for (std::uint32_t i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (std::uint32_t j = 0; j < a.cols(); ++j) row.push_back(r.elementName(a(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RingMatrix matrixFromIndex(const FiniteRing& r, std::uint32_t rows, std::uint32_t cols, std::uint64_t index) {
  RingMatrix m(rows, cols, r.zero());
  for (auto& x : m.data()) {
    x = static_cast<RingElem>(index % r.size());
    index /= r.size();
  }
  return m;
}

std::vector<RingElem> SemilinearMap::apply(const std::vector<RingElem>& x) const {
  if (x.size() != sourceRank()) throw MismatchError("vector has the wrong length");
  const FiniteRing& r = ring();
  std::vector<RingElem> y(targetRank(), r.zero());
  for (std::uint32_t j = 0; j < targetRank(); ++j)
    for (std::uint32_t i = 0; i < sourceRank(); ++i) y[j] = r.add(y[j], r.mul(twist(x[i]), matrix(j, i)));
  return y;
}

SemilinearMap composeSemilinear(const SemilinearMap& g, const SemilinearMap& f) {
  if (!(g.ring() == f.ring())) throw MismatchError("semilinear maps over different rings");
  if (g.sourceRank() != f.targetRank()) throw MismatchError("semilinear maps are not composable");
  const FiniteRing& r = g.ring();
  RingMatrix c(g.targetRank(), f.sourceRank(), r.zero());
  for (std::uint32_t k = 0; k < g.targetRank(); ++k)
    for (std::uint32_t i = 0; i < f.sourceRank(); ++i) {
      RingElem acc = r.zero();
      for (std::uint32_t j = 0; j < f.targetRank(); ++j) acc = r.add(acc, r.mul(g.twist(f.matrix(j, i)), g.matrix(k, j)));
      c(k, i) = acc;
    }
  return SemilinearMap{composeAutomorphisms(g.twist, f.twist), std::move(c)};
}

SemilinearMap identitySemilinear(const FiniteRing& r, std::uint32_t rank) {
  return SemilinearMap{RingAutomorphism::identity(r), identityMatrix(r, rank)};
}

SemilinearMap scalarSemilinear(const FiniteRing& r, RingElem unit, std::uint32_t rank) {
  RingMatrix m(rank, rank, r.zero());
  for (std::uint32_t i = 0; i < rank; ++i) m(i, i) = unit;
  return SemilinearMap{RingAutomorphism::conjugation(r, unit), std::move(m)};
}

SemilinearMap addSemilinear(const SemilinearMap& a, const SemilinearMap& b) {
  if (!(a.twist == b.twist)) throw MismatchError("adding semilinear maps with different twists");
  return SemilinearMap{a.twist, matAdd(a.ring(), a.matrix, b.matrix)};
}

}  // namespace coeffcat
