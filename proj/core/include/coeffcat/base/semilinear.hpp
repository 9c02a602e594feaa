#pragma once

#include <vector>

#include "coeffcat/base/automorphism.hpp"
#include "coeffcat/base/matrix.hpp"

namespace coeffcat {

/// The free left module R^rank with its standard basis.
struct FreeModule {
  FiniteRing ring;
  std::uint32_t rank = 0;
};

/// An additive map f: R^m -> R^n with f(r x) = phi(r) f(x), for left modules.
/// The matrix is n x m and holds the coordinates of the images of the basis:
///   f(x)_j = sum_i phi(x_i) * matrix(j, i).
/// For commutative rings this is f(x) = matrix * phi(x).
struct SemilinearMap {
  RingAutomorphism twist;
  RingMatrix matrix;

  const FiniteRing& ring() const { return twist.ring(); }
  std::uint32_t sourceRank() const { return matrix.cols(); }
  std::uint32_t targetRank() const { return matrix.rows(); }

  std::vector<RingElem> apply(const std::vector<RingElem>& x) const;

  bool operator==(const SemilinearMap& o) const { return twist == o.twist && matrix == o.matrix; }
};

/// g o f: twist g.twist o f.twist, matrix C(k, i) = sum_j g.twist(F(j, i)) * G(k, j).
SemilinearMap composeSemilinear(const SemilinearMap& g, const SemilinearMap& f);

SemilinearMap identitySemilinear(const FiniteRing& r, std::uint32_t rank);
/// L_u: x -> u x for a unit u; semilinear with twist conj(u).
SemilinearMap scalarSemilinear(const FiniteRing& r, RingElem unit, std::uint32_t rank);
SemilinearMap addSemilinear(const SemilinearMap& a, const SemilinearMap& b);

}  // namespace coeffcat
