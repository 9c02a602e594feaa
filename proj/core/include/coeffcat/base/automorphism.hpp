#pragma once

#include <string>
#include <vector>

#include "coeffcat/base/ring.hpp"

namespace coeffcat {

/// A ring automorphism stored as a permutation of element indices together
/// with its inverse permutation.
class RingAutomorphism {
 public:
  /// Validates bijectivity and preservation of +, * and 1 (every pair for
  /// rings with at most 64 elements, seeded pairs otherwise).
  RingAutomorphism(FiniteRing ring, std::vector<RingElem> map, std::string name = {});

  static RingAutomorphism identity(const FiniteRing& r);
  /// r -> u r u^-1 for a unit u.
  static RingAutomorphism conjugation(const FiniteRing& r, RingElem unit);
  /// r -> r^p for a commutative ring of prime characteristic p.
  static RingAutomorphism frobenius(const FiniteRing& r);
  /// Either {"map": [...]}, "id", "frobenius" or {"conjugation": element}.
  static RingAutomorphism fromJson(const FiniteRing& r, const Json& j);

  const FiniteRing& ring() const { return ring_; }
  RingElem operator()(RingElem a) const { return map_[a]; }
  RingElem applyInverse(RingElem a) const { return inverse_[a]; }
  RingAutomorphism inverse() const;
  const std::vector<RingElem>& table() const { return map_; }
  bool isIdentity() const;
  const std::string& name() const { return name_; }

  bool operator==(const RingAutomorphism& o) const { return map_ == o.map_; }
  auto operator<=>(const RingAutomorphism& o) const { return map_ <=> o.map_; }

  Json toJson() const;

 private:
  RingAutomorphism(FiniteRing ring, std::vector<RingElem> map, std::vector<RingElem> inverse, std::string name)
      : ring_(std::move(ring)), map_(std::move(map)), inverse_(std::move(inverse)), name_(std::move(name)) {}

  FiniteRing ring_;
  std::vector<RingElem> map_;
  std::vector<RingElem> inverse_;
  std::string name_;

  friend RingAutomorphism composeAutomorphisms(const RingAutomorphism&, const RingAutomorphism&);
};

/// (outer o inner)(r) = outer(inner(r)).
RingAutomorphism composeAutomorphisms(const RingAutomorphism& outer, const RingAutomorphism& inner);

}  // namespace coeffcat
