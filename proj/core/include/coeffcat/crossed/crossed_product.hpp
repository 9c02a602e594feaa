#pragma once

#include <vector>

#include "coeffcat/base/ring.hpp"
#include "coeffcat/check.hpp"
#include "coeffcat/crossed/crossed_data.hpp"

namespace coeffcat {

/// The crossed product R_{alpha,tau} G: R-valued functions on G with
/// (r g)(s h) = r alpha_g(s) tau_{g,h} gh. Since tau need not be normalized,
/// the unit is tau_{e,e}^-1 e and R embeds by iota(r) = (r tau_{e,e}^-1) e.
class CrossedProductRing {
 public:
  /// Coefficient of g at position g.
  using Element = std::vector<RingElem>;

  explicit CrossedProductRing(CrossedData data);

  const CrossedData& data() const { return data_; }
  const FiniteRing& coefficients() const { return data_.ring(); }
  const FiniteGroup& group() const { return data_.group(); }
  /// |R|^|G|, saturated.
  std::uint64_t size() const;

  Element zero() const { return Element(group().order(), 0); }
  Element one() const;
  /// r g
  Element basis(RingElem r, GroupElem g) const;
  /// 1_R g
  Element groupElement(GroupElem g) const { return basis(coefficients().one(), g); }
  Element embed(RingElem r) const;

  Element add(const Element& x, const Element& y) const;
  Element negate(const Element& x) const;
  Element multiply(const Element& x, const Element& y) const;
  Element multiply(const Element& x, const Element& y, const Element& z) const { return multiply(multiply(x, y), z); }

  /// Index sum_g r_g |R|^g; needs size() <= FiniteRing::kSizeLimit.
  RingElem encode(const Element& x) const;
  Element decode(RingElem index) const;
  /// The ring as a FiniteRing (element indices as in encode), so that it can
  /// serve as the coefficient ring of a module category.
  FiniteRing asFiniteRing() const;

  std::string elementName(const Element& x) const;
  Json toJson(const Element& x) const;

 private:
  CrossedData data_;
};

/// Associativity and unit laws on basis elements r g (exhaustive over triples
/// within budget), distributivity and associativity on seeded general
/// elements, and the commutation rules
///   a iota(r) = iota(alpha_a(r)) a,  iota(r) a = a iota(alpha_a^-1(r)),  a b = iota(tau_{a,b}) ab.
std::vector<CheckResult> verifyCrossedProduct(const CrossedProductRing& ring, const Budget& budget);

/// Crossed data over R = S[K] from an extension K -> Gamma -> G with section s:
/// alpha_g(r) = s(g) r s(g)^-1 and tau_{g,h} = s(g) s(h) s(gh)^-1.
CrossedData fromExtension(const GroupExtension& ext, const FiniteRing& s);

/// Checks that r g |-> r s(g) is a ring isomorphism R_{alpha,tau} G -> S[Gamma]:
/// bijective, unital, additive, and multiplicative on all pairs of elements
/// when |R_{alpha,tau} G|^2 is within budget, otherwise on all pairs of basis
/// elements r g.
CheckResult verifyExtensionIsomorphism(const GroupExtension& ext, const FiniteRing& s, const Budget& budget);

}  // namespace coeffcat
