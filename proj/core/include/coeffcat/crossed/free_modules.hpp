#pragma once

#include <vector>

#include "coeffcat/crossed/crossed_product.hpp"
#include "coeffcat/equiv/audit.hpp"
#include "coeffcat/equiv/functor.hpp"
#include "coeffcat/gcat/adapters.hpp"
#include "coeffcat/gcat/module_category.hpp"
#include "coeffcat/star/star_category.hpp"

namespace coeffcat {

using PointStar = StarCategory<ModuleCategory>;
using ReducedPointStar = FullSubcategory<PointStar>;

/// A_{alpha,tau} *_G pt.
PointStar crossedPointStar(const CrossedData& data);
/// Its full subcategory on objects whose summands all carry the tag e.
ReducedPointStar reducedPointStar(const CrossedData& data);

/// The comparison with free modules over R_{alpha,tau} G. An object of rank n
/// goes to the free module of rank n; the component phi_g, with entry c from
/// summand i to summand j, contributes g^-1 iota(tau_{g,g^-1}^-1) iota(c) to
/// the (j, i) entry, which acts on the free module by right multiplication.
struct FreeModuleComparison {
  CrossedProductRing ring;
  ModuleCategory modules;
  Functor<ReducedPointStar, ModuleCategory> functor;
};

FreeModuleComparison freeModuleComparison(const CrossedData& data);

/// g^-1 iota(tau_{g,g^-1}^-1) iota(c).
CrossedProductRing::Element componentCoefficient(const CrossedProductRing& ring, GroupElem g, RingElem c);

/// The two computations behind the comparison being a functor:
///  - well-definedness on the tensor product: x r g^-1 tau_{g,g^-1}^-1 equals
///    x g^-1 alpha_{g^-1}^-1(r) tau_{g,g^-1}^-1 and x g^-1 tau_{g,g^-1}^-1 alpha_g(r);
///  - the coefficients of F(psi,h) o F(phi,g) and F((psi,h) o (phi,g)) agree:
///    alpha_{(hg)^-1}^-1(tau_{g^-1,h^-1}) alpha_{h^-1}^-1(tau_{g,g^-1}^-1) tau_{h,h^-1}^-1
///      = tau_{hg,(hg)^-1}^-1 tau_{h,g}^-1 alpha_h(tau_{e,g}).
std::vector<CheckResult> verifyFreeModuleComparison(const CrossedProductRing& ring, const Budget& budget);

/// The chain relating A_{alpha,tau} *_G G/H to free modules over the crossed
/// product of the restricted data (alpha|, tau|) on H:
///   (A_{alpha|,tau|} *_H pt)_e -> A_{alpha|,tau|} *_H pt -> (res_H A_{alpha,tau}) *_H pt -> A_{alpha,tau} *_G G/H
/// (inclusion, the inclusion A_{alpha|,tau|} -> res_H A_{alpha,tau} applied
/// entrywise, induction), together with the free-module comparison for the
/// restricted data.
struct RestrictionChain {
  CrossedData restricted;
  Functor<ReducedPointStar, PointStar> chain;
  FreeModuleComparison comparison;
};

RestrictionChain restrictionChain(const CrossedData& data, const Subgroup& h);

/// The inclusion (A *_G pt)_e -> A *_G pt as a functor.
Functor<ReducedPointStar, PointStar> reducedInclusion(const CrossedData& data);

/// An isomorphism from x to an object with all tags e, assembled summand by
/// summand; serves as the essential-surjectivity hint for reducedInclusion.
std::optional<IsoWitness<ReducedPointStar, PointStar>> reducedReplacement(const CrossedData& data,
                                                                         const PointStar::Object& x);

}  // namespace coeffcat
