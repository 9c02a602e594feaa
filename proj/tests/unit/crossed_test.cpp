#include <gtest/gtest.h>

#include "coeffcat/crossed/crossed_product.hpp"
#include "coeffcat/crossed/free_modules.hpp"
#include "coeffcat/equiv/audit.hpp"

using namespace coeffcat;

namespace {

const CheckResult& find(const std::vector<CheckResult>& rs, const std::string& id) {
  for (const auto& r : rs)
    if (r.id == id) return r;
  throw std::runtime_error("no check " + id);
}

void expectAllPass(const std::vector<CheckResult>& rs) {
  for (const auto& r : rs) EXPECT_TRUE(r.passed()) << r.id << " " << toJson(r).dump();
}

GroupExtension c4OverC2() {
  auto c4 = FiniteGroup::cyclic(4);
  return GroupExtension::fromNormalSubgroup(c4, Subgroup{0, 2});
}

GroupExtension q8OverCenter() {
  auto q8 = FiniteGroup::quaternion8();
  return GroupExtension::fromNormalSubgroup(q8, q8.center());
}

CrossedData innerCrossedData() {
  auto r = FiniteRing::matrix(FiniteRing::zmod(2), 2);
  auto g = FiniteGroup::cyclic(2);
  const RingElem u = r.fromComponents({0, 1, 1, 1});
  return CrossedData::make(r, g, {RingAutomorphism::identity(r), RingAutomorphism::conjugation(r, u)},
                           {r.one(), r.one(), r.one(), r.mul(u, u)});
}

CrossedData frobeniusData() {
  auto f4 = FiniteRing::galoisField4();
  auto sigma = RingAutomorphism::frobenius(f4);
  auto id = RingAutomorphism::identity(f4);
  return CrossedData::twistedGroupRing(f4, FiniteGroup::cyclic(4), {id, sigma, id, sigma});
}

Budget wide() {
  Budget b;
  b.exhaustiveLimit = 1'000'000;
  b.samples = 1000;
  return b;
}

}  // namespace

TEST(Extension, CyclicFourOverTwo) {
  auto ext = c4OverC2();
  auto d = fromExtension(ext, FiniteRing::zmod(2));
  expectAllPass(validateCrossedData(d, Budget{}));
  const GroupElem g = 1;
  // tau_{g,g} = s(g)^2 = u^2, the nontrivial element of K; alpha is trivial.
  EXPECT_EQ(d.tau(g, g), d.ring().groupRingBasis(1, ext.kernelIndex(2)));
  for (GroupElem a = 0; a < 2; ++a) EXPECT_TRUE(d.alpha(a).isIdentity());
  CrossedProductRing ring(d);
  EXPECT_EQ(ring.multiply(ring.groupElement(g), ring.groupElement(g)), ring.basis(d.tau(g, g), 0));
  auto iso = verifyExtensionIsomorphism(ext, FiniteRing::zmod(2), wide());
  EXPECT_TRUE(iso.passed()) << toJson(iso).dump();
  EXPECT_EQ(iso.coverage, Coverage::Exhaustive);
  EXPECT_GE(iso.cases, 256u);
}

TEST(Extension, QuaternionOverCenter) {
  auto ext = q8OverCenter();
  auto d = fromExtension(ext, FiniteRing::zmod(3));
  expectAllPass(validateCrossedData(d, Budget{}));
  const auto& q = ext.quotient;
  for (GroupElem a = 0; a < q.order(); ++a)
    if (a != q.identity()) EXPECT_NE(d.tau(a, a), d.ring().one()) << q.elementName(a);
  // i^2 = -1 in Q8, so tau_{i,i} is the basis element of -1 in F3[Z].
  EXPECT_EQ(d.tau(1, 1), d.ring().groupRingBasis(1, ext.kernelIndex(1)));
  EXPECT_TRUE(verifyExtensionIsomorphism(ext, FiniteRing::zmod(3), Budget{}).passed());
}

TEST(Extension, SplitExtensionHasTrivialCocycle) {
  auto v4 = FiniteGroup::kleinFour();
  auto ext = GroupExtension::fromNormalSubgroup(v4, Subgroup{0, 1});
  auto d = fromExtension(ext, FiniteRing::zmod(2));
  for (GroupElem a = 0; a < 2; ++a)
    for (GroupElem b = 0; b < 2; ++b) EXPECT_EQ(d.tau(a, b), d.ring().one());
  expectAllPass(validateCrossedData(d, Budget{}));
  EXPECT_TRUE(verifyExtensionIsomorphism(ext, FiniteRing::zmod(2), Budget{}).passed());
}

TEST(Extension, CorruptedTauFailsCocycleWithWitness) {
  auto d = fromExtension(c4OverC2(), FiniteRing::zmod(2));
  // tau_{e,g} = u with tau_{e,e} = 1 breaks the cocycle condition at (e, e, g).
  auto bad = d.withTau(0, 1, d.ring().groupRingBasis(1, 1));
  auto rs = validateCrossedData(bad, Budget{});
  const auto& cocycle = find(rs, "crossed.cocycle");
  ASSERT_TRUE(cocycle.failed());
  ASSERT_TRUE(cocycle.witness.has_value());
  EXPECT_TRUE(cocycle.witness->contains("g") && cocycle.witness->contains("h") && cocycle.witness->contains("k"));
  EXPECT_EQ(find(rs, "crossed.derived.alpha-tau").verdict, Verdict::Skipped);
}

TEST(CrossedProduct, RingAxiomsHold) {
  for (const auto& d : {fromExtension(c4OverC2(), FiniteRing::zmod(2)), innerCrossedData(), frobeniusData()}) {
    CrossedProductRing ring(d);
    auto rs = verifyCrossedProduct(ring, wide());
    expectAllPass(rs);
    EXPECT_EQ(find(rs, "crossed-product.associativity").coverage, Coverage::Exhaustive);
  }
}

TEST(CrossedProduct, UnitIsNotOneWhenTauIsUnnormalized) {
  // Rescale the trivial cocycle by the central unit -1 of Z/3: tau = -1
  // everywhere still satisfies the conditions, and the unit becomes -e.
  auto r = FiniteRing::zmod(3);
  auto g = FiniteGroup::cyclic(2);
  const RingElem m = r.neg(r.one());
  auto d = CrossedData::make(r, g, {RingAutomorphism::identity(r), RingAutomorphism::identity(r)}, {m, m, m, m});
  expectAllPass(validateCrossedData(d, Budget{}));
  CrossedProductRing ring(d);
  EXPECT_EQ(ring.one(), ring.basis(m, 0));
  expectAllPass(verifyCrossedProduct(ring, Budget{}));
  EXPECT_TRUE(verifyRingAxioms(ring.asFiniteRing(), Budget{}).front().passed());
}

TEST(CrossedProduct, UntwistedIsGroupRing) {
  auto r = FiniteRing::zmod(4);
  auto g = FiniteGroup::cyclic(3);
  CrossedProductRing ring(CrossedData::untwisted(r, g));
  auto rg = FiniteRing::groupRing(r, g);
  // Both index elements by base-|R| digits in group order.
  for (RingElem x = 0; x < rg.size(); ++x)
    for (RingElem y = 0; y < rg.size(); ++y)
      ASSERT_EQ(ring.encode(ring.multiply(ring.decode(x), ring.decode(y))), rg.mul(x, y));
}

TEST(CrossedProduct, AsFiniteRingMatchesElementArithmetic) {
  CrossedProductRing ring(innerCrossedData());
  auto fr = ring.asFiniteRing();
  EXPECT_EQ(fr.size(), 256u);
  for (auto r : verifyRingAxioms(fr, Budget{})) EXPECT_TRUE(r.passed()) << r.id;
  EXPECT_EQ(fr.one(), ring.encode(ring.one()));
}

TEST(FreeModules, ComponentCoefficientWithoutCocycle) {
  CrossedProductRing ring(frobeniusData());
  const auto& g = ring.group();
  for (GroupElem a = 0; a < g.order(); ++a)
    for (RingElem c = 0; c < 4; ++c)
      EXPECT_EQ(componentCoefficient(ring, a, c), ring.multiply(ring.groupElement(g.inv(a)), ring.embed(c)));
}

TEST(FreeModules, ComparisonIsEquivalence) {
  for (const auto& d : {fromExtension(c4OverC2(), FiniteRing::zmod(2)), innerCrossedData(), frobeniusData()}) {
    auto cmp = freeModuleComparison(d);
    expectAllPass(verifyFreeModuleComparison(cmp.ring, Budget{}));
    auto rs = auditFunctor(cmp.functor, "free", AuditOptions{});
    expectAllPass(rs);
  }
}

TEST(FreeModules, CompositionMatchesDirectComputation) {
  // F(psi o phi) against the product of the two coefficient matrices, on
  // single-component morphisms of rank one.
  auto d = fromExtension(c4OverC2(), FiniteRing::zmod(2));
  auto cmp = freeModuleComparison(d);
  const auto& src = cmp.functor.source();
  const auto& base = src.base().base();
  const auto& ring = cmp.ring;
  const GroupElem e = d.group().identity();
  auto x = src.base().at(0, base.freeObject(1, e));
  for (GroupElem g = 0; g < 2; ++g)
    for (GroupElem h = 0; h < 2; ++h)
      for (RingElem a = 0; a < d.ring().size(); ++a)
        for (RingElem b = 0; b < d.ring().size(); ++b) {
          auto phi = src.base().morphism(x, x, {{{g, 0}, base.morphism(base.freeObject(1, e), base.freeObject(1, g), RingMatrix(1, 1, a))}});
          auto psi = src.base().morphism(x, x, {{{h, 0}, base.morphism(base.freeObject(1, e), base.freeObject(1, h), RingMatrix(1, 1, b))}});
          auto lhs = cmp.functor.morphism(src.compose(psi, phi));
          auto expected = ring.multiply(componentCoefficient(ring, g, a), componentCoefficient(ring, h, b));
          ASSERT_EQ(lhs.matrix(0, 0), ring.encode(expected));
        }
}

TEST(FreeModules, ReducedInclusionIsEquivalence) {
  auto d = fromExtension(c4OverC2(), FiniteRing::zmod(2));
  AuditOptions opt;
  opt.maxRank = 2;
  auto rs = auditFunctor<ReducedPointStar, PointStar>(
      reducedInclusion(d), "inclusion", opt,
      [&](const PointStar::Object& x) { return reducedReplacement(d, x); });
  expectAllPass(rs);
  EXPECT_EQ(find(rs, "inclusion.essentially-surjective").coverage, Coverage::Exhaustive);
}

TEST(RestrictionChain, WholeAndTrivialSubgroups) {
  auto d = fromExtension(c4OverC2(), FiniteRing::zmod(2));
  for (const auto& h : {Subgroup{0}, Subgroup{0, 1}}) {
    auto rc = restrictionChain(d, h);
    expectAllPass(validateCrossedData(rc.restricted, Budget{}));
    expectAllPass(auditFunctor(rc.chain, "chain", AuditOptions{}));
    expectAllPass(auditFunctor(rc.comparison.functor, "free", AuditOptions{}));
    EXPECT_EQ(rc.chain.target().index().size(), 2u / h.size());
  }
}

TEST(RestrictionChain, ProperSubgroupOfCyclicFour) {
  auto rc = restrictionChain(frobeniusData(), Subgroup{0, 2});
  expectAllPass(auditFunctor(rc.chain, "chain", AuditOptions{}));
  expectAllPass(auditFunctor(rc.comparison.functor, "free", AuditOptions{}));
  // alpha restricted to {0, 2} is trivial, so the fibre ring is F4[C2].
  CrossedProductRing fibre(rc.restricted);
  auto rg = FiniteRing::groupRing(FiniteRing::galoisField4(), FiniteGroup::cyclic(2));
  for (RingElem x = 0; x < 16; ++x)
    for (RingElem y = 0; y < 16; ++y) ASSERT_EQ(fibre.encode(fibre.multiply(fibre.decode(x), fibre.decode(y))), rg.mul(x, y));
}
