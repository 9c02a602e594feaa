#include <gtest/gtest.h>

#include "coeffcat/controlled/comparison.hpp"
#include "coeffcat/equiv/audit.hpp"
#include "coeffcat/gcat/module_category.hpp"

using namespace coeffcat;

namespace {

using Controlled = ControlledCategory<ModuleCategory>;
using Fixed = FixedControlledCategory<ModuleCategory>;

void expectAllPass(const std::vector<CheckResult>& rs) {
  for (const auto& r : rs) EXPECT_TRUE(r.passed()) << r.id << " " << toJson(r).dump();
}

ModuleCategory f2(const FiniteGroup& g) { return ModuleCategory::trivialRing(FiniteRing::zmod(2), g); }

ModuleCategory frobeniusOverC2() {
  auto f4 = FiniteRing::galoisField4();
  return ModuleCategory::twistedModule(f4, FiniteGroup::cyclic(2),
                                       {RingAutomorphism::identity(f4), RingAutomorphism::frobenius(f4)});
}

// Two free C2-orbits, points {0, 1} and {2, 3}.
GSet twoOrbits() {
  auto c2 = FiniteGroup::cyclic(2);
  return GSet::disjointUnion(GSet::regular(c2), GSet::regular(c2));
}

}  // namespace

TEST(Support, RelationComposition) {
  Relation e{{0, 1}, {1, 2}};
  Relation e2{{2, 0}, {1, 1}};
  // e o e2 = {(x, z) | (x, y) in e2, (y, z) in e}
  EXPECT_EQ(composeRelations(e, e2), (Relation{{2, 1}, {1, 2}}));
  EXPECT_TRUE(composeRelations(Relation{{0, 1}}, Relation{{0, 0}}).size() == 1);
  EXPECT_TRUE(composeRelations(Relation{{1, 1}}, Relation{{0, 0}}).empty());
}

TEST(Support, ClosureIsValidated) {
  EXPECT_THROW(MorphismSupport::fromFamily(2, {Relation{{0, 1}}}), AxiomViolation);  // no diagonal
  try {
    MorphismSupport::fromFamily(3, {Relation{{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}}});
    FAIL() << "composition closure not checked";
  } catch (const AxiomViolation& e) {
    EXPECT_TRUE(e.witness().contains("E"));
  }
  auto gen = MorphismSupport::generatedBy(3, {Relation{{0, 1}, {1, 2}}});
  EXPECT_TRUE(gen.allows(0, 2));
  EXPECT_FALSE(gen.allows(2, 0));
  EXPECT_THROW(ObjectSupport::fromFamily(3, {PointSet{0}, PointSet{1}}), AxiomViolation);
  EXPECT_NO_THROW(ObjectSupport::fromFamily(3, {PointSet{0}, PointSet{1}, PointSet{0, 1}}));
}

TEST(Support, PullbackOfDiagonalIsInvariant) {
  auto t = GSet::regular(FiniteGroup::cyclic(2));
  auto x = productWithGroup(t);
  auto e = MorphismSupport::pullback(projectToSet(t), MorphismSupport::diagonal(t.size()));
  for (Point a = 0; a < x.size(); ++a)
    for (Point b = 0; b < x.size(); ++b) EXPECT_EQ(e.allows(a, b), a / 2 == b / 2);
  EXPECT_TRUE(e.isInvariant(x));
  auto lopsided = MorphismSupport::generatedBy(4, {Relation{{0, 1}}});
  EXPECT_FALSE(lopsided.isInvariant(x));
  EXPECT_THROW(Controlled(f2(FiniteGroup::cyclic(2)), x, lopsided, ObjectSupport::everything(4)), Error);
}

TEST(Controlled, RequiresFreeSpace) {
  auto c2 = FiniteGroup::cyclic(2);
  EXPECT_THROW(Controlled::uncontrolled(f2(c2), GSet::point(c2)), Error);
}

TEST(Controlled, CompositionIsMatrixProduct) {
  auto c2 = FiniteGroup::cyclic(2);
  auto a = f2(c2);
  auto c = Controlled::uncontrolled(a, GSet::regular(c2));
  const auto one = a.freeObject(1);
  const auto x = c.object({{0, one}, {1, one}});
  auto encode = [&](const Controlled::Morphism& f) {
    int bits = 0;
    for (Point y = 0; y < 2; ++y)
      for (Point p = 0; p < 2; ++p) bits |= static_cast<int>(c.component(f, y, p).matrix(0, 0)) << (2 * y + p);
    return bits;
  };
  ASSERT_EQ(c.homSize(x, x), 16u);
  for (std::uint64_t i = 0; i < 16; ++i)
    for (std::uint64_t j = 0; j < 16; ++j) {
      const auto f = c.homElement(x, x, i), g = c.homElement(x, x, j);
      const int mf = encode(f), mg = encode(g);
      int expected = 0;
      for (int y = 0; y < 2; ++y)
        for (int p = 0; p < 2; ++p) {
          int s = 0;
          for (int m = 0; m < 2; ++m) s ^= ((mg >> (2 * y + m)) & 1) & ((mf >> (2 * m + p)) & 1);
          expected |= s << (2 * y + p);
        }
      ASSERT_EQ(encode(c.compose(g, f)), expected);
    }
}

TEST(Controlled, DisjointSupportsComposeToZero) {
  auto c2 = FiniteGroup::cyclic(2);
  auto a = f2(c2);
  auto c = Controlled::uncontrolled(a, twoOrbits());
  const auto one = a.freeObject(1);
  const auto x = c.object({{0, one}, {1, one}, {2, one}, {3, one}});
  const auto id1 = a.identity(one);
  auto f = c.morphism(x, x, {{{1, 0}, id1}});
  auto g = c.morphism(x, x, {{{3, 2}, id1}});
  EXPECT_TRUE(c.isZero(c.compose(g, f)));
  EXPECT_FALSE(c.isZero(c.compose(c.morphism(x, x, {{{2, 1}, id1}}), f)));
  EXPECT_EQ(c.compose(c.identity(x), f), f);
}

TEST(Controlled, SupportConditionIsEnforced) {
  auto c2 = FiniteGroup::cyclic(2);
  auto a = f2(c2);
  auto t = GSet::regular(c2);
  auto fixed = controlledOverProduct(a, t);
  const auto& c = fixed.ambient();
  const auto one = a.freeObject(1);
  const auto x = c.object({{0, one}, {2, one}});
  EXPECT_THROW(c.morphism(x, x, {{{2, 0}, a.identity(one)}}), AxiomViolation);
  EXPECT_EQ(c.homSize(x, x), 4u);
}

TEST(Controlled, AdditiveAndActionAxioms) {
  auto a = f2(FiniteGroup::cyclic(2));
  auto c = Controlled::uncontrolled(a, twoOrbits());
  Budget b;
  b.exhaustiveLimit = 1'000'000;
  expectAllPass(verifyAdditiveCategory(c, 1, b, "controlled"));
  expectAllPass(verifyGAction(c, 1, b, "controlled.action"));
  expectAllPass(verifyGAction(Controlled::uncontrolled(frobeniusOverC2(), twoOrbits()), 1, b, "twisted.action"));
}

TEST(Controlled, ActionShiftsSupport) {
  auto c4 = FiniteGroup::cyclic(4);
  auto a = f2(c4);
  auto c = Controlled::uncontrolled(a, GSet::regular(c4));
  const auto x = c.object({{1, a.freeObject(1)}});
  for (GroupElem g = 0; g < 4; ++g) {
    auto y = c.act(g, x);
    ASSERT_EQ(y.entries.size(), 1u);
    EXPECT_EQ(y.entries.begin()->first, c4.mul(c4.inv(g), 1));
  }
  auto sq = Controlled::uncontrolled(frobeniusOverC2(), GSet::regular(FiniteGroup::cyclic(2)));
  for (const auto& o : sq.objects(1))
    for (std::uint64_t i = 0; i < std::min<std::uint64_t>(sq.homSize(o, o), 64); ++i) {
      const auto f = sq.homElement(o, o, i);
      EXPECT_EQ(sq.act(1, sq.act(1, f)), f);
    }
}

TEST(FixedControlled, RepresentativesDetermineEverything) {
  auto a = frobeniusOverC2();
  Fixed fixed(Controlled::uncontrolled(a, twoOrbits()));
  EXPECT_EQ(fixed.representatives(), (std::vector<Point>{0, 2}));
  for (const auto& x : fixed.objects(2)) {
    EXPECT_FALSE(fixed.fixedPointDefect(x).has_value());
    for (std::uint64_t i = 0; i < std::min<std::uint64_t>(fixed.homSize(x, x), 300); ++i)
      ASSERT_FALSE(fixed.fixedPointDefect(fixed.homElement(x, x, i)).has_value());
  }
  // A non-invariant object is reported.
  const auto one = a.freeObject(1);
  auto lone = fixed.ambient().object({{0, one}});
  EXPECT_TRUE(fixed.fixedPointDefect(lone).has_value());
}

TEST(FixedControlled, AdditiveAxioms) {
  Fixed fixed(Controlled::uncontrolled(frobeniusOverC2(), twoOrbits()));
  expectAllPass(verifyAdditiveCategory(fixed, 1, Budget{}, "fixed"));
}

TEST(ControlledComparison, EquivalenceOverPointAndOrbit) {
  auto c2 = FiniteGroup::cyclic(2);
  for (const auto& a : {f2(c2), frobeniusOverC2()})
    for (const auto& t : {GSet::point(c2), GSet::regular(c2)}) {
      auto f = controlledComparison(a, t);
      AuditOptions opt;
      opt.budget.exhaustiveLimit = 1'000'000;
      auto audit = auditFunctor(f, "comparison", opt);
      expectAllPass(audit);
      for (const auto& r : audit) EXPECT_EQ(r.coverage, Coverage::Exhaustive) << r.id;
      expectAllPass(verifyControlledComparison(f, 1, opt.budget));
    }
}

TEST(ControlledComparison, SinglePointImageIsOneOrbit) {
  auto c2 = FiniteGroup::cyclic(2);
  auto a = frobeniusOverC2();
  auto t = GSet::regular(c2);
  auto f = controlledComparison(a, t);
  const auto& star = f.source();
  const auto m = a.freeObject(1, 1);  // tagged by the Frobenius twist
  auto img = f.object(star.at(1, m));
  // F(A)_{(t, g^-1)} = g^*(A_{gt}): nonzero at (1, e) and at (0, g).
  ASSERT_EQ(img.entries.size(), 2u);
  EXPECT_EQ(img.entries.at(1 * 2 + 0), m);
  EXPECT_EQ(img.entries.at(0 * 2 + 1), a.act(1, m));
}

TEST(ControlledComparison, NaturalInT) {
  auto c2 = FiniteGroup::cyclic(2);
  auto regular = GSet::regular(c2);
  auto both = GSet::disjointUnion(regular, GSet::point(c2));
  for (const auto& a : {f2(c2), frobeniusOverC2()}) {
    EXPECT_TRUE(verifyComparisonNaturality(a, GSetMap::collapse(regular), 1, Budget{}).passed());
    EXPECT_TRUE(verifyComparisonNaturality(a, GSetMap::collapse(both), 1, Budget{}).passed());
    // swap the two points of the regular orbit: t |-> t g, which is equivariant for abelian G
    EXPECT_TRUE(verifyComparisonNaturality(a, GSetMap(regular, regular, {1, 0}), 1, Budget{}).passed());
  }
}

TEST(ControlledComparison, CorruptedFunctorIsCaught) {
  auto c2 = FiniteGroup::cyclic(2);
  auto a = f2(c2);
  auto good = controlledComparison(a, GSet::regular(c2));
  // Drop the entries away from the representatives: images stop being fixed.
  using F = Functor<StarCategory<ModuleCategory>, Fixed>;
  F bad("truncated", good.source(), good.target(), [good](const auto& x) { return good.object(x); },
        [good](const auto& phi) {
          auto m = good.morphism(phi);
          std::erase_if(m.entries, [](const auto& kv) { return kv.first.second % 2 != 0; });
          return m;
        });
  auto rs = verifyControlledComparison(bad, 1, Budget{});
  EXPECT_TRUE(rs.front().failed());
  EXPECT_TRUE(rs.front().witness.has_value());
}
