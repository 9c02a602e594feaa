#include <gtest/gtest.h>

#include <random>

#include "coeffcat/equiv/audit.hpp"
#include "coeffcat/equiv/star_functors.hpp"
#include "coeffcat/gcat/module_category.hpp"
#include "coeffcat/gcat/verify.hpp"

using namespace coeffcat;

namespace {

using Star = StarCategory<ModuleCategory>;

ModuleCategory frobeniusC4() {
  auto f4 = FiniteRing::galoisField4();
  auto sigma = RingAutomorphism::frobenius(f4);
  auto id = RingAutomorphism::identity(f4);
  return ModuleCategory::twistedModule(f4, FiniteGroup::cyclic(4), {id, sigma, id, sigma});
}

CrossedData innerCrossedData() {
  auto r = FiniteRing::matrix(FiniteRing::zmod(2), 2);
  auto g = FiniteGroup::cyclic(2);
  const RingElem u = r.fromComponents({0, 1, 1, 1});
  return CrossedData::make(r, g, {RingAutomorphism::identity(r), RingAutomorphism::conjugation(r, u)},
                           {r.one(), r.one(), r.one(), r.mul(u, u)});
}

void expectAllPass(const std::vector<CheckResult>& rs) {
  for (const auto& r : rs) EXPECT_TRUE(r.passed()) << r.id << " " << toJson(r).dump();
}

// Elements of (Z/n)[G] as coefficient vectors, and |T| x |T| matrices over it.
using GroupRingElem = std::vector<std::uint32_t>;
using GroupRingMatrix = std::vector<std::vector<GroupRingElem>>;

// M_{t',t} = sum over g with g t = t' of phi_{g,t} g, for rank-one entries.
GroupRingMatrix encode(const Star& c, const Star::Morphism& f, std::uint32_t n) {
  const auto& t = c.index();
  const auto order = c.baseGroup().order();
  GroupRingMatrix m(t.size(), std::vector<GroupRingElem>(t.size(), GroupRingElem(order, 0)));
  for (const auto& [key, v] : f.entries) {
    const auto [g, p] = key;
    auto& cell = m[t.left(g, p)][p][g];
    cell = (cell + v.matrix(0, 0)) % n;
  }
  return m;
}

GroupRingMatrix multiply(const FiniteGroup& g, const GroupRingMatrix& a, const GroupRingMatrix& b, std::uint32_t n) {
  const std::size_t size = a.size();
  GroupRingMatrix out(size, std::vector<GroupRingElem>(size, GroupRingElem(g.order(), 0)));
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j)
      for (std::size_t l = 0; l < size; ++l)
        for (GroupElem x = 0; x < g.order(); ++x)
          for (GroupElem y = 0; y < g.order(); ++y) {
            auto& cell = out[i][j][g.mul(x, y)];
            cell = (cell + a[i][l][x] * b[l][j][y]) % n;
          }
  return out;
}

}  // namespace

TEST(StarCategory, CompositionMatchesGroupRingMatrices) {
  const std::uint32_t n = 3;
  auto g = FiniteGroup::symmetric3();
  auto base = ModuleCategory::trivialRing(FiniteRing::zmod(n), g);
  Subgroup h = g.generate(std::vector<GroupElem>{g.elementByName("(12)")});
  auto c = Star::overSet(base, GSet::cosets(g, h));
  ASSERT_EQ(c.index().size(), 3u);
  auto one = base.freeObject(1);
  const auto x = c.object({{0, one}, {1, one}, {2, one}});
  const auto y = c.object({{0, one}, {2, one}});
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto& mid = trial % 2 ? x : y;
    auto f = c.homElement(x, mid, rng() % c.homSize(x, mid));
    auto k = c.homElement(mid, x, rng() % c.homSize(mid, x));
    EXPECT_EQ(encode(c, c.compose(k, f), n), multiply(g, encode(c, k, n), encode(c, f, n), n));
  }
}

TEST(StarCategory, AxiomsOverTwistedModules) {
  auto base = frobeniusC4();
  auto k = base.group();
  auto c2 = FiniteGroup::cyclic(2);
  auto c = Star::overSet(base, GSet::cosets(k, k.generate(std::vector<GroupElem>{2})));
  expectAllPass(verifyAdditiveCategory(c, 1, Budget{}));
  expectAllPass(verifyGAction(c, 1, Budget{}));
  // Over a biset with a nontrivial right action.
  GroupHom phi(k, c2, {0, 1, 0, 1});
  auto b = Star(base, BiSet::restrictedRegular(phi));
  EXPECT_EQ(b.group().order(), 2u);
  expectAllPass(verifyAdditiveCategory(b, 1, Budget{}));
  expectAllPass(verifyGAction(b, 2, Budget{}));
}

TEST(StarCategory, AxiomsOverCrossedData) {
  auto base = ModuleCategory::rigidCrossed(innerCrossedData());
  auto c = Star(base, BiSet::regular(base.group()));
  expectAllPass(verifyAdditiveCategory(c, 1, Budget{}));
  expectAllPass(verifyGAction(c, 1, Budget{}));
}

TEST(StarCategory, ActionMovesPointsByTheRightAction) {
  auto base = frobeniusC4();
  auto c = Star(base, BiSet::regular(base.group()));
  auto x = c.at(1, base.freeObject(1, 1));
  auto y = c.act(3, x);
  ASSERT_EQ(y.entries.size(), 1u);
  EXPECT_EQ(y.entries.begin()->first, c.index().right(1, 3));
  EXPECT_EQ(y.entries.begin()->second, base.freeObject(1, 1));
}

TEST(StarCategory, MorphismRejectsMistypedComponent) {
  auto base = frobeniusC4();
  auto c = Star::overSet(base, GSet::regular(base.group()));
  auto x = c.at(0, base.freeObject(1, 0));
  auto y = c.at(1, base.freeObject(1, 0));
  // The component for k = 1 must land in 1^*(B_1), which has the twisted tag.
  auto wrong = base.identity(base.freeObject(1, 0));
  EXPECT_THROW(c.morphism(x, y, {{{1, 0}, wrong}}), MismatchError);
  auto right = base.homElement(base.freeObject(1, 0), base.act(1, base.freeObject(1, 0)), 1);
  EXPECT_NO_THROW(c.morphism(x, y, {{{1, 0}, right}}));
}

TEST(PushForward, CoherenceIsNaturalIsomorphism) {
  auto base = frobeniusC4();
  auto g = base.group();
  ASSERT_EQ(g.identity(), 0u);
  auto regular = GSet::regular(g);
  auto halves = GSet::cosets(g, g.generate(std::vector<GroupElem>{2}));
  auto point = GSet::point(g);
  Star s0 = Star::overSet(base, regular), s1 = Star::overSet(base, halves), s2 = Star::overSet(base, point);
  std::vector<Point> f(4), f2(2, 0), all(4, 0);
  for (Point t = 0; t < 4; ++t) f[t] = halves.act(t, 0);
  PushForward<ModuleCategory> first(s0, s1, f), second(s1, s2, f2), composite(s0, s2, all);

  auto objs = s0.objects(2);
  Budget budget;
  budget.samples = 300;
  std::uint64_t checked = 0;
  for (const auto& x : objs) {
    auto eta = pushCoherence(first, second, composite, x);
    ASSERT_EQ(eta.source, composite(x));
    ASSERT_EQ(eta.target, second(first(x)));
    // An inverse exists.
    bool inverted = false;
    for (std::uint64_t i = 0; i < s2.homSize(eta.target, eta.source) && !inverted; ++i) {
      auto v = s2.homElement(eta.target, eta.source, i);
      inverted = s2.compose(v, eta) == s2.identity(eta.source) && s2.compose(eta, v) == s2.identity(eta.target);
    }
    EXPECT_TRUE(inverted) << s0.toJson(x).dump();
  }
  auto stats = sweepMorphisms(s0, s0.objects(1), budget, [&](const auto& phi) {
    auto lhs = s2.compose(second(first(phi)), pushCoherence(first, second, composite, phi.source));
    auto rhs = s2.compose(pushCoherence(first, second, composite, phi.target), composite(phi));
    ++checked;
    EXPECT_EQ(lhs, rhs);
    return lhs == rhs;
  });
  EXPECT_GT(checked, 0u);
  (void)stats;
}

TEST(PushForward, RejectsNonEquivariantMap) {
  auto base = frobeniusC4();
  auto g = base.group();
  auto halves = GSet::cosets(g, g.generate(std::vector<GroupElem>{2}));
  Star s0 = Star::overSet(base, GSet::regular(g)), s1 = Star::overSet(base, halves);
  EXPECT_THROW(PushForward<ModuleCategory>(s0, s1, {0, 0, 1, 1}), AxiomViolation);
}

TEST(StarEquivalences, UnnestIsEquivalence) {
  auto base = frobeniusC4();
  auto c2 = FiniteGroup::cyclic(2);
  GroupHom phi(base.group(), c2, {0, 1, 0, 1});
  auto f = unnestStar(base, BiSet::restrictedRegular(phi), GSet::regular(c2));
  expectAllPass(auditFunctor(f, "unnest", AuditOptions{}));
}

TEST(StarEquivalences, UnnestMatchesComponents) {
  auto base = frobeniusC4();
  auto c2 = FiniteGroup::cyclic(2);
  GroupHom phi(base.group(), c2, {0, 1, 0, 1});
  auto s = BiSet::restrictedRegular(phi);
  auto t = GSet::regular(c2);
  auto f = unnestStar(base, s, t);
  const auto& src = f.source();
  // phi_{g,t} has component (k, s) = (1, 0) at (g, t) = (1, 0).
  auto innerX = src.base().at(0, base.freeObject(1, 0));
  auto innerY = src.base().at(0, base.freeObject(1, 1));  // g = 1 moves it to k s = 1
  auto innerYt = src.base().act(1, innerY);
  auto v = base.homElement(base.freeObject(1, 0), base.act(1, base.freeObject(1, 1)), 2);
  auto inner = src.base().morphism(innerX, innerYt, {{{1, 0}, v}});
  auto x = src.at(0, innerX);
  auto y = src.at(t.act(1, 0), innerY);
  auto m = src.morphism(x, y, {{{1, 0}, inner}});
  auto image = f.morphism(m);
  ASSERT_EQ(image.entries.size(), 1u);
  const auto& [key, w] = *image.entries.begin();
  EXPECT_EQ(key.first, 1u * 2 + 1);            // (k, g) = (1, 1)
  EXPECT_EQ(key.second, 0u * t.size() + 0u);  // (s, t) = (0, 0)
  EXPECT_EQ(w, v);
}

TEST(StarEquivalences, QuotientByFreeTrivialSubgroupIsEquivalence) {
  auto base = frobeniusC4();
  Subgroup n{0, 2};
  for (const auto& r : {verifyTrivialOn(base, n, 1, Budget{}, "trivial")}) EXPECT_TRUE(r.passed());
  auto f = quotientStar(base, GSet::regular(base.group()), n);
  expectAllPass(auditFunctor(f, "quotient", AuditOptions{}));
}

TEST(StarEquivalences, QuotientSumsOverCosets) {
  auto base = frobeniusC4();
  auto f = quotientStar(base, GSet::regular(base.group()), Subgroup{0, 2});
  const auto& src = f.source();
  auto one = base.freeObject(1, 0);
  auto x = src.at(0, one);
  auto y = src.object({{0, one}, {2, one}});
  // Components at k = 0 and k = 2 land in the same coset and are added.
  auto a = base.homElement(one, one, 1);
  auto b = base.homElement(one, one, 3);
  auto m = src.morphism(x, y, {{{0, 0}, a}, {{2, 0}, b}});
  auto image = f.morphism(m);
  ASSERT_EQ(image.entries.size(), 1u);
  const auto& w = image.entries.begin()->second;
  EXPECT_EQ(w.matrix.rows(), 2u);
  // y pushes forward to A_0 + A_2 with summand order 0, 2.
  EXPECT_EQ(w.matrix(0, 0), a.matrix(0, 0));
  EXPECT_EQ(w.matrix(1, 0), b.matrix(0, 0));
}

TEST(StarEquivalences, InductionFromSubgroupIsEquivalence) {
  auto base = frobeniusC4();
  Subgroup h{0, 2};
  auto f = induceStar(base, h, GSet::regular(FiniteGroup::cyclic(2)));
  // The C2 here must be the subgroup {0, 2} with its own numbering.
  expectAllPass(auditFunctor(f, "induce", AuditOptions{}));
}

TEST(StarEquivalences, RestrictedInductionIsEquivalence) {
  auto base = frobeniusC4();
  auto c2 = FiniteGroup::cyclic(2);
  GroupHom phi(base.group(), c2, {0, 1, 0, 1});
  auto eq = inductionEquivalence(base, phi, GSet::regular(c2));
  expectAllPass(auditFunctor(eq.unnest, "step1", AuditOptions{}));
  expectAllPass(auditFunctor(eq.quotient, "step2", AuditOptions{}));
  expectAllPass(auditFunctor(eq.relabel, "step3", AuditOptions{}));
  expectAllPass(auditFunctor(eq.composite, "composite", AuditOptions{}));
  EXPECT_EQ(eq.composite.target().index().leftSet(), GSet::restrict(GSet::regular(c2), phi));
}

TEST(StarEquivalences, InductionAlongInjectionIsEquivalence) {
  auto k = FiniteGroup::cyclic(2);
  auto g = FiniteGroup::cyclic(4);
  auto base = ModuleCategory::rigidCrossed(innerCrossedData());
  GroupHom phi(k, g, {0, 2});
  auto eq = inductionEquivalence(base, phi, GSet::cosets(g, g.generate(std::vector<GroupElem>{2})));
  AuditOptions opt;
  opt.budget.exhaustiveLimit = 2000;
  opt.budget.samples = 2000;
  expectAllPass(auditFunctor(eq.composite, "composite", opt));
}

TEST(StarEquivalences, AuditCatchesNonFaithfulFunctor) {
  auto base = frobeniusC4();
  auto good = quotientStar(base, GSet::regular(base.group()), Subgroup{0, 2});
  // Drop every component with k != e.
  Functor<Star, StarCategory<DescendedCategory<ModuleCategory>>> bad(
      "truncated", good.source(), good.target(), [good](const Star::Object& x) { return good.object(x); },
      [good](const Star::Morphism& m) {
        auto copy = m;
        std::erase_if(copy.entries, [](const auto& kv) { return kv.first.first != 0; });
        return good.morphism(copy);
      });
  auto rs = auditFunctor(bad, "bad", AuditOptions{});
  bool anyFail = false;
  for (const auto& r : rs) anyFail = anyFail || r.failed();
  EXPECT_TRUE(anyFail);
}

TEST(MapCategory, IdentityAndZeroFunctors) {
  auto base = frobeniusC4();
  auto s = BiSet::regular(base.group());
  Functor<ModuleCategory, ModuleCategory> id(
      "id", base, base, [](const auto& x) { return x; }, [](const auto& f) { return f; });
  auto mapped = mapCategory(id, s);
  for (const auto& x : mapped.source().objects(1)) EXPECT_EQ(mapped.object(x), x);
  expectAllPass(auditFunctor(mapped, "id", AuditOptions{}));

  Functor<ModuleCategory, ModuleCategory> zero(
      "zero", base, base, [&](const auto& x) { return x; },
      [&](const auto& f) { return base.zeroMorphism(f.source, f.target); });
  auto killed = mapCategory(zero, s);
  auto rs = auditFunctor(killed, "zero", AuditOptions{});
  const auto& faithful = rs.at(2);
  ASSERT_EQ(faithful.id, "zero.faithful");
  EXPECT_TRUE(faithful.failed());
  EXPECT_TRUE(faithful.witness.has_value());
}

TEST(MapCategory, RejectsNonEquivariantFunctor) {
  auto base = frobeniusC4();
  SwappedActionCategory<ModuleCategory> swapped(base, 1, 2);
  Functor<ModuleCategory, SwappedActionCategory<ModuleCategory>> f(
      "into-swapped", base, swapped, [](const auto& x) { return x; }, [](const auto& m) { return m; });
  EXPECT_THROW(mapCategory(f, BiSet::regular(base.group())), AxiomViolation);
}

TEST(MapCategory, FullSubcategoryInclusion) {
  // Even total rank: closed under sums and the action, not essentially surjective.
  auto base = frobeniusC4();
  FullSubcategory<ModuleCategory> even(base, [](const ModuleCategory::Object& x) { return x.tags.size() % 2 == 0; });
  Functor<FullSubcategory<ModuleCategory>, ModuleCategory> incl(
      "incl", even, base, [](const auto& x) { return x; }, [](const auto& f) { return f; });
  auto mapped = mapCategory(incl, BiSet::fromLeftSet(GSet::point(base.group())));
  AuditOptions opt;
  opt.maxRank = 2;
  opt.targetMaxRank = 1;
  auto rs = auditFunctor(mapped, "incl", opt);
  EXPECT_TRUE(rs.at(2).passed());
  EXPECT_TRUE(rs.at(3).passed());
  EXPECT_TRUE(rs.at(4).failed());
}
