#include <gtest/gtest.h>

#include <random>

#include "coeffcat/gcat/module_category.hpp"
#include "coeffcat/gcat/verify.hpp"
#include "coeffcat/swan/tensor.hpp"

using namespace coeffcat;

namespace {

using Tensor = TensorCategory<ModuleCategory>;

void expectAllPass(const std::vector<CheckResult>& rs) {
  for (const auto& r : rs) EXPECT_TRUE(r.passed()) << r.id << " " << toJson(r).dump();
}

ModuleCategory zmod(std::uint32_t n, const FiniteGroup& g) { return ModuleCategory::trivialRing(FiniteRing::zmod(n), g); }

ModuleCategory frobeniusOverC2() {
  auto f4 = FiniteRing::galoisField4();
  return ModuleCategory::twistedModule(f4, FiniteGroup::cyclic(2),
                                       {RingAutomorphism::identity(f4), RingAutomorphism::frobenius(f4)});
}

SwanModule signC2(const FiniteGroup& c2) {
  std::vector<int> s(2, -1);
  s[c2.identity()] = 1;
  return SwanModule::character(c2, s, "Z-");
}

IntMatrix randomMatrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> d(-9, 9);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST(IntMatrix, DeterminantMatchesCofactorExpansion) {
  EXPECT_EQ(IntMatrix::fromRows({{2, 1}, {7, 4}}).determinant(), 1);
  EXPECT_EQ(IntMatrix::fromRows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}).determinant(), -1);
  EXPECT_EQ(IntMatrix::fromRows({{1, 2}, {2, 4}}).determinant(), 0);
  std::mt19937_64 rng(0x5eed);
  for (int trial = 0; trial < 200; ++trial) {
    auto m = randomMatrix(rng, 3, 3);
    Integer cof = 0;
    for (std::size_t j = 0; j < 3; ++j) {
      const std::size_t a = (j + 1) % 3, b = (j + 2) % 3;
      cof += m(0, j) * (m(1, a) * m(2, b) - m(1, b) * m(2, a));
    }
    ASSERT_EQ(m.determinant(), cof) << m.toJson().dump();
  }
}

TEST(IntMatrix, KroneckerMixedProduct) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = randomMatrix(rng, 2, 3), c = randomMatrix(rng, 3, 2);
    auto b = randomMatrix(rng, 2, 2), d = randomMatrix(rng, 2, 1);
    ASSERT_EQ(a.kronecker(b) * c.kronecker(d), (a * c).kronecker(b * d));
  }
  auto k = IntMatrix::fromRows({{1, 2}}).kronecker(IntMatrix::fromRows({{3}, {5}}));
  EXPECT_EQ(k, IntMatrix::fromRows({{3, 6}, {5, 10}}));
}

TEST(IntMatrix, JsonRoundTripsLargeEntries) {
  auto m = IntMatrix::fromJson(Json::parse(R"([[1, "123456789012345678901234567890"], [-3, 0]])"));
  EXPECT_EQ(m(0, 1) * 10, Integer("1234567890123456789012345678900"));
  EXPECT_EQ(IntMatrix::fromJson(m.toJson()), m);
  EXPECT_THROW(IntMatrix::fromJson(Json::parse("[[1, 2], [3]]")), MismatchError);
}

TEST(SwanModule, BuiltinsAreRepresentations) {
  for (const auto& g : {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::symmetric3(), FiniteGroup::quaternion8()}) {
    EXPECT_TRUE(verifySwanModule(SwanModule::trivial(g)).passed());
    auto zg = SwanModule::regular(g);
    EXPECT_EQ(zg.rank(), g.order());
    EXPECT_TRUE(verifySwanModule(zg).passed());
  }
  EXPECT_TRUE(verifySwanModule(signC2(FiniteGroup::cyclic(2))).passed());
}

TEST(SwanModule, RejectsNonRepresentations) {
  auto c2 = FiniteGroup::cyclic(2);
  const GroupElem t = c2.identity() == 0 ? 1 : 0;
  std::vector<IntMatrix> l(2, IntMatrix::identity(1));
  l[t] = IntMatrix::fromRows({{2}});
  EXPECT_THROW(SwanModule(c2, l, "bad"), AxiomViolation);  // det 2
  l[t] = IntMatrix::fromRows({{0, 1}, {1, 1}});
  l[c2.identity()] = IntMatrix::identity(2);
  EXPECT_THROW(SwanModule(c2, l, "bad"), AxiomViolation);  // invertible but t^2 != 1
  EXPECT_THROW(SwanModule::character(c2, {1, 1, 1}, "x"), MismatchError);
}

TEST(SwanModule, FromGeneratorsChecksRelations) {
  auto c3 = FiniteGroup::cyclic(3);
  const std::string gen = c3.elementName(c3.identity() == 0 ? 1 : 0);
  // Cyclic permutation of Z^3.
  auto perm = SwanModule::fromGenerators(c3, {{gen, IntMatrix::fromRows({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}})}}, "P");
  EXPECT_TRUE(verifySwanModule(perm).passed());
  // A rotation of order 3 on Z^2.
  auto rot = SwanModule::fromGenerators(c3, {{gen, IntMatrix::fromRows({{0, -1}, {1, -1}})}}, "R");
  EXPECT_EQ(rot.rank(), 2u);
  // Order 2 generator for a group of order 3.
  EXPECT_THROW(SwanModule::fromGenerators(c3, {{gen, IntMatrix::fromRows({{-1}})}}, "bad"), AxiomViolation);
  auto j = Json::parse(R"({"name": "R", "generators": {")" + gen + R"(": [[0, -1], [1, -1]]}})");
  EXPECT_EQ(SwanModule::fromJson(c3, j).action(0), rot.action(0));
}

TEST(SwanModule, MapsMustBeLinear) {
  auto c2 = FiniteGroup::cyclic(2);
  auto zg = SwanModule::regular(c2);
  EXPECT_NO_THROW(SwanMap(zg, zg, zg.action(1)));  // C2 is abelian
  EXPECT_THROW(SwanMap(zg, zg, IntMatrix::fromRows({{1, 0}, {0, 0}})), AxiomViolation);
  EXPECT_THROW(SwanMap(zg, SwanModule::trivial(c2), IntMatrix::fromRows({{1}})), MismatchError);
}

TEST(Splitting, AugmentationSequenceSplitsOverZ) {
  auto c2 = FiniteGroup::cyclic(2);
  auto [i, p] = augmentationSequenceC2(c2);
  auto seq = findIntegerSplitting(i, p);
  ASSERT_TRUE(seq.has_value());
  EXPECT_TRUE(verifySplitting(*seq).passed());
  // p s = 1 forces s to be non-linear: a linear Z^- -> Z[C2] is k(1, -1), and p of that is 2k.
  EXPECT_THROW(SwanMap(p.target, p.source, seq->s), AxiomViolation);
}

TEST(Splitting, NonExactPairIsRejected) {
  auto c2 = FiniteGroup::cyclic(2);
  auto [i, p] = augmentationSequenceC2(c2);
  auto z = SwanModule::trivial(c2);
  auto augmentation = SwanMap(p.source, z, IntMatrix::fromRows({{1, 1}}));
  EXPECT_FALSE(findIntegerSplitting(i, augmentation).has_value());  // p i = 2
  auto seq = *findIntegerSplitting(i, p);
  seq.r = seq.r + seq.r;
  EXPECT_FALSE(verifySplitting(seq).passed());
}

TEST(Splitting, AugmentationIdealSequence) {
  for (const auto& g : {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::kleinFour(), FiniteGroup::symmetric3(),
                        FiniteGroup::quaternion8()}) {
    auto seq = augmentationSequence(g);
    EXPECT_TRUE(verifySwanModule(seq.i.source).passed()) << g.name();
    EXPECT_TRUE(verifySplitting(seq).passed()) << g.name();
  }
  // Over C2 the ideal is the sign representation.
  auto c2 = FiniteGroup::cyclic(2);
  auto seq = augmentationSequence(c2);
  EXPECT_EQ(seq.i.source.action(1), IntMatrix::fromRows({{-1}}));
}

TEST(Tensor, ScaleMatchesRepeatedAddition) {
  auto a = zmod(5, FiniteGroup::cyclic(2));
  auto x = a.freeObject(2), y = a.freeObject(1);
  for (std::uint64_t idx = 0; idx < a.homSize(x, y); idx += 3) {
    auto f = a.homElement(x, y, idx);
    auto acc = a.zeroMorphism(x, y);
    for (int n = 0; n <= 13; ++n) {
      ASSERT_EQ(scaleMorphism(a, n, f), acc) << n;
      ASSERT_EQ(scaleMorphism(a, -n, f), a.negate(acc)) << n;
      acc = a.add(acc, f);
    }
  }
}

TEST(Tensor, AdditiveAndGActionAxioms) {
  Budget b;
  Tensor af(frobeniusOverC2());
  expectAllPass(verifyAdditiveCategory(af, 2, b, "tensor"));
  expectAllPass(verifyGAction(af, 2, b, "tensor"));
  Tensor af3(zmod(3, FiniteGroup::cyclic(3)));
  expectAllPass(verifyAdditiveCategory(af3, 2, b, "tensor3"));
}

TEST(Tensor, ObjectsAreNormalized) {
  Tensor af(zmod(2, FiniteGroup::cyclic(2)));
  const auto& a = af.base();
  EXPECT_TRUE(af.isZeroObject(af.object(a.freeObject(2), 0)));
  EXPECT_TRUE(af.isZeroObject(af.object(a.zeroObject(), 3)));
  EXPECT_EQ(af.object(a.zeroObject(), 3), af.zeroObject());
  EXPECT_EQ(af.rank(af.object(a.freeObject(2), 3)), 6u);
  // (A, 2) for rank-1 A plus the zero object; rank-2 A only with one copy.
  EXPECT_EQ(af.objects(2).size(), 4u);
}

TEST(Tensor, MorphismTensorEntries) {
  Tensor af(zmod(7, FiniteGroup::cyclic(2)));
  const auto& a = af.base();
  auto x = af.object(a.freeObject(1), 2), y = af.object(a.freeObject(1), 1);
  auto f = af.homElement(x, y, 3 + 7 * 5);  // entries 3 and 5
  auto c = IntMatrix::fromRows({{1, 2}, {0, -1}, {4, 0}});
  auto t = af.tensor(f, c);
  ASSERT_EQ(t.source.copies, 4u);
  ASSERT_EQ(t.target.copies, 3u);
  for (std::uint32_t j = 0; j < 2; ++j)
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t s = 0; s < 2; ++s)
        EXPECT_EQ(af.entry(t, static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(j * 2 + s)),
                  scaleMorphism(a, c(r, s), af.entry(f, 0, j)));
  // Tensoring with a zero-row matrix lands in the zero object.
  EXPECT_TRUE(af.isZeroObject(af.tensor(f, IntMatrix(0, 2)).target));
}

TEST(Swan, TrivialModuleActsAsIdentity) {
  auto a = frobeniusOverC2();
  auto star = swanStar(a);
  auto f = swanAction(star, SwanModule::trivial(a.group()));
  const auto objs = star.objects(2);
  for (const auto& x : objs) {
    ASSERT_EQ(f.object(x), x);
    for (const auto& y : objs) {
      const auto n = star.homSize(x, y);
      for (std::uint64_t i = 0; i < std::min<std::uint64_t>(n, 64); ++i) {
        auto phi = star.homElement(x, y, i);
        ASSERT_EQ(f.morphism(phi), phi);
      }
    }
  }
}

TEST(Swan, ActionAxiomsOverC2) {
  auto a = zmod(2, FiniteGroup::cyclic(2));
  const auto& c2 = a.group();
  auto [i, p] = augmentationSequenceC2(c2);
  std::vector<SwanModule> modules{SwanModule::trivial(c2), SwanModule::regular(c2), signC2(c2)};
  std::vector<SwanMap> maps{i, p, SwanMap(SwanModule::regular(c2), SwanModule::regular(c2), SwanModule::regular(c2).action(1))};
  expectAllPass(verifySwanAction(a, modules, maps, 1, Budget{}));
}

TEST(Swan, ActionAxiomsWithTwistedCoefficients) {
  auto a = frobeniusOverC2();
  const auto& c2 = a.group();
  auto [i, p] = augmentationSequenceC2(c2);
  expectAllPass(verifySwanAction(a, {SwanModule::regular(c2), signC2(c2)}, {i, p}, 1, Budget{}));
}

TEST(Swan, ActionAxiomsOverC3) {
  auto a = zmod(3, FiniteGroup::cyclic(3));
  const auto& c3 = a.group();
  const std::string gen = c3.elementName(c3.identity() == 0 ? 1 : 0);
  auto rot = SwanModule::fromGenerators(c3, {{gen, IntMatrix::fromRows({{0, -1}, {1, -1}})}}, "R");
  auto zg = SwanModule::regular(c3);
  // The norm Z -> Z[C3].
  SwanMap norm(SwanModule::trivial(c3), zg, IntMatrix::fromRows({{1}, {1}, {1}}));
  expectAllPass(verifySwanAction(a, {rot, zg}, {norm}, 1, Budget{}));
}

TEST(Swan, SplittingSurvivesTheFunctor) {
  auto [i, p] = augmentationSequenceC2(FiniteGroup::cyclic(2));
  auto seq = *findIntegerSplitting(i, p);
  EXPECT_TRUE(verifyObjectwiseSplitting(zmod(2, FiniteGroup::cyclic(2)), seq, 2).passed());
  EXPECT_TRUE(verifyObjectwiseSplitting(frobeniusOverC2(), seq, 2).passed());
}

TEST(Swan, NonLinearMatrixIsNotNatural) {
  // tau built from a matrix that does not commute with l_t must fail naturality
  // against some morphism with a component at t.
  auto a = zmod(2, FiniteGroup::cyclic(2));
  auto star = swanStar(a);
  auto zg = SwanModule::regular(a.group());
  auto fm = swanAction(star, zg);
  const auto bad = IntMatrix::fromRows({{1, 0}, {0, 0}});
  bool caught = false;
  const auto objs = star.objects(1);
  for (const auto& x : objs)
    for (const auto& y : objs)
      for (std::uint64_t n = 0; n < star.homSize(x, y) && !caught; ++n) {
        auto phi = star.homElement(x, y, n);
        auto lhs = star.compose(swanTransformation(star, bad, y), fm.morphism(phi));
        auto rhs = star.compose(fm.morphism(phi), swanTransformation(star, bad, x));
        caught = !(lhs == rhs);
      }
  EXPECT_TRUE(caught);
}

TEST(Swan, InclusionIsAnEquivalence) {
  AuditOptions opt;
  opt.maxRank = 2;
  auto a = frobeniusOverC2();
  Tensor af(a);
  expectAllPass(auditFunctor<ModuleCategory, Tensor>(tensorInclusion(a), "incl", opt,
                                                     [&](const auto& x) { return tensorInclusionWitness(af, x); }));
}
