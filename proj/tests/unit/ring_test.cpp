#include <gtest/gtest.h>

#include <random>

#include "coeffcat/base/automorphism.hpp"
#include "coeffcat/base/ring.hpp"
#include "coeffcat/base/semilinear.hpp"

using namespace coeffcat;

namespace {

bool allPass(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks)
    if (!c.passed()) return false;
  return true;
}

}  // namespace

TEST(FiniteRing, Zmod) {
  auto f2 = FiniteRing::zmod(2);
  EXPECT_EQ(f2.size(), 2u);
  EXPECT_EQ(f2.units().size(), 1u);
  auto z4 = FiniteRing::zmod(4);
  EXPECT_EQ(z4.units(), (std::vector<RingElem>{1, 3}));
  EXPECT_EQ(z4.mul(3, 3), 1u);
  EXPECT_EQ(z4.neg(1), 3u);
  EXPECT_EQ(z4.characteristic(), 4u);
  auto trivialRing = FiniteRing::zmod(1);
  EXPECT_EQ(trivialRing.one(), trivialRing.zero());
  EXPECT_TRUE(allPass(verifyRingAxioms(z4, Budget{})));
}

TEST(FiniteRing, GroupRingF2C2MatchesConvolution) {
  auto f2 = FiniteRing::zmod(2);
  auto c2 = FiniteGroup::cyclic(2);
  auto r = FiniteRing::groupRing(f2, c2);
  ASSERT_EQ(r.size(), 4u);
  // Oracle: element a0 + a1 g as a pair, multiplied with g^2 = 1 by hand.
  for (RingElem x = 0; x < 4; ++x)
    for (RingElem y = 0; y < 4; ++y) {
      const int a0 = x & 1, a1 = (x >> 1) & 1, b0 = y & 1, b1 = (y >> 1) & 1;
      const int c0 = (a0 * b0 + a1 * b1) % 2, c1 = (a0 * b1 + a1 * b0) % 2;
      EXPECT_EQ(r.mul(x, y), static_cast<RingElem>(c0 + 2 * c1));
    }
  EXPECT_EQ(r.elementName(r.one()), "e");
  EXPECT_EQ(r.elementName(3), "e+a");
  EXPECT_TRUE(allPass(verifyRingAxioms(r, Budget{})));
}

TEST(FiniteRing, Matrix2OverF2HasSixUnits) {
  auto m = FiniteRing::matrix(FiniteRing::zmod(2), 2);
  ASSERT_EQ(m.size(), 16u);
  // Oracle: invertible iff ad - bc is odd.
  std::size_t count = 0;
  for (RingElem x = 0; x < 16; ++x) {
    auto e = m.components(x);
    if ((e[0] * e[3] + e[1] * e[2]) % 2 == 1) ++count;
  }
  EXPECT_EQ(count, 6u);
  EXPECT_EQ(m.units().size(), 6u);
  EXPECT_FALSE(m.isCommutative());
  EXPECT_TRUE(allPass(verifyRingAxioms(m, Budget{})));
}

TEST(FiniteRing, GF4IsAField) {
  auto f4 = FiniteRing::galoisField4();
  EXPECT_EQ(f4.units().size(), 3u);
  const RingElem w = 2;
  EXPECT_EQ(f4.mul(w, w), 3u);             // w^2 = w + 1
  EXPECT_EQ(f4.mul(w, f4.mul(w, w)), 1u);  // w^3 = 1
  EXPECT_TRUE(allPass(verifyRingAxioms(f4, Budget{})));
}

TEST(FiniteRing, LargeRingsAreStructuralAndSampled) {
  auto r = FiniteRing::groupRing(FiniteRing::zmod(3), FiniteGroup::byName("C2xC2"));
  EXPECT_EQ(r.size(), 81u);
  auto checks = verifyRingAxioms(r, Budget{});
  EXPECT_TRUE(allPass(checks));
  auto big = FiniteRing::groupRing(FiniteRing::zmod(2), FiniteGroup::byName("D4"));
  EXPECT_EQ(big.size(), 256u);
  auto bigChecks = verifyRingAxioms(big, Budget{});
  EXPECT_TRUE(allPass(bigChecks));
  EXPECT_EQ(bigChecks[2].coverage, Coverage::Sampled);
  EXPECT_GE(bigChecks[2].cases, 10'000u);
  EXPECT_THROW(FiniteRing::groupRing(FiniteRing::zmod(5), FiniteGroup::byName("Q8")), LimitError);
}

TEST(FiniteRing, TablesAreValidatedWithWitness) {
  // Z/3 addition with a multiplication that is not distributive.
  std::vector<std::vector<RingElem>> add{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  std::vector<std::vector<RingElem>> mul{{0, 0, 0}, {0, 1, 2}, {0, 2, 2}};
  try {
    FiniteRing::fromTables(add, mul);
    FAIL() << "expected rejection";
  } catch (const AxiomViolation& e) {
    EXPECT_TRUE(e.witness().contains("a"));
  }
  std::vector<std::vector<RingElem>> good{{0, 0, 0}, {0, 1, 2}, {0, 2, 1}};
  EXPECT_EQ(FiniteRing::fromTables(add, good).units().size(), 2u);
}

TEST(FiniteRing, FromJson) {
  auto r = FiniteRing::fromJson(Json::parse(R"({"type":"Matrix","k":2,"base":{"type":"Zmod","n":2}})"));
  EXPECT_EQ(r.size(), 16u);
  auto gr = FiniteRing::fromJson(Json::parse(R"({"type":"GroupRing","base":{"type":"Zmod","n":2},"group":"C2"})"));
  EXPECT_EQ(gr.size(), 4u);
  EXPECT_THROW(FiniteRing::fromJson(Json::parse(R"({"type":"Poly"})")), Error);
}

TEST(RingAutomorphism, IdentityAndInverseLaws) {
  auto f4 = FiniteRing::galoisField4();
  auto sigma = RingAutomorphism::frobenius(f4);
  auto id = RingAutomorphism::identity(f4);
  EXPECT_EQ(composeAutomorphisms(id, sigma), sigma);
  EXPECT_EQ(composeAutomorphisms(sigma, sigma.inverse()), id);
  EXPECT_EQ(composeAutomorphisms(sigma, sigma), id);  // order 2
  EXPECT_EQ(sigma(2), 3u);                            // w -> w^2 = w + 1
}

TEST(RingAutomorphism, ConjugationsCompose) {
  // Oracle: evaluate conj(u) o conj(v) and conj(uv) on every element.
  for (const auto& r : {FiniteRing::groupRing(FiniteRing::zmod(2), FiniteGroup::cyclic(4)),
                        FiniteRing::matrix(FiniteRing::zmod(2), 2)}) {
    for (auto u : r.units())
      for (auto v : r.units()) {
        auto lhs = composeAutomorphisms(RingAutomorphism::conjugation(r, u), RingAutomorphism::conjugation(r, v));
        auto rhs = RingAutomorphism::conjugation(r, r.mul(u, v));
        for (RingElem x = 0; x < r.size(); ++x) ASSERT_EQ(lhs(x), rhs(x));
      }
  }
}

TEST(RingAutomorphism, RejectsNonMultiplicativeMap) {
  auto z5 = FiniteRing::zmod(5);
  // x -> 2x is additive but does not fix 1.
  EXPECT_THROW(RingAutomorphism(z5, {0, 2, 4, 1, 3}), AxiomViolation);
  auto f4 = FiniteRing::galoisField4();
  // swap 0 and 1: not additive.
  EXPECT_THROW(RingAutomorphism(f4, {1, 0, 2, 3}), AxiomViolation);
}

namespace {

std::vector<RingElem> randomVector(std::mt19937_64& rng, const FiniteRing& r, std::uint32_t n) {
  std::vector<RingElem> v(n);
  for (auto& x : v) x = static_cast<RingElem>(rng() % r.size());
  return v;
}

SemilinearMap randomSemilinear(std::mt19937_64& rng, const FiniteRing& r, const std::vector<RingAutomorphism>& twists,
                               std::uint32_t rows, std::uint32_t cols) {
  RingMatrix m(rows, cols);
  for (auto& x : m.data()) x = static_cast<RingElem>(rng() % r.size());
  return SemilinearMap{twists[rng() % twists.size()], m};
}

}  // namespace

TEST(SemilinearMap, IdentityAndZero) {
  auto f4 = FiniteRing::galoisField4();
  auto sigma = RingAutomorphism::frobenius(f4);
  SemilinearMap g{sigma, RingMatrix(2, 2)};
  g.matrix(0, 1) = 2;
  g.matrix(1, 0) = 3;
  EXPECT_EQ(composeSemilinear(g, identitySemilinear(f4, 2)), g);
  EXPECT_EQ(composeSemilinear(identitySemilinear(f4, 2), g), g);
  SemilinearMap zero{sigma, RingMatrix(2, 2)};
  auto z = composeSemilinear(zero, g);
  EXPECT_TRUE(isZeroMatrix(z.matrix));
  EXPECT_EQ(z.twist, composeAutomorphisms(sigma, sigma));
}

TEST(SemilinearMap, FrobeniusCompositionOverF4) {
  auto f4 = FiniteRing::galoisField4();
  auto sigma = RingAutomorphism::frobenius(f4);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = randomSemilinear(rng, f4, {sigma}, 2, 2);
    auto b = randomSemilinear(rng, f4, {sigma}, 2, 2);
    auto c = composeSemilinear(a, b);
    EXPECT_TRUE(c.twist.isIdentity());
    // Over a commutative ring the composite matrix is A * sigma(B).
    RingMatrix sb = b.matrix;
    for (auto& x : sb.data()) x = sigma(x);
    EXPECT_EQ(c.matrix, matMul(f4, a.matrix, sb));
  }
}

TEST(SemilinearMap, SemilinearityAndPointwiseCompositionOverNoncommutativeRing) {
  auto m2 = FiniteRing::matrix(FiniteRing::zmod(2), 2);
  std::vector<RingAutomorphism> twists;
  for (auto u : m2.units()) twists.push_back(RingAutomorphism::conjugation(m2, u));
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    auto f = randomSemilinear(rng, m2, twists, 3, 2);
    auto g = randomSemilinear(rng, m2, twists, 2, 3);
    auto h = randomSemilinear(rng, m2, twists, 2, 2);
    auto x = randomVector(rng, m2, 2), y = randomVector(rng, m2, 2);
    const RingElem r = static_cast<RingElem>(rng() % m2.size());
    // f(x + y) = f(x) + f(y), f(r x) = phi(r) f(x).
    std::vector<RingElem> sum(2), scaled(2);
    for (int i = 0; i < 2; ++i) {
      sum[i] = m2.add(x[i], y[i]);
      scaled[i] = m2.mul(r, x[i]);
    }
    auto fx = f.apply(x), fy = f.apply(y), fsum = f.apply(sum), fscaled = f.apply(scaled);
    for (int j = 0; j < 3; ++j) {
      EXPECT_EQ(fsum[j], m2.add(fx[j], fy[j]));
      EXPECT_EQ(fscaled[j], m2.mul(f.twist(r), fx[j]));
    }
    // Pointwise composition equals the composed representation.
    auto gf = composeSemilinear(g, f);
    EXPECT_EQ(gf.apply(x), g.apply(f.apply(x)));
    // Associativity.
    EXPECT_EQ(composeSemilinear(h, composeSemilinear(g, f)), composeSemilinear(composeSemilinear(h, g), f));
  }
}

TEST(SemilinearMap, ScalarMapIsMultiplication) {
  auto m2 = FiniteRing::matrix(FiniteRing::zmod(2), 2);
  for (auto u : m2.units()) {
    auto l = scalarSemilinear(m2, u, 2);
    for (RingElem a = 0; a < m2.size(); ++a) {
      auto y = l.apply({a, m2.one()});
      EXPECT_EQ(y[0], m2.mul(u, a));
      EXPECT_EQ(y[1], u);
    }
  }
}

TEST(SemilinearMap, MismatchErrors) {
  auto f2 = FiniteRing::zmod(2);
  auto f4 = FiniteRing::galoisField4();
  EXPECT_THROW(composeSemilinear(identitySemilinear(f2, 2), identitySemilinear(f2, 3)), MismatchError);
  EXPECT_THROW(composeSemilinear(identitySemilinear(f2, 1), identitySemilinear(f4, 1)), MismatchError);
}
