#include "coeffcat/crossed/free_modules.hpp"

#include "coeffcat/equiv/star_functors.hpp"

namespace coeffcat {

PointStar crossedPointStar(const CrossedData& data) {
  return PointStar::overSet(ModuleCategory::rigidCrossed(data), GSet::point(data.group()));
}

ReducedPointStar reducedPointStar(const CrossedData& data) {
  const std::uint32_t e = data.group().identity();
  return ReducedPointStar(crossedPointStar(data), [e](const PointStar::Object& x) {
    for (const auto& [p, v] : x.entries)
      for (auto t : v.tags)
        if (t != e) return false;
    return true;
  });
}

Functor<ReducedPointStar, PointStar> reducedInclusion(const CrossedData& data) {
  auto sub = reducedPointStar(data);
  return Functor<ReducedPointStar, PointStar>(
      "inclusion", sub, sub.base(), [](const PointStar::Object& x) { return x; },
      [](const PointStar::Morphism& f) { return f; });
}

std::optional<IsoWitness<ReducedPointStar, PointStar>> reducedReplacement(const CrossedData& data,
                                                                         const PointStar::Object& x) {
  const PointStar p = crossedPointStar(data);
  const ModuleCategory& base = p.base();
  const std::uint32_t e = data.group().identity();
  std::vector<PointStar::Object> from, to;
  std::vector<std::pair<PointStar::Morphism, PointStar::Morphism>> isos;
  for (const auto& [s, v] : x.entries)
    for (auto t : v.tags) {
      auto y = p.at(s, base.freeObject(1, t));
      auto z = p.at(s, base.freeObject(1, e));
      auto iso = findIsomorphism(p, y, z, std::uint64_t{1} << 20);
      if (!iso) return std::nullopt;
      from.push_back(std::move(y));
      to.push_back(std::move(z));
      isos.push_back(std::move(*iso));
    }
  auto bx = p.biproduct(std::span<const PointStar::Object>(from));
  auto bz = p.biproduct(std::span<const PointStar::Object>(to));
  if (bx.object != x) return std::nullopt;
  auto forward = p.zeroMorphism(x, bz.object), backward = p.zeroMorphism(bz.object, x);
  for (std::size_t i = 0; i < isos.size(); ++i) {
    forward = p.add(forward, p.compose(bz.injections[i], p.compose(isos[i].first, bx.projections[i])));
    backward = p.add(backward, p.compose(bx.injections[i], p.compose(isos[i].second, bz.projections[i])));
  }
  return IsoWitness<ReducedPointStar, PointStar>{bz.object, std::move(forward), std::move(backward)};
}

CrossedProductRing::Element componentCoefficient(const CrossedProductRing& ring, GroupElem g, RingElem c) {
  const FiniteGroup& grp = ring.group();
  const GroupElem gi = grp.inv(g);
  return ring.multiply(ring.groupElement(gi), ring.embed(ring.data().tauInverse(g, gi)), ring.embed(c));
}

namespace {

std::uint32_t pointRank(const PointStar::Object& x) {
  return x.entries.empty() ? 0 : static_cast<std::uint32_t>(x.entries.begin()->second.tags.size());
}

}  // namespace

FreeModuleComparison freeModuleComparison(const CrossedData& data) {
  CrossedProductRing ring(data);
  const FiniteRing big = ring.asFiniteRing();
  ModuleCategory modules = ModuleCategory::trivialRing(big, FiniteGroup::trivial());
  const std::uint32_t nr = data.ring().size();
  std::vector<RingElem> table(std::size_t{data.group().order()} * nr);
  for (GroupElem g = 0; g < data.group().order(); ++g)
    for (RingElem c = 0; c < nr; ++c) table[g * nr + c] = ring.encode(componentCoefficient(ring, g, c));

  auto onObject = [modules](const PointStar::Object& x) { return modules.freeObject(pointRank(x)); };
  auto onMorphism = [modules, big, table, nr](const PointStar::Morphism& f) {
    const std::uint32_t n = pointRank(f.source), m = pointRank(f.target);
    RingMatrix p(m, n, big.zero());
    for (const auto& [key, v] : f.entries)
      for (std::uint32_t j = 0; j < m; ++j)
        for (std::uint32_t i = 0; i < n; ++i) p(j, i) = big.add(p(j, i), table[key.first * nr + v.matrix(j, i)]);
    return modules.morphism(modules.freeObject(n), modules.freeObject(m), std::move(p));
  };
  Functor<ReducedPointStar, ModuleCategory> functor("free-modules", reducedPointStar(data), modules, onObject,
                                                    onMorphism);
  return FreeModuleComparison{std::move(ring), std::move(modules), std::move(functor)};
}

std::vector<CheckResult> verifyFreeModuleComparison(const CrossedProductRing& ring, const Budget& budget) {
  const CrossedData& d = ring.data();
  const FiniteRing& r = d.ring();
  const FiniteGroup& g = d.group();
  const std::uint64_t nr = r.size(), ng = g.order();

  CheckBuilder defined("crossed-modules.well-defined",
                       "x r g^-1 tau_{g,g^-1}^-1 = x g^-1 tau_{g,g^-1}^-1 alpha_g(r), so F(phi,g) is defined on the tensor product");
  // Left multiplication by x is additive, so basis elements x = s k suffice.
  auto s1 = sweep({nr * ng, nr, ng}, budget.derive("well-defined"), [&](std::span<const std::uint64_t> i) {
    const auto x = ring.basis(static_cast<RingElem>(i[0] % nr), static_cast<GroupElem>(i[0] / nr));
    const auto rr = static_cast<RingElem>(i[1]);
    const auto a = static_cast<GroupElem>(i[2]);
    const GroupElem ai = g.inv(a);
    const auto ga = ring.groupElement(ai);
    const auto t = ring.embed(d.tauInverse(a, ai));
    const auto e0 = ring.multiply(ring.multiply(x, ring.embed(rr)), ga, t);
    const auto e1 = ring.multiply(ring.multiply(x, ga), ring.embed(d.alpha(ai).applyInverse(rr)), t);
    const auto e2 = ring.multiply(ring.multiply(x, ga), t, ring.embed(d.alpha(a)(rr)));
    if (e0 != e1 || e1 != e2)
      return defined.fail(Json{{"x", ring.elementName(x)}, {"r", r.elementName(rr)}, {"g", g.elementName(a)},
                               {"x r g^-1 t", ring.elementName(e0)},
                               {"x g^-1 alpha^-1(r) t", ring.elementName(e1)},
                               {"x g^-1 t alpha_g(r)", ring.elementName(e2)}});
    return true;
  });
  defined.merge(s1.coverage);
  defined.count(s1.visited);

  CheckBuilder coeff("crossed-modules.composition-coefficient",
                     "the coefficients of F(psi,h) o F(phi,g) and F((psi,h) o (phi,g)) agree");
  const GroupElem e = g.identity();
  auto s2 = sweep({ng, ng}, budget.derive("composition-coefficient"), [&](std::span<const std::uint64_t> i) {
    const auto a = static_cast<GroupElem>(i[0]);  // g
    const auto b = static_cast<GroupElem>(i[1]);  // h
    const GroupElem ai = g.inv(a), bi = g.inv(b), ba = g.mul(b, a), bai = g.inv(ba);
    const RingElem lhs = r.mul(r.mul(d.alpha(bai).applyInverse(d.tau(ai, bi)), d.alpha(bi).applyInverse(d.tauInverse(a, ai))),
                               d.tauInverse(b, bi));
    const RingElem rhs = r.mul(r.mul(d.tauInverse(ba, bai), d.tauInverse(b, a)), d.alpha(b)(d.tau(e, a)));
    if (lhs != rhs)
      return coeff.fail(Json{{"g", g.elementName(a)}, {"h", g.elementName(b)}, {"lhs", r.elementName(lhs)},
                             {"rhs", r.elementName(rhs)}});
    return true;
  });
  coeff.merge(s2.coverage);
  coeff.count(s2.visited);

  std::vector<CheckResult> out;
  out.push_back(std::move(defined).finish());
  out.push_back(std::move(coeff).finish());
  return out;
}

RestrictionChain restrictionChain(const CrossedData& data, const Subgroup& h) {
  const GroupHom incl = GroupHom::subgroupInclusion(data.group(), h);
  CrossedData restricted = data.restrictTo(incl);
  const auto full = ModuleCategory::rigidCrossed(data);
  const auto small = ModuleCategory::rigidCrossed(restricted);
  using Res = RestrictedCategory<ModuleCategory>;
  const Res res(full, incl);
  auto mapTags = [incl](const ModuleCategory::Object& x) {
    ModuleCategory::Object y = x;
    for (auto& t : y.tags) t = incl(t);
    return y;
  };
  Functor<ModuleCategory, Res> tags(
      "tag-inclusion", small, res, mapTags, [mapTags](const ModuleCategory::Morphism& f) {
        return ModuleCategory::Morphism{mapTags(f.source), mapTags(f.target), f.matrix};
      });
  const GSet pt = GSet::point(incl.source());
  auto lifted = mapCategory(tags, BiSet::fromLeftSet(pt));
  auto induced = induceStar(full, h, pt);
  auto chain = composeFunctors(induced, composeFunctors(lifted, reducedInclusion(restricted)));
  auto comparison = freeModuleComparison(restricted);
  return RestrictionChain{std::move(restricted), std::move(chain), std::move(comparison)};
}

}  // namespace coeffcat
