#include "coeffcat/star/group_ring_oracle.hpp"

#include "coeffcat/gcat/module_category.hpp"
#include "coeffcat/star/star_category.hpp"

namespace coeffcat {

CheckResult verifyGroupRingOracle(const FiniteRing& r, const FiniteGroup& g, const Budget& budget, const std::string& id) {
  CheckBuilder check(id, "composition in F^f(R) *_G pt is the product of R[G]");
  const auto base = ModuleCategory::trivialRing(r, g);
  const auto star = StarCategory<ModuleCategory>::overSet(base, GSet::point(g));
  const auto rg = FiniteRing::groupRing(r, g);
  const auto one = base.freeObject(1);
  const auto x = star.at(0, one);
  const std::uint64_t n = r.size();

  // Coefficient vectors <-> star morphisms <-> group-ring indices (base-|R| digits in element order).
  auto toMorphism = [&](const std::vector<RingElem>& c) {
    std::map<StarCategory<ModuleCategory>::Key, ModuleCategory::Morphism> entries;
    for (GroupElem a = 0; a < g.order(); ++a) entries.emplace(std::pair{a, Point{0}}, base.morphism(one, one, RingMatrix(1, 1, c[a])));
    return star.morphism(x, x, std::move(entries));
  };
  auto toIndex = [&](const StarCategory<ModuleCategory>::Morphism& f) {
    RingElem idx = 0, place = 1;
    for (GroupElem a = 0; a < g.order(); ++a) {
      idx += star.component(f, a, 0).matrix(0, 0) * place;
      place *= static_cast<RingElem>(n);
    }
    return idx;
  };
  auto fromIndex = [&](std::uint64_t idx) {
    std::vector<RingElem> c(g.order());
    for (auto& v : c) {
      v = static_cast<RingElem>(idx % n);
      idx /= n;
    }
    return c;
  };
  auto compare = [&](const std::vector<RingElem>& a, const std::vector<RingElem>& b) {
    const auto phi = toMorphism(a), psi = toMorphism(b);
    const auto lhs = toIndex(star.compose(psi, phi));
    const auto rhs = rg.mul(toIndex(psi), toIndex(phi));
    if (lhs != rhs)
      return check.fail(Json{{"phi", star.toJson(phi)}, {"psi", star.toJson(psi)}, {"composite", rg.elementName(lhs)},
                             {"product", rg.elementName(rhs)}});
    return true;
  };

  // Basis elements r g.
  std::vector<std::vector<RingElem>> basis;
  for (GroupElem a = 0; a < g.order(); ++a)
    for (RingElem c = 0; c < n; ++c) {
      std::vector<RingElem> v(g.order(), 0);
      v[a] = c;
      basis.push_back(std::move(v));
    }
  for (const auto& a : basis)
    for (const auto& b : basis) {
      check.count();
      if (!compare(a, b)) return std::move(check).finish();
    }

  const std::uint64_t size = rg.size();
  if (saturatingMul(size, size) <= budget.exhaustiveLimit) {
    for (std::uint64_t a = 0; a < size; ++a)
      for (std::uint64_t b = 0; b < size; ++b) {
        check.count();
        if (!compare(fromIndex(a), fromIndex(b))) return std::move(check).finish();
      }
  } else {
    check.sampled();
    Rng rng(budget.derive(id).seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, size - 1);
    for (std::uint64_t s = 0; s < budget.samples; ++s) {
      check.count();
      if (!compare(fromIndex(pick(rng)), fromIndex(pick(rng)))) break;
    }
  }
  return std::move(check).finish();
}

}  // namespace coeffcat
