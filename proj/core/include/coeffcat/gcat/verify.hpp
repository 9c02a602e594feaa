#pragma once

#include <exception>
#include <string>
#include <type_traits>
#include <vector>

#include "coeffcat/check.hpp"
#include "coeffcat/gcat/category.hpp"

namespace coeffcat {

namespace detail {

/// Runs one case; an exception thrown by the category counts as a failure of
/// the check, with the message in the witness.
/// `context` is either a Json value or a callable producing one; it is only
/// evaluated on failure.
template <class Ctx, class Fn>
bool guarded(CheckBuilder& check, Ctx&& context, Fn&& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    Json w;
    if constexpr (std::is_invocable_v<Ctx>)
      w = context();
    else
      w = context;
    w["exception"] = e.what();
    return check.fail(std::move(w));
  }
}

inline void record(CheckBuilder& check, const SweepStats& s) {
  check.merge(s.coverage);
  check.count(s.visited);
}

}  // namespace detail

/// Associativity and units of composition on the objects of total rank <= maxRank.
template <AdditiveCategory C>
std::vector<CheckResult> verifyCompositionLaws(const C& c, const std::vector<ObjectOf<C>>& objs, const Budget& budget,
                                               const std::string& prefix = "category") {
  CheckBuilder assoc(prefix + ".associativity", "h o (g o f) = (h o g) o f");
  CheckBuilder unit(prefix + ".identity", "id o f = f = f o id");

  detail::record(assoc, sweepChains3(c, objs, budget.derive(prefix + "assoc"), [&](const auto& f, const auto& g, const auto& h) {
    return detail::guarded(assoc, Json::object(), [&] {
      auto lhs = c.compose(h, c.compose(g, f));
      auto rhs = c.compose(c.compose(h, g), f);
      if (!(lhs == rhs)) return assoc.fail(Json{{"f", c.toJson(f)}, {"g", c.toJson(g)}, {"h", c.toJson(h)}});
      return true;
    });
  }));

  detail::record(unit, sweepMorphisms(c, objs, budget.derive(prefix + "unit"), [&](const auto& f) {
    return detail::guarded(unit, [&] { return Json{{"f", c.toJson(f)}}; }, [&] {
      if (!(c.compose(c.identity(c.target(f)), f) == f) || !(c.compose(f, c.identity(c.source(f))) == f))
        return unit.fail(Json{{"f", c.toJson(f)}});
      return true;
    });
  }));

  std::vector<CheckResult> out;
  out.push_back(std::move(assoc).finish());
  out.push_back(std::move(unit).finish());
  return out;
}

template <AdditiveCategory C>
std::vector<CheckResult> verifyCompositionLaws(const C& c, std::uint32_t maxRank, const Budget& budget,
                                               const std::string& prefix = "category") {
  return verifyCompositionLaws(c, c.objects(maxRank), budget, prefix);
}

/// Additive-category axioms on the objects of total rank <= maxRank:
/// associativity and units of composition, abelian group structure of Hom,
/// bilinearity of composition, the zero object and binary biproducts.
template <AdditiveCategory C>
std::vector<CheckResult> verifyAdditiveCategory(const C& c, std::uint32_t maxRank, const Budget& budget,
                                                const std::string& prefix = "category") {
  const auto objs = c.objects(maxRank);
  auto out = verifyCompositionLaws(c, objs, budget, prefix);
  CheckBuilder group(prefix + ".hom-group", "each Hom(x, y) is an abelian group under +");
  CheckBuilder bilinear(prefix + ".bilinearity", "composition is additive in each variable");
  CheckBuilder zero(prefix + ".zero-object", "Hom(0, x) and Hom(x, 0) are trivial");
  CheckBuilder biprod(prefix + ".biproduct", "p_i o i_j = delta_ij id and i_1 p_1 + i_2 p_2 = id");
  detail::record(group, sweepParallelPairs(c, objs, budget.derive(prefix + "group"), [&](const auto& f, const auto& g) {
    return detail::guarded(group, Json::object(), [&] {
      const auto z = c.zeroMorphism(c.source(f), c.target(f));
      const bool ok = c.add(f, g) == c.add(g, f) && c.add(f, z) == f && c.isZero(c.add(f, c.negate(f))) &&
                      c.isZero(z) && c.add(c.add(f, g), f) == c.add(f, c.add(g, f));
      if (!ok) return group.fail(Json{{"f", c.toJson(f)}, {"g", c.toJson(g)}});
      return true;
    });
  }));

  {
    const auto h = homSizeTable(c, objs);
    const std::size_t n = objs.size();
    detail::record(
        bilinear,
        sweepObjectTuples(
            n, 3, budget.derive(prefix + "bilinear"),
            [&](auto t) {
              const auto a = h[t[0] * n + t[1]], b = h[t[1] * n + t[2]];
              return std::vector<std::uint64_t>{a, a, b, b};
            },
            [&](auto t, auto i) {
              const auto &x = objs[t[0]], &y = objs[t[1]], &z = objs[t[2]];
              return detail::guarded(bilinear, Json::object(), [&] {
                const auto f1 = c.homElement(x, y, i[0]);
                const auto f2 = c.homElement(x, y, i[1]);
                const auto g1 = c.homElement(y, z, i[2]);
                const auto g2 = c.homElement(y, z, i[3]);
                const bool ok = c.compose(g1, c.add(f1, f2)) == c.add(c.compose(g1, f1), c.compose(g1, f2)) &&
                                c.compose(c.add(g1, g2), f1) == c.add(c.compose(g1, f1), c.compose(g2, f1)) &&
                                c.isZero(c.compose(g1, c.zeroMorphism(x, y)));
                if (!ok)
                  return bilinear.fail(
                      Json{{"f1", c.toJson(f1)}, {"f2", c.toJson(f2)}, {"g1", c.toJson(g1)}, {"g2", c.toJson(g2)}});
                return true;
              });
            }));
  }

  for (const auto& x : objs) {
    zero.count();
    detail::guarded(zero, [&] { return Json{{"object", c.toJson(x)}}; }, [&] {
      const auto z = c.zeroObject();
      if (c.homSize(z, x) != 1 || c.homSize(x, z) != 1 || !c.isZeroObject(z))
        return zero.fail(Json{{"object", c.toJson(x)}});
      return true;
    });
  }

  {
    const std::uint64_t n = objs.size();
    auto s = sweep({n, n}, budget.derive(prefix + "biproduct"), [&](std::span<const std::uint64_t> i) {
      const auto& a = objs[i[0]];
      const auto& b = objs[i[1]];
      return detail::guarded(biprod, [&] { return Json{{"a", c.toJson(a)}, {"b", c.toJson(b)}}; }, [&] {
        const auto bp = biproduct2(c, a, b);
        const auto& [i1, i2] = std::tie(bp.injections[0], bp.injections[1]);
        const auto& [p1, p2] = std::tie(bp.projections[0], bp.projections[1]);
        const bool ok = c.compose(p1, i1) == c.identity(a) && c.compose(p2, i2) == c.identity(b) &&
                        c.isZero(c.compose(p1, i2)) && c.isZero(c.compose(p2, i1)) &&
                        c.add(c.compose(i1, p1), c.compose(i2, p2)) == c.identity(bp.object) &&
                        c.rank(bp.object) == c.rank(a) + c.rank(b);
        if (!ok) return biprod.fail(Json{{"a", c.toJson(a)}, {"b", c.toJson(b)}});
        return true;
      });
    });
    detail::record(biprod, s);
  }

  for (auto* b : {&group, &bilinear, &zero, &biprod}) out.push_back(std::move(*b).finish());
  return out;
}

/// The group action axioms: e^* = id and g^*(h^* -) = (hg)^*(-) on objects and
/// morphisms, and each g^* an additive functor.
template <GCategory C>
std::vector<CheckResult> verifyGAction(const C& c, std::uint32_t maxRank, const Budget& budget,
                                       const std::string& prefix = "action") {
  const auto objs = c.objects(maxRank);
  const FiniteGroup& grp = c.group();
  const std::uint64_t ng = grp.order();
  auto gname = [&](std::uint64_t g) { return grp.elementName(static_cast<GroupElem>(g)); };
  CheckBuilder unit(prefix + ".unit", "e^* is the identity functor");
  CheckBuilder comp(prefix + ".composition", "g^* o h^* = (hg)^*");
  CheckBuilder additive(prefix + ".additivity", "each g^* preserves zero, sums and biproducts");
  CheckBuilder functor(prefix + ".functoriality", "each g^* preserves identities and composition");

  for (const auto& x : objs) {
    unit.count();
    detail::guarded(unit, [&] { return Json{{"object", c.toJson(x)}}; }, [&] {
      if (!(c.act(grp.identity(), x) == x)) return unit.fail(Json{{"object", c.toJson(x)}});
      return true;
    });
  }
  detail::record(unit, sweepMorphisms(c, objs, budget.derive(prefix + "unit"), [&](const auto& f) {
    return detail::guarded(unit, [&] { return Json{{"morphism", c.toJson(f)}}; }, [&] {
      if (!(c.act(grp.identity(), f) == f)) return unit.fail(Json{{"morphism", c.toJson(f)}});
      return true;
    });
  }));

  {
    auto s = sweep({ng, ng, objs.size()}, budget.derive(prefix + "comp-obj"), [&](std::span<const std::uint64_t> i) {
      const auto g = static_cast<GroupElem>(i[0]), h = static_cast<GroupElem>(i[1]);
      const auto& x = objs[i[2]];
      return detail::guarded(comp, [&] { return Json{{"g", gname(g)}, {"h", gname(h)}, {"object", c.toJson(x)}}; }, [&] {
        const auto lhs = c.act(g, c.act(h, x));
        const auto rhs = c.act(grp.mul(h, g), x);
        if (!(lhs == rhs))
          return comp.fail(Json{{"g", gname(g)}, {"h", gname(h)}, {"object", c.toJson(x)},
                                {"g*(h*x)", c.toJson(lhs)}, {"(hg)*x", c.toJson(rhs)}});
        return true;
      });
    });
    detail::record(comp, s);
  }
  if (!comp.failed())
    detail::record(comp, sweepMorphisms(c, objs, budget.derive(prefix + "comp-mor"), [&](const auto& f) {
      return detail::guarded(comp, [&] { return Json{{"morphism", c.toJson(f)}}; }, [&] {
        for (GroupElem g = 0; g < ng; ++g)
          for (GroupElem h = 0; h < ng; ++h) {
            comp.count();
            if (!(c.act(g, c.act(h, f)) == c.act(grp.mul(h, g), f)))
              return comp.fail(Json{{"g", gname(g)}, {"h", gname(h)}, {"morphism", c.toJson(f)}});
          }
        return true;
      });
    }));

  detail::record(additive, sweepParallelPairs(c, objs, budget.derive(prefix + "additive"), [&](const auto& f, const auto& f2) {
    return detail::guarded(additive, [&] { return Json{{"f", c.toJson(f)}, {"f2", c.toJson(f2)}}; }, [&] {
      for (GroupElem g = 0; g < ng; ++g) {
        const bool ok = c.act(g, c.add(f, f2)) == c.add(c.act(g, f), c.act(g, f2)) &&
                        c.isZero(c.act(g, c.zeroMorphism(c.source(f), c.target(f))));
        if (!ok) return additive.fail(Json{{"g", gname(g)}, {"f", c.toJson(f)}, {"f2", c.toJson(f2)}});
      }
      return true;
    });
  }));
  {
    auto s = sweep({ng, objs.size(), objs.size()}, budget.derive(prefix + "additive-bp"), [&](std::span<const std::uint64_t> i) {
      const auto g = static_cast<GroupElem>(i[0]);
      const auto& a = objs[i[1]];
      const auto& b = objs[i[2]];
      return detail::guarded(additive, [&] { return Json{{"g", gname(g)}, {"a", c.toJson(a)}, {"b", c.toJson(b)}}; }, [&] {
        if (!c.isZeroObject(c.act(g, c.zeroObject()))) return additive.fail(Json{{"g", gname(g)}, {"zero", true}});
        // The images of the structure maps exhibit g^*(a + b) as a biproduct of g^*a and g^*b.
        const auto bp = biproduct2(c, a, b);
        const auto i1 = c.act(g, bp.injections[0]), i2 = c.act(g, bp.injections[1]);
        const auto p1 = c.act(g, bp.projections[0]), p2 = c.act(g, bp.projections[1]);
        const bool ok = c.compose(p1, i1) == c.identity(c.act(g, a)) && c.compose(p2, i2) == c.identity(c.act(g, b)) &&
                        c.isZero(c.compose(p1, i2)) && c.isZero(c.compose(p2, i1)) &&
                        c.add(c.compose(i1, p1), c.compose(i2, p2)) == c.identity(c.act(g, bp.object));
        if (!ok) return additive.fail(Json{{"g", gname(g)}, {"a", c.toJson(a)}, {"b", c.toJson(b)}});
        return true;
      });
    });
    detail::record(additive, s);
  }

  detail::record(functor, sweepComposable(c, objs, budget.derive(prefix + "functor"), [&](const auto& f, const auto& f2) {
    return detail::guarded(functor, [&] { return Json{{"f", c.toJson(f)}, {"f2", c.toJson(f2)}}; }, [&] {
      for (GroupElem g = 0; g < ng; ++g) {
        const auto gf = c.act(g, f);
        const bool ok = c.source(gf) == c.act(g, c.source(f)) && c.target(gf) == c.act(g, c.target(f)) &&
                        c.act(g, c.compose(f2, f)) == c.compose(c.act(g, f2), gf) &&
                        c.act(g, c.identity(c.source(f))) == c.identity(c.act(g, c.source(f)));
        if (!ok) return functor.fail(Json{{"g", gname(g)}, {"f", c.toJson(f)}, {"f2", c.toJson(f2)}});
      }
      return true;
    });
  }));

  std::vector<CheckResult> out;
  for (auto* b : {&unit, &comp, &additive, &functor}) out.push_back(std::move(*b).finish());
  return out;
}

/// Checks that every element of `subgroup` acts as the identity, on objects
/// and on morphisms.
template <GCategory C>
CheckResult verifyTrivialOn(const C& c, const Subgroup& subgroup, std::uint32_t maxRank, const Budget& budget,
                            const std::string& id) {
  const auto objs = c.objects(maxRank);
  CheckBuilder check(id, "the normal subgroup acts trivially");
  for (auto n : subgroup)
    for (const auto& x : objs) {
      check.count();
      if (!(c.act(n, x) == x)) {
        check.fail(Json{{"n", c.group().elementName(n)}, {"object", c.toJson(x)}});
        return std::move(check).finish();
      }
    }
  detail::record(check, sweepMorphisms(c, objs, budget, [&](const auto& f) {
    for (auto n : subgroup)
      if (!(c.act(n, f) == f)) return check.fail(Json{{"n", c.group().elementName(n)}, {"morphism", c.toJson(f)}});
    return true;
  }));
  return std::move(check).finish();
}

}  // namespace coeffcat
