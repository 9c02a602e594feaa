#pragma once

#include "coeffcat/equiv/functor.hpp"
#include "coeffcat/gcat/adapters.hpp"
#include "coeffcat/gcat/verify.hpp"
#include "coeffcat/star/pushforward.hpp"

namespace coeffcat {

/// F o g^* = g^* o F on objects and morphisms of rank <= maxRank, every g.
template <GCategory A, GCategory B>
CheckResult verifyEquivariant(const Functor<A, B>& f, std::uint32_t maxRank, const Budget& budget,
                              const std::string& id = "functor.equivariant") {
  const A& a = f.source();
  const B& b = f.target();
  CheckBuilder check(id, "F(g^* x) = g^* F(x) and F(g^* phi) = g^* F(phi)");
  if (!(a.group() == b.group())) {
    check.fail(Json{{"source-group", a.group().name()}, {"target-group", b.group().name()}}, "different groups");
    return std::move(check).finish();
  }
  const auto objs = a.objects(maxRank);
  const GroupElem n = a.group().order();
  for (const auto& x : objs)
    for (GroupElem g = 0; g < n && !check.failed(); ++g) {
      check.count();
      detail::guarded(check, [&] { return Json{{"object", a.toJson(x)}}; }, [&] {
        if (!(f.object(a.act(g, x)) == b.act(g, f.object(x))))
          return check.fail(Json{{"g", a.group().elementName(g)}, {"object", a.toJson(x)}});
        return true;
      });
    }
  if (!check.failed())
    detail::record(check, sweepMorphisms(a, objs, budget.derive(id), [&](const auto& phi) {
      return detail::guarded(check, [&] { return Json{{"morphism", a.toJson(phi)}}; }, [&] {
        for (GroupElem g = 0; g < n; ++g)
          if (!(f.morphism(a.act(g, phi)) == b.act(g, f.morphism(phi))))
            return check.fail(Json{{"g", a.group().elementName(g)}, {"morphism", a.toJson(phi)}});
        return true;
      });
    }));
  return std::move(check).finish();
}

/// F *_K S for an equivariant additive functor F: A -> B, applied entrywise:
/// (F *_K S)(A)_s = F(A_s), (F *_K S)(phi)_{k,s} = F(phi_{k,s}). Equivariance
/// is checked at rank 1 on a small budget; a failure throws AxiomViolation
/// with the witness.
template <GCategory A, GCategory B>
Functor<StarCategory<A>, StarCategory<B>> mapCategory(const Functor<A, B>& f, const BiSet& s) {
  const auto eq = verifyEquivariant(f, 1, Budget{}.withSamples(256));
  if (eq.failed()) throw AxiomViolation("functor is not equivariant", eq.witness.value_or(Json::object()));
  StarCategory<A> src(f.source(), s);
  StarCategory<B> tgt(f.target(), s);
  auto onObject = [f](const typename StarCategory<A>::Object& x) {
    typename StarCategory<B>::Object y;
    for (const auto& [p, v] : x.entries) {
      auto w = f.object(v);
      if (!f.target().isZeroObject(w)) y.entries.emplace(p, std::move(w));
    }
    return y;
  };
  auto onMorphism = [f, onObject](const typename StarCategory<A>::Morphism& phi) {
    typename StarCategory<B>::Morphism out{onObject(phi.source), onObject(phi.target), {}};
    for (const auto& [key, v] : phi.entries) {
      auto w = f.morphism(v);
      if (!f.target().isZero(w)) out.entries.emplace(key, std::move(w));
    }
    return out;
  };
  return Functor<StarCategory<A>, StarCategory<B>>(f.name() + " * S", src, tgt, onObject, onMorphism);
}

// ---------------------------------------------------------------------------
// (A *_K S) *_G T  ->  A *_{K x G} (S x T)

template <GCategory A>
using NestedStar = StarCategory<StarCategory<A>>;
template <GCategory A>
using ProductStar = StarCategory<RestrictedCategory<A>>;

/// The isomorphism F(A)_{(s,t)} = (A_t)_s, F(phi)_{(k,g),(s,t)} = (phi_{g,t})_{k,s}.
/// K x G acts on A through the projection to K and on S x T by
/// (k, g)(s, t) = (k s g^-1, g t).
template <GCategory A>
Functor<NestedStar<A>, ProductStar<A>> unnestStar(const A& a, const BiSet& s, const GSet& t) {
  StarCategory<A> inner(a, s);
  NestedStar<A> src = NestedStar<A>::overSet(inner, t);
  const FiniteGroup& k = s.leftGroup();
  const FiniteGroup& g = s.rightGroup();
  RestrictedCategory<A> viaK(a, GroupHom::projectFirst(k, g));
  ProductStar<A> tgt = ProductStar<A>::overSet(viaK, bisetProduct(s, t));
  const std::uint32_t nt = t.size(), ng = g.order();
  auto onObject = [nt](const typename NestedStar<A>::Object& x) {
    typename ProductStar<A>::Object y;
    for (const auto& [tp, inner] : x.entries)
      for (const auto& [sp, v] : inner.entries) y.entries.emplace(sp * nt + tp, v);
    return y;
  };
  auto onMorphism = [onObject, nt, ng](const typename NestedStar<A>::Morphism& phi) {
    typename ProductStar<A>::Morphism out{onObject(phi.source), onObject(phi.target), {}};
    for (const auto& [outer, inner] : phi.entries) {
      const auto [gg, tp] = outer;
      for (const auto& [key, v] : inner.entries) {
        const auto [kk, sp] = key;
        out.entries.emplace(typename ProductStar<A>::Key{kk * ng + gg, sp * nt + tp}, v);
      }
    }
    return out;
  };
  return Functor<NestedStar<A>, ProductStar<A>>("unnest", src, tgt, onObject, onMorphism);
}

// ---------------------------------------------------------------------------
// A *_G T  ->  A *_{G/N} (N\T)

template <GCategory A>
using QuotientStar = StarCategory<DescendedCategory<A>>;

/// Push forward along T -> N\T, then sum the components over each coset:
/// (F phi)_{gN, Nt} = sum_{n in N} phi_{gn, Nt}. Requires N normal, acting
/// trivially on A and freely on T (the last two are not checked here; see
/// verifyTrivialOn and GSet::stabilizer).
template <GCategory A>
Functor<StarCategory<A>, QuotientStar<A>> quotientStar(const A& a, const GSet& t, const Subgroup& n) {
  const FiniteGroup& g = a.group();
  if (!(t.group() == g)) throw MismatchError("quotient functor: the set is over another group");
  if (!g.isNormal(n)) throw Error("quotient functor: subgroup is not normal");
  const QuotientGroup q = quotientGroup(g, n);
  const QuotientGSet nt = quotientGSet(t, q);
  const GroupHom proj(g, q.group, q.projection);
  StarCategory<A> src = StarCategory<A>::overSet(a, t);
  StarCategory<A> mid = StarCategory<A>::overSet(a, GSet::restrict(nt.set, proj));
  PushForward<A> push(src, mid, nt.projection);
  QuotientStar<A> tgt = QuotientStar<A>::overSet(DescendedCategory<A>(a, q), nt.set);
  auto onObject = [push](const typename StarCategory<A>::Object& x) {
    typename QuotientStar<A>::Object y;
    for (auto& [p, v] : push(x).entries) y.entries.emplace(p, v);
    return y;
  };
  auto onMorphism = [push, a, proj, onObject](const typename StarCategory<A>::Morphism& phi) {
    const auto pushed = push(phi);
    typename QuotientStar<A>::Morphism out{onObject(phi.source), onObject(phi.target), {}};
    std::map<typename QuotientStar<A>::Key, MorphismOf<A>> acc;
    for (const auto& [key, v] : pushed.entries) {
      const typename QuotientStar<A>::Key k2{proj(key.first), key.second};
      auto it = acc.find(k2);
      if (it == acc.end())
        acc.emplace(k2, v);
      else
        it->second = a.add(it->second, v);
    }
    for (auto& [key, v] : acc)
      if (!a.isZero(v)) out.entries.emplace(key, std::move(v));
    return out;
  };
  return Functor<StarCategory<A>, QuotientStar<A>>("quotient", src, tgt, onObject, onMorphism);
}

// ---------------------------------------------------------------------------
// (res_H A) *_H T  ->  A *_G (G x_H T)

template <GCategory A>
Functor<StarCategory<RestrictedCategory<A>>, StarCategory<A>> induceStar(const A& a, const Subgroup& h,
                                                                         const GSet& t) {
  const GroupHom incl = GroupHom::subgroupInclusion(a.group(), h);
  if (!(t.group() == incl.source())) throw MismatchError("induction functor: the set is over another group");
  const InducedGSet ind = induceGSet(incl, t);
  using Src = StarCategory<RestrictedCategory<A>>;
  Src src = Src::overSet(RestrictedCategory<A>(a, incl), t);
  StarCategory<A> tgt = StarCategory<A>::overSet(a, ind.set);
  const std::vector<Point> unit = ind.unit;
  auto onObject = [unit](const typename Src::Object& x) {
    typename StarCategory<A>::Object y;
    for (const auto& [p, v] : x.entries) y.entries.emplace(unit[p], v);
    return y;
  };
  auto onMorphism = [unit, incl, onObject](const typename Src::Morphism& phi) {
    typename StarCategory<A>::Morphism out{onObject(phi.source), onObject(phi.target), {}};
    for (const auto& [key, v] : phi.entries)
      out.entries.emplace(typename StarCategory<A>::Key{incl(key.first), unit[key.second]}, v);
    return out;
  };
  return Functor<Src, StarCategory<A>>("induce", src, tgt, onObject, onMorphism);
}

// ---------------------------------------------------------------------------
// (ind_Phi A) *_G T  ->  A *_K res_Phi T

/// The three steps: unnest to A *_{K x G} (G x T), divide by N = {1} x G
/// (acting freely, and trivially on A), and relabel (K x G)/N = K and
/// N\(G x T) = res_Phi T via [s, t] |-> s t.
template <GCategory A>
struct InductionEquivalence {
  Functor<NestedStar<A>, ProductStar<A>> unnest;
  Functor<ProductStar<A>, QuotientStar<RestrictedCategory<A>>> quotient;
  Functor<QuotientStar<RestrictedCategory<A>>, StarCategory<A>> relabel;
  Functor<NestedStar<A>, StarCategory<A>> composite;
};

template <GCategory A>
InductionEquivalence<A> inductionEquivalence(const A& a, const GroupHom& phi, const GSet& t) {
  const FiniteGroup& k = phi.source();
  const FiniteGroup& g = phi.target();
  if (!(a.group() == k)) throw MismatchError("induction: the category is acted on by another group");
  if (!(t.group() == g)) throw MismatchError("induction: the set is over another group");
  const BiSet s = BiSet::restrictedRegular(phi);
  auto unnest = unnestStar(a, s, t);
  const ProductStar<A>& prod = unnest.target();
  Subgroup n;
  for (GroupElem x = 0; x < g.order(); ++x) n.push_back(k.identity() * g.order() + x);
  std::sort(n.begin(), n.end());
  auto quotient = quotientStar(prod.base(), prod.index().leftSet(), n);

  // Relabelling data.
  const auto& qstar = quotient.target();
  const QuotientGroup& q = qstar.base().quotient();
  const GSet& orbits = qstar.index().leftSet();
  const GSet rest = GSet::restrict(t, phi);
  std::vector<Point> nu(orbits.size());
  {
    const QuotientGSet nt = quotientGSet(prod.index().leftSet(), q);
    const std::uint32_t nt_ = t.size();
    for (Point p = 0; p < prod.index().size(); ++p) {
      const GroupElem sp = p / nt_;  // s in G
      const Point tp = p % nt_;
      nu[nt.projection[p]] = t.act(sp, tp);
    }
  }
  std::vector<GroupElem> kappa(q.group.order());
  for (GroupElem c = 0; c < q.group.order(); ++c) kappa[c] = q.representative[c] / g.order();
  StarCategory<A> tgt = StarCategory<A>::overSet(a, rest);
  using QS = QuotientStar<RestrictedCategory<A>>;
  auto onObject = [nu](const typename QS::Object& x) {
    typename StarCategory<A>::Object y;
    for (const auto& [p, v] : x.entries) y.entries.emplace(nu[p], v);
    return y;
  };
  auto onMorphism = [nu, kappa, onObject](const typename QS::Morphism& f) {
    typename StarCategory<A>::Morphism out{onObject(f.source), onObject(f.target), {}};
    for (const auto& [key, v] : f.entries)
      out.entries.emplace(typename StarCategory<A>::Key{kappa[key.first], nu[key.second]}, v);
    return out;
  };
  Functor<QS, StarCategory<A>> relabel("relabel", qstar, tgt, onObject, onMorphism);
  auto composite = composeFunctors(relabel, composeFunctors(quotient, unnest));
  return InductionEquivalence<A>{unnest, quotient, relabel, composite};
}

}  // namespace coeffcat
