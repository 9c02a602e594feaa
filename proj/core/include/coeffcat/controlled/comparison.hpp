#pragma once

#include <optional>
#include <vector>

#include "coeffcat/controlled/controlled_category.hpp"
#include "coeffcat/equiv/functor.hpp"
#include "coeffcat/gcat/verify.hpp"
#include "coeffcat/star/pushforward.hpp"

namespace coeffcat {

/// T x G with g(t, k) = (gt, gk). Point (t, k) has index t * |G| + k. The
/// action is free, and G(t, k) |-> k^-1 t identifies the orbits with T.
GSet productWithGroup(const GSet& t);
/// The projection p: T x G -> T as a table.
std::vector<Point> projectToSet(const GSet& t);

/// C^G(T x G; p^-1 E_diag, all subsets; A): morphisms only connect points
/// with equal T-coordinate.
template <GCategory A>
FixedControlledCategory<A> controlledOverProduct(A a, const GSet& t) {
  GSet x = productWithGroup(t);
  auto e = MorphismSupport::pullback(projectToSet(t), MorphismSupport::diagonal(t.size()));
  auto f = ObjectSupport::everything(x.size());
  return FixedControlledCategory<A>(ControlledCategory<A>(std::move(a), std::move(x), std::move(e), std::move(f)));
}

/// The comparison A *_G T -> C^G(T x G; p^-1 E_diag, all; A):
///   F(A)_{(t, g^-1)} = g^*(A_{gt}),
///   F(phi)_{(t, k^-1), (t, g^-1)} = g^*(phi_{kg^-1, gt}),
/// and zero between points with different T-coordinates.
template <GCategory A>
Functor<StarCategory<A>, FixedControlledCategory<A>> controlledComparison(A a, const GSet& t) {
  using Star = StarCategory<A>;
  using Target = FixedControlledCategory<A>;
  Star star = Star::overSet(a, t);
  Target target = controlledOverProduct(a, t);
  const std::uint32_t n = t.group().order();
  auto onObject = [star, target, t, n](const typename Star::Object& x) {
    const FiniteGroup& g = t.group();
    std::map<Point, ObjectOf<A>> entries;
    for (Point s = 0; s < t.size(); ++s)
      for (GroupElem k = 0; k < n; ++k) {
        const GroupElem gg = g.inv(k);  // the point is (s, gg^-1)
        auto it = x.entries.find(t.act(gg, s));
        if (it != x.entries.end()) entries.emplace(s * n + k, star.base().act(gg, it->second));
      }
    return target.ambient().object(std::move(entries));
  };
  auto onMorphism = [star, target, t, n, onObject](const typename Star::Morphism& phi) {
    const FiniteGroup& g = t.group();
    const A& a = star.base();
    std::map<typename Target::Key, MorphismOf<A>> entries;
    for (Point s = 0; s < t.size(); ++s)
      for (GroupElem gi = 0; gi < n; ++gi)
        for (GroupElem ki = 0; ki < n; ++ki) {
          const GroupElem gg = g.inv(gi), kk = g.inv(ki);
          auto it = phi.entries.find({g.mul(kk, gi), t.act(gg, s)});
          if (it != phi.entries.end()) entries.emplace(typename Target::Key{s * n + ki, s * n + gi}, a.act(gg, it->second));
        }
    return target.ambient().morphism(onObject(phi.source), onObject(phi.target), std::move(entries));
  };
  return Functor<Star, Target>("controlled-comparison", std::move(star), std::move(target), onObject, onMorphism);
}

/// The object of A *_G T with A_t = C_{(t, e)}; F maps it to C on the nose.
template <GCategory A>
typename StarCategory<A>::Object controlledPreimage(const Functor<StarCategory<A>, FixedControlledCategory<A>>& f,
                                                    const typename FixedControlledCategory<A>::Object& c) {
  const GSet& t = f.source().index().leftSet();
  const GroupElem e = t.group().identity();
  const std::uint32_t n = t.group().order();
  typename StarCategory<A>::Object x;
  for (const auto& [p, v] : c.entries)
    if (p % n == e) x.entries.emplace(p / n, v);
  return x;
}

/// phi_{k,t} = f_{(t, k^-1), (t, e)}, the preimage of f under F.
template <GCategory A>
typename StarCategory<A>::Morphism controlledPreimage(const Functor<StarCategory<A>, FixedControlledCategory<A>>& f,
                                                      const typename FixedControlledCategory<A>::Morphism& m) {
  const GSet& t = f.source().index().leftSet();
  const FiniteGroup& g = t.group();
  const std::uint32_t n = g.order();
  typename StarCategory<A>::Morphism phi{controlledPreimage(f, m.source), controlledPreimage(f, m.target), {}};
  for (const auto& [key, v] : m.entries) {
    const auto [y, x] = key;
    if (x % n != g.identity() || y / n != x / n) continue;
    phi.entries.emplace(typename StarCategory<A>::Key{g.inv(y % n), x / n}, v);
  }
  return phi;
}

/// Properties of the comparison beyond the equivalence audit:
///  - image objects and morphisms satisfy the fixed-point equations;
///  - image morphisms only connect points with equal T-coordinate;
///  - every target object is hit exactly, by controlledPreimage;
///  - the fullness witness phi_{k,t} = f_{(t,k^-1),(t,e)} satisfies F(phi) = f on
///    every f: F(A) -> F(B), and recovers phi from F(phi).
template <GCategory A>
std::vector<CheckResult> verifyControlledComparison(const Functor<StarCategory<A>, FixedControlledCategory<A>>& f,
                                                    std::uint32_t maxRank, const Budget& budget,
                                                    const std::string& prefix = "controlled-comparison") {
  const auto& src = f.source();
  const auto& tgt = f.target();
  const std::uint32_t n = src.index().leftSet().group().order();
  const auto objs = src.objects(maxRank);

  CheckBuilder fixed(prefix + ".image-fixed", "F(A)_x = g^*(F(A)_{gx}) and F(phi)_{y,x} = g^*(F(phi)_{gy,gx})");
  CheckBuilder control(prefix + ".image-support", "F(phi)_{(t',k),(t,g)} = 0 unless t' = t");
  CheckBuilder objectWitness(prefix + ".object-preimage", "the object with A_t = C_{(t,e)} maps to C");
  CheckBuilder fullness(prefix + ".fullness-witness", "phi_{k,t} = f_{(t,k^-1),(t,e)} satisfies F(phi) = f");

  for (const auto& x : objs) {
    detail::guarded(fixed, [&] { return Json{{"A", src.toJson(x)}}; }, [&] {
      fixed.count();
      if (auto d = tgt.fixedPointDefect(f.object(x))) return fixed.fail(Json{{"A", src.toJson(x)}, {"defect", *d}});
      return true;
    });
  }
  detail::record(fixed, sweepMorphisms(src, objs, budget.derive(prefix + "fixed"), [&](const auto& phi) {
    return detail::guarded(fixed, [&] { return Json{{"phi", src.toJson(phi)}}; }, [&] {
      const auto m = f.morphism(phi);
      if (auto d = tgt.fixedPointDefect(m)) return fixed.fail(Json{{"phi", src.toJson(phi)}, {"defect", *d}});
      for (const auto& [key, v] : m.entries)
        if (key.first / n != key.second / n)
          return control.fail(Json{{"phi", src.toJson(phi)}, {"y", key.first}, {"x", key.second}});
      control.count();
      const auto back = controlledPreimage(f, m);
      if (!(back == phi))
        return fullness.fail(Json{{"phi", src.toJson(phi)}, {"recovered", src.toJson(back)}});
      return true;
    });
  }));

  for (const auto& c : tgt.objects(maxRank)) {
    objectWitness.count();
    detail::guarded(objectWitness, [&] { return Json{{"C", tgt.toJson(c)}}; }, [&] {
      const auto x = controlledPreimage(f, c);
      if (!(f.object(x) == c)) return objectWitness.fail(Json{{"C", tgt.toJson(c)}, {"A", src.toJson(x)}});
      return true;
    });
  }

  {
    std::vector<std::decay_t<decltype(f.object(objs.front()))>> images;
    for (const auto& x : objs) images.push_back(f.object(x));
    const auto h = homSizeTable(tgt, images);
    const std::size_t n = images.size();
    detail::record(fullness, sweepObjectTuples(
                                 n, 2, budget.derive(prefix + "full"),
                                 [&](auto t) { return std::vector<std::uint64_t>{h[t[0] * n + t[1]]}; },
                                 [&](auto t, auto k) {
                                   const auto m = tgt.homElement(images[t[0]], images[t[1]], k[0]);
                                   return detail::guarded(fullness, [&] { return Json{{"f", tgt.toJson(m)}}; }, [&] {
                                     const auto phi = controlledPreimage(f, m);
                                     if (!(f.morphism(phi) == m))
                                       return fullness.fail(Json{{"f", tgt.toJson(m)}, {"phi", src.toJson(phi)}});
                                     return true;
                                   });
                                 }));
  }

  std::vector<CheckResult> out;
  out.push_back(std::move(fixed).finish());
  out.push_back(std::move(control).finish());
  out.push_back(std::move(objectWitness).finish());
  out.push_back(std::move(fullness).finish());
  return out;
}

/// For a G-map f: T -> T', the isomorphism F'(f_* A) -> (f x id)_*(F(A)) in
/// C(T' x G; A). At (t', g^-1) it is sum_t i_t o g^*(p_{gt}) over t in f^-1(t'),
/// with i, p the biproduct structure maps on either side.
template <GCategory A>
struct ComparisonNaturality {
  PushForward<A> star;
  ControlledPushForward<A> controlled;
  Functor<StarCategory<A>, FixedControlledCategory<A>> before;  // over T
  Functor<StarCategory<A>, FixedControlledCategory<A>> after;   // over T'

  ComparisonNaturality(const A& a, const GSetMap& f)
      : star(StarCategory<A>::overSet(a, f.source), StarCategory<A>::overSet(a, f.target), f.map),
        controlled(makeControlled(a, f)),
        before(controlledComparison(a, f.source)),
        after(controlledComparison(a, f.target)) {}

  /// eta_A and its inverse.
  std::pair<typename ControlledCategory<A>::Morphism, typename ControlledCategory<A>::Morphism> eta(
      const typename StarCategory<A>::Object& x) const {
    const A& a = star.source().base();
    const GSet& t2 = star.target().index().leftSet();
    const FiniteGroup& g = t2.group();
    const std::uint32_t n = g.order();
    const auto& amb = after.target().ambient();
    const auto lhs = after.object(star(x));
    const auto rhs = controlled(before.object(x));
    std::map<typename ControlledCategory<A>::Key, MorphismOf<A>> fwd, bwd;
    for (Point q = 0; q < amb.space().size(); ++q) {
      const Point tq = q / n;
      const GroupElem gg = g.inv(q % n);
      const auto left = star.local(x, t2.act(gg, tq));
      const auto right = controlled.local(before.object(x), q);
      const auto lo = amb.entry(lhs, q), ro = amb.entry(rhs, q);
      std::vector<MorphismOf<A>> fterms, bterms;
      for (Point p : controlled.fiber(q)) {
        const Point s = star.source().index().left(gg, p / n);
        const auto pos = star.position(s);
        fterms.push_back(a.compose(right.injections[controlled.position(p)], a.act(gg, left.projections[pos])));
        bterms.push_back(a.compose(a.act(gg, left.injections[pos]), right.projections[controlled.position(p)]));
      }
      auto fs = sumMorphisms(a, lo, ro, fterms), bs = sumMorphisms(a, ro, lo, bterms);
      if (!a.isZero(fs)) fwd.emplace(typename ControlledCategory<A>::Key{q, q}, std::move(fs));
      if (!a.isZero(bs)) bwd.emplace(typename ControlledCategory<A>::Key{q, q}, std::move(bs));
    }
    return {amb.morphism(lhs, rhs, std::move(fwd)), amb.morphism(rhs, lhs, std::move(bwd))};
  }

 private:
  static ControlledPushForward<A> makeControlled(const A& a, const GSetMap& f) {
    const std::uint32_t n = f.source.group().order();
    std::vector<Point> m(std::size_t{f.source.size()} * n);
    for (Point s = 0; s < f.source.size(); ++s)
      for (GroupElem k = 0; k < n; ++k) m[s * n + k] = f.map[s] * n + k;
    return ControlledPushForward<A>(controlledOverProduct(a, f.source).ambient(),
                                    controlledOverProduct(a, f.target).ambient(), std::move(m));
  }
};

/// eta is an isomorphism and eta_B o F'(f_* phi) = (f x id)_*(F(phi)) o eta_A.
template <GCategory A>
CheckResult verifyComparisonNaturality(const A& a, const GSetMap& f, std::uint32_t maxRank, const Budget& budget,
                                       const std::string& id = "controlled-comparison.natural") {
  CheckBuilder check(id, "F is natural in T: eta_B o F'(f_* phi) = (f x id)_* F(phi) o eta_A, eta invertible");
  ComparisonNaturality<A> nat(a, f);
  const auto& src = nat.star.source();
  const auto& amb = nat.after.target().ambient();
  const auto objs = src.objects(maxRank);
  for (const auto& x : objs) {
    check.count();
    detail::guarded(check, [&] { return Json{{"A", src.toJson(x)}}; }, [&] {
      const auto [fw, bw] = nat.eta(x);
      if (!(amb.compose(bw, fw) == amb.identity(fw.source)) || !(amb.compose(fw, bw) == amb.identity(fw.target)))
        return check.fail(Json{{"A", src.toJson(x)}, {"eta", amb.toJson(fw)}, {"note", "eta is not invertible"}});
      return true;
    });
  }
  detail::record(check, sweepMorphisms(src, objs, budget.derive(id), [&](const auto& phi) {
    return detail::guarded(check, [&] { return Json{{"phi", src.toJson(phi)}}; }, [&] {
      const auto ea = nat.eta(phi.source).first, eb = nat.eta(phi.target).first;
      const auto lhs = amb.compose(eb, nat.after.morphism(nat.star(phi)));
      const auto rhs = amb.compose(nat.controlled(nat.before.morphism(phi)), ea);
      if (!(lhs == rhs))
        return check.fail(Json{{"phi", src.toJson(phi)}, {"lhs", amb.toJson(lhs)}, {"rhs", amb.toJson(rhs)}});
      return true;
    });
  }));
  return std::move(check).finish();
}

}  // namespace coeffcat
