#pragma once

#include <algorithm>
#include <vector>

#include "coeffcat/star/star_category.hpp"

namespace coeffcat {

/// The functor A *_K S -> A *_K S' induced by a K-equivariant map f: S -> S'.
/// On objects (f_* A)_{s'} is the biproduct of A_s over the fiber f^-1(s'),
/// taken in increasing order of s; on morphisms
///   (f_* phi)_{k,s'} = sum_{s in f^-1(s')} k^*(i_{ks}) o phi_{k,s} o p_s
/// with i and p the structure maps of those biproducts.
template <GCategory A>
class PushForward {
 public:
  using Star = StarCategory<A>;
  using Object = typename Star::Object;
  using Morphism = typename Star::Morphism;

  PushForward(Star source, Star target, std::vector<Point> map)
      : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
    const BiSet& s = source_.index();
    const BiSet& t = target_.index();
    if (map_.size() != s.size()) throw MismatchError("pushforward: map has the wrong domain");
    if (!(s.leftGroup() == t.leftGroup())) throw MismatchError("pushforward: index sets over different groups");
    fibers_.resize(t.size());
    for (Point p = 0; p < s.size(); ++p) {
      if (map_[p] >= t.size()) throw Error("pushforward: map value out of range");
      fibers_[map_[p]].push_back(p);
      for (GroupElem k = 0; k < s.leftGroup().order(); ++k)
        if (map_[s.left(k, p)] != t.left(k, map_[p]))
          throw AxiomViolation("pushforward: map is not equivariant",
                               Json{{"k", s.leftGroup().elementName(k)}, {"s", s.pointName(p)}});
    }
  }

  const Star& source() const { return source_; }
  const Star& target() const { return target_; }
  const std::vector<Point>& map() const { return map_; }
  const std::vector<Point>& fiber(Point t) const { return fibers_[t]; }
  std::size_t position(Point s) const {
    const auto& f = fibers_[map_[s]];
    return static_cast<std::size_t>(std::find(f.begin(), f.end(), s) - f.begin());
  }

  /// Biproduct over the fiber at t of the entries of x, summands in fiber order.
  Biproduct<ObjectOf<A>, MorphismOf<A>> local(const Object& x, Point t) const {
    std::vector<ObjectOf<A>> parts;
    for (Point s : fibers_[t]) parts.push_back(source_.entry(x, s));
    return source_.base().biproduct(std::span<const ObjectOf<A>>(parts));
  }

  Object operator()(const Object& x) const {
    Object out;
    std::set<Point> touched;
    for (const auto& [s, v] : x.entries) touched.insert(map_[s]);
    for (Point t : touched) {
      auto bp = local(x, t);
      if (!source_.base().isZeroObject(bp.object)) out.entries.emplace(t, std::move(bp.object));
    }
    return out;
  }

  Morphism operator()(const Morphism& phi) const {
    const A& a = source_.base();
    const BiSet& s = source_.index();
    Morphism out{(*this)(phi.source), (*this)(phi.target), {}};
    std::map<Point, Biproduct<ObjectOf<A>, MorphismOf<A>>> src, tgt;
    auto cached = [&](auto& cache, const Object& x, Point t) -> const Biproduct<ObjectOf<A>, MorphismOf<A>>& {
      auto it = cache.find(t);
      if (it == cache.end()) it = cache.emplace(t, local(x, t)).first;
      return it->second;
    };
    std::map<typename Star::Key, MorphismOf<A>> acc;
    for (const auto& [key, f] : phi.entries) {
      const auto [k, p] = key;
      const Point q = s.left(k, p);
      const auto& from = cached(src, phi.source, map_[p]);
      const auto& to = cached(tgt, phi.target, map_[q]);
      auto term = a.compose(a.act(k, to.injections[position(q)]), a.compose(f, from.projections[position(p)]));
      const typename Star::Key outKey{k, map_[p]};
      auto it = acc.find(outKey);
      if (it == acc.end())
        acc.emplace(outKey, std::move(term));
      else
        it->second = a.add(it->second, term);
    }
    for (auto& [key, f] : acc)
      if (!a.isZero(f)) out.entries.emplace(key, std::move(f));
    return out;
  }

 private:
  Star source_;
  Star target_;
  std::vector<Point> map_;
  std::vector<std::vector<Point>> fibers_;
};

/// For f: S -> S' and f2: S' -> S'', the isomorphism (f2 f)_* x -> f2_*(f_* x)
/// that regroups the flat biproduct over (f2 f)^-1(s'') into the nested one.
/// `composite` must be the pushforward along f2 o f.
template <GCategory A>
typename StarCategory<A>::Morphism pushCoherence(const PushForward<A>& first, const PushForward<A>& second,
                                                 const PushForward<A>& composite,
                                                 const typename StarCategory<A>::Object& x) {
  const A& a = first.source().base();
  const auto flat = composite(x);
  const auto mid = first(x);
  const auto nested = second(mid);
  typename StarCategory<A>::Morphism eta{flat, nested, {}};
  const GroupElem e = a.group().identity();
  for (const auto& [t2, obj] : flat.entries) {
    auto flatBp = composite.local(x, t2);
    auto outer = second.local(mid, t2);
    std::vector<MorphismOf<A>> terms;
    for (Point s : composite.fiber(t2)) {
      const Point t1 = first.map()[s];
      auto inner = first.local(x, t1);
      auto term = a.compose(outer.injections[second.position(t1)],
                            a.compose(inner.injections[first.position(s)], flatBp.projections[composite.position(s)]));
      terms.push_back(std::move(term));
    }
    auto sum = sumMorphisms(a, flatBp.object, outer.object, terms);
    if (!a.isZero(sum)) eta.entries.emplace(typename StarCategory<A>::Key{e, t2}, std::move(sum));
  }
  return eta;
}

}  // namespace coeffcat
