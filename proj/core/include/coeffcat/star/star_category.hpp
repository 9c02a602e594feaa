#pragma once

#include <map>
#include <memory>
#include <set>
#include <utility>
#include <vector>

#include "coeffcat/gcat/category.hpp"
#include "coeffcat/groups/gset.hpp"

namespace coeffcat {

/// The category A *_K S for a K-category A and a K-G-biset S. An object is a
/// finitely supported family (A_s); a morphism A -> B is a family of
/// morphisms phi_{k,s}: A_s -> k^*(B_{ks}). Zero components are not stored.
/// Composition: (psi o phi)_{g,s} = sum_{g = kh} h^*(psi_{k,hs}) o phi_{h,s}.
/// G acts from the right through the biset:
/// (g^*A)_s = A_{sg^-1}, (g^*phi)_{k,s} = phi_{k,sg^-1}.
template <GCategory A>
class StarCategory {
 public:
  using BaseObject = ObjectOf<A>;
  using BaseMorphism = MorphismOf<A>;

  struct Object {
    std::map<Point, BaseObject> entries;
    bool operator==(const Object&) const = default;
    bool operator<(const Object& o) const { return entries < o.entries; }
    bool operator>(const Object& o) const { return o < *this; }
    bool operator<=(const Object& o) const { return !(o < *this); }
    bool operator>=(const Object& o) const { return !(*this < o); }
  };
  using Key = std::pair<GroupElem, Point>;  // (k, s)
  struct Morphism {
    Object source;
    Object target;
    std::map<Key, BaseMorphism> entries;
    bool operator==(const Morphism&) const = default;
    bool operator<(const Morphism& o) const {
      return std::tie(source, target, entries) < std::tie(o.source, o.target, o.entries);
    }
    bool operator>(const Morphism& o) const { return o < *this; }
    bool operator<=(const Morphism& o) const { return !(o < *this); }
    bool operator>=(const Morphism& o) const { return !(*this < o); }
  };

  StarCategory(A base, BiSet index) : s_(std::make_shared<const State>(State{std::move(base), std::move(index)})) {
    if (!(s_->index.leftGroup() == s_->base.group()))
      throw MismatchError("star construction: the biset's left group is not the group acting on the category");
  }
  /// A *_G T for a left G-set T; the result carries the trivial action.
  static StarCategory overSet(A base, const GSet& t) { return StarCategory(std::move(base), BiSet::fromLeftSet(t)); }

  const A& base() const { return s_->base; }
  const BiSet& index() const { return s_->index; }
  const FiniteGroup& group() const { return s_->index.rightGroup(); }
  const FiniteGroup& baseGroup() const { return s_->base.group(); }

  /// The object with a single nonzero entry x at s.
  Object at(Point s, const BaseObject& x) const {
    Object o;
    if (!base().isZeroObject(x)) o.entries.emplace(s, x);
    return o;
  }
  Object object(std::map<Point, BaseObject> entries) const {
    Object o;
    for (auto& [s, x] : entries) {
      if (s >= index().size()) throw Error("star construction: point out of range");
      if (!base().isZeroObject(x)) o.entries.emplace(s, std::move(x));
    }
    return o;
  }
  /// Entry at s (the zero object off the support).
  BaseObject entry(const Object& x, Point s) const {
    auto it = x.entries.find(s);
    return it == x.entries.end() ? base().zeroObject() : it->second;
  }
  /// Component phi_{k,s} (zero when not stored).
  BaseMorphism component(const Morphism& f, GroupElem k, Point s) const {
    auto it = f.entries.find({k, s});
    if (it != f.entries.end()) return it->second;
    return base().zeroMorphism(entry(f.source, s), base().act(k, entry(f.target, index().left(k, s))));
  }
  /// Builds a morphism from components, checking each has the required
  /// source A_s and target k^*(B_{ks}).
  Morphism morphism(const Object& src, const Object& tgt, std::map<Key, BaseMorphism> entries) const {
    Morphism m{src, tgt, {}};
    for (auto& [key, f] : entries) {
      const auto [k, s] = key;
      if (!(base().source(f) == entry(src, s)) ||
          !(base().target(f) == base().act(k, entry(tgt, index().left(k, s)))))
        throw MismatchError("star construction: component has the wrong source or target");
      if (!base().isZero(f)) m.entries.emplace(key, std::move(f));
    }
    return m;
  }

  Object zeroObject() const { return Object{}; }
  bool isZeroObject(const Object& x) const { return x.entries.empty(); }
  std::uint64_t rank(const Object& x) const {
    std::uint64_t r = 0;
    for (const auto& [s, v] : x.entries) r += base().rank(v);
    return r;
  }
  Morphism identity(const Object& x) const {
    Morphism m{x, x, {}};
    const GroupElem e = baseGroup().identity();
    for (const auto& [s, v] : x.entries) {
      auto id = base().identity(v);
      if (!base().isZero(id)) m.entries.emplace(Key{e, s}, std::move(id));
    }
    return m;
  }
  Morphism zeroMorphism(const Object& x, const Object& y) const { return Morphism{x, y, {}}; }
  const Object& source(const Morphism& f) const { return f.source; }
  const Object& target(const Morphism& f) const { return f.target; }

  Morphism compose(const Morphism& psi, const Morphism& phi) const {
    if (!(phi.target == psi.source)) throw MismatchError("star construction: morphisms are not composable");
    const A& a = base();
    const FiniteGroup& k = baseGroup();
    std::multimap<Point, std::pair<GroupElem, const BaseMorphism*>> byPoint;
    for (const auto& [key, f] : psi.entries) byPoint.emplace(key.second, std::make_pair(key.first, &f));
    std::map<Key, BaseMorphism> acc;
    for (const auto& [key, f] : phi.entries) {
      const auto [h, t] = key;
      const Point ht = index().left(h, t);
      auto [lo, hi] = byPoint.equal_range(ht);
      for (auto it = lo; it != hi; ++it) {
        const GroupElem kk = it->second.first;
        auto term = a.compose(a.act(h, *it->second.second), f);
        const Key out{k.mul(kk, h), t};
        auto found = acc.find(out);
        if (found == acc.end())
          acc.emplace(out, std::move(term));
        else
          found->second = a.add(found->second, term);
      }
    }
    Morphism m{phi.source, psi.target, {}};
    for (auto& [key, f] : acc)
      if (!a.isZero(f)) m.entries.emplace(key, std::move(f));
    return m;
  }

  Morphism add(const Morphism& f, const Morphism& g) const {
    if (!(f.source == g.source) || !(f.target == g.target))
      throw MismatchError("star construction: adding non-parallel morphisms");
    Morphism m = f;
    for (const auto& [key, v] : g.entries) {
      auto it = m.entries.find(key);
      if (it == m.entries.end()) {
        m.entries.emplace(key, v);
      } else {
        it->second = base().add(it->second, v);
        if (base().isZero(it->second)) m.entries.erase(it);
      }
    }
    return m;
  }
  Morphism negate(const Morphism& f) const {
    Morphism m{f.source, f.target, {}};
    for (const auto& [key, v] : f.entries) m.entries.emplace(key, base().negate(v));
    return m;
  }
  bool isZero(const Morphism& f) const { return f.entries.empty(); }

  /// The components of Hom(x, y) in enumeration order: one slot per (s, k)
  /// with s in the support of x and B_{ks} nonzero.
  struct Slot {
    GroupElem k;
    Point s;
    BaseObject from;
    BaseObject to;
    std::uint64_t size;
  };
  std::vector<Slot> slots(const Object& x, const Object& y) const {
    std::vector<Slot> out;
    for (const auto& [s, v] : x.entries)
      for (GroupElem k = 0; k < baseGroup().order(); ++k) {
        auto it = y.entries.find(index().left(k, s));
        if (it == y.entries.end()) continue;
        auto to = base().act(k, it->second);
        const auto n = base().homSize(v, to);
        out.push_back(Slot{k, s, v, std::move(to), n});
      }
    return out;
  }
  std::uint64_t homSize(const Object& x, const Object& y) const {
    std::uint64_t n = 1;
    for (const auto& sl : slots(x, y)) n = saturatingMul(n, sl.size);
    return n;
  }
  /// Mixed-radix decoding over slots(); for saturated hom sizes only the low
  /// digits are reachable.
  Morphism homElement(const Object& x, const Object& y, std::uint64_t index) const {
    Morphism m{x, y, {}};
    for (const auto& sl : slots(x, y)) {
      const std::uint64_t d = index % sl.size;
      index /= sl.size;
      auto f = base().homElement(sl.from, sl.to, d);
      if (!base().isZero(f)) m.entries.emplace(Key{sl.k, sl.s}, std::move(f));
    }
    return m;
  }

  Biproduct<Object, Morphism> biproduct(std::span<const Object> xs) const {
    std::set<Point> support;
    for (const auto& x : xs)
      for (const auto& [s, v] : x.entries) support.insert(s);
    Biproduct<Object, Morphism> out;
    out.injections.resize(xs.size());
    out.projections.resize(xs.size());
    std::map<Point, Biproduct<BaseObject, BaseMorphism>> local;
    for (Point s : support) {
      std::vector<BaseObject> parts;
      for (const auto& x : xs) parts.push_back(entry(x, s));
      auto bp = base().biproduct(std::span<const BaseObject>(parts));
      if (!base().isZeroObject(bp.object)) out.object.entries.emplace(s, bp.object);
      local.emplace(s, std::move(bp));
    }
    const GroupElem e = baseGroup().identity();
    for (std::size_t j = 0; j < xs.size(); ++j) {
      out.injections[j] = Morphism{xs[j], out.object, {}};
      out.projections[j] = Morphism{out.object, xs[j], {}};
      for (auto& [s, bp] : local) {
        if (!base().isZero(bp.injections[j])) out.injections[j].entries.emplace(Key{e, s}, bp.injections[j]);
        if (!base().isZero(bp.projections[j])) out.projections[j].entries.emplace(Key{e, s}, bp.projections[j]);
      }
    }
    return out;
  }

  /// Objects of total rank at most maxRank built from nonzero base objects.
  std::vector<Object> objects(std::uint32_t maxRank) const {
    std::vector<BaseObject> pieces;
    for (auto& x : base().objects(maxRank))
      if (!base().isZeroObject(x)) pieces.push_back(std::move(x));
    std::vector<Object> out;
    Object current;
    enumerate(0, maxRank, pieces, current, out);
    return out;
  }

  Object act(GroupElem g, const Object& x) const {
    Object y;
    for (const auto& [s, v] : x.entries) y.entries.emplace(index().right(s, g), v);
    return y;
  }
  Morphism act(GroupElem g, const Morphism& f) const {
    Morphism m{act(g, f.source), act(g, f.target), {}};
    for (const auto& [key, v] : f.entries) m.entries.emplace(Key{key.first, index().right(key.second, g)}, v);
    return m;
  }

  Json toJson(const Object& x) const {
    Json j = Json::object();
    for (const auto& [s, v] : x.entries) j[index().pointName(s)] = base().toJson(v);
    return j;
  }
  Json toJson(const Morphism& f) const {
    Json comps = Json::array();
    for (const auto& [key, v] : f.entries)
      comps.push_back(Json{{"k", baseGroup().elementName(key.first)}, {"s", index().pointName(key.second)},
                           {"value", base().toJson(v)}});
    return Json{{"source", toJson(f.source)}, {"target", toJson(f.target)}, {"components", comps}};
  }

 private:
  struct State {
    A base;
    BiSet index;
  };

  void enumerate(Point s, std::uint64_t budget, const std::vector<BaseObject>& pieces, Object& current,
                 std::vector<Object>& out) const {
    if (s == index().size()) {
      out.push_back(current);
      return;
    }
    enumerate(s + 1, budget, pieces, current, out);
    for (const auto& p : pieces) {
      const auto r = base().rank(p);
      if (r == 0 || r > budget) continue;
      current.entries[s] = p;
      enumerate(s + 1, budget - r, pieces, current, out);
      current.entries.erase(s);
    }
  }

  std::shared_ptr<const State> s_;
};

}  // namespace coeffcat
