#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "coeffcat/controlled/support.hpp"
#include "coeffcat/gcat/category.hpp"

namespace coeffcat {

/// C(X; E, F; A) for a finite free G-set X and G-invariant support conditions.
/// An object is a family (A_x) supported in a member of F; a morphism A -> B
/// is a family phi_{y,x}: A_x -> B_y supported in a member of E. Zero entries
/// are not stored. Composition (phi' o phi)_{z,x} = sum_y phi'_{z,y} o phi_{y,x};
/// G acts by (g^*A)_x = g^*(A_{gx}) and (g^*phi)_{y,x} = g^*(phi_{gy,gx}).
template <GCategory A>
class ControlledCategory {
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
  using Key = std::pair<Point, Point>;  // (y, x): the entry A_x -> B_y
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

  ControlledCategory(A base, GSet space, MorphismSupport e, ObjectSupport f)
      : s_(std::make_shared<const State>(State{std::move(base), std::move(space), std::move(e), std::move(f)})) {
    const GSet& x = s_->space;
    if (!(x.group() == s_->base.group())) throw MismatchError("controlled category: space and category over different groups");
    if (!x.isFree()) throw Error("controlled category: the space must be a free G-set");
    if (s_->morphisms.spaceSize() != x.size() || s_->objects.spaceSize() != x.size())
      throw MismatchError("controlled category: support conditions over a space of another size");
    if (!s_->morphisms.isInvariant(x) || !s_->objects.isInvariant(x))
      throw Error("controlled category: support conditions must be G-invariant for the action to exist");
  }
  /// No control: every support is allowed.
  static ControlledCategory uncontrolled(A base, GSet space) {
    const auto n = space.size();
    return ControlledCategory(std::move(base), std::move(space), MorphismSupport::everything(n),
                              ObjectSupport::everything(n));
  }

  const A& base() const { return s_->base; }
  const GSet& space() const { return s_->space; }
  const FiniteGroup& group() const { return s_->space.group(); }
  const MorphismSupport& morphismSupport() const { return s_->morphisms; }
  const ObjectSupport& objectSupport() const { return s_->objects; }

  Object object(std::map<Point, BaseObject> entries) const {
    Object x;
    for (auto& [p, v] : entries) {
      if (p >= space().size()) throw Error("controlled category: point out of range");
      if (!base().isZeroObject(v)) x.entries.emplace(p, std::move(v));
    }
    if (!objectSupport().admits(support(x)))
      throw AxiomViolation("controlled category: object violates the object support condition", toJson(x));
    return x;
  }
  /// Validates the entry types and the support condition.
  Morphism morphism(const Object& src, const Object& tgt, std::map<Key, BaseMorphism> entries) const {
    Morphism m{src, tgt, {}};
    for (auto& [key, f] : entries) {
      const auto [y, x] = key;
      if (!(base().source(f) == entry(src, x)) || !(base().target(f) == entry(tgt, y)))
        throw MismatchError("controlled category: entry (" + std::to_string(y) + ", " + std::to_string(x) +
                            ") has the wrong source or target");
      if (!base().isZero(f)) m.entries.emplace(key, std::move(f));
    }
    if (!morphismSupport().admits(support(m)))
      throw AxiomViolation("controlled category: morphism violates the morphism support condition", toJson(m));
    return m;
  }

  BaseObject entry(const Object& x, Point p) const {
    auto it = x.entries.find(p);
    return it == x.entries.end() ? base().zeroObject() : it->second;
  }
  BaseMorphism component(const Morphism& f, Point y, Point x) const {
    auto it = f.entries.find(Key{y, x});
    return it == f.entries.end() ? base().zeroMorphism(entry(f.source, x), entry(f.target, y)) : it->second;
  }
  PointSet support(const Object& x) const {
    PointSet s;
    for (const auto& [p, v] : x.entries) s.insert(p);
    return s;
  }
  Relation support(const Morphism& f) const {
    Relation r;
    for (const auto& [key, v] : f.entries) r.emplace(key.second, key.first);
    return r;
  }

  Object zeroObject() const { return Object{}; }
  bool isZeroObject(const Object& x) const { return x.entries.empty(); }
  std::uint64_t rank(const Object& x) const {
    std::uint64_t r = 0;
    for (const auto& [p, v] : x.entries) r += base().rank(v);
    return r;
  }
  Morphism identity(const Object& x) const {
    Morphism m{x, x, {}};
    for (const auto& [p, v] : x.entries) {
      auto id = base().identity(v);
      if (!base().isZero(id)) m.entries.emplace(Key{p, p}, std::move(id));
    }
    return m;
  }
  Morphism zeroMorphism(const Object& x, const Object& y) const { return Morphism{x, y, {}}; }
  const Object& source(const Morphism& f) const { return f.source; }
  const Object& target(const Morphism& f) const { return f.target; }

  Morphism compose(const Morphism& psi, const Morphism& phi) const {
    if (!(phi.target == psi.source)) throw MismatchError("controlled category: morphisms are not composable");
    std::multimap<Point, std::pair<Point, const BaseMorphism*>> bySource;  // y -> (z, psi_{z,y})
    for (const auto& [key, f] : psi.entries) bySource.emplace(key.second, std::make_pair(key.first, &f));
    std::map<Key, BaseMorphism> acc;
    for (const auto& [key, f] : phi.entries) {
      const auto [y, x] = key;
      auto [lo, hi] = bySource.equal_range(y);
      for (auto it = lo; it != hi; ++it) {
        auto term = base().compose(*it->second.second, f);
        const Key out{it->second.first, x};
        auto found = acc.find(out);
        if (found == acc.end())
          acc.emplace(out, std::move(term));
        else
          found->second = base().add(found->second, term);
      }
    }
    Morphism m{phi.source, psi.target, {}};
    for (auto& [key, f] : acc)
      if (!base().isZero(f)) m.entries.emplace(key, std::move(f));
    return m;
  }

  Morphism add(const Morphism& f, const Morphism& g) const {
    if (!(f.source == g.source) || !(f.target == g.target))
      throw MismatchError("controlled category: adding non-parallel morphisms");
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

  /// One slot per allowed pair (x, y) with x in supp A and y in supp B.
  struct Slot {
    Point y;
    Point x;
    std::uint64_t size;
  };
  std::vector<Slot> slots(const Object& a, const Object& b) const {
    std::vector<Slot> out;
    for (const auto& [x, u] : a.entries)
      for (const auto& [y, v] : b.entries)
        if (morphismSupport().allows(x, y)) out.push_back(Slot{y, x, base().homSize(u, v)});
    return out;
  }
  std::uint64_t homSize(const Object& a, const Object& b) const {
    std::uint64_t n = 1;
    for (const auto& sl : slots(a, b)) n = saturatingMul(n, sl.size);
    return n;
  }
  Morphism homElement(const Object& a, const Object& b, std::uint64_t index) const {
    Morphism m{a, b, {}};
    for (const auto& sl : slots(a, b)) {
      const std::uint64_t d = index % sl.size;
      index /= sl.size;
      auto f = base().homElement(a.entries.at(sl.x), b.entries.at(sl.y), d);
      if (!base().isZero(f)) m.entries.emplace(Key{sl.y, sl.x}, std::move(f));
    }
    return m;
  }

  Biproduct<Object, Morphism> biproduct(std::span<const Object> xs) const {
    PointSet supp;
    for (const auto& x : xs)
      for (const auto& [p, v] : x.entries) supp.insert(p);
    Biproduct<Object, Morphism> out;
    out.injections.resize(xs.size());
    out.projections.resize(xs.size());
    std::map<Point, Biproduct<BaseObject, BaseMorphism>> local;
    for (Point p : supp) {
      std::vector<BaseObject> parts;
      for (const auto& x : xs) parts.push_back(entry(x, p));
      auto bp = base().biproduct(std::span<const BaseObject>(parts));
      if (!base().isZeroObject(bp.object)) out.object.entries.emplace(p, bp.object);
      local.emplace(p, std::move(bp));
    }
    for (std::size_t j = 0; j < xs.size(); ++j) {
      out.injections[j] = Morphism{xs[j], out.object, {}};
      out.projections[j] = Morphism{out.object, xs[j], {}};
      for (auto& [p, bp] : local) {
        if (!base().isZero(bp.injections[j])) out.injections[j].entries.emplace(Key{p, p}, bp.injections[j]);
        if (!base().isZero(bp.projections[j])) out.projections[j].entries.emplace(Key{p, p}, bp.projections[j]);
      }
    }
    return out;
  }

  /// Objects of total rank at most maxRank on the points the object
  /// condition allows.
  std::vector<Object> objects(std::uint32_t maxRank) const {
    std::vector<BaseObject> pieces;
    for (auto& x : base().objects(maxRank))
      if (!base().isZeroObject(x)) pieces.push_back(std::move(x));
    std::vector<Point> points;
    for (Point p = 0; p < space().size(); ++p)
      if (objectSupport().allows(p)) points.push_back(p);
    std::vector<Object> out;
    Object current;
    enumerate(points, 0, maxRank, pieces, current, out);
    return out;
  }

  Object act(GroupElem g, const Object& x) const {
    const GroupElem gi = group().inv(g);
    Object y;
    for (const auto& [p, v] : x.entries) y.entries.emplace(space().act(gi, p), base().act(g, v));
    return y;
  }
  Morphism act(GroupElem g, const Morphism& f) const {
    const GroupElem gi = group().inv(g);
    Morphism m{act(g, f.source), act(g, f.target), {}};
    for (const auto& [key, v] : f.entries)
      m.entries.emplace(Key{space().act(gi, key.first), space().act(gi, key.second)}, base().act(g, v));
    return m;
  }

  Json toJson(const Object& x) const {
    Json j = Json::object();
    for (const auto& [p, v] : x.entries) j[space().pointName(p)] = base().toJson(v);
    return j;
  }
  Json toJson(const Morphism& f) const {
    Json comps = Json::array();
    for (const auto& [key, v] : f.entries)
      comps.push_back(Json{{"y", space().pointName(key.first)}, {"x", space().pointName(key.second)},
                           {"value", base().toJson(v)}});
    return Json{{"source", toJson(f.source)}, {"target", toJson(f.target)}, {"entries", comps}};
  }

 private:
  struct State {
    A base;
    GSet space;
    MorphismSupport morphisms;
    ObjectSupport objects;
  };

  void enumerate(const std::vector<Point>& points, std::size_t i, std::uint64_t budget,
                 const std::vector<BaseObject>& pieces, Object& current, std::vector<Object>& out) const {
    if (i == points.size()) {
      if (objectSupport().admits(support(current))) out.push_back(current);
      return;
    }
    enumerate(points, i + 1, budget, pieces, current, out);
    for (const auto& p : pieces) {
      const auto r = base().rank(p);
      if (r == 0 || r > budget) continue;
      current.entries[points[i]] = p;
      enumerate(points, i + 1, budget - r, pieces, current, out);
      current.entries.erase(points[i]);
    }
  }

  std::shared_ptr<const State> s_;
};

/// The fixed category C^G(X; E, F; A): objects and morphisms of the controlled
/// category with A_x = g^*(A_{gx}) and phi_{y,x} = g^*(phi_{gy,gx}). Since X is
/// free, such a value is determined by its entries at one representative per
/// orbit (for objects) or at pairs (y, x0) with x0 a representative (for
/// morphisms); homs are enumerated and objects built that way. The rank of
/// an object is the sum of its ranks at the representatives.
template <GCategory A>
class FixedControlledCategory {
 public:
  using Controlled = ControlledCategory<A>;
  using Object = typename Controlled::Object;
  using Morphism = typename Controlled::Morphism;
  using Key = typename Controlled::Key;
  using BaseObject = ObjectOf<A>;
  using BaseMorphism = MorphismOf<A>;

  explicit FixedControlledCategory(Controlled ambient) {
    State st{std::move(ambient), {}, {}, {}};
    const GSet& x = st.ambient.space();
    const FiniteGroup& g = x.group();
    st.rep.assign(x.size(), 0);
    st.mover.assign(x.size(), 0);
    for (const auto& orbit : x.orbits()) {
      const Point r = *std::min_element(orbit.begin(), orbit.end());
      st.reps.push_back(r);
      for (GroupElem h = 0; h < g.order(); ++h) {
        const Point p = x.act(h, r);
        st.rep[p] = r;
        st.mover[p] = h;
      }
    }
    std::sort(st.reps.begin(), st.reps.end());
    s_ = std::make_shared<const State>(std::move(st));
  }

  const Controlled& ambient() const { return s_->ambient; }
  const A& base() const { return ambient().base(); }
  const GSet& space() const { return ambient().space(); }
  const std::vector<Point>& representatives() const { return s_->reps; }
  /// The representative x0 of the orbit of p.
  Point representative(Point p) const { return s_->rep[p]; }
  /// The unique h with p = h x0.
  GroupElem mover(Point p) const { return s_->mover[p]; }

  /// A_{h x0} = (h^-1)^*(A_{x0}) from values at representatives.
  Object fromRepresentatives(const std::map<Point, BaseObject>& values) const {
    const FiniteGroup& g = space().group();
    std::map<Point, BaseObject> entries;
    for (const auto& [r, v] : values) {
      if (representative(r) != r) throw Error("fixed category: " + space().pointName(r) + " is not a representative");
      if (base().isZeroObject(v)) continue;
      for (GroupElem h = 0; h < g.order(); ++h) entries.emplace(space().act(h, r), base().act(g.inv(h), v));
    }
    return ambient().object(std::move(entries));
  }
  /// phi_{hy, hx0} = (h^-1)^*(phi_{y,x0}) from the entries at pairs (y, x0).
  Morphism fromRepresentatives(const Object& src, const Object& tgt,
                               const std::map<Key, BaseMorphism>& values) const {
    const FiniteGroup& g = space().group();
    std::map<Key, BaseMorphism> entries;
    for (const auto& [key, f] : values) {
      const auto [y, r] = key;
      if (representative(r) != r) throw Error("fixed category: " + space().pointName(r) + " is not a representative");
      for (GroupElem h = 0; h < g.order(); ++h)
        entries.emplace(Key{space().act(h, y), space().act(h, r)}, base().act(g.inv(h), f));
    }
    return ambient().morphism(src, tgt, std::move(entries));
  }

  /// The first (g, x) with A_x != g^*(A_{gx}), if any.
  std::optional<Json> fixedPointDefect(const Object& x) const {
    const FiniteGroup& g = space().group();
    for (GroupElem a = 0; a < g.order(); ++a)
      for (Point p = 0; p < space().size(); ++p)
        if (!(ambient().entry(x, p) == base().act(a, ambient().entry(x, space().act(a, p)))))
          return Json{{"g", g.elementName(a)}, {"x", space().pointName(p)}};
    return std::nullopt;
  }
  std::optional<Json> fixedPointDefect(const Morphism& f) const {
    if (auto d = fixedPointDefect(f.source)) return Json{{"source", *d}};
    if (auto d = fixedPointDefect(f.target)) return Json{{"target", *d}};
    const FiniteGroup& g = space().group();
    for (GroupElem a = 0; a < g.order(); ++a)
      for (Point x = 0; x < space().size(); ++x)
        for (Point y = 0; y < space().size(); ++y)
          if (!(ambient().component(f, y, x) ==
                base().act(a, ambient().component(f, space().act(a, y), space().act(a, x)))))
            return Json{{"g", g.elementName(a)}, {"y", space().pointName(y)}, {"x", space().pointName(x)}};
    return std::nullopt;
  }

  Object zeroObject() const { return Object{}; }
  bool isZeroObject(const Object& x) const { return x.entries.empty(); }
  std::uint64_t rank(const Object& x) const {
    std::uint64_t r = 0;
    for (Point p : representatives()) r += base().rank(ambient().entry(x, p));
    return r;
  }
  Morphism identity(const Object& x) const { return ambient().identity(x); }
  Morphism zeroMorphism(const Object& x, const Object& y) const { return ambient().zeroMorphism(x, y); }
  const Object& source(const Morphism& f) const { return f.source; }
  const Object& target(const Morphism& f) const { return f.target; }
  Morphism compose(const Morphism& g, const Morphism& f) const { return ambient().compose(g, f); }
  Morphism add(const Morphism& f, const Morphism& g) const { return ambient().add(f, g); }
  Morphism negate(const Morphism& f) const { return ambient().negate(f); }
  bool isZero(const Morphism& f) const { return f.entries.empty(); }

  struct Slot {
    Point y;
    Point x0;
    std::uint64_t size;
  };
  std::vector<Slot> slots(const Object& a, const Object& b) const {
    std::vector<Slot> out;
    for (Point x0 : representatives()) {
      auto u = a.entries.find(x0);
      if (u == a.entries.end()) continue;
      for (const auto& [y, v] : b.entries)
        if (ambient().morphismSupport().allows(x0, y)) out.push_back(Slot{y, x0, base().homSize(u->second, v)});
    }
    return out;
  }
  std::uint64_t homSize(const Object& a, const Object& b) const {
    std::uint64_t n = 1;
    for (const auto& sl : slots(a, b)) n = saturatingMul(n, sl.size);
    return n;
  }
  Morphism homElement(const Object& a, const Object& b, std::uint64_t index) const {
    std::map<Key, BaseMorphism> values;
    for (const auto& sl : slots(a, b)) {
      const std::uint64_t d = index % sl.size;
      index /= sl.size;
      auto f = base().homElement(a.entries.at(sl.x0), b.entries.at(sl.y), d);
      if (!base().isZero(f)) values.emplace(Key{sl.y, sl.x0}, std::move(f));
    }
    return fromRepresentatives(a, b, values);
  }

  Biproduct<Object, Morphism> biproduct(std::span<const Object> xs) const {
    std::map<Point, Biproduct<BaseObject, BaseMorphism>> local;
    std::map<Point, BaseObject> values;
    for (Point r : representatives()) {
      std::vector<BaseObject> parts;
      for (const auto& x : xs) parts.push_back(ambient().entry(x, r));
      auto bp = base().biproduct(std::span<const BaseObject>(parts));
      values.emplace(r, bp.object);
      local.emplace(r, std::move(bp));
    }
    Biproduct<Object, Morphism> out;
    out.object = fromRepresentatives(values);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      std::map<Key, BaseMorphism> inj, proj;
      for (auto& [r, bp] : local) {
        if (!base().isZero(bp.injections[j])) inj.emplace(Key{r, r}, bp.injections[j]);
        if (!base().isZero(bp.projections[j])) proj.emplace(Key{r, r}, bp.projections[j]);
      }
      out.injections.push_back(fromRepresentatives(xs[j], out.object, inj));
      out.projections.push_back(fromRepresentatives(out.object, xs[j], proj));
    }
    return out;
  }

  std::vector<Object> objects(std::uint32_t maxRank) const {
    std::vector<BaseObject> pieces;
    for (auto& x : base().objects(maxRank))
      if (!base().isZeroObject(x)) pieces.push_back(std::move(x));
    std::vector<Object> out;
    std::map<Point, BaseObject> current;
    enumerate(0, maxRank, pieces, current, out);
    return out;
  }

  Json toJson(const Object& x) const { return ambient().toJson(x); }
  Json toJson(const Morphism& f) const { return ambient().toJson(f); }

 private:
  struct State {
    Controlled ambient;
    std::vector<Point> reps;
    std::vector<Point> rep;
    std::vector<GroupElem> mover;
  };

  void enumerate(std::size_t i, std::uint64_t budget, const std::vector<BaseObject>& pieces,
                 std::map<Point, BaseObject>& current, std::vector<Object>& out) const {
    if (i == representatives().size()) {
      try {
        out.push_back(fromRepresentatives(current));
      } catch (const AxiomViolation&) {
        // outside the object support condition
      }
      return;
    }
    enumerate(i + 1, budget, pieces, current, out);
    const Point r = representatives()[i];
    for (const auto& p : pieces) {
      const auto rk = base().rank(p);
      if (rk == 0 || rk > budget) continue;
      current[r] = p;
      enumerate(i + 1, budget - rk, pieces, current, out);
      current.erase(r);
    }
  }

  std::shared_ptr<const State> s_;
};

/// The functor C(X; A) -> C(X'; A) induced by an equivariant f: X -> X'. On
/// objects (f_*A)_{x'} is the biproduct of A_x over the fiber f^-1(x') in
/// increasing order of x; on morphisms
///   (f_*phi)_{y',x'} = sum i_y o phi_{y,x} o p_x  over x in f^-1(x'), y in f^-1(y').
/// The target's conditions must admit the image supports.
template <GCategory A>
class ControlledPushForward {
 public:
  using Controlled = ControlledCategory<A>;
  using Object = typename Controlled::Object;
  using Morphism = typename Controlled::Morphism;

  ControlledPushForward(Controlled source, Controlled target, std::vector<Point> map)
      : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
    const GSet& s = source_.space();
    const GSet& t = target_.space();
    if (map_.size() != s.size()) throw MismatchError("controlled pushforward: map has the wrong domain");
    fibers_.resize(t.size());
    for (Point p = 0; p < s.size(); ++p) {
      if (map_[p] >= t.size()) throw Error("controlled pushforward: map value out of range");
      fibers_[map_[p]].push_back(p);
      for (GroupElem g = 0; g < s.group().order(); ++g)
        if (map_[s.act(g, p)] != t.act(g, map_[p]))
          throw AxiomViolation("controlled pushforward: map is not equivariant",
                               Json{{"g", s.group().elementName(g)}, {"x", s.pointName(p)}});
    }
  }

  const Controlled& source() const { return source_; }
  const Controlled& target() const { return target_; }
  const std::vector<Point>& fiber(Point q) const { return fibers_[q]; }
  std::size_t position(Point p) const {
    const auto& f = fibers_[map_[p]];
    return static_cast<std::size_t>(std::find(f.begin(), f.end(), p) - f.begin());
  }

  Biproduct<ObjectOf<A>, MorphismOf<A>> local(const Object& x, Point q) const {
    std::vector<ObjectOf<A>> parts;
    for (Point p : fibers_[q]) parts.push_back(source_.entry(x, p));
    return source_.base().biproduct(std::span<const ObjectOf<A>>(parts));
  }

  Object operator()(const Object& x) const {
    std::map<Point, ObjectOf<A>> entries;
    std::set<Point> touched;
    for (const auto& [p, v] : x.entries) touched.insert(map_[p]);
    for (Point q : touched) entries.emplace(q, local(x, q).object);
    return target_.object(std::move(entries));
  }

  Morphism operator()(const Morphism& phi) const {
    const A& a = source_.base();
    std::map<Point, Biproduct<ObjectOf<A>, MorphismOf<A>>> src, tgt;
    auto cached = [&](auto& cache, const Object& x, Point q) -> const Biproduct<ObjectOf<A>, MorphismOf<A>>& {
      auto it = cache.find(q);
      if (it == cache.end()) it = cache.emplace(q, local(x, q)).first;
      return it->second;
    };
    std::map<typename Controlled::Key, MorphismOf<A>> acc;
    for (const auto& [key, f] : phi.entries) {
      const auto [y, x] = key;
      const auto& from = cached(src, phi.source, map_[x]);
      const auto& to = cached(tgt, phi.target, map_[y]);
      auto term = a.compose(to.injections[position(y)], a.compose(f, from.projections[position(x)]));
      const typename Controlled::Key out{map_[y], map_[x]};
      auto it = acc.find(out);
      if (it == acc.end())
        acc.emplace(out, std::move(term));
      else
        it->second = a.add(it->second, term);
    }
    return target_.morphism((*this)(phi.source), (*this)(phi.target), std::move(acc));
  }

 private:
  Controlled source_;
  Controlled target_;
  std::vector<Point> map_;
  std::vector<std::vector<Point>> fibers_;
};

}  // namespace coeffcat
