#include "coeffcat/groups/gset.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace coeffcat {

GSet::GSet(FiniteGroup g, std::uint32_t n, std::vector<Point> action, std::vector<std::string> names)
    : group_(std::move(g)), n_(n), action_(std::move(action)), names_(std::move(names)) {
  if (action_.size() != std::size_t{group_.order()} * n_) throw Error("G-set action table has the wrong size");
  for (auto p : action_)
    if (p >= n_) throw Error("G-set action value out of range");
  if (names_.empty())
    for (Point t = 0; t < n_; ++t) names_.push_back("t" + std::to_string(t));
  if (names_.size() != n_) throw Error("G-set point name list has the wrong length");
  for (Point t = 0; t < n_; ++t) {
    if (act(group_.identity(), t) != t)
      throw AxiomViolation("identity does not act trivially", Json{{"point", names_[t]}});
    for (GroupElem g = 0; g < group_.order(); ++g)
      for (GroupElem h = 0; h < group_.order(); ++h)
        if (act(g, act(h, t)) != act(group_.mul(g, h), t))
          throw AxiomViolation("action is not compatible with multiplication",
                               Json{{"g", group_.elementName(g)}, {"h", group_.elementName(h)}, {"point", names_[t]}});
  }
}

GSet GSet::fromTable(FiniteGroup group, std::uint32_t n, std::vector<Point> action, std::vector<std::string> names) {
  return GSet(std::move(group), n, std::move(action), std::move(names));
}

GSet GSet::fromFunction(FiniteGroup group, std::uint32_t n, const std::function<Point(GroupElem, Point)>& act,
                        std::vector<std::string> names) {
  std::vector<Point> table(std::size_t{group.order()} * n);
  for (GroupElem g = 0; g < group.order(); ++g)
    for (Point t = 0; t < n; ++t) table[g * n + t] = act(g, t);
  return GSet(std::move(group), n, std::move(table), std::move(names));
}

GSet GSet::point(const FiniteGroup& g) {
  return fromFunction(g, 1, [](GroupElem, Point) { return Point{0}; }, {"pt"});
}

GSet GSet::regular(const FiniteGroup& g) {
  std::vector<std::string> names;
  for (GroupElem x = 0; x < g.order(); ++x) names.push_back(g.elementName(x));
  return fromFunction(g, g.order(), [&](GroupElem a, Point t) { return g.mul(a, t); }, std::move(names));
}

GSet GSet::cosets(const FiniteGroup& g, const Subgroup& h) {
  if (!g.isSubgroup(h)) throw Error("coset set of a non-subgroup");
  std::vector<Point> cosetOf(g.order(), g.order());
  std::vector<GroupElem> reps;
  for (GroupElem a = 0; a < g.order(); ++a) {
    if (cosetOf[a] != g.order()) continue;
    for (auto x : h) cosetOf[g.mul(a, x)] = static_cast<Point>(reps.size());
    reps.push_back(a);
  }
  std::vector<std::string> names;
  for (auto r : reps) names.push_back(g.elementName(r) + "H");
  return fromFunction(g, static_cast<std::uint32_t>(reps.size()),
                      [&](GroupElem a, Point c) { return cosetOf[g.mul(a, reps[c])]; }, std::move(names));
}

GSet GSet::disjointUnion(const GSet& a, const GSet& b) {
  if (!(a.group() == b.group())) throw MismatchError("disjoint union over different groups");
  std::vector<std::string> names;
  for (Point t = 0; t < a.size(); ++t) names.push_back("L" + a.pointName(t));
  for (Point t = 0; t < b.size(); ++t) names.push_back("R" + b.pointName(t));
  return fromFunction(a.group(), a.size() + b.size(),
                      [&](GroupElem g, Point t) { return t < a.size() ? a.act(g, t) : a.size() + b.act(g, t - a.size()); },
                      std::move(names));
}

GSet GSet::restrict(const GSet& t, const GroupHom& phi) {
  if (!(phi.target() == t.group())) throw MismatchError("restriction along a homomorphism with the wrong target");
  return fromFunction(phi.source(), t.size(), [&](GroupElem k, Point p) { return t.act(phi(k), p); }, t.names_);
}

std::vector<GSet> GSet::allUpTo(const FiniteGroup& g, std::uint32_t maxSize) {
  // Conjugacy class representatives of subgroups of index <= maxSize.
  std::vector<Subgroup> reps;
  std::set<Subgroup> seen;
  for (auto h : g.allSubgroups()) {
    std::sort(h.begin(), h.end());
    if (g.order() / h.size() > maxSize || seen.count(h)) continue;
    reps.push_back(h);
    for (GroupElem a = 0; a < g.order(); ++a) {
      Subgroup c;
      for (auto x : h) c.push_back(g.mul(a, x, g.inv(a)));
      std::sort(c.begin(), c.end());
      seen.insert(std::move(c));
    }
  }
  std::vector<GSet> orbits;
  std::vector<std::uint32_t> sizes;
  for (const auto& h : reps) {
    orbits.push_back(cosets(g, h));
    sizes.push_back(orbits.back().size());
  }
  // Multisets of orbit types, as non-decreasing index sequences.
  std::vector<GSet> out;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t, std::uint32_t)> extend = [&](std::size_t from, std::uint32_t used) {
    if (!pick.empty()) {
      GSet t = orbits[pick[0]];
      for (std::size_t k = 1; k < pick.size(); ++k) t = disjointUnion(t, orbits[pick[k]]);
      out.push_back(std::move(t));
    }
    for (std::size_t i = from; i < orbits.size(); ++i) {
      if (used + sizes[i] > maxSize) continue;
      pick.push_back(i);
      extend(i, used + sizes[i]);
      pick.pop_back();
    }
  };
  extend(0, 0);
  return out;
}

std::vector<std::vector<Point>> GSet::orbits() const {
  std::vector<bool> seen(n_, false);
  std::vector<std::vector<Point>> out;
  for (Point t = 0; t < n_; ++t) {
    if (seen[t]) continue;
    std::vector<Point> orbit;
    for (GroupElem g = 0; g < group_.order(); ++g) {
      Point x = act(g, t);
      if (!seen[x]) {
        seen[x] = true;
        orbit.push_back(x);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

Subgroup GSet::stabilizer(Point t) const {
  Subgroup s;
  for (GroupElem g = 0; g < group_.order(); ++g)
    if (act(g, t) == t) s.push_back(g);
  return s;
}

bool GSet::isFree() const {
  for (Point t = 0; t < n_; ++t)
    if (stabilizer(t).size() != 1) return false;
  return true;
}

bool GSet::isTransitive() const { return orbits().size() == 1; }

bool GSet::operator==(const GSet& other) const {
  return group_ == other.group_ && n_ == other.n_ && action_ == other.action_;
}

Json GSet::toJson() const {
  Json j;
  j["group"] = group_.name();
  j["points"] = names_;
  return j;
}

GSetMap::GSetMap(GSet src, GSet tgt, std::vector<Point> m)
    : source(std::move(src)), target(std::move(tgt)), map(std::move(m)) {
  if (!(source.group() == target.group())) throw MismatchError("G-map between sets over different groups");
  if (map.size() != source.size()) throw Error("G-map table has the wrong length");
  for (auto p : map)
    if (p >= target.size()) throw Error("G-map value out of range");
  const auto& g = source.group();
  for (GroupElem a = 0; a < g.order(); ++a)
    for (Point t = 0; t < source.size(); ++t)
      if (map[source.act(a, t)] != target.act(a, map[t]))
        throw AxiomViolation("map is not equivariant", Json{{"g", g.elementName(a)}, {"point", source.pointName(t)}});
}

GSetMap GSetMap::identity(const GSet& t) {
  std::vector<Point> m(t.size());
  std::iota(m.begin(), m.end(), Point{0});
  return GSetMap(t, t, std::move(m));
}

GSetMap GSetMap::collapse(const GSet& t) {
  return GSetMap(t, GSet::point(t.group()), std::vector<Point>(t.size(), 0));
}

GSetMap GSetMap::compose(const GSetMap& g, const GSetMap& f) {
  if (!(f.target == g.source)) throw MismatchError("G-maps are not composable");
  std::vector<Point> m(f.source.size());
  for (Point t = 0; t < f.source.size(); ++t) m[t] = g.map[f.map[t]];
  return GSetMap(f.source, g.target, std::move(m));
}

std::vector<Point> GSetMap::fiber(Point t) const {
  std::vector<Point> out;
  for (Point s = 0; s < map.size(); ++s)
    if (map[s] == t) out.push_back(s);
  return out;
}

InducedGSet induceGSet(const GroupHom& incl, const GSet& t) {
  if (!incl.isInjective()) throw Error("induction along a non-injective homomorphism");
  if (!(incl.source() == t.group())) throw MismatchError("induced set: H-set over the wrong group");
  const FiniteGroup& g = incl.target();
  const FiniteGroup& h = incl.source();
  const std::uint32_t nt = t.size();
  const std::uint32_t pairs = g.order() * nt;
  // The class of (a, x) is {(a iota(k)^-1, k x) : k in H}; its smallest pair is
  // the canonical representative.
  std::vector<Point> classOf(pairs, pairs);
  InducedGSet out;
  std::vector<std::string> names;
  for (std::uint32_t p = 0; p < pairs; ++p) {
    if (classOf[p] != pairs) continue;
    const GroupElem a = p / nt;
    const Point x = p % nt;
    const auto idx = static_cast<Point>(out.representative.size());
    for (GroupElem k = 0; k < h.order(); ++k) classOf[g.mul(a, g.inv(incl(k))) * nt + t.act(k, x)] = idx;
    out.representative.emplace_back(a, x);
    names.push_back("[" + g.elementName(a) + "," + t.pointName(x) + "]");
  }
  const auto n = static_cast<std::uint32_t>(out.representative.size());
  out.set = GSet::fromFunction(
      g, n,
      [&](GroupElem b, Point c) {
        auto [a, x] = out.representative[c];
        return classOf[g.mul(b, a) * nt + x];
      },
      std::move(names));
  out.unit.resize(nt);
  for (Point x = 0; x < nt; ++x) out.unit[x] = classOf[g.identity() * nt + x];
  return out;
}

QuotientGSet quotientGSet(const GSet& t, const QuotientGroup& q) {
  if (q.projection.size() != t.group().order()) throw MismatchError("quotient group does not match the G-set");
  QuotientGSet out;
  out.projection.assign(t.size(), t.size());
  std::vector<Point> reps;
  std::vector<std::string> names;
  for (Point x = 0; x < t.size(); ++x) {
    if (out.projection[x] != t.size()) continue;
    for (auto n : q.normal) out.projection[t.act(n, x)] = static_cast<Point>(reps.size());
    reps.push_back(x);
    names.push_back("N" + t.pointName(x));
  }
  out.set = GSet::fromFunction(
      q.group, static_cast<std::uint32_t>(reps.size()),
      [&](GroupElem c, Point o) { return out.projection[t.act(q.representative[c], reps[o])]; }, std::move(names));
  return out;
}

BiSet BiSet::fromTables(FiniteGroup left, FiniteGroup right, std::uint32_t n, std::vector<Point> leftAction,
                        std::vector<Point> rightAction, std::vector<std::string> names) {
  GSet l = GSet::fromTable(std::move(left), n, std::move(leftAction), std::move(names));
  if (rightAction.size() != std::size_t{right.order()} * n) throw Error("right action table has the wrong size");
  for (auto p : rightAction)
    if (p >= n) throw Error("right action value out of range");
  auto r = [&](Point s, GroupElem g) { return rightAction[s * right.order() + g]; };
  for (Point s = 0; s < n; ++s) {
    if (r(s, right.identity()) != s)
      throw AxiomViolation("right identity does not act trivially", Json{{"point", l.pointName(s)}});
    for (GroupElem g = 0; g < right.order(); ++g) {
      for (GroupElem h = 0; h < right.order(); ++h)
        if (r(r(s, g), h) != r(s, right.mul(g, h)))
          throw AxiomViolation("right action is not compatible with multiplication",
                               Json{{"g", right.elementName(g)}, {"h", right.elementName(h)}, {"point", l.pointName(s)}});
      for (GroupElem k = 0; k < l.group().order(); ++k)
        if (r(l.act(k, s), g) != l.act(k, r(s, g)))
          throw AxiomViolation("left and right actions do not commute",
                               Json{{"k", l.group().elementName(k)}, {"g", right.elementName(g)}, {"point", l.pointName(s)}});
    }
  }
  return BiSet(std::move(l), std::move(right), std::move(rightAction));
}

BiSet BiSet::fromLeftSet(const GSet& t) {
  std::vector<Point> right(t.size());
  std::iota(right.begin(), right.end(), Point{0});
  return BiSet(t, FiniteGroup::trivial(), std::move(right));
}

BiSet BiSet::regular(const FiniteGroup& g) { return restrictedRegular(GroupHom::identity(g)); }

BiSet BiSet::restrictedRegular(const GroupHom& phi) {
  const FiniteGroup& g = phi.target();
  const FiniteGroup& k = phi.source();
  std::vector<Point> left(std::size_t{k.order()} * g.order()), right(std::size_t{g.order()} * g.order());
  std::vector<std::string> names;
  for (GroupElem s = 0; s < g.order(); ++s) {
    names.push_back(g.elementName(s));
    for (GroupElem a = 0; a < g.order(); ++a) right[s * g.order() + a] = g.mul(s, a);
  }
  for (GroupElem a = 0; a < k.order(); ++a)
    for (GroupElem s = 0; s < g.order(); ++s) left[a * g.order() + s] = g.mul(phi(a), s);
  return fromTables(k, g, g.order(), std::move(left), std::move(right), std::move(names));
}

Json BiSet::toJson() const {
  Json j;
  j["leftGroup"] = leftGroup().name();
  j["rightGroup"] = right_.name();
  j["points"] = left_.toJson()["points"];
  return j;
}

GSet bisetProduct(const BiSet& s, const GSet& t) {
  if (!(s.rightGroup() == t.group())) throw MismatchError("biset product: right group and G-set group differ");
  const FiniteGroup& k = s.leftGroup();
  const FiniteGroup& g = t.group();
  auto kg = FiniteGroup::directProduct(k, g);
  std::vector<std::string> names;
  for (Point a = 0; a < s.size(); ++a)
    for (Point b = 0; b < t.size(); ++b) names.push_back("(" + s.pointName(a) + "," + t.pointName(b) + ")");
  const std::uint32_t nt = t.size();
  return GSet::fromFunction(
      kg, s.size() * nt,
      [&](GroupElem x, Point p) {
        const GroupElem kk = x / g.order(), gg = x % g.order();
        const Point a = p / nt, b = p % nt;
        return s.right(s.left(kk, a), g.inv(gg)) * nt + t.act(gg, b);
      },
      std::move(names));
}

}  // namespace coeffcat
