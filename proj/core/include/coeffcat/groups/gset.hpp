#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "coeffcat/groups/group.hpp"

namespace coeffcat {

using Point = std::uint32_t;

/// A finite left G-set. Points are 0..size()-1 in a fixed total order, which
/// is also the order used for every ordered biproduct over a fiber.
class GSet {
 public:
  /// The one-point set over the trivial group.
  GSet() : GSet(point(FiniteGroup())) {}

  /// action[g * n + t] = g.t; axioms checked exhaustively.
  static GSet fromTable(FiniteGroup group, std::uint32_t n, std::vector<Point> action,
                        std::vector<std::string> names = {});
  static GSet fromFunction(FiniteGroup group, std::uint32_t n, const std::function<Point(GroupElem, Point)>& act,
                           std::vector<std::string> names = {});

  static GSet point(const FiniteGroup& g);
  /// G acting on itself by left multiplication.
  static GSet regular(const FiniteGroup& g);
  /// Left cosets gH, ordered by smallest element.
  static GSet cosets(const FiniteGroup& g, const Subgroup& h);
  static GSet disjointUnion(const GSet& a, const GSet& b);
  /// res_phi T: the K-set with k.t = phi(k).t.
  static GSet restrict(const GSet& t, const GroupHom& phi);
  /// One G-set per isomorphism class with 1..maxSize points: disjoint unions
  /// of coset spaces G/H, H up to conjugacy.
  static std::vector<GSet> allUpTo(const FiniteGroup& g, std::uint32_t maxSize);

  const FiniteGroup& group() const { return group_; }
  std::uint32_t size() const { return n_; }
  Point act(GroupElem g, Point t) const { return action_[g * n_ + t]; }
  const std::string& pointName(Point t) const { return names_.at(t); }

  std::vector<std::vector<Point>> orbits() const;
  Subgroup stabilizer(Point t) const;
  bool isFree() const;
  bool isTransitive() const;

  bool operator==(const GSet& other) const;
  Json toJson() const;

 private:
  GSet(FiniteGroup g, std::uint32_t n, std::vector<Point> action, std::vector<std::string> names);

  FiniteGroup group_;
  std::uint32_t n_ = 0;
  std::vector<Point> action_;
  std::vector<std::string> names_;
};

/// An equivariant map of G-sets, validated on construction.
struct GSetMap {
  GSetMap(GSet source, GSet target, std::vector<Point> map);

  static GSetMap identity(const GSet& t);
  /// The unique map to the one-point set.
  static GSetMap collapse(const GSet& t);
  /// g o f
  static GSetMap compose(const GSetMap& g, const GSetMap& f);

  std::vector<Point> fiber(Point target) const;

  GSet source;
  GSet target;
  std::vector<Point> map;
};

/// G x_H T for a subgroup H with inclusion `incl`, together with the unit map
/// t -> [1, t]. Each class is represented by its smallest pair (g, t).
struct InducedGSet {
  GSet set;
  std::vector<Point> unit;
  std::vector<std::pair<GroupElem, Point>> representative;
};

InducedGSet induceGSet(const GroupHom& incl, const GSet& t);

/// N\T as a G/N-set, with the projection T -> N\T. Orbits are ordered by
/// their smallest point.
struct QuotientGSet {
  GSet set;
  std::vector<Point> projection;
};

QuotientGSet quotientGSet(const GSet& t, const QuotientGroup& q);

/// A set with commuting left K- and right G-actions.
class BiSet {
 public:
  BiSet() : BiSet(fromLeftSet(GSet())) {}

  /// left[k * n + s] = k.s, right[s * |G| + g] = s.g; axioms and
  /// commutation checked exhaustively.
  static BiSet fromTables(FiniteGroup left, FiniteGroup right, std::uint32_t n, std::vector<Point> leftAction,
                          std::vector<Point> rightAction, std::vector<std::string> names = {});
  /// A left K-set viewed as a K-1 biset.
  static BiSet fromLeftSet(const GSet& t);
  /// G with both actions by multiplication.
  static BiSet regular(const FiniteGroup& g);
  /// res_phi G for phi: K -> G: points G, k.s = phi(k)s, s.g = sg.
  static BiSet restrictedRegular(const GroupHom& phi);

  const FiniteGroup& leftGroup() const { return left_.group(); }
  const FiniteGroup& rightGroup() const { return right_; }
  std::uint32_t size() const { return left_.size(); }
  Point left(GroupElem k, Point s) const { return left_.act(k, s); }
  Point right(Point s, GroupElem g) const { return rightAction_[s * right_.order() + g]; }
  const std::string& pointName(Point s) const { return left_.pointName(s); }
  const GSet& leftSet() const { return left_; }

  Json toJson() const;

 private:
  BiSet(GSet left, FiniteGroup right, std::vector<Point> rightAction)
      : left_(std::move(left)), right_(std::move(right)), rightAction_(std::move(rightAction)) {}

  GSet left_;
  FiniteGroup right_;
  std::vector<Point> rightAction_;
};

/// S x T as a (K x G)-set with (k, g)(s, t) = (k s g^-1, g t). Point (s, t)
/// has index s * |T| + t; K x G is FiniteGroup::directProduct(K, G).
GSet bisetProduct(const BiSet& s, const GSet& t);

}  // namespace coeffcat
