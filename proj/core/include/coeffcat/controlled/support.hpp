#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "coeffcat/errors.hpp"
#include "coeffcat/groups/gset.hpp"

namespace coeffcat {

/// Pairs (x, y) with x the source point and y the target point, as in
/// supp phi = {(x, y) | phi_{y,x} != 0}.
using Relation = std::set<std::pair<Point, Point>>;
using PointSet = std::set<Point>;

/// E o E' = {(x, z) | (x, y) in E', (y, z) in E}.
Relation composeRelations(const Relation& e, const Relation& e2);

/// A family of subsets of X x X, listed explicitly. Construction checks that
/// the family contains the diagonal and is closed, up to containment in a
/// member, under union and composition; a failure throws AxiomViolation with
/// the offending pair of members.
class MorphismSupport {
 public:
  static MorphismSupport fromFamily(std::uint32_t spaceSize, std::vector<Relation> members);
  /// The single member generated by `gens` and the diagonal under union and
  /// composition.
  static MorphismSupport generatedBy(std::uint32_t spaceSize, const std::vector<Relation>& gens);
  static MorphismSupport diagonal(std::uint32_t spaceSize);
  static MorphismSupport everything(std::uint32_t spaceSize);
  /// p^-1 E = {p^-1 E' | E' in E} along p: X -> Y, given as the table of p.
  static MorphismSupport pullback(const std::vector<Point>& p, const MorphismSupport& e);

  std::uint32_t spaceSize() const { return n_; }
  const std::vector<Relation>& members() const { return members_; }
  /// Whether some member contains r.
  bool admits(const Relation& r) const;
  /// Whether (x, y) lies in some member. By closure under union, a support
  /// is admissible iff all of its pairs are.
  bool allows(Point x, Point y) const { return reach_[x * n_ + y]; }
  /// g(E) is a member for every member E and g in G, with G acting diagonally.
  bool isInvariant(const GSet& x) const;

  Json toJson() const;

 private:
  MorphismSupport(std::uint32_t n, std::vector<Relation> members);

  std::uint32_t n_ = 0;
  std::vector<Relation> members_;
  std::vector<bool> reach_;
};

/// A family of subsets of X, closed under union up to containment.
class ObjectSupport {
 public:
  static ObjectSupport fromFamily(std::uint32_t spaceSize, std::vector<PointSet> members);
  /// All (finite) subsets; for finite G this is the G-compact condition.
  static ObjectSupport everything(std::uint32_t spaceSize);

  std::uint32_t spaceSize() const { return n_; }
  const std::vector<PointSet>& members() const { return members_; }
  bool admits(const PointSet& s) const;
  bool allows(Point x) const { return reach_[x]; }
  bool isInvariant(const GSet& x) const;

  Json toJson() const;

 private:
  ObjectSupport(std::uint32_t n, std::vector<PointSet> members);

  std::uint32_t n_ = 0;
  std::vector<PointSet> members_;
  std::vector<bool> reach_;
};

}  // namespace coeffcat
