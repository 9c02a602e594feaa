#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coeffcat/errors.hpp"

namespace coeffcat {

using GroupElem = std::uint32_t;

/// Sorted list of element indices closed under multiplication and inverses.
using Subgroup = std::vector<GroupElem>;

/// A finite group given by its multiplication table. Element indices are
/// 0..order()-1; the identity need not be index 0 for hand-supplied tables,
/// although every built-in group puts it there.
class FiniteGroup {
 public:
  /// The trivial group.
  FiniteGroup() : FiniteGroup(trivial()) {}

  /// table[a][b] = a*b. Group axioms are checked exhaustively.
  static FiniteGroup fromTable(std::vector<std::vector<GroupElem>> table,
                               std::vector<std::string> elementNames = {}, std::string name = {});

  static FiniteGroup trivial();
  static FiniteGroup cyclic(std::uint32_t n);
  static FiniteGroup kleinFour();
  static FiniteGroup symmetric3();
  static FiniteGroup quaternion8();
  static FiniteGroup dihedral4();
  /// Elements ordered as (a, b) -> a * |B| + b.
  static FiniteGroup directProduct(const FiniteGroup& a, const FiniteGroup& b);

  /// Catalog lookup: "1", "C<n>", "C2xC2" (alias "V4"), "S3", "Q8", "D4".
  static FiniteGroup byName(std::string_view name);
  /// Either a catalog name (string) or {"table": [[...]], "names": [...]}.
  static FiniteGroup fromJson(const Json& j);
  static std::vector<std::string> catalogNames();

  std::uint32_t order() const { return data_->n; }
  GroupElem identity() const { return data_->identity; }
  GroupElem mul(GroupElem a, GroupElem b) const { return data_->table[a * data_->n + b]; }
  GroupElem inv(GroupElem a) const { return data_->inverse[a]; }
  GroupElem mul(GroupElem a, GroupElem b, GroupElem c) const { return mul(mul(a, b), c); }
  GroupElem power(GroupElem a, std::int64_t k) const;
  std::uint32_t elementOrder(GroupElem a) const;

  const std::string& name() const { return data_->name; }
  const std::string& elementName(GroupElem a) const { return data_->names.at(a); }
  GroupElem elementByName(std::string_view name) const;
  /// Accepts a name string or a numeric index.
  GroupElem elementFromJson(const Json& j) const;

  bool isSubgroup(std::span<const GroupElem> subset) const;
  Subgroup generate(std::span<const GroupElem> generators) const;
  bool isNormal(const Subgroup& h) const;
  Subgroup center() const;
  Subgroup wholeGroup() const;
  Subgroup trivialSubgroup() const { return {identity()}; }
  /// Every subgroup, sorted by (size, elements).
  std::vector<Subgroup> allSubgroups() const;
  bool isAbelian() const;

  /// Structural equality of the multiplication tables.
  bool operator==(const FiniteGroup& other) const;

  Json toJson() const;

 private:
  struct Data {
    std::uint32_t n = 0;
    GroupElem identity = 0;
    std::vector<GroupElem> table;
    std::vector<GroupElem> inverse;
    std::vector<std::string> names;
    std::string name;
  };
  explicit FiniteGroup(std::shared_ptr<const Data> d) : data_(std::move(d)) {}

  std::shared_ptr<const Data> data_;
};

/// Validates that `subset` is a subgroup and returns it sorted.
Subgroup makeSubgroup(const FiniteGroup& g, std::vector<GroupElem> subset);

/// A homomorphism K -> G, validated exhaustively.
class GroupHom {
 public:
  GroupHom(FiniteGroup source, FiniteGroup target, std::vector<GroupElem> map);

  static GroupHom identity(const FiniteGroup& g);
  static GroupHom trivial(const FiniteGroup& source, const FiniteGroup& target);
  /// The subgroup H of G as a group in its own right, with its inclusion.
  /// Elements of the returned source are ordered as in the sorted subgroup.
  static GroupHom subgroupInclusion(const FiniteGroup& g, const Subgroup& h);
  /// Projections out of FiniteGroup::directProduct(a, b).
  static GroupHom projectFirst(const FiniteGroup& a, const FiniteGroup& b);
  static GroupHom projectSecond(const FiniteGroup& a, const FiniteGroup& b);

  const FiniteGroup& source() const { return source_; }
  const FiniteGroup& target() const { return target_; }
  GroupElem operator()(GroupElem k) const { return map_[k]; }
  const std::vector<GroupElem>& table() const { return map_; }

  Subgroup kernel() const;
  Subgroup image() const;
  bool isInjective() const;
  bool isSurjective() const;

 private:
  FiniteGroup source_;
  FiniteGroup target_;
  std::vector<GroupElem> map_;
};

/// G/N for a normal subgroup N. Cosets are ordered by their smallest element.
struct QuotientGroup {
  FiniteGroup group;
  std::vector<GroupElem> projection;      // G -> G/N
  std::vector<GroupElem> representative;  // G/N -> G, smallest element of the coset
  Subgroup normal;
};

QuotientGroup quotientGroup(const FiniteGroup& g, const Subgroup& normal);

/// An extension K -> Gamma -> G together with a set-theoretic section s of
/// the projection, s(1) = 1.
struct GroupExtension {
  FiniteGroup total;
  Subgroup kernel;
  GroupHom kernelInclusion;  // the group K with its embedding into Gamma
  FiniteGroup quotient;
  std::vector<GroupElem> projection;  // Gamma -> G
  std::vector<GroupElem> section;     // G -> Gamma

  /// Builds G = Gamma/K with canonical (smallest-index) coset representatives.
  /// A supplied section overrides the default and is validated (p o s = id,
  /// s(1) = 1).
  static GroupExtension fromNormalSubgroup(const FiniteGroup& total, const Subgroup& kernel,
                                           std::optional<std::vector<GroupElem>> section = std::nullopt);

  /// Index in kernelInclusion.source() of an element of Gamma lying in K.
  GroupElem kernelIndex(GroupElem gammaElem) const;
};

}  // namespace coeffcat
