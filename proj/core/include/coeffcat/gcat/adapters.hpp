#pragma once

#include <functional>
#include <string>

#include "coeffcat/gcat/category.hpp"
#include "coeffcat/groups/group.hpp"

namespace coeffcat {

/// Forwards the additive structure of a wrapped category unchanged.
template <AdditiveCategory C>
class ForwardingCategory {
 public:
  using Object = typename C::Object;
  using Morphism = typename C::Morphism;

  explicit ForwardingCategory(C base) : base_(std::move(base)) {}

  const C& base() const { return base_; }

  Object zeroObject() const { return base_.zeroObject(); }
  bool isZeroObject(const Object& x) const { return base_.isZeroObject(x); }
  std::uint64_t rank(const Object& x) const { return base_.rank(x); }
  Morphism identity(const Object& x) const { return base_.identity(x); }
  Morphism zeroMorphism(const Object& x, const Object& y) const { return base_.zeroMorphism(x, y); }
  const Object& source(const Morphism& f) const { return base_.source(f); }
  const Object& target(const Morphism& f) const { return base_.target(f); }
  Morphism compose(const Morphism& g, const Morphism& f) const { return base_.compose(g, f); }
  Morphism add(const Morphism& f, const Morphism& g) const { return base_.add(f, g); }
  Morphism negate(const Morphism& f) const { return base_.negate(f); }
  bool isZero(const Morphism& f) const { return base_.isZero(f); }
  std::uint64_t homSize(const Object& x, const Object& y) const { return base_.homSize(x, y); }
  Morphism homElement(const Object& x, const Object& y, std::uint64_t i) const { return base_.homElement(x, y, i); }
  Biproduct<Object, Morphism> biproduct(std::span<const Object> xs) const { return base_.biproduct(xs); }
  std::vector<Object> objects(std::uint32_t maxRank) const { return base_.objects(maxRank); }
  Json toJson(const Object& x) const { return base_.toJson(x); }
  Json toJson(const Morphism& f) const { return base_.toJson(f); }

 protected:
  C base_;
};

/// The H-category obtained from a G-category along a homomorphism phi: H -> G,
/// h acting as phi(h).
template <GCategory C>
class RestrictedCategory : public ForwardingCategory<C> {
 public:
  using typename ForwardingCategory<C>::Object;
  using typename ForwardingCategory<C>::Morphism;

  RestrictedCategory(C base, GroupHom phi) : ForwardingCategory<C>(std::move(base)), phi_(std::move(phi)) {
    if (!(phi_.target() == this->base_.group())) throw MismatchError("restriction along a homomorphism into another group");
  }

  const FiniteGroup& group() const { return phi_.source(); }
  const GroupHom& homomorphism() const { return phi_; }
  Object act(GroupElem h, const Object& x) const { return this->base_.act(phi_(h), x); }
  Morphism act(GroupElem h, const Morphism& f) const { return this->base_.act(phi_(h), f); }

 private:
  GroupHom phi_;
};

/// A G-category on which a normal subgroup N acts trivially, viewed as a
/// G/N-category: gN acts as any representative. Triviality of the N-action is
/// the caller's responsibility; verifyTrivialOn tests it.
template <GCategory C>
class DescendedCategory : public ForwardingCategory<C> {
 public:
  using typename ForwardingCategory<C>::Object;
  using typename ForwardingCategory<C>::Morphism;

  DescendedCategory(C base, QuotientGroup q) : ForwardingCategory<C>(std::move(base)), q_(std::move(q)) {
    if (q_.projection.size() != this->base_.group().order()) throw MismatchError("quotient of a different group");
  }

  const FiniteGroup& group() const { return q_.group; }
  const QuotientGroup& quotient() const { return q_; }
  Object act(GroupElem c, const Object& x) const { return this->base_.act(q_.representative[c], x); }
  Morphism act(GroupElem c, const Morphism& f) const { return this->base_.act(q_.representative[c], f); }

 private:
  QuotientGroup q_;
};

/// The full subcategory on the objects satisfying `member`, which must be
/// closed under biproducts and contain the zero object. Only objects() is
/// filtered; the remaining structure is inherited.
template <AdditiveCategory C>
class FullSubcategory : public ForwardingCategory<C> {
 public:
  using typename ForwardingCategory<C>::Object;
  using typename ForwardingCategory<C>::Morphism;

  FullSubcategory(C base, std::function<bool(const Object&)> member)
      : ForwardingCategory<C>(std::move(base)), member_(std::move(member)) {}

  bool contains(const Object& x) const { return member_(x); }
  const FiniteGroup& group() const
    requires GCategory<C>
  { return this->base_.group(); }
  Object act(GroupElem g, const Object& x) const
    requires GCategory<C>
  { return this->base_.act(g, x); }
  Morphism act(GroupElem g, const Morphism& f) const
    requires GCategory<C>
  { return this->base_.act(g, f); }
  std::vector<Object> objects(std::uint32_t maxRank) const {
    std::vector<Object> out;
    for (auto& x : this->base_.objects(maxRank))
      if (member_(x)) out.push_back(std::move(x));
    return out;
  }

 private:
  std::function<bool(const Object&)> member_;
};

/// The same category with the actions of two group elements exchanged. Unless
/// the two act identically this breaks g^* o h^* = (hg)^*; it exists to
/// exercise the checks.
template <GCategory C>
class SwappedActionCategory : public ForwardingCategory<C> {
 public:
  using typename ForwardingCategory<C>::Object;
  using typename ForwardingCategory<C>::Morphism;

  SwappedActionCategory(C base, GroupElem a, GroupElem b) : ForwardingCategory<C>(std::move(base)), a_(a), b_(b) {}

  const FiniteGroup& group() const { return this->base_.group(); }
  Object act(GroupElem g, const Object& x) const { return this->base_.act(swap(g), x); }
  Morphism act(GroupElem g, const Morphism& f) const { return this->base_.act(swap(g), f); }

 private:
  GroupElem swap(GroupElem g) const { return g == a_ ? b_ : g == b_ ? a_ : g; }
  GroupElem a_, b_;
};

}  // namespace coeffcat
