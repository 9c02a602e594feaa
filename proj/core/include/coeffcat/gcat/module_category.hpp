#pragma once

#include <memory>
#include <optional>
#include <span>
#include <tuple>
#include <vector>

#include "coeffcat/base/automorphism.hpp"
#include "coeffcat/base/matrix.hpp"
#include "coeffcat/crossed/crossed_data.hpp"
#include "coeffcat/gcat/category.hpp"

namespace coeffcat {

enum class ModuleKind {
  TrivialRing,    // F^f(R) with the trivial action
  TwistedModule,  // g^*M = res_{alpha_g} M for a homomorphism alpha: G -> Aut(R)
  RigidCrossed,   // A_{alpha,tau}: objects (M, g), morphisms twisted by alpha
};

/// How biproducts of objects with different tags are formed.
enum class BiproductMode {
  Concatenate,  // keep each summand's tags (the default)
  Strict,       // all summands must carry one tag; anything else throws
  Lax,          // retag the sum with the identity tag through the evident iso
};

/// Finitely generated free modules over a finite ring, with each basis vector
/// carrying a tag that records how it is twisted:
///   TrivialRing   - one tag;
///   TwistedModule - the tag is an automorphism theta and the summand is res_theta R;
///   RigidCrossed  - the tag is a group element g and the summand is (R, g).
/// A morphism is a matrix whose (j, i) entry c stands for the map
/// x |-> theta_{j,i}(x) c from summand i to summand j, where theta_{j,i} is the
/// quotient of the target tag by the source tag. Every matrix is a morphism.
/// Composition: (B o A)_{k,i} = sum_j theta_{k,j}(A_{j,i}) B_{k,j}.
class ModuleCategory {
 public:
  struct Object {
    std::vector<std::uint32_t> tags;
    auto operator<=>(const Object&) const = default;
    bool operator==(const Object&) const = default;
  };
  struct Morphism {
    Object source;
    Object target;
    RingMatrix matrix;  // target rank x source rank
    bool operator==(const Morphism& o) const = default;
    bool operator<(const Morphism& o) const {
      return std::tie(source, target, matrix) < std::tie(o.source, o.target, o.matrix);
    }
    bool operator>(const Morphism& o) const { return o < *this; }
    bool operator<=(const Morphism& o) const { return !(o < *this); }
    bool operator>=(const Morphism& o) const { return !(*this < o); }
  };

  static ModuleCategory trivialRing(const FiniteRing& ring, const FiniteGroup& group,
                                    BiproductMode mode = BiproductMode::Concatenate);
  /// alpha[g] for each g; throws AxiomViolation unless alpha(hg) = alpha(h) o alpha(g)
  /// and alpha(e) = id, which is what makes g^* o h^* = (hg)^*.
  static ModuleCategory twistedModule(const FiniteRing& ring, const FiniteGroup& group,
                                      std::vector<RingAutomorphism> alpha,
                                      BiproductMode mode = BiproductMode::Concatenate);
  /// The category A_{alpha,tau}. Built from any crossed data; whether the action
  /// is coherent depends on the crossed-data conditions.
  static ModuleCategory rigidCrossed(const CrossedData& data, BiproductMode mode = BiproductMode::Concatenate);

  ModuleKind kind() const { return s_->kind; }
  BiproductMode biproductMode() const { return s_->mode; }
  const FiniteRing& ring() const { return s_->ring; }
  const FiniteGroup& group() const { return s_->group; }
  const std::optional<CrossedData>& crossedData() const { return s_->crossed; }
  std::uint32_t tagCount() const { return static_cast<std::uint32_t>(s_->tagNames.size()); }
  /// The tag that is fixed by nothing in particular: id for twisted modules, e for crossed.
  std::uint32_t identityTag() const { return s_->kind == ModuleKind::RigidCrossed ? s_->group.identity() : 0; }
  const std::string& tagName(std::uint32_t t) const { return s_->tagNames[t]; }
  /// The automorphism theta with entry (target t', source t) meaning x |-> theta(x) c.
  const RingAutomorphism& twist(std::uint32_t targetTag, std::uint32_t sourceTag) const {
    return s_->twists[targetTag * tagCount() + sourceTag];
  }

  Object object(std::vector<std::uint32_t> tags) const;
  /// Free module of rank n with every summand tagged `tag`.
  Object freeObject(std::uint32_t n, std::uint32_t tag = 0) const;
  Morphism morphism(const Object& src, const Object& tgt, RingMatrix m) const;

  Object zeroObject() const { return Object{}; }
  bool isZeroObject(const Object& x) const { return x.tags.empty(); }
  std::uint64_t rank(const Object& x) const { return x.tags.size(); }
  Morphism identity(const Object& x) const;
  Morphism zeroMorphism(const Object& x, const Object& y) const;
  const Object& source(const Morphism& f) const { return f.source; }
  const Object& target(const Morphism& f) const { return f.target; }
  Morphism compose(const Morphism& g, const Morphism& f) const;
  Morphism add(const Morphism& f, const Morphism& g) const;
  Morphism negate(const Morphism& f) const;
  bool isZero(const Morphism& f) const { return isZeroMatrix(f.matrix); }
  std::uint64_t homSize(const Object& x, const Object& y) const;
  Morphism homElement(const Object& x, const Object& y, std::uint64_t index) const;
  Biproduct<Object, Morphism> biproduct(std::span<const Object> xs) const;
  std::vector<Object> objects(std::uint32_t maxRank) const;

  Object act(GroupElem g, const Object& x) const;
  Morphism act(GroupElem g, const Morphism& f) const;

  Json toJson(const Object& x) const;
  Json toJson(const Morphism& f) const;
  std::string describe() const;

  /// RigidCrossed only: gamma^* of a map (R, k) -> (R, h) is computed as
  /// L^-1_{tau_{h,gamma}} o phi o L_{tau_{k,gamma}}; this checks that the result
  /// twists scalars by alpha_{h gamma} alpha_{k gamma}^-1, i.e. that it is again a
  /// morphism of the category. Passes trivially for the other kinds.
  CheckResult verifyActionWellDefined() const;

 private:
  struct State {
    ModuleKind kind;
    BiproductMode mode;
    FiniteRing ring;
    FiniteGroup group;
    std::optional<CrossedData> crossed;
    std::vector<std::string> tagNames;
    std::vector<RingAutomorphism> twists;  // [target * tags + source]
    std::vector<std::uint32_t> tagAction;  // [tag * |G| + g]
    // RigidCrossed only: entry factor for act(g) on an entry (target h, source k),
    // indexed [(g * tags + h) * tags + k].
    std::vector<RingElem> entryFactor;
  };
  explicit ModuleCategory(std::shared_ptr<const State> s) : s_(std::move(s)) {}
  std::shared_ptr<const State> s_;
};

static_assert(GCategory<ModuleCategory>);

}  // namespace coeffcat
