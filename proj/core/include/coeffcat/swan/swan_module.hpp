#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coeffcat/check.hpp"
#include "coeffcat/groups/group.hpp"
#include "coeffcat/swan/int_matrix.hpp"

namespace coeffcat {

/// A ZG-module that is free of finite rank over Z, given by the matrices l_g
/// of its action: l_e = 1, l_g l_h = l_{gh}, det l_g = +-1. Validated on
/// construction (AxiomViolation with the failing pair).
class SwanModule {
 public:
  SwanModule(FiniteGroup group, std::vector<IntMatrix> action, std::string name = {});

  /// Z with trivial action.
  static SwanModule trivial(const FiniteGroup& g);
  /// ZG with l_g e_h = e_{gh}.
  static SwanModule regular(const FiniteGroup& g);
  /// Z through a homomorphism G -> {+-1}, given by its values.
  static SwanModule character(const FiniteGroup& g, const std::vector<int>& signs, std::string name);
  /// Matrices for some elements keyed by name; the rest are generated by
  /// products, and every relation among the given ones is checked.
  static SwanModule fromGenerators(const FiniteGroup& g, const std::map<std::string, IntMatrix>& generators,
                                   std::string name = {});
  static SwanModule fromJson(const FiniteGroup& g, const Json& j);

  const FiniteGroup& group() const { return group_; }
  std::size_t rank() const { return rank_; }
  const IntMatrix& action(GroupElem g) const { return action_[g]; }
  const std::string& name() const { return name_; }

  Json toJson() const;

 private:
  FiniteGroup group_;
  std::size_t rank_ = 0;
  std::vector<IntMatrix> action_;
  std::string name_;
};

/// The representation axioms, re-checked exhaustively as a report entry.
CheckResult verifySwanModule(const SwanModule& m, const std::string& id = "swan.representation");

/// A ZG-linear map M -> N: an integer matrix f with f l^M_g = l^N_g f.
struct SwanMap {
  SwanMap(SwanModule source, SwanModule target, IntMatrix matrix);

  SwanModule source;
  SwanModule target;
  IntMatrix matrix;
};

/// L -> M -> N with p i = 0, together with integer maps r: M -> L and
/// s: N -> M with r i = 1, p s = 1 and i r + s p = 1. The splitting maps are
/// only Z-linear.
struct SplitSequence {
  SwanMap i;
  SwanMap p;
  IntMatrix r;
  IntMatrix s;
};

/// The splitting equations, including exactness at M (which they imply).
CheckResult verifySplitting(const SplitSequence& seq, const std::string& id = "swan.splitting");

/// Searches integer maps with entries in [-bound, bound] for s with p s = 1 and
/// r0 with r0 i = 1, then corrects r = r0 (1 - s p). Returns nullopt if none is
/// found or the maps do not form a short exact sequence.
std::optional<SplitSequence> findIntegerSplitting(const SwanMap& i, const SwanMap& p, int bound = 2);

/// I -> ZG -> Z for the augmentation ideal I with basis g - e (g != e, in
/// element order), split by r(e_g) = g - e, r(e_e) = 0 and s(1) = e.
SplitSequence augmentationSequence(const FiniteGroup& g);

/// Z -> Z[C2] -> Z^- over C2, with 1 |-> 1 + t and e |-> 1, t |-> -1.
std::pair<SwanMap, SwanMap> augmentationSequenceC2(const FiniteGroup& c2);

}  // namespace coeffcat
