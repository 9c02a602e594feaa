#pragma once

#include <vector>

#include "coeffcat/base/automorphism.hpp"
#include "coeffcat/check.hpp"
#include "coeffcat/groups/group.hpp"
#include "coeffcat/sampling.hpp"

namespace coeffcat {

/// Crossed product data (R, alpha, tau): a ring automorphism alpha_g for each
/// g in G with alpha_e = id, and a unit tau_{g,h} for each pair. The cocycle
/// and twist conditions are checked by validateCrossedData, not on
/// construction, so that corrupted data can be represented and diagnosed.
/// tau is not assumed normalized.
class CrossedData {
 public:
  /// tau[g * |G| + h] = tau_{g,h}. Throws when alpha_e != id (witness: the
  /// element moved) or when a tau value is not a unit (witness: (g, h)).
  static CrossedData make(FiniteRing ring, FiniteGroup group, std::vector<RingAutomorphism> alpha,
                          std::vector<RingElem> tau);
  /// tau = 1; alpha should then be a homomorphism.
  static CrossedData twistedGroupRing(const FiniteRing& ring, const FiniteGroup& group,
                                      std::vector<RingAutomorphism> alpha);
  /// alpha = id, tau = 1: the ordinary group ring.
  static CrossedData untwisted(const FiniteRing& ring, const FiniteGroup& group);

  const FiniteRing& ring() const { return ring_; }
  const FiniteGroup& group() const { return group_; }
  const RingAutomorphism& alpha(GroupElem g) const { return alpha_[g]; }
  RingElem tau(GroupElem g, GroupElem h) const { return tau_[g * group_.order() + h]; }
  RingElem tauInverse(GroupElem g, GroupElem h) const { return tauInv_[g * group_.order() + h]; }

  /// Copy with tau_{g,h} replaced (the new value must still be a unit).
  CrossedData withTau(GroupElem g, GroupElem h, RingElem value) const;
  /// (alpha|, tau|) along an injective homomorphism H -> G.
  CrossedData restrictTo(const GroupHom& inclusion) const;

  Json toJson() const;

 private:
  CrossedData(FiniteRing ring, FiniteGroup group, std::vector<RingAutomorphism> alpha, std::vector<RingElem> tau,
              std::vector<RingElem> tauInv)
      : ring_(std::move(ring)),
        group_(std::move(group)),
        alpha_(std::move(alpha)),
        tau_(std::move(tau)),
        tauInv_(std::move(tauInv)) {}

  FiniteRing ring_;
  FiniteGroup group_;
  std::vector<RingAutomorphism> alpha_;
  std::vector<RingElem> tau_;
  std::vector<RingElem> tauInv_;
};

/// Checks the defining conditions (cocycle, twist compatibility, alpha_e = id,
/// centrality of tau_{e,g} and tau_{g,e}) and then the three consequences
///   alpha_a(tau_{b,c}) = tau_{a,b} tau_{ab,c} tau_{a,bc}^-1,
///   alpha_a^-1(r) = tau_{a^-1,a}^-1 alpha_{a^-1}(r) tau_{a^-1,a},
///   alpha_a alpha_b(r) = tau_{a,b} alpha_{ab}(r) tau_{a,b}^-1.
/// The consequences are only meaningful when the conditions hold; they are
/// reported as skipped otherwise.
std::vector<CheckResult> validateCrossedData(const CrossedData& data, const Budget& budget);

}  // namespace coeffcat
