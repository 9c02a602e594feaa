#pragma once

#include <string>

#include "coeffcat/base/ring.hpp"
#include "coeffcat/check.hpp"
#include "coeffcat/sampling.hpp"

namespace coeffcat {

/// In F^f(R) *_G pt with the trivial action, End of the rank-one object is
/// R[G] through phi |-> sum_g phi_g g, and composition psi o phi is the
/// group-ring product psi phi. Compared against FiniteRing::groupRing on all
/// pairs of basis elements r g, and on all pairs of elements when that is
/// within the budget (seeded pairs otherwise).
CheckResult verifyGroupRingOracle(const FiniteRing& r, const FiniteGroup& g, const Budget& budget,
                                  const std::string& id = "star.group-ring");

}  // namespace coeffcat
