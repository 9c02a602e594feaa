#include "coeffcat/crossed/crossed_data.hpp"

namespace coeffcat {

CrossedData CrossedData::make(FiniteRing ring, FiniteGroup group, std::vector<RingAutomorphism> alpha,
                              std::vector<RingElem> tau) {
  const std::uint32_t n = group.order();
  if (alpha.size() != n) throw Error("crossed data: one automorphism per group element is required");
  if (tau.size() != std::size_t{n} * n) throw Error("crossed data: tau must have |G|^2 entries");
  for (const auto& a : alpha)
    if (!(a.ring() == ring)) throw MismatchError("crossed data: automorphism of a different ring");
  const auto& ae = alpha[group.identity()];
  for (RingElem r = 0; r < ring.size(); ++r)
    if (ae(r) != r) throw AxiomViolation("alpha_e is not the identity", Json{{"r", ring.elementName(r)}});
  std::vector<RingElem> inv(tau.size());
  for (GroupElem g = 0; g < n; ++g)
    for (GroupElem h = 0; h < n; ++h) {
      const RingElem t = tau[g * n + h];
      if (t >= ring.size()) throw Error("crossed data: tau value out of range");
      auto i = ring.tryInverse(t);
      if (!i)
        throw AxiomViolation("tau value is not a unit",
                             Json{{"g", group.elementName(g)}, {"h", group.elementName(h)}, {"tau", ring.elementName(t)}});
      inv[g * n + h] = *i;
    }
  return CrossedData(std::move(ring), std::move(group), std::move(alpha), std::move(tau), std::move(inv));
}

CrossedData CrossedData::twistedGroupRing(const FiniteRing& ring, const FiniteGroup& group,
                                          std::vector<RingAutomorphism> alpha) {
  return make(ring, group, std::move(alpha), std::vector<RingElem>(std::size_t{group.order()} * group.order(), ring.one()));
}

CrossedData CrossedData::untwisted(const FiniteRing& ring, const FiniteGroup& group) {
  return twistedGroupRing(ring, group, std::vector<RingAutomorphism>(group.order(), RingAutomorphism::identity(ring)));
}

CrossedData CrossedData::withTau(GroupElem g, GroupElem h, RingElem value) const {
  auto tau = tau_;
  tau.at(g * group_.order() + h) = value;
  return make(ring_, group_, alpha_, std::move(tau));
}

CrossedData CrossedData::restrictTo(const GroupHom& inclusion) const {
  if (!(inclusion.target() == group_)) throw MismatchError("restriction along a homomorphism into another group");
  if (!inclusion.isInjective()) throw Error("restriction needs an injective homomorphism");
  const FiniteGroup& h = inclusion.source();
  std::vector<RingAutomorphism> alpha;
  std::vector<RingElem> tau;
  for (GroupElem a = 0; a < h.order(); ++a) alpha.push_back(alpha_[inclusion(a)]);
  for (GroupElem a = 0; a < h.order(); ++a)
    for (GroupElem b = 0; b < h.order(); ++b) tau.push_back(this->tau(inclusion(a), inclusion(b)));
  return make(ring_, h, std::move(alpha), std::move(tau));
}

Json CrossedData::toJson() const {
  Json alpha = Json::object();
  for (GroupElem g = 0; g < group_.order(); ++g) alpha[group_.elementName(g)] = alpha_[g].toJson();
  Json tau = Json::array();
  for (GroupElem g = 0; g < group_.order(); ++g) {
    Json row = Json::array();
    for (GroupElem h = 0; h < group_.order(); ++h) row.push_back(ring_.elementName(this->tau(g, h)));
    tau.push_back(std::move(row));
  }
  return Json{{"ring", ring_.label()}, {"group", group_.name()}, {"alpha", alpha}, {"tau", tau}};
}

std::vector<CheckResult> validateCrossedData(const CrossedData& d, const Budget& budget) {
  const FiniteRing& r = d.ring();
  const FiniteGroup& g = d.group();
  const std::uint64_t n = g.order(), nr = r.size();
  auto gname = [&](std::uint64_t x) { return g.elementName(static_cast<GroupElem>(x)); };
  auto rname = [&](RingElem x) { return r.elementName(x); };

  CheckBuilder cocycle("crossed.cocycle", "tau_{g,h} tau_{gh,k} = alpha_g(tau_{h,k}) tau_{g,hk}");
  CheckBuilder twist("crossed.twist", "tau_{g,h} alpha_{gh}(r) = alpha_g(alpha_h(r)) tau_{g,h}");
  CheckBuilder unit("crossed.alpha-unit", "alpha_e = id");
  CheckBuilder central("crossed.tau-central", "tau_{e,g} and tau_{g,e} lie in the center of R");

  auto s1 = sweep({n, n, n}, budget.derive("cocycle"), [&](std::span<const std::uint64_t> i) {
    const auto a = static_cast<GroupElem>(i[0]), b = static_cast<GroupElem>(i[1]), c = static_cast<GroupElem>(i[2]);
    const RingElem lhs = r.mul(d.tau(a, b), d.tau(g.mul(a, b), c));
    const RingElem rhs = r.mul(d.alpha(a)(d.tau(b, c)), d.tau(a, g.mul(b, c)));
    if (lhs != rhs) return cocycle.fail(Json{{"g", gname(a)}, {"h", gname(b)}, {"k", gname(c)}, {"lhs", rname(lhs)}, {"rhs", rname(rhs)}});
    return true;
  });
  cocycle.merge(s1.coverage);
  cocycle.count(s1.visited);

  auto s2 = sweep({n, n, nr}, budget.derive("twist"), [&](std::span<const std::uint64_t> i) {
    const auto a = static_cast<GroupElem>(i[0]), b = static_cast<GroupElem>(i[1]);
    const auto x = static_cast<RingElem>(i[2]);
    const RingElem lhs = r.mul(d.tau(a, b), d.alpha(g.mul(a, b))(x));
    const RingElem rhs = r.mul(d.alpha(a)(d.alpha(b)(x)), d.tau(a, b));
    if (lhs != rhs) return twist.fail(Json{{"g", gname(a)}, {"h", gname(b)}, {"r", rname(x)}, {"lhs", rname(lhs)}, {"rhs", rname(rhs)}});
    return true;
  });
  twist.merge(s2.coverage);
  twist.count(s2.visited);

  auto s3 = sweep({nr}, budget.derive("alpha-unit"), [&](std::span<const std::uint64_t> i) {
    const auto x = static_cast<RingElem>(i[0]);
    if (d.alpha(g.identity())(x) != x) return unit.fail(Json{{"r", rname(x)}});
    return true;
  });
  unit.merge(s3.coverage);
  unit.count(s3.visited);

  auto s4 = sweep({n, nr}, budget.derive("tau-central"), [&](std::span<const std::uint64_t> i) {
    const auto a = static_cast<GroupElem>(i[0]);
    const auto x = static_cast<RingElem>(i[1]);
    for (RingElem t : {d.tau(g.identity(), a), d.tau(a, g.identity())})
      if (r.mul(t, x) != r.mul(x, t)) return central.fail(Json{{"g", gname(a)}, {"tau", rname(t)}, {"r", rname(x)}});
    return true;
  });
  central.merge(s4.coverage);
  central.count(s4.visited);

  const bool basePassed = !cocycle.failed() && !twist.failed() && !unit.failed() && !central.failed();

  CheckBuilder alphaTau("crossed.derived.alpha-tau", "alpha_a(tau_{b,c}) = tau_{a,b} tau_{ab,c} tau_{a,bc}^-1");
  CheckBuilder alphaInv("crossed.derived.alpha-inverse",
                        "alpha_a^-1(r) = tau_{a^-1,a}^-1 alpha_{a^-1}(r) tau_{a^-1,a}");
  CheckBuilder alphaAlpha("crossed.derived.alpha-alpha", "alpha_a(alpha_b(r)) = tau_{a,b} alpha_{ab}(r) tau_{a,b}^-1");
  if (!basePassed) {
    for (auto* c : {&alphaTau, &alphaInv, &alphaAlpha}) c->skip("the defining conditions fail; consequences are not implied");
  } else {
    auto t1 = sweep({n, n, n}, budget.derive("alpha-tau"), [&](std::span<const std::uint64_t> i) {
      const auto a = static_cast<GroupElem>(i[0]), b = static_cast<GroupElem>(i[1]), c = static_cast<GroupElem>(i[2]);
      const RingElem lhs = d.alpha(a)(d.tau(b, c));
      const RingElem rhs = r.mul(r.mul(d.tau(a, b), d.tau(g.mul(a, b), c)), d.tauInverse(a, g.mul(b, c)));
      if (lhs != rhs) return alphaTau.fail(Json{{"a", gname(a)}, {"b", gname(b)}, {"c", gname(c)}});
      return true;
    });
    alphaTau.merge(t1.coverage);
    alphaTau.count(t1.visited);
    auto t2 = sweep({n, nr}, budget.derive("alpha-inverse"), [&](std::span<const std::uint64_t> i) {
      const auto a = static_cast<GroupElem>(i[0]);
      const auto x = static_cast<RingElem>(i[1]);
      const GroupElem ai = g.inv(a);
      const RingElem lhs = d.alpha(a).applyInverse(x);
      const RingElem rhs = r.mul(r.mul(d.tauInverse(ai, a), d.alpha(ai)(x)), d.tau(ai, a));
      if (lhs != rhs) return alphaInv.fail(Json{{"a", gname(a)}, {"r", rname(x)}});
      return true;
    });
    alphaInv.merge(t2.coverage);
    alphaInv.count(t2.visited);
    auto t3 = sweep({n, n, nr}, budget.derive("alpha-alpha"), [&](std::span<const std::uint64_t> i) {
      const auto a = static_cast<GroupElem>(i[0]), b = static_cast<GroupElem>(i[1]);
      const auto x = static_cast<RingElem>(i[2]);
      const RingElem lhs = d.alpha(a)(d.alpha(b)(x));
      const RingElem rhs = r.mul(r.mul(d.tau(a, b), d.alpha(g.mul(a, b))(x)), d.tauInverse(a, b));
      if (lhs != rhs) return alphaAlpha.fail(Json{{"a", gname(a)}, {"b", gname(b)}, {"r", rname(x)}});
      return true;
    });
    alphaAlpha.merge(t3.coverage);
    alphaAlpha.count(t3.visited);
  }
  std::vector<CheckResult> out;
  for (auto* c : {&cocycle, &twist, &unit, &central, &alphaTau, &alphaInv, &alphaAlpha}) out.push_back(std::move(*c).finish());
  return out;
}

}  // namespace coeffcat
