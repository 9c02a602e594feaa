#include "coeffcat/harness/suites.hpp"

#include <algorithm>
#include <chrono>
#include <type_traits>

#include "coeffcat/controlled/comparison.hpp"
#include "coeffcat/crossed/free_modules.hpp"
#include "coeffcat/equiv/audit.hpp"
#include "coeffcat/equiv/star_functors.hpp"
#include "coeffcat/gcat/adapters.hpp"
#include "coeffcat/gcat/verify.hpp"
#include "coeffcat/star/group_ring_oracle.hpp"
#include "coeffcat/swan/tensor.hpp"

namespace coeffcat {

namespace {

using Star = StarCategory<ModuleCategory>;

CheckResult skipped(std::string id, std::string anchor, std::string note) {
  CheckResult r;
  r.id = std::move(id);
  r.anchor = std::move(anchor);
  r.verdict = Verdict::Skipped;
  r.note = std::move(note);
  return r;
}

std::vector<CheckResult> prefixed(std::vector<CheckResult> rs, const std::string& prefix) {
  for (auto& r : rs) r.id = prefix + "." + r.id;
  return rs;
}

void append(std::vector<CheckResult>& to, std::vector<CheckResult> more) {
  for (auto& r : more) to.push_back(std::move(r));
}

bool noneFailed(const std::vector<CheckResult>& rs) {
  return std::none_of(rs.begin(), rs.end(), [](const CheckResult& r) { return r.failed(); });
}

std::string subgroupLabel(const FiniteGroup& g, const Subgroup& h) {
  std::string s = "{";
  for (std::size_t i = 0; i < h.size(); ++i) s += (i ? "," : "") + g.elementName(h[i]);
  return s + "}";
}

/// Collects the checks of one suite, timing each step.
class Steps {
 public:
  /// Returns true when no check of the step failed.
  template <class Fn>
  bool run(const std::string& step, Fn&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<CheckResult> rs;
    try {
      if constexpr (std::is_same_v<std::invoke_result_t<Fn>, CheckResult>)
        rs.push_back(fn());
      else
        rs = fn();
    } catch (const std::exception& e) {
      CheckResult r;
      r.id = step + ".error";
      r.anchor = "the step completes without raising";
      r.verdict = Verdict::Fail;
      r.witness = Json{{"exception", e.what()}};
      rs = {std::move(r)};
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = noneFailed(rs);
    for (auto& r : rs) out_.push_back({std::move(r), ms});
    return ok;
  }
  void skip(std::string id, std::string anchor, std::string note) {
    out_.push_back({skipped(std::move(id), std::move(anchor), std::move(note)), 0});
  }
  std::vector<TimedCheck> take() && { return std::move(out_); }

 private:
  std::vector<TimedCheck> out_;
};

struct Env {
  const ResolvedInstance& in;
  std::uint32_t rank;
  Budget budget;

  AuditOptions audit() const {
    AuditOptions opt;
    opt.maxRank = rank;
    opt.budget = budget;
    return opt;
  }
};

void starAxioms(Steps& s, const Env& env) {
  const auto& in = env.in;
  const auto& a = in.category;
  bool baseOk = s.run("base.category", [&] { return verifyAdditiveCategory(a, env.rank, env.budget, "base.category"); });
  baseOk &= s.run("base.action", [&] {
    if (in.swappedAction) {
      SwappedActionCategory<ModuleCategory> mutated(a, in.swappedAction->first, in.swappedAction->second);
      return verifyGAction(mutated, env.rank, env.budget, "base.action");
    }
    return verifyGAction(a, env.rank, env.budget, "base.action");
  });
  const std::string why = "the base category fails its own axioms";
  for (const auto& [name, t] : in.sets) {
    const std::string id = "star[" + name + "].category";
    if (!baseOk) {
      s.skip(id, "additive category axioms of A *_G T", why);
      continue;
    }
    s.run(id, [&] { return verifyAdditiveCategory(Star::overSet(a, t), env.rank, env.budget, id); });
  }
  if (!baseOk) {
    s.skip("star[G-G].action", "right G-action on A *_G G", why);
    return;
  }
  s.run("star[G-G].action",
        [&] { return verifyGAction(Star(a, BiSet::regular(in.group)), env.rank, env.budget, "star[G-G].action"); });
  if (a.kind() == ModuleKind::TrivialRing)
    s.run("star.group-ring", [&] { return verifyGroupRingOracle(a.ring(), in.group, env.budget); });
}

void starEquivalences(Steps& s, const Env& env) {
  const auto& in = env.in;
  const auto& a = in.category;
  const auto& g = in.group;
  for (const auto& [name, t] : in.sets) {
    const std::string id = "unnest[G-G," + name + "]";
    s.run(id, [&] {
      auto f = unnestStar(a, BiSet::regular(g), t);
      auto rs = auditFunctor(f, id, env.audit());
      rs.push_back(verifyObjectBijection(f, env.rank, id + ".object-bijection"));
      return rs;
    });
  }

  if (!in.normal) {
    s.skip("quotient", "A *_G T -> A *_{G/N} (N\\T) is an equivalence", "the instance names no normal subgroup");
  } else {
    const auto label = subgroupLabel(g, *in.normal);
    const std::string id = "quotient[" + label + "]";
    const bool trivial = s.run(id + ".trivial-on-N", [&] {
      return verifyTrivialOn(a, *in.normal, env.rank, env.budget, id + ".trivial-on-N");
    });
    if (!trivial)
      s.skip(id, "A *_G T -> A *_{G/N} (N\\T) is an equivalence", "N does not act trivially on A");
    else
      s.run(id, [&] { return auditFunctor(quotientStar(a, GSet::regular(g), *in.normal), id, env.audit()); });
  }

  for (const auto& h : in.subgroups) {
    const std::string id = "induce[" + subgroupLabel(g, h) + "]";
    s.run(id, [&] {
      const auto incl = GroupHom::subgroupInclusion(g, h);
      return auditFunctor(induceStar(a, h, GSet::regular(incl.source())), id, env.audit());
    });
  }
}

void starInduction(Steps& s, const Env& env) {
  const auto& in = env.in;
  const auto& a = in.category;
  const auto& g = in.group;
  std::vector<Subgroup> normals{g.trivialSubgroup()};
  if (in.normal && *in.normal != g.trivialSubgroup()) normals.push_back(*in.normal);
  for (const auto& n : normals) {
    const auto label = subgroupLabel(g, n);
    if (n.size() > 1) {
      const bool trivial = s.run("induction[" + label + "].trivial-on-N", [&] {
        return verifyTrivialOn(a, n, env.rank, env.budget, "induction[" + label + "].trivial-on-N");
      });
      if (!trivial) {
        s.skip("induction[" + label + "]", "(ind A) *_{G/N} T -> A *_G res T is an equivalence",
               "N does not act trivially on A");
        continue;
      }
    }
    const auto q = quotientGroup(g, n);
    const GroupHom phi(g, q.group, q.projection);
    for (const auto& [tname, t] : {std::pair{std::string("pt"), GSet::point(q.group)}, std::pair{std::string("G/N"), GSet::regular(q.group)}}) {
      const std::string id = "induction[" + label + "," + tname + "]";
      s.run(id, [&] {
        auto eq = inductionEquivalence(a, phi, t);
        auto rs = auditFunctor(eq.composite, id + ".composite", env.audit());
        CheckBuilder target(id + ".target-set", "the composite lands in A *_G res_phi T");
        target.count();
        if (!(eq.composite.target().index().leftSet() == GSet::restrict(t, phi)))
          target.fail(Json{{"expected", GSet::restrict(t, phi).toJson()},
                           {"actual", eq.composite.target().index().leftSet().toJson()}});
        rs.push_back(std::move(target).finish());
        return rs;
      });
    }
  }
}

bool crossedDataValid(const Env& env) { return noneFailed(validateCrossedData(env.in.crossed, env.budget)); }

void crossedIdentities(Steps& s, const Env& env) {
  const auto& d = env.in.crossed;
  const bool valid = s.run("crossed", [&] { return validateCrossedData(d, env.budget); });
  const std::string why = "the crossed data fails its defining conditions";
  if (!valid) {
    s.skip("crossed-product", "R_{alpha,tau} G is an associative unital ring", why);
    s.skip("rigid.action", "delta^*(gamma^* phi) = (gamma delta)^* phi on A_{alpha,tau}", why);
    if (env.in.extension) s.skip("extension-isomorphism", "R_{alpha,tau} G ~ S[Gamma]", why);
    return;
  }
  s.run("crossed-product", [&] { return verifyCrossedProduct(CrossedProductRing(d), env.budget); });
  s.run("rigid.action",
        [&] { return verifyGAction(ModuleCategory::rigidCrossed(d), env.rank, env.budget, "rigid.action"); });
  if (env.in.extension)
    s.run("extension-isomorphism",
          [&] { return verifyExtensionIsomorphism(*env.in.extension, *env.in.extensionBase, env.budget); });
}

void crossedModules(Steps& s, const Env& env) {
  const auto& d = env.in.crossed;
  if (!crossedDataValid(env)) {
    s.skip("free-modules", "A_{alpha,tau} *_G pt ~ free R_{alpha,tau} G-modules", "the crossed data fails its defining conditions");
    return;
  }
  s.run("free-modules", [&] {
    auto cmp = freeModuleComparison(d);
    auto rs = verifyFreeModuleComparison(cmp.ring, env.budget);
    append(rs, auditFunctor(cmp.functor, "free-modules", env.audit()));
    return rs;
  });
  s.run("reduced-inclusion", [&] {
    return auditFunctor<ReducedPointStar, PointStar>(reducedInclusion(d), "reduced-inclusion", env.audit(),
                                                     [&](const PointStar::Object& x) { return reducedReplacement(d, x); });
  });
}

void crossedRestriction(Steps& s, const Env& env) {
  const auto& d = env.in.crossed;
  const auto& g = env.in.group;
  if (!crossedDataValid(env)) {
    s.skip("restriction", "A_{alpha,tau} *_G G/H ~ free modules over the restricted crossed product",
           "the crossed data fails its defining conditions");
    return;
  }
  for (const auto& h : env.in.subgroups) {
    const std::string id = "restriction[" + subgroupLabel(g, h) + "]";
    s.run(id, [&] {
      auto rc = restrictionChain(d, h);
      auto rs = prefixed(validateCrossedData(rc.restricted, env.budget), id);
      append(rs, auditFunctor(rc.chain, id + ".chain", env.audit()));
      append(rs, auditFunctor(rc.comparison.functor, id + ".free-modules", env.audit()));
      return rs;
    });
  }
}

void controlled(Steps& s, const Env& env) {
  const auto& a = env.in.category;
  for (const auto& [name, t] : env.in.sets) {
    const std::string id = "controlled[" + name + "]";
    s.run(id, [&] {
      const auto fixed = controlledOverProduct(a, t);
      auto rs = verifyAdditiveCategory(fixed.ambient(), env.rank, env.budget, id + ".category");
      append(rs, verifyGAction(fixed.ambient(), env.rank, env.budget, id + ".action"));
      append(rs, verifyAdditiveCategory(fixed, env.rank, env.budget, "fixed[" + name + "].category"));
      CheckBuilder inv("fixed[" + name + "].invariance", "objects and morphisms of the fixed category are G-invariant");
      const auto objs = fixed.objects(env.rank);
      for (const auto& x : objs) {
        inv.count();
        if (auto w = fixed.fixedPointDefect(x)) inv.fail(*w);
      }
      detail::record(inv, sweepMorphisms(fixed, objs, env.budget.derive(id + ".invariance"), [&](const auto& f) {
        if (auto w = fixed.fixedPointDefect(f)) return inv.fail(*w);
        return true;
      }));
      rs.push_back(std::move(inv).finish());
      return rs;
    });
  }
}

void controlledComparisonSuite(Steps& s, const Env& env) {
  const auto& a = env.in.category;
  for (const auto& [name, t] : env.in.sets) {
    const std::string id = "comparison[" + name + "]";
    s.run(id, [&] {
      auto f = controlledComparison(a, t);
      auto rs = auditFunctor(f, id, env.audit());
      append(rs, verifyControlledComparison(f, env.rank, env.budget, id));
      return rs;
    });
  }
  for (const auto& [name, t] : env.in.sets) {
    const std::string id = "comparison.natural[" + name + "->pt]";
    s.run(id, [&] { return verifyComparisonNaturality(a, GSetMap::collapse(t), env.rank, env.budget, id); });
  }
}

void swan(Steps& s, const Env& env) {
  const auto& in = env.in;
  s.run("swan", [&] { return verifySwanAction(in.category, in.swanModules, in.swanMaps, env.rank, env.budget); });
  for (std::size_t k = 0; k < in.swanSequences.size(); ++k) {
    const auto& seq = in.swanSequences[k];
    const std::string id = "swan.objectwise-splitting[" + seq.i.source.name() + "->" + seq.i.target.name() + "->" +
                           seq.p.target.name() + "]";
    s.run(id, [&] { return verifyObjectwiseSplitting(in.category, seq, env.rank, id); });
  }
}

using SuiteFn = void (*)(Steps&, const Env&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"star-axioms", starAxioms},
      {"star-equivalences", starEquivalences},
      {"star-induction", starInduction},
      {"crossed-identities", crossedIdentities},
      {"crossed-modules", crossedModules},
      {"crossed-restriction", crossedRestriction},
      {"controlled", controlled},
      {"controlled-comparison", controlledComparisonSuite},
      {"swan", swan},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suiteNames() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [k, f] : registry()) n.push_back(k);
    return n;
  }();
  return names;
}

bool isSuite(const std::string& name) {
  const auto& n = suiteNames();
  return std::find(n.begin(), n.end(), name) != n.end();
}

std::vector<TimedCheck> runSuite(const std::string& suite, const ResolvedInstance& inst, const Bounds& bounds,
                                 std::uint64_t seed) {
  Steps steps;
  const auto it = std::find_if(registry().begin(), registry().end(), [&](const auto& e) { return e.first == suite; });
  if (it == registry().end()) throw InputError("unknown suite '" + suite + "'");
  if (inst.swappedAction && suite != "star-axioms") {
    steps.skip(suite, "suite " + suite, "the action mutation is only exercised by star-axioms");
    return std::move(steps).take();
  }
  const Env env{inst, bounds.maxRank, bounds.budget(seed).derive(suite)};
  it->second(steps, env);
  return std::move(steps).take();
}

}  // namespace coeffcat
