// Acceptance run: one line per criterion, nonzero exit if any fails or runs
// over its time limit.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "coeffcat/controlled/comparison.hpp"
#include "coeffcat/crossed/crossed_product.hpp"
#include "coeffcat/equiv/audit.hpp"
#include "coeffcat/equiv/star_functors.hpp"
#include "coeffcat/gcat/verify.hpp"
#include "coeffcat/harness/report.hpp"
#include "coeffcat/star/group_ring_oracle.hpp"

using namespace coeffcat;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail << what;
    ok = ok && cond;
  }
  /// Every result passed; with `exhaustive`, none of them was sampled.
  void requireAll(const std::vector<CheckResult>& rs, bool exhaustive, const std::string& where) {
    for (const auto& r : rs) {
      require(r.passed(), where + ": " + r.id + " " + toString(r.verdict));
      if (exhaustive) require(r.coverage == Coverage::Exhaustive, where + ": " + r.id + " was sampled");
    }
  }
  void requireAll(const Report& rep, bool exhaustive, const std::set<std::string>& sampledOk = {}) {
    require(!rep.checks.empty(), rep.instance + ": no checks ran");
    for (const auto& c : rep.checks) {
      const auto& r = c.result;
      require(r.verdict != Verdict::Fail, rep.instance + ": " + c.suite + "/" + r.id + " failed");
      if (exhaustive && r.verdict == Verdict::Pass && !sampledOk.count(r.id))
        require(r.coverage == Coverage::Exhaustive, rep.instance + ": " + c.suite + "/" + r.id + " was sampled");
    }
  }
};

struct Criterion {
  int number;
  std::string title;
  double limitSeconds;
  std::function<void(Outcome&)> run;
};

Budget wide(std::uint64_t seed = 0x5eed) { return Budget{100'000'000, 2'000, seed}; }

Report run(const InstanceDescription& d, std::vector<std::string> suites, std::uint64_t exhaustiveLimit) {
  RunOptions opt;
  opt.suites = std::move(suites);
  opt.exhaustiveLimit = exhaustiveLimit;
  return runSuites(d, opt);
}

Report run(const char* builtin, std::vector<std::string> suites, std::uint64_t exhaustiveLimit) {
  return run(loadInstance(builtin), std::move(suites), exhaustiveLimit);
}

std::vector<FiniteGroup> groupsUpTo4() {
  return {FiniteGroup::trivial(), FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::cyclic(4),
          FiniteGroup::kleinFour()};
}

// The split extension <a> -> C2xC2 -> C2 over F2.
const Json& splitExtension() {
  static const Json j = Json::parse(R"({
    "name": "v4-split",
    "description": "F2[C2] with the crossed data of the split extension <a> -> C2xC2 -> C2",
    "crossed": {"fromExtension": {"gamma": "C2xC2", "kernel": ["a"], "base": {"type": "Zmod", "n": 2}}},
    "category": {"category": "RigidCrossed"},
    "sets": [{"name": "pt", "kind": "point"}, {"name": "C2", "kind": "regular"}]
  })");
  return j;
}

/// Crossed data with |R| <= 16 and |G| <= 4, twisted and untwisted.
std::vector<std::pair<std::string, CrossedData>> smallCrossedData() {
  std::vector<std::pair<std::string, CrossedData>> out;
  const auto f2 = FiniteRing::zmod(2);
  for (const auto& [gamma, kernel] : std::vector<std::pair<std::string, std::vector<std::string>>>{
           {"C4", {"a2"}}, {"C2xC2", {"a"}}}) {
    const auto g = FiniteGroup::byName(gamma);
    std::vector<GroupElem> gens;
    for (const auto& k : kernel) gens.push_back(g.elementByName(k));
    const auto ext = GroupExtension::fromNormalSubgroup(g, g.generate(gens));
    out.emplace_back(gamma + "/<" + kernel[0] + "> over F2", fromExtension(ext, f2));
  }
  {
    const auto q8 = FiniteGroup::quaternion8();
    out.emplace_back("Q8/center over F3",
                     fromExtension(GroupExtension::fromNormalSubgroup(q8, q8.center()), FiniteRing::zmod(3)));
  }
  const auto f4 = FiniteRing::galoisField4();
  const auto id = RingAutomorphism::identity(f4), fr = RingAutomorphism::frobenius(f4);
  out.emplace_back("F4 twisted by C2", CrossedData::twistedGroupRing(f4, FiniteGroup::cyclic(2), {id, fr}));
  out.emplace_back("F4 twisted by C4", CrossedData::twistedGroupRing(f4, FiniteGroup::cyclic(4), {id, fr, id, fr}));
  out.emplace_back("F4 twisted by C2xC2",
                   CrossedData::twistedGroupRing(f4, FiniteGroup::kleinFour(), {id, fr, fr, id}));
  // M2(F2) twisted by conjugation with the swap matrix, a noncommutative case.
  const auto m2 = FiniteRing::matrix(f2, 2);
  RingElem swap = 0;
  for (RingElem u = 0; u < m2.size(); ++u)
    if (m2.elementName(u) == "[[0,1],[1,0]]") swap = u;
  out.emplace_back("M2(F2) twisted by C2",
                   CrossedData::twistedGroupRing(m2, FiniteGroup::cyclic(2),
                                                 {RingAutomorphism::identity(m2), RingAutomorphism::conjugation(m2, swap)}));
  out.emplace_back("Z/16 over C3", CrossedData::untwisted(FiniteRing::zmod(16), FiniteGroup::cyclic(3)));
  out.emplace_back("F2[C2xC2] over C2",
                   CrossedData::untwisted(FiniteRing::groupRing(f2, FiniteGroup::kleinFour()), FiniteGroup::cyclic(2)));
  return out;
}

const CheckResult* find(const std::vector<CheckResult>& rs, const std::string& id) {
  for (const auto& r : rs)
    if (r.id == id) return &r;
  return nullptr;
}

void checkStarAxioms(Outcome& o) {
  const auto f2 = FiniteRing::zmod(2);
  std::size_t categories = 0;
  for (const auto& g : groupsUpTo4()) {
    const auto a = ModuleCategory::trivialRing(f2, g);
    for (const auto& t : GSet::allUpTo(g, 4)) {
      ++categories;
      const auto rs = verifyCompositionLaws(StarCategory<ModuleCategory>::overSet(a, t), 1, wide(), "star");
      const std::string where = g.name() + " on " + t.toJson().dump();
      for (const auto* id : {"star.associativity", "star.identity"}) {
        const auto* r = find(rs, id);
        o.require(r != nullptr, where + ": missing " + id);
        if (!r) return;
        o.require(r->passed(), where + ": " + id + " failed " + (r->witness ? r->witness->dump() : ""));
        o.require(r->coverage == Coverage::Exhaustive, where + ": " + id + " was sampled");
      }
      o.requireAll(rs, false, where);
    }
  }
  o.detail << categories << " star categories";
}

void checkGroupRingOracle(Outcome& o) {
  for (std::uint32_t n : {2u, 4u})
    for (std::uint32_t k : {2u, 3u, 4u}) {
      const auto r = verifyGroupRingOracle(FiniteRing::zmod(n), FiniteGroup::cyclic(k), wide());
      o.require(r.passed(), "Z/" + std::to_string(n) + " C" + std::to_string(k) + ": " + toJson(r).dump());
    }
  o.detail << "6 ring/group pairs";
}

AuditOptions exhaustiveAudit() {
  AuditOptions opt;
  opt.maxRank = 1;
  opt.budget = wide();
  return opt;
}

template <class F>
void requireEquivalence(Outcome& o, const F& f, const std::string& id, const std::string& where) {
  const auto rs = auditFunctor(f, id, exhaustiveAudit());
  o.requireAll(rs, true, where);
  for (const auto& suffix : {".faithful", ".full", ".essentially-surjective"})
    o.require(find(rs, id + suffix) != nullptr, where + ": missing " + id + suffix);
}

void checkStarEquivalences(Outcome& o) {
  const auto f2 = FiniteRing::zmod(2);
  const auto c2 = FiniteGroup::cyclic(2);
  const auto c4 = FiniteGroup::cyclic(4);
  const auto s3 = FiniteGroup::symmetric3();
  const auto center = c4.generate(std::vector<GroupElem>{c4.elementByName("a2")});
  {
    const auto f = unnestStar(ModuleCategory::trivialRing(f2, c2), BiSet::regular(c2), GSet::regular(c2));
    auto rs = auditFunctor(f, "unnest", exhaustiveAudit());
    rs.push_back(verifyObjectBijection(f, 1, "unnest.object-bijection"));
    o.requireAll(rs, true, "C2/C2 unnest");
    for (const auto* id : {"unnest.faithful", "unnest.full", "unnest.object-bijection"})
      o.require(find(rs, id) != nullptr, std::string("missing ") + id);
  }
  const auto a4 = ModuleCategory::trivialRing(f2, c4);
  requireEquivalence(o, quotientStar(a4, GSet::regular(c4), center), "quotient", "C4 by C2 on C4");
  {
    const auto incl = GroupHom::subgroupInclusion(c4, center);
    requireEquivalence(o, induceStar(a4, center, GSet::point(incl.source())), "induce", "C2 in C4, T = pt");
  }
  {
    const auto a3 = s3.generate(std::vector<GroupElem>{s3.elementByName("(123)")});
    const auto incl = GroupHom::subgroupInclusion(s3, a3);
    requireEquivalence(o, induceStar(ModuleCategory::trivialRing(f2, s3), a3, GSet::point(incl.source())), "induce",
                       "C3 in S3, T = pt");
  }
  requireEquivalence(o,
                     inductionEquivalence(ModuleCategory::trivialRing(f2, c2), GroupHom::identity(c2), GSet::point(c2))
                         .composite,
                     "induction", "id on C2, T = pt");
  {
    const auto incl = GroupHom::subgroupInclusion(c4, center);
    requireEquivalence(o,
                       inductionEquivalence(ModuleCategory::trivialRing(f2, incl.source()), incl,
                                            GSet::cosets(c4, center))
                           .composite,
                       "induction", "C2 -> C4, T = C4/C2");
  }
  std::size_t checks = 0;
  for (const auto* inst : {"c2-trivial", "f4-frobenius", "c4-extension"}) {
    const auto rep = run(inst, {"star-equivalences", "star-induction"}, 1'000'000);
    o.requireAll(rep, true);
    checks += rep.checks.size();
  }
  o.detail << "6 functors, " << checks << " suite checks";
}

void checkCrossedIdentities(Outcome& o) {
  const std::vector<Report> reports{run("c4-extension", {"crossed-identities"}, 1'000'000),
                                    run("q8-center", {"crossed-identities"}, 1'000'000),
                                    run(parseInstance(splitExtension()), {"crossed-identities"}, 1'000'000)};
  for (const auto& rep : reports) {
    o.require(rep.count(Verdict::Skipped) == 0, rep.instance + ": skipped checks");
    o.requireAll(rep, true, {"crossed-product.general"});
    for (const auto* id : {"crossed.cocycle", "crossed.twist", "crossed.tau-central", "crossed.derived.alpha-tau",
                           "crossed.derived.alpha-inverse", "crossed.derived.alpha-alpha"}) {
      bool present = false;
      for (const auto& c : rep.checks) present |= c.result.id == id;
      o.require(present, rep.instance + ": missing " + id);
    }
  }
  const auto mutant = run("mutant-tau", {"crossed-identities"}, 1'000'000);
  o.require(mutant.count(Verdict::Fail) == 1, "mutant-tau: expected exactly one failure");
  for (const auto& c : mutant.checks)
    if (c.result.failed()) o.require(c.result.witness.has_value(), "mutant-tau: failure without witness");
  o.detail << "3 extensions, mutant caught";
}

void checkCrossedProduct(Outcome& o) {
  std::size_t n = 0;
  for (const auto& [name, d] : smallCrossedData()) {
    o.require(d.ring().size() <= 16 && d.group().order() <= 4, name + ": outside the stated range");
    o.requireAll(validateCrossedData(d, wide()), true, name);
    const auto rs = verifyCrossedProduct(CrossedProductRing(d), wide());
    for (const auto* id : {"crossed-product.associativity", "crossed-product.unit"}) {
      const auto* r = find(rs, id);
      o.require(r && r->passed() && r->coverage == Coverage::Exhaustive, name + ": " + id);
    }
    o.requireAll(rs, false, name);
    ++n;
  }
  const auto c4 = FiniteGroup::cyclic(4);
  const auto ext = GroupExtension::fromNormalSubgroup(c4, c4.generate(std::vector<GroupElem>{c4.elementByName("a2")}));
  const auto iso = verifyExtensionIsomorphism(ext, FiniteRing::zmod(2), wide());
  o.require(iso.passed() && iso.coverage == Coverage::Exhaustive, "C4 extension isomorphism: " + toJson(iso).dump());
  o.detail << n << " crossed products, C4 isomorphism";
}

void checkCrossedModules(Outcome& o) {
  const auto rep = run("c4-extension", {"crossed-modules"}, 1'000'000);
  o.require(rep.count(Verdict::Skipped) == 0, "skipped checks");
  o.requireAll(rep, true);
  for (const auto* id : {"crossed-modules.well-defined", "free-modules.functoriality", "free-modules.full",
                         "free-modules.faithful", "free-modules.essentially-surjective"}) {
    bool present = false;
    for (const auto& c : rep.checks) present |= c.result.id == id;
    o.require(present, std::string("missing ") + id);
  }
  o.detail << rep.checks.size() << " checks";
}

void checkRigidAction(Outcome& o) {
  std::size_t n = 0;
  for (const auto& [name, d] : smallCrossedData()) {
    const auto rs = verifyGAction(ModuleCategory::rigidCrossed(d), 1, wide(), "rigid.action");
    const auto* r = find(rs, "rigid.action.composition");
    o.require(r && r->passed() && r->coverage == Coverage::Exhaustive,
              name + ": composition " + (r ? toJson(*r).dump() : "missing"));
    o.requireAll(rs, true, name);
    ++n;
  }
  o.detail << n << " rigid categories";
}

void checkControlledComparison(Outcome& o) {
  const auto rep = run("c2-trivial", {"controlled-comparison"}, 1'000'000);
  o.requireAll(rep, true);
  for (const auto* id : {"comparison[pt].fullness-witness", "comparison[C2].fullness-witness", "comparison[pt].full",
                         "comparison[C2].full", "comparison[C2].essentially-surjective"}) {
    bool present = false;
    for (const auto& c : rep.checks) present |= c.result.id == id && c.result.passed();
    o.require(present, std::string("missing ") + id);
  }
  o.detail << rep.checks.size() << " checks";
}

void checkSwanSuite(Outcome& o) {
  const auto rep = run("c2-trivial", {"swan"}, 1'000'000);
  o.require(rep.count(Verdict::Skipped) == 0, "skipped checks");
  o.requireAll(rep, false);
  for (const auto* id : {"swan.representation.Z[C2]", "swan.functoriality", "swan.naturality",
                         "swan.objectwise-splitting[I[C2]->Z[C2]->Z]"}) {
    bool present = false;
    for (const auto& c : rep.checks) present |= c.result.id == id;
    o.require(present, std::string("missing ") + id);
  }
  o.detail << rep.checks.size() << " checks";
}

void checkDeterminismAndMutants(Outcome& o) {
  for (const auto* inst : {"c2-trivial", "f4-frobenius"}) {
    RunOptions opt;
    opt.seed = 7;
    opt.samples = 300;
    opt.exhaustiveLimit = 500;  // force sampled checks so that the seed matters
    const auto a = runSuites(loadInstance(inst), opt).toJson(false);
    opt.jobs = 4;
    const auto b = runSuites(loadInstance(inst), opt).toJson(false);
    o.require(a == b, std::string(inst) + ": reports differ between runs");
  }
  for (const auto* inst : {"mutant-tau", "mutant-action"}) {
    const auto rep = runSuites(loadInstance(inst));
    o.require(rep.count(Verdict::Fail) == 1, std::string(inst) + ": expected exactly one failing check");
    for (const auto& c : rep.checks)
      if (c.result.failed()) {
        o.require(c.result.witness.has_value(), std::string(inst) + ": no witness");
        const auto text = toJson(c.result).dump();
        o.require(Json::parse(text).contains("witness"), std::string(inst) + ": witness not serialized");
      }
  }
  o.detail << "identical reports, 2 mutants caught";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "star composition associative and unital, |G|,|T| <= 4, rank 1, F2", 30, checkStarAxioms},
      {2, "star composition over pt matches group ring convolution", 5, checkGroupRingOracle},
      {3, "unnest is a strict isomorphism; star equivalences and induction audits", 60, checkStarEquivalences},
      {4, "crossed data identities on extensions; corrupted tau caught", 10, checkCrossedIdentities},
      {5, "crossed product associativity, |R| <= 16, |G| <= 4; C4 extension isomorphism", 30, checkCrossedProduct},
      {6, "crossed product modules comparison on the C4 extension", 60, checkCrossedModules},
      {7, "rigid crossed action composes strictly, |R| <= 16, |G| <= 4", 30, checkRigidAction},
      {8, "controlled comparison equivalence for C2, T in {pt, C2}", 30, checkControlledComparison},
      {9, "Swan action on c2-trivial", 10, checkSwanSuite},
      {10, "determinism; each mutant fails exactly one check", 60, checkDeterminismAndMutants},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(s < c.limitSeconds, " over time limit");
    if (!o.ok) ++failed;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  [" << c.number << "] " << c.title << "  (" << std::fixed
              << std::setprecision(2) << s << " s / " << c.limitSeconds << " s)  " << o.detail.str() << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
