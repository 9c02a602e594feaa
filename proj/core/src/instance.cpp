#include "coeffcat/harness/instance.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace coeffcat {

namespace {

const std::set<std::string> kTopLevel{"name",   "description", "group",    "category", "crossed", "sets",
                                      "normal", "subgroups",   "swan",     "mutations", "suites", "bounds",
                                      "suiteBounds", "seed"};

Bounds parseBounds(const Json& j, Bounds b) {
  if (!j.is_object()) throw InputError("bounds must be an object");
  for (const auto& [k, v] : j.items()) {
    if (!v.is_number_integer() || v.get<std::int64_t>() <= 0)
      throw InputError("bound '" + k + "' must be a positive integer");
    if (k == "maxRank")
      b.maxRank = v.get<std::uint32_t>();
    else if (k == "samples")
      b.samples = v.get<std::uint64_t>();
    else if (k == "exhaustiveLimit")
      b.exhaustiveLimit = v.get<std::uint64_t>();
    else
      throw InputError("unknown bound '" + k + "'");
  }
  return b;
}

GroupElem elementRef(const FiniteGroup& g, const Json& j) {
  if (j.is_number_integer()) {
    const auto v = j.get<std::int64_t>();
    if (v < 0 || v >= g.order()) throw InputError("group element index " + std::to_string(v) + " out of range");
    return static_cast<GroupElem>(v);
  }
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    for (GroupElem a = 0; a < g.order(); ++a)
      if (g.elementName(a) == s) return a;
    throw InputError("group " + g.name() + " has no element '" + s + "'");
  }
  throw InputError("group element must be a name or an index");
}

/// A generator list, or "center" / "whole" / "trivial".
Subgroup subgroupRef(const FiniteGroup& g, const Json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "center") return g.center();
    if (s == "whole") return g.wholeGroup();
    if (s == "trivial") return g.trivialSubgroup();
    throw InputError("unknown subgroup '" + s + "'");
  }
  if (!j.is_array()) throw InputError("subgroup must be a generator list or a keyword");
  std::vector<GroupElem> gens;
  for (const auto& e : j) gens.push_back(elementRef(g, e));
  return g.generate(gens);
}

struct CrossedSource {
  CrossedData data;
  std::optional<GroupExtension> extension;
  std::optional<FiniteRing> base;
};

CrossedSource parseCrossed(const Json& j) {
  if (j.contains("fromExtension")) {
    const auto& e = j.at("fromExtension");
    const auto gamma = FiniteGroup::fromJson(e.at("gamma"));
    const auto kernel = subgroupRef(gamma, e.at("kernel"));
    if (!gamma.isNormal(kernel)) throw InputError("extension kernel is not normal");
    auto ext = GroupExtension::fromNormalSubgroup(gamma, kernel);
    auto s = FiniteRing::fromJson(e.at("base"));
    return CrossedSource{fromExtension(ext, s), ext, s};
  }
  const auto ring = FiniteRing::fromJson(j.at("ring"));
  const auto group = FiniteGroup::fromJson(j.at("group"));
  std::vector<RingAutomorphism> alpha;
  for (const auto& a : j.at("alpha")) alpha.push_back(RingAutomorphism::fromJson(ring, a));
  std::vector<RingElem> tau;
  const auto& rows = j.at("tau");
  if (rows.size() != group.order()) throw InputError("tau must have one row per group element");
  for (const auto& row : rows) {
    if (row.size() != group.order()) throw InputError("tau must have one column per group element");
    for (const auto& v : row) tau.push_back(ring.elementFromJson(v));
  }
  return CrossedSource{CrossedData::make(ring, group, std::move(alpha), std::move(tau)), std::nullopt, std::nullopt};
}

GSet parseSet(const FiniteGroup& g, const Json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "point") return GSet::point(g);
  if (kind == "regular") return GSet::regular(g);
  if (kind == "cosets") return GSet::cosets(g, subgroupRef(g, j.at("subgroup")));
  if (kind == "table") {
    const auto n = j.at("size").get<std::uint32_t>();
    std::vector<Point> action;
    const auto& rows = j.at("action");
    if (rows.size() != g.order()) throw InputError("G-set table needs one row per group element");
    for (const auto& row : rows) {
      if (row.size() != n) throw InputError("G-set table rows must have one entry per point");
      for (const auto& p : row) action.push_back(p.get<Point>());
    }
    return GSet::fromTable(g, n, std::move(action));
  }
  throw InputError("unknown G-set kind '" + kind + "'");
}

const SwanModule& moduleRef(const std::vector<SwanModule>& ms, const Json& j) {
  const auto name = j.get<std::string>();
  for (const auto& m : ms)
    if (m.name() == name) return m;
  throw InputError("no Swan module named '" + name + "'");
}

void parseSwan(const Json& j, const FiniteGroup& g, ResolvedInstance& out) {
  const Json defaults = Json::parse(R"({"modules": [{"builtin": "trivial"}, {"builtin": "regular"}],
                                         "sequences": [{"builtin": "augmentation"}]})");
  const Json& s = j.is_null() ? defaults : j;
  for (const auto& m : s.value("modules", Json::array())) out.swanModules.push_back(SwanModule::fromJson(g, m));
  for (const auto& m : s.value("maps", Json::array()))
    out.swanMaps.emplace_back(moduleRef(out.swanModules, m.at("source")), moduleRef(out.swanModules, m.at("target")),
                              IntMatrix::fromJson(m.at("matrix")));
  for (const auto& q : s.value("sequences", Json::array())) {
    if (q.value("builtin", std::string{}) == "augmentation") {
      out.swanSequences.push_back(augmentationSequence(g));
      continue;
    }
    const auto i = q.at("i").get<std::size_t>(), p = q.at("p").get<std::size_t>();
    if (i >= out.swanMaps.size() || p >= out.swanMaps.size()) throw InputError("sequence refers to a missing map");
    auto seq = findIntegerSplitting(out.swanMaps[i], out.swanMaps[p], q.value("bound", 2));
    if (!seq) throw InputError("no integral splitting found for the sequence of maps " + std::to_string(i) + ", " + std::to_string(p));
    out.swanSequences.push_back(std::move(*seq));
  }
  // Maps implied by the sequences are checked for naturality as well.
  if (!s.contains("maps"))
    for (const auto& q : out.swanSequences) {
      out.swanMaps.push_back(q.i);
      out.swanMaps.push_back(q.p);
    }
}

ResolvedInstance resolve(const InstanceDescription& d) {
  const Json& doc = d.document;
  std::optional<CrossedSource> crossed;
  if (doc.contains("crossed")) crossed = parseCrossed(doc.at("crossed"));

  std::optional<FiniteGroup> group;
  if (doc.contains("group")) group = FiniteGroup::fromJson(doc.at("group"));
  if (crossed) {
    if (group && !(*group == crossed->data.group())) throw InputError("'group' differs from the crossed data's group");
    group = crossed->data.group();
  }
  if (!group) throw InputError("instance needs 'group' or 'crossed'");
  const FiniteGroup& g = *group;

  if (!doc.contains("category")) throw InputError("instance needs 'category'");
  const Json& cj = doc.at("category");
  const auto kind = cj.at("category").get<std::string>();
  std::optional<ModuleCategory> category;
  if (kind == "TrivialRing") {
    const auto r = FiniteRing::fromJson(cj.at("ring"));
    category = ModuleCategory::trivialRing(r, g);
    if (!crossed) crossed = CrossedSource{CrossedData::untwisted(r, g), std::nullopt, std::nullopt};
  } else if (kind == "TwistedModule") {
    const auto r = FiniteRing::fromJson(cj.at("ring"));
    std::vector<RingAutomorphism> alpha;
    for (const auto& a : cj.at("alpha")) alpha.push_back(RingAutomorphism::fromJson(r, a));
    if (alpha.size() != g.order()) throw InputError("alpha needs one automorphism per group element");
    category = ModuleCategory::twistedModule(r, g, alpha);
    if (!crossed) crossed = CrossedSource{CrossedData::twistedGroupRing(r, g, alpha), std::nullopt, std::nullopt};
  } else if (kind == "RigidCrossed") {
    if (cj.contains("crossed")) {
      if (crossed) throw InputError("crossed data given twice");
      crossed = parseCrossed(cj.at("crossed"));
      if (!(crossed->data.group() == g)) throw InputError("'group' differs from the crossed data's group");
    }
    if (!crossed) throw InputError("RigidCrossed needs crossed data");
  } else {
    throw InputError("unknown category '" + kind + "'");
  }

  std::optional<std::pair<GroupElem, GroupElem>> swapped;
  for (const auto& m : doc.value("mutations", Json::array())) {
    const auto mk = m.at("kind").get<std::string>();
    if (mk == "tau") {
      const auto a = elementRef(g, m.at("g")), b = elementRef(g, m.at("h"));
      crossed->data = crossed->data.withTau(a, b, crossed->data.ring().elementFromJson(m.at("value")));
    } else if (mk == "swap-action") {
      const auto& es = m.at("elements");
      if (es.size() != 2) throw InputError("swap-action takes two elements");
      swapped = std::pair{elementRef(g, es[0]), elementRef(g, es[1])};
    } else {
      throw InputError("unknown mutation '" + mk + "'");
    }
  }
  // Built after mutations so that a corrupted tau reaches the category.
  if (kind == "RigidCrossed") category = ModuleCategory::rigidCrossed(crossed->data);

  std::vector<std::pair<std::string, GSet>> sets;
  std::set<std::string> setNames;
  for (const auto& s : doc.value("sets", Json::parse(R"([{"name": "pt", "kind": "point"}, {"name": "G", "kind": "regular"}])"))) {
    auto name = s.at("name").get<std::string>();
    if (!setNames.insert(name).second) throw InputError("duplicate G-set name '" + name + "'");
    sets.emplace_back(std::move(name), parseSet(g, s));
  }

  std::optional<Subgroup> normal;
  if (doc.contains("normal")) {
    normal = subgroupRef(g, doc.at("normal"));
    if (!g.isNormal(*normal)) throw InputError("'normal' is not a normal subgroup");
  }
  std::vector<Subgroup> subgroups{g.trivialSubgroup(), g.wholeGroup()};
  for (const auto& h : doc.value("subgroups", Json::array())) {
    auto sub = subgroupRef(g, h);
    if (std::find(subgroups.begin(), subgroups.end(), sub) == subgroups.end()) subgroups.push_back(std::move(sub));
  }

  ResolvedInstance out{g,
                       *category,
                       crossed->data,
                       crossed->extension,
                       crossed->base,
                       std::move(sets),
                       std::move(normal),
                       std::move(subgroups),
                       swapped,
                       {},
                       {},
                       {}};
  parseSwan(doc.contains("swan") ? doc.at("swan") : Json(), g, out);
  return out;
}

// Built-in catalog. Suites default to all of them.
const char* const kCatalog = R"json([
  {
    "name": "c2-trivial",
    "description": "C2 acting trivially on free F2-modules, over T = pt and T = C2",
    "group": "C2",
    "category": {"category": "TrivialRing", "ring": {"type": "Zmod", "n": 2}},
    "sets": [{"name": "pt", "kind": "point"}, {"name": "C2", "kind": "regular"}],
    "normal": "whole",
    "swan": {
      "modules": [{"builtin": "trivial"}, {"builtin": "regular"}, {"name": "Z-", "generators": {"a": [[-1]]}}],
      "maps": [
        {"source": "Z", "target": "Z[C2]", "matrix": [[1], [1]]},
        {"source": "Z[C2]", "target": "Z-", "matrix": [[1, -1]]},
        {"source": "Z[C2]", "target": "Z[C2]", "matrix": [[0, 1], [1, 0]]}
      ],
      "sequences": [{"i": 0, "p": 1}, {"builtin": "augmentation"}]
    },
    "suiteBounds": {"crossed-identities": {"exhaustiveLimit": 1000000}}
  },
  {
    "name": "c4-extension",
    "description": "F2[C2] with the crossed data of the extension C2 -> C4 -> C2",
    "crossed": {"fromExtension": {"gamma": "C4", "kernel": ["a2"], "base": {"type": "Zmod", "n": 2}}},
    "category": {"category": "RigidCrossed"},
    "sets": [{"name": "pt", "kind": "point"}, {"name": "C2", "kind": "regular"}],
    "swan": {
      "modules": [{"builtin": "trivial"}, {"builtin": "regular"}, {"name": "Z-", "generators": {"[a]": [[-1]]}}],
      "maps": [
        {"source": "Z", "target": "Z[C4/N2]", "matrix": [[1], [1]]},
        {"source": "Z[C4/N2]", "target": "Z-", "matrix": [[1, -1]]}
      ],
      "sequences": [{"i": 0, "p": 1}]
    },
    "suiteBounds": {"crossed-identities": {"exhaustiveLimit": 1000000}}
  },
  {
    "name": "q8-center",
    "description": "F3[C2] with the crossed data of the extension C2 -> Q8 -> C2xC2",
    "crossed": {"fromExtension": {"gamma": "Q8", "kernel": "center", "base": {"type": "Zmod", "n": 3}}},
    "category": {"category": "RigidCrossed"},
    "sets": [{"name": "pt", "kind": "point"}, {"name": "G/<[i]>", "kind": "cosets", "subgroup": ["[i]"]}],
    "subgroups": [["[i]"]],
    "suiteBounds": {"crossed-identities": {"exhaustiveLimit": 1000000}}
  },
  {
    "name": "s3-coset",
    "description": "S3 acting trivially on free F2-modules, over the coset space S3/<(12)>",
    "group": "S3",
    "category": {"category": "TrivialRing", "ring": {"type": "Zmod", "n": 2}},
    "sets": [{"name": "pt", "kind": "point"}, {"name": "S3/<(12)>", "kind": "cosets", "subgroup": ["(12)"]}],
    "normal": ["(123)"],
    "subgroups": [["(12)"], ["(123)"]]
  },
  {
    "name": "f4-frobenius",
    "description": "C2 acting on free F4-modules through the Frobenius automorphism",
    "group": "C2",
    "category": {"category": "TwistedModule", "ring": {"type": "GF4"}, "alpha": ["id", "frobenius"]},
    "sets": [{"name": "pt", "kind": "point"}, {"name": "C2", "kind": "regular"}],
    "swan": {
      "modules": [{"builtin": "regular"}, {"name": "Z-", "generators": {"a": [[-1]]}}],
      "sequences": [{"builtin": "augmentation"}]
    },
    "suiteBounds": {"crossed-identities": {"exhaustiveLimit": 1000000}}
  },
  {
    "name": "mutant-tau",
    "description": "c4-extension with tau(e, [a]) replaced by the unit a2 of F2[N2]; the cocycle check must fail",
    "crossed": {"fromExtension": {"gamma": "C4", "kernel": ["a2"], "base": {"type": "Zmod", "n": 2}}},
    "category": {"category": "RigidCrossed"},
    "mutations": [{"kind": "tau", "g": 0, "h": 1, "value": 2}],
    "suites": ["crossed-identities"]
  },
  {
    "name": "mutant-action",
    "description": "C4 acting on F4-modules by Frobenius with the actions of a and a2 exchanged; the composition law must fail",
    "group": "C4",
    "category": {"category": "TwistedModule", "ring": {"type": "GF4"}, "alpha": ["id", "frobenius", "id", "frobenius"]},
    "mutations": [{"kind": "swap-action", "elements": ["a", "a2"]}],
    "suites": ["star-axioms"]
  }
])json";

const Json& catalog() {
  static const Json c = Json::parse(kCatalog);
  return c;
}

}  // namespace

Json Bounds::toJson() const {
  return Json{{"maxRank", maxRank}, {"samples", samples}, {"exhaustiveLimit", exhaustiveLimit}};
}

Bounds InstanceDescription::boundsFor(const std::string& suite) const {
  auto it = suiteBounds.find(suite);
  return it == suiteBounds.end() ? bounds : it->second;
}

InstanceDescription parseInstance(const Json& document) {
  if (!document.is_object()) throw InputError("instance description must be a JSON object");
  for (const auto& [k, v] : document.items())
    if (!kTopLevel.contains(k)) throw InputError("unknown instance field '" + k + "'");
  InstanceDescription d;
  d.document = document;
  try {
    d.name = document.value("name", std::string("unnamed"));
    d.description = document.value("description", std::string{});
    if (document.contains("suites")) d.suites = document.at("suites").get<std::vector<std::string>>();
    if (document.contains("bounds")) d.bounds = parseBounds(document.at("bounds"), d.bounds);
    if (document.contains("suiteBounds"))
      for (const auto& [k, v] : document.at("suiteBounds").items()) d.suiteBounds[k] = parseBounds(v, d.bounds);
    if (document.contains("seed")) {
      const auto& v = document.at("seed");
      if (!v.is_number_integer() || (!v.is_number_unsigned() && v.get<std::int64_t>() < 0))
        throw InputError("seed must be a non-negative integer");
      d.seed = v.get<std::uint64_t>();
    }
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed instance: ") + e.what());
  }
  return d;
}

ResolvedInstance resolveInstance(const InstanceDescription& d) {
  try {
    return resolve(d);
  } catch (const InputError&) {
    throw;
  } catch (const Json::exception& e) {
    throw InputError("instance '" + d.name + "': malformed field: " + e.what());
  } catch (const std::exception& e) {
    throw InputError("instance '" + d.name + "': " + e.what());
  }
}

std::vector<CatalogEntry> builtinCatalog() {
  std::vector<CatalogEntry> out;
  for (const auto& j : catalog()) out.push_back({j.at("name").get<std::string>(), j.at("description").get<std::string>()});
  return out;
}

std::optional<Json> builtinInstance(const std::string& name) {
  for (const auto& j : catalog())
    if (j.at("name") == name) return std::optional<Json>(std::in_place, j);
  return std::nullopt;
}

InstanceDescription loadInstance(const std::string& nameOrPath) {
  if (auto j = builtinInstance(nameOrPath)) return parseInstance(*j);
  std::ifstream in(nameOrPath);
  if (!in) throw InputError("no built-in instance or readable file named '" + nameOrPath + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  Json doc;
  try {
    doc = Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw InputError(nameOrPath + ": " + e.what());
  }
  return parseInstance(doc);
}

}  // namespace coeffcat
