#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coeffcat/crossed/crossed_product.hpp"
#include "coeffcat/gcat/module_category.hpp"
#include "coeffcat/groups/gset.hpp"
#include "coeffcat/sampling.hpp"
#include "coeffcat/swan/swan_module.hpp"

namespace coeffcat {

/// Malformed or unresolvable instance description (exit status 2).
class InputError : public Error {
 public:
  using Error::Error;
};

struct Bounds {
  std::uint32_t maxRank = 1;
  std::uint64_t samples = 2'000;
  std::uint64_t exhaustiveLimit = 10'000;

  Budget budget(std::uint64_t seed) const { return Budget{exhaustiveLimit, samples, seed}; }
  Json toJson() const;
};

/// An instance file as read: the document plus the fields the runner needs
/// before resolving anything.
struct InstanceDescription {
  std::string name;
  std::string description;
  Json document;
  std::vector<std::string> suites;
  Bounds bounds;
  /// Per-suite overrides of the bounds, keyed by suite name.
  std::map<std::string, Bounds> suiteBounds;
  std::uint64_t seed = 0x5eed;

  Bounds boundsFor(const std::string& suite) const;
};

/// The mathematical objects an instance names, built and validated.
struct ResolvedInstance {
  FiniteGroup group;
  ModuleCategory category;
  /// Crossed data for the crossed-product suites: the category's own for
  /// RigidCrossed, otherwise the twisted (or plain) group ring it comes from.
  CrossedData crossed;
  /// Set when the crossed data comes from a group extension.
  std::optional<GroupExtension> extension;
  std::optional<FiniteRing> extensionBase;
  std::vector<std::pair<std::string, GSet>> sets;
  std::optional<Subgroup> normal;
  std::vector<Subgroup> subgroups;
  /// Elements whose actions are exchanged in the base category.
  std::optional<std::pair<GroupElem, GroupElem>> swappedAction;
  std::vector<SwanModule> swanModules;
  std::vector<SwanMap> swanMaps;
  std::vector<SplitSequence> swanSequences;
};

/// Parses the top-level fields; throws InputError.
InstanceDescription parseInstance(const Json& document);
/// Builds every referenced object; throws InputError for unresolved names or
/// objects that cannot be constructed.
ResolvedInstance resolveInstance(const InstanceDescription& d);

struct CatalogEntry {
  std::string name;
  std::string description;
};
std::vector<CatalogEntry> builtinCatalog();
std::optional<Json> builtinInstance(const std::string& name);

/// A built-in name or a path to a JSON file.
InstanceDescription loadInstance(const std::string& nameOrPath);

}  // namespace coeffcat
