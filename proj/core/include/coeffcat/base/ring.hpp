#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coeffcat/check.hpp"
#include "coeffcat/groups/group.hpp"
#include "coeffcat/sampling.hpp"

namespace coeffcat {

/// Canonical index of a ring element. Index 0 is always the zero element, so
/// equality of elements is index equality.
using RingElem = std::uint32_t;

/// A finite ring with enumerable elements. Small rings (at most 256 elements)
/// carry explicit addition and multiplication tables; larger ones compute
/// structurally from their description.
class FiniteRing {
 public:
  static constexpr std::uint32_t kTableLimit = 256;
  static constexpr std::uint32_t kSizeLimit = 65536;
  static constexpr std::uint32_t kEagerUnitLimit = 1024;

  enum class Kind { Zmod, Matrix, GroupRing, GF4, Table, Custom };

  static FiniteRing zmod(std::uint32_t n);
  /// k x k matrices over `base`; entry (i, j) is digit i*k+j of the element
  /// index in base |base|.
  static FiniteRing matrix(const FiniteRing& base, std::uint32_t k);
  /// base[K]; the coefficient of group element k is digit k in base |base|.
  static FiniteRing groupRing(const FiniteRing& base, const FiniteGroup& group);
  /// The field with four elements 0, 1, w, w+1 (index a + 2b for a + b w).
  static FiniteRing galoisField4();
  /// Hand-supplied tables; zero must be index 0. Ring axioms are checked and a
  /// violation is reported with the failing triple.
  static FiniteRing fromTables(std::vector<std::vector<RingElem>> add, std::vector<std::vector<RingElem>> mul,
                               std::vector<std::string> names = {});

  struct Operations {
    std::function<RingElem(RingElem, RingElem)> add;
    std::function<RingElem(RingElem, RingElem)> mul;
    std::function<RingElem(RingElem)> neg;
    std::function<std::string(RingElem)> name;
    RingElem one = 0;
  };
  /// A ring computed by the given operations (used for crossed products).
  /// Axioms are not checked here; callers verify them separately.
  static FiniteRing fromOperations(std::uint32_t size, Operations ops, Json description);

  /// {"type":"Zmod","n":4}, {"type":"Matrix","k":2,"base":...},
  /// {"type":"GroupRing","base":...,"group":...}, {"type":"GF4"},
  /// {"type":"Table","add":[[...]],"mul":[[...]]}.
  static FiniteRing fromJson(const Json& j);

  std::uint32_t size() const { return d_->n; }
  Kind kind() const { return d_->kind; }
  RingElem zero() const { return 0; }
  RingElem one() const { return d_->one; }

  RingElem add(RingElem a, RingElem b) const {
    return d_->addTable.empty() ? d_->ops.add(a, b) : d_->addTable[a * d_->n + b];
  }
  RingElem mul(RingElem a, RingElem b) const {
    return d_->mulTable.empty() ? d_->ops.mul(a, b) : d_->mulTable[a * d_->n + b];
  }
  RingElem neg(RingElem a) const { return d_->negTable.empty() ? d_->ops.neg(a) : d_->negTable[a]; }
  RingElem sub(RingElem a, RingElem b) const { return add(a, neg(b)); }
  RingElem mul(RingElem a, RingElem b, RingElem c) const { return mul(mul(a, b), c); }
  /// n * 1
  RingElem fromInteger(std::int64_t n) const;

  bool isUnit(RingElem a) const;
  /// Throws AxiomViolation when `a` is not a unit.
  RingElem inverse(RingElem a) const;
  std::optional<RingElem> tryInverse(RingElem a) const;
  std::vector<RingElem> units() const;
  bool isCentral(RingElem a) const;
  bool isCommutative() const;
  /// Characteristic: additive order of one.
  std::uint32_t characteristic() const;

  std::string elementName(RingElem a) const;
  /// Index of the element with the given name, or a numeric index.
  RingElem elementFromJson(const Json& j) const;
  const Json& description() const { return d_->description; }
  /// Short human-readable name such as "Z/2", "M_2(Z/2)" or "Z/3[C2]".
  std::string label() const;

  // Structured access for rings built by groupRing / matrix.
  const FiniteRing& baseRing() const;
  const FiniteGroup& groupRingGroup() const;
  std::uint32_t matrixDimension() const;
  std::vector<RingElem> components(RingElem a) const;
  RingElem fromComponents(const std::vector<RingElem>& digits) const;
  /// s * k in base[K].
  RingElem groupRingBasis(RingElem s, GroupElem k) const;

  /// Same shared data, or equal descriptions.
  bool operator==(const FiniteRing& other) const;

 private:
  struct Data {
    Kind kind = Kind::Zmod;
    std::uint32_t n = 0;
    RingElem one = 0;
    Operations ops;
    std::vector<RingElem> addTable, mulTable, negTable;
    std::vector<RingElem> inverseTable;  // n means "not a unit"; empty when lazy
    std::shared_ptr<const FiniteRing> base;  // Matrix / GroupRing coefficient ring
    std::optional<FiniteGroup> group;
    std::uint32_t dim = 0;               // matrix dimension or group order
    Json description;
  };
  explicit FiniteRing(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  static FiniteRing finish(std::shared_ptr<Data> d);

  std::shared_ptr<const Data> d_;
};

/// Ring axiom checks: additive group, associativity, distributivity, unit laws.
/// Exhaustive over triples when |R|^3 is within budget, seeded triples otherwise.
std::vector<CheckResult> verifyRingAxioms(const FiniteRing& r, const Budget& budget);

/// A unit of a ring together with its inverse.
struct Unit {
  RingElem element = 0;
  RingElem inverse = 0;
};

Unit makeUnit(const FiniteRing& r, RingElem a);

}  // namespace coeffcat
