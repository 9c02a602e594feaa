#include "coeffcat/base/automorphism.hpp"

#include <numeric>

namespace coeffcat {

RingAutomorphism::RingAutomorphism(FiniteRing ring, std::vector<RingElem> map, std::string name)
    : ring_(std::move(ring)), map_(std::move(map)), name_(std::move(name)) {
  const std::uint32_t n = ring_.size();
  if (map_.size() != n) throw Error("automorphism table has the wrong length");
  inverse_.assign(n, n);
  for (RingElem a = 0; a < n; ++a) {
    if (map_[a] >= n) throw Error("automorphism value out of range");
    if (inverse_[map_[a]] != n)
      throw AxiomViolation("automorphism is not injective", Json{{"image", ring_.elementName(map_[a])}});
    inverse_[map_[a]] = a;
  }
  if (map_[ring_.one()] != ring_.one()) throw AxiomViolation("automorphism does not fix 1", Json::object());
  Budget budget;
  budget.exhaustiveLimit = std::max<std::uint64_t>(budget.exhaustiveLimit, 64 * 64);
  sweep({n, n}, budget.derive("automorphism"), [&](std::span<const std::uint64_t> i) {
    const auto a = static_cast<RingElem>(i[0]), b = static_cast<RingElem>(i[1]);
    if (map_[ring_.add(a, b)] != ring_.add(map_[a], map_[b]) || map_[ring_.mul(a, b)] != ring_.mul(map_[a], map_[b]))
      throw AxiomViolation("map does not preserve the ring operations",
                           Json{{"a", ring_.elementName(a)}, {"b", ring_.elementName(b)}});
    return true;
  });
  if (name_.empty()) name_ = isIdentity() ? "id" : "aut";
}

RingAutomorphism RingAutomorphism::identity(const FiniteRing& r) {
  std::vector<RingElem> m(r.size());
  std::iota(m.begin(), m.end(), RingElem{0});
  return RingAutomorphism(r, m, m, "id");
}

RingAutomorphism RingAutomorphism::conjugation(const FiniteRing& r, RingElem unit) {
  const RingElem inv = r.inverse(unit);
  std::vector<RingElem> m(r.size());
  for (RingElem a = 0; a < r.size(); ++a) m[a] = r.mul(unit, a, inv);
  return RingAutomorphism(r, std::move(m), "conj(" + r.elementName(unit) + ")");
}

RingAutomorphism RingAutomorphism::frobenius(const FiniteRing& r) {
  if (!r.isCommutative()) throw Error("Frobenius needs a commutative ring");
  const std::uint32_t p = r.characteristic();
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw Error("Frobenius needs prime characteristic");
  std::vector<RingElem> m(r.size());
  for (RingElem a = 0; a < r.size(); ++a) {
    RingElem x = r.one();
    for (std::uint32_t k = 0; k < p; ++k) x = r.mul(x, a);
    m[a] = x;
  }
  return RingAutomorphism(r, std::move(m), "frobenius");
}

RingAutomorphism RingAutomorphism::fromJson(const FiniteRing& r, const Json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "id") return identity(r);
    if (s == "frobenius") return frobenius(r);
    throw Error("unknown automorphism '" + s + "'");
  }
  if (j.is_object() && j.contains("map")) {
    std::vector<RingElem> m;
    for (const auto& e : j.at("map")) m.push_back(r.elementFromJson(e));
    return RingAutomorphism(r, std::move(m), j.value("name", std::string{}));
  }
  if (j.is_object() && j.contains("conjugation")) return conjugation(r, r.elementFromJson(j.at("conjugation")));
  throw Error("automorphism must be \"id\", \"frobenius\", {\"map\": [...]} or {\"conjugation\": u}");
}

RingAutomorphism RingAutomorphism::inverse() const {
  return RingAutomorphism(ring_, inverse_, map_, isIdentity() ? name_ : name_ + "^-1");
}

bool RingAutomorphism::isIdentity() const {
  for (RingElem a = 0; a < map_.size(); ++a)
    if (map_[a] != a) return false;
  return true;
}

Json RingAutomorphism::toJson() const {
  Json images = Json::array();
  for (auto x : map_) images.push_back(ring_.elementName(x));
  return Json{{"name", name_}, {"map", images}};
}

RingAutomorphism composeAutomorphisms(const RingAutomorphism& outer, const RingAutomorphism& inner) {
  if (!(outer.ring() == inner.ring())) throw MismatchError("composing automorphisms of different rings");
  const std::uint32_t n = outer.ring().size();
  std::vector<RingElem> m(n), inv(n);
  for (RingElem a = 0; a < n; ++a) {
    m[a] = outer(inner(a));
    inv[a] = inner.applyInverse(outer.applyInverse(a));
  }
  std::string name = outer.isIdentity() ? inner.name() : inner.isIdentity() ? outer.name() : outer.name() + "*" + inner.name();
  return RingAutomorphism(outer.ring(), std::move(m), std::move(inv), std::move(name));
}

}  // namespace coeffcat
