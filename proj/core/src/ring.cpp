#include "coeffcat/base/ring.hpp"

#include <algorithm>

namespace coeffcat {

namespace {

std::vector<RingElem> toDigits(RingElem a, std::uint32_t radix, std::uint32_t count) {
  std::vector<RingElem> d(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    d[i] = a % radix;
    a /= radix;
  }
  return d;
}

RingElem fromDigits(const std::vector<RingElem>& d, std::uint32_t radix) {
  RingElem a = 0;
  for (std::size_t i = d.size(); i-- > 0;) a = a * radix + d[i];
  return a;
}

std::uint32_t checkedPower(std::uint32_t base, std::uint32_t exp) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    r *= base;
    if (r > FiniteRing::kSizeLimit) {
      throw LimitError("ring would have more than " + std::to_string(FiniteRing::kSizeLimit) + " elements");
    }
  }
  return static_cast<std::uint32_t>(r);
}

}  // namespace

FiniteRing FiniteRing::finish(std::shared_ptr<Data> d) {
  const std::uint32_t n = d->n;
  if (n <= kTableLimit) {
    d->addTable.resize(std::size_t{n} * n);
    d->mulTable.resize(std::size_t{n} * n);
    d->negTable.resize(n);
    for (RingElem a = 0; a < n; ++a) {
      d->negTable[a] = d->ops.neg(a);
      for (RingElem b = 0; b < n; ++b) {
        d->addTable[a * n + b] = d->ops.add(a, b);
        d->mulTable[a * n + b] = d->ops.mul(a, b);
      }
    }
  }
  FiniteRing r(d);
  if (n <= kEagerUnitLimit) {
    d->inverseTable.assign(n, n);
    for (RingElem a = 0; a < n; ++a) {
      if (d->inverseTable[a] != n) continue;
      for (RingElem b = 0; b < n; ++b) {
        if (r.mul(a, b) == d->one && r.mul(b, a) == d->one) {
          d->inverseTable[a] = b;
          d->inverseTable[b] = a;
          break;
        }
      }
    }
  }
  return r;
}

FiniteRing FiniteRing::zmod(std::uint32_t n) {
  if (n == 0) throw Error("Z/0 is not finite");
  if (n > kSizeLimit) throw LimitError("Z/n with n above the ring size limit");
  auto d = std::make_shared<Data>();
  d->kind = Kind::Zmod;
  d->n = n;
  d->one = 1 % n;
  d->ops.add = [n](RingElem a, RingElem b) { return static_cast<RingElem>((std::uint64_t{a} + b) % n); };
  d->ops.mul = [n](RingElem a, RingElem b) { return static_cast<RingElem>((std::uint64_t{a} * b) % n); };
  d->ops.neg = [n](RingElem a) { return static_cast<RingElem>((n - a) % n); };
  d->ops.name = [](RingElem a) { return std::to_string(a); };
  d->description = Json{{"type", "Zmod"}, {"n", n}};
  return finish(std::move(d));
}

FiniteRing FiniteRing::galoisField4() {
  auto d = std::make_shared<Data>();
  d->kind = Kind::GF4;
  d->n = 4;
  d->one = 1;
  // a + b w with w^2 = w + 1.
  d->ops.add = [](RingElem a, RingElem b) { return a ^ b; };
  d->ops.mul = [](RingElem x, RingElem y) {
    const RingElem a = x & 1, b = x >> 1, c = y & 1, e = y >> 1;
    const RingElem bw = b & e;  // coefficient of w^2
    const RingElem c0 = (a & c) ^ bw;
    const RingElem c1 = (a & e) ^ (b & c) ^ bw;
    return static_cast<RingElem>(c0 | (c1 << 1));
  };
  d->ops.neg = [](RingElem a) { return a; };
  d->ops.name = [](RingElem a) {
    static const char* names[] = {"0", "1", "w", "w+1"};
    return std::string(names[a]);
  };
  d->description = Json{{"type", "GF4"}};
  return finish(std::move(d));
}

FiniteRing FiniteRing::matrix(const FiniteRing& base, std::uint32_t k) {
  if (k == 0) throw Error("matrix ring of dimension 0");
  const std::uint32_t b = base.size();
  const std::uint32_t n = checkedPower(b, k * k);
  auto d = std::make_shared<Data>();
  d->kind = Kind::Matrix;
  d->n = n;
  d->dim = k;
  d->base = std::make_shared<const FiniteRing>(base);
  const FiniteRing r = base;
  d->ops.add = [r, b, k](RingElem x, RingElem y) {
    auto dx = toDigits(x, b, k * k), dy = toDigits(y, b, k * k);
    for (std::uint32_t i = 0; i < k * k; ++i) dx[i] = r.add(dx[i], dy[i]);
    return fromDigits(dx, b);
  };
  d->ops.neg = [r, b, k](RingElem x) {
    auto dx = toDigits(x, b, k * k);
    for (auto& e : dx) e = r.neg(e);
    return fromDigits(dx, b);
  };
  d->ops.mul = [r, b, k](RingElem x, RingElem y) {
    auto dx = toDigits(x, b, k * k), dy = toDigits(y, b, k * k);
    std::vector<RingElem> out(k * k, 0);
    for (std::uint32_t i = 0; i < k; ++i)
      for (std::uint32_t j = 0; j < k; ++j) {
        RingElem acc = 0;
        for (std::uint32_t l = 0; l < k; ++l) acc = r.add(acc, r.mul(dx[i * k + l], dy[l * k + j]));
        out[i * k + j] = acc;
      }
    return fromDigits(out, b);
  };
  d->ops.name = [r, b, k](RingElem x) {
    auto dx = toDigits(x, b, k * k);
    std::string s = "[";
    for (std::uint32_t i = 0; i < k; ++i) {
      s += i ? ",[" : "[";
      for (std::uint32_t j = 0; j < k; ++j) s += (j ? "," : "") + r.elementName(dx[i * k + j]);
      s += "]";
    }
    return s + "]";
  };
  std::vector<RingElem> id(k * k, 0);
  for (std::uint32_t i = 0; i < k; ++i) id[i * k + i] = base.one();
  d->one = fromDigits(id, b);
  d->description = Json{{"type", "Matrix"}, {"k", k}, {"base", base.description()}};
  return finish(std::move(d));
}

FiniteRing FiniteRing::groupRing(const FiniteRing& base, const FiniteGroup& group) {
  const std::uint32_t b = base.size();
  const std::uint32_t m = group.order();
  const std::uint32_t n = checkedPower(b, m);
  auto d = std::make_shared<Data>();
  d->kind = Kind::GroupRing;
  d->n = n;
  d->dim = m;
  d->base = std::make_shared<const FiniteRing>(base);
  d->group = group;
  const FiniteRing r = base;
  d->ops.add = [r, b, m](RingElem x, RingElem y) {
    auto dx = toDigits(x, b, m), dy = toDigits(y, b, m);
    for (std::uint32_t i = 0; i < m; ++i) dx[i] = r.add(dx[i], dy[i]);
    return fromDigits(dx, b);
  };
  d->ops.neg = [r, b, m](RingElem x) {
    auto dx = toDigits(x, b, m);
    for (auto& e : dx) e = r.neg(e);
    return fromDigits(dx, b);
  };
  d->ops.mul = [r, group, b, m](RingElem x, RingElem y) {
    auto dx = toDigits(x, b, m), dy = toDigits(y, b, m);
    std::vector<RingElem> out(m, 0);
    for (GroupElem g = 0; g < m; ++g) {
      if (dx[g] == 0) continue;
      for (GroupElem h = 0; h < m; ++h) {
        if (dy[h] == 0) continue;
        const GroupElem gh = group.mul(g, h);
        out[gh] = r.add(out[gh], r.mul(dx[g], dy[h]));
      }
    }
    return fromDigits(out, b);
  };
  d->ops.name = [r, group, b, m](RingElem x) {
    auto dx = toDigits(x, b, m);
    std::string s;
    for (GroupElem g = 0; g < m; ++g) {
      if (dx[g] == 0) continue;
      if (!s.empty()) s += "+";
      if (dx[g] != r.one()) s += r.elementName(dx[g]) + "*";
      s += group.elementName(g);
    }
    return s.empty() ? std::string("0") : s;
  };
  std::vector<RingElem> one(m, 0);
  one[group.identity()] = base.one();
  d->one = fromDigits(one, b);
  d->description = Json{{"type", "GroupRing"}, {"base", base.description()}, {"group", group.name()}};
  return finish(std::move(d));
}

FiniteRing FiniteRing::fromTables(std::vector<std::vector<RingElem>> add, std::vector<std::vector<RingElem>> mul,
                                  std::vector<std::string> names) {
  const auto n = static_cast<std::uint32_t>(add.size());
  if (n == 0 || mul.size() != n) throw Error("ring tables must be non-empty and of equal size");
  if (n > kTableLimit) throw LimitError("explicit ring tables are limited to 256 elements");
  std::vector<RingElem> at(std::size_t{n} * n), mt(std::size_t{n} * n);
  for (RingElem a = 0; a < n; ++a) {
    if (add[a].size() != n || mul[a].size() != n) throw Error("ring tables must be square");
    for (RingElem b = 0; b < n; ++b) {
      if (add[a][b] >= n || mul[a][b] >= n) throw Error("ring table entry out of range");
      at[a * n + b] = add[a][b];
      mt[a * n + b] = mul[a][b];
    }
  }
  for (RingElem a = 0; a < n; ++a)
    if (at[a] != a || at[a * n] != a)
      throw AxiomViolation("element 0 is not the additive identity", Json{{"a", a}});
  std::vector<RingElem> neg(n, n);
  for (RingElem a = 0; a < n; ++a) {
    for (RingElem b = 0; b < n; ++b)
      if (at[a * n + b] == 0) neg[a] = b;
    if (neg[a] == n) throw AxiomViolation("element has no additive inverse", Json{{"a", a}});
  }
  std::optional<RingElem> one;
  for (RingElem e = 0; e < n && !one; ++e) {
    bool ok = true;
    for (RingElem a = 0; a < n && ok; ++a) ok = mt[e * n + a] == a && mt[a * n + e] == a;
    if (ok) one = e;
  }
  if (!one) throw AxiomViolation("multiplication has no identity", Json::object());
  if (names.empty())
    for (RingElem a = 0; a < n; ++a) names.push_back(std::to_string(a));
  if (names.size() != n) throw Error("ring element name list has the wrong length");

  auto d = std::make_shared<Data>();
  d->kind = Kind::Table;
  d->n = n;
  d->one = *one;
  d->ops.add = [at, n](RingElem a, RingElem b) { return at[a * n + b]; };
  d->ops.mul = [mt, n](RingElem a, RingElem b) { return mt[a * n + b]; };
  d->ops.neg = [neg](RingElem a) { return neg[a]; };
  d->ops.name = [names](RingElem a) { return names[a]; };
  d->description = Json{{"type", "Table"}, {"add", add}, {"mul", mul}};
  if (names.size() == n) d->description["names"] = names;
  FiniteRing r = finish(std::move(d));

  Budget budget;
  for (const auto& check : verifyRingAxioms(r, budget)) {
    if (check.failed()) throw AxiomViolation("ring tables violate " + check.id, *check.witness);
  }
  return r;
}

FiniteRing FiniteRing::fromOperations(std::uint32_t size, Operations ops, Json description) {
  if (size == 0) throw Error("empty ring");
  if (size > kSizeLimit) throw LimitError("ring exceeds the size limit");
  auto d = std::make_shared<Data>();
  d->kind = Kind::Custom;
  d->n = size;
  d->one = ops.one;
  d->ops = std::move(ops);
  d->description = std::move(description);
  return finish(std::move(d));
}

FiniteRing FiniteRing::fromJson(const Json& j) {
  if (!j.is_object() || !j.contains("type")) throw Error("ring description needs a \"type\" field");
  const auto type = j.at("type").get<std::string>();
  if (type == "Zmod") return zmod(j.at("n").get<std::uint32_t>());
  if (type == "GF4") return galoisField4();
  if (type == "Matrix") return matrix(fromJson(j.at("base")), j.at("k").get<std::uint32_t>());
  if (type == "GroupRing") return groupRing(fromJson(j.at("base")), FiniteGroup::fromJson(j.at("group")));
  if (type == "Table") {
    std::vector<std::string> names;
    if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
    return fromTables(j.at("add").get<std::vector<std::vector<RingElem>>>(),
                      j.at("mul").get<std::vector<std::vector<RingElem>>>(), std::move(names));
  }
  throw Error("unknown ring type '" + type + "'");
}

RingElem FiniteRing::fromInteger(std::int64_t k) const {
  RingElem acc = 0;
  const RingElem step = k < 0 ? neg(one()) : one();
  const std::int64_t count = k < 0 ? -k : k;
  for (std::int64_t i = 0; i < count; ++i) acc = add(acc, step);
  return acc;
}

std::optional<RingElem> FiniteRing::tryInverse(RingElem a) const {
  if (!d_->inverseTable.empty()) {
    const RingElem b = d_->inverseTable[a];
    if (b == d_->n) return std::nullopt;
    return b;
  }
  for (RingElem b = 0; b < d_->n; ++b)
    if (mul(a, b) == one() && mul(b, a) == one()) return b;
  return std::nullopt;
}

bool FiniteRing::isUnit(RingElem a) const { return tryInverse(a).has_value(); }

RingElem FiniteRing::inverse(RingElem a) const {
  auto b = tryInverse(a);
  if (!b) throw AxiomViolation("element is not a unit", Json{{"element", elementName(a)}});
  return *b;
}

std::vector<RingElem> FiniteRing::units() const {
  std::vector<RingElem> u;
  for (RingElem a = 0; a < d_->n; ++a)
    if (isUnit(a)) u.push_back(a);
  return u;
}

bool FiniteRing::isCentral(RingElem a) const {
  for (RingElem b = 0; b < d_->n; ++b)
    if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool FiniteRing::isCommutative() const {
  for (RingElem a = 0; a < d_->n; ++a)
    for (RingElem b = a + 1; b < d_->n; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::uint32_t FiniteRing::characteristic() const {
  std::uint32_t k = 1;
  for (RingElem x = one(); x != 0; x = add(x, one())) ++k;
  return k;
}

std::string FiniteRing::elementName(RingElem a) const { return d_->ops.name(a); }

RingElem FiniteRing::elementFromJson(const Json& j) const {
  if (j.is_number_integer() || j.is_number_unsigned()) {
    const auto v = j.get<std::int64_t>();
    if (d_->kind == Kind::Zmod) return fromInteger(v);
    if (v < 0 || v >= d_->n) throw Error("ring element index out of range");
    return static_cast<RingElem>(v);
  }
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    for (RingElem a = 0; a < d_->n; ++a)
      if (elementName(a) == s) return a;
    throw Error("ring has no element named '" + s + "'");
  }
  throw Error("ring element must be a name or an index");
}

std::string FiniteRing::label() const {
  switch (d_->kind) {
    case Kind::Zmod:
      return "Z/" + std::to_string(d_->n);
    case Kind::GF4:
      return "F4";
    case Kind::Matrix:
      return "M_" + std::to_string(matrixDimension()) + "(" + baseRing().label() + ")";
    case Kind::GroupRing:
      return baseRing().label() + "[" + groupRingGroup().name() + "]";
    case Kind::Table:
    case Kind::Custom:
      break;
  }
  if (d_->description.is_object() && d_->description.contains("name")) return d_->description["name"].get<std::string>();
  return "ring of order " + std::to_string(d_->n);
}

const FiniteRing& FiniteRing::baseRing() const {
  if (!d_->base) throw Error("ring has no coefficient ring");
  return *d_->base;
}

const FiniteGroup& FiniteRing::groupRingGroup() const {
  if (!d_->group) throw Error("ring is not a group ring");
  return *d_->group;
}

std::uint32_t FiniteRing::matrixDimension() const {
  if (d_->kind != Kind::Matrix) throw Error("ring is not a matrix ring");
  return d_->dim;
}

std::vector<RingElem> FiniteRing::components(RingElem a) const {
  const std::uint32_t count = d_->kind == Kind::Matrix ? d_->dim * d_->dim : d_->dim;
  return toDigits(a, baseRing().size(), count);
}

RingElem FiniteRing::fromComponents(const std::vector<RingElem>& digits) const {
  const std::uint32_t count = d_->kind == Kind::Matrix ? d_->dim * d_->dim : d_->dim;
  if (digits.size() != count) throw MismatchError("wrong number of components");
  return fromDigits(digits, baseRing().size());
}

RingElem FiniteRing::groupRingBasis(RingElem s, GroupElem k) const {
  std::vector<RingElem> digits(groupRingGroup().order(), 0);
  digits.at(k) = s;
  return fromDigits(digits, baseRing().size());
}

std::vector<CheckResult> verifyRingAxioms(const FiniteRing& r, const Budget& budget) {
  const std::uint64_t n = r.size();
  // Rings with at most 64 elements are always checked on every triple.
  Budget local = budget;
  local.exhaustiveLimit = std::max<std::uint64_t>(budget.exhaustiveLimit, 64 * 64 * 64);
  auto name = [&](RingElem x) { return r.elementName(x); };
  CheckBuilder addAssoc("ring.add-associative", "(a + b) + c = a + (b + c)");
  CheckBuilder addComm("ring.add-commutative", "a + b = b + a");
  CheckBuilder mulAssoc("ring.mul-associative", "(a b) c = a (b c)");
  CheckBuilder distrib("ring.distributive", "a (b + c) = a b + a c and (a + b) c = a c + b c");
  CheckBuilder unit("ring.unit", "1 a = a = a 1, a + 0 = a, a + (-a) = 0");

  auto stats = sweep({n, n, n}, local.derive("ring-triples"), [&](std::span<const std::uint64_t> i) {
    const auto a = static_cast<RingElem>(i[0]), b = static_cast<RingElem>(i[1]), c = static_cast<RingElem>(i[2]);
    Json w{{"a", name(a)}, {"b", name(b)}, {"c", name(c)}};
    if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) addAssoc.fail(w);
    if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) mulAssoc.fail(w);
    if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c)) ||
        r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c)))
      distrib.fail(w);
    return true;
  });
  for (auto* c : {&addAssoc, &mulAssoc, &distrib}) {
    c->merge(stats.coverage);
    c->count(stats.visited);
  }
  auto pairStats = sweep({n, n}, local.derive("ring-pairs"), [&](std::span<const std::uint64_t> i) {
    const auto a = static_cast<RingElem>(i[0]), b = static_cast<RingElem>(i[1]);
    if (r.add(a, b) != r.add(b, a)) addComm.fail(Json{{"a", name(a)}, {"b", name(b)}});
    return true;
  });
  addComm.merge(pairStats.coverage);
  addComm.count(pairStats.visited);
  auto single = sweep({n}, local.derive("ring-singles"), [&](std::span<const std::uint64_t> i) {
    const auto a = static_cast<RingElem>(i[0]);
    if (r.mul(r.one(), a) != a || r.mul(a, r.one()) != a || r.add(a, r.zero()) != a ||
        r.add(a, r.neg(a)) != r.zero())
      unit.fail(Json{{"a", name(a)}});
    return true;
  });
  unit.merge(single.coverage);
  unit.count(single.visited);
  std::vector<CheckResult> out;
  for (auto* c : {&addAssoc, &addComm, &mulAssoc, &distrib, &unit}) out.push_back(std::move(*c).finish());
  return out;
}

bool FiniteRing::operator==(const FiniteRing& other) const {
  return d_ == other.d_ || (d_->n == other.d_->n && d_->description == other.d_->description);
}

Unit makeUnit(const FiniteRing& r, RingElem a) { return Unit{a, r.inverse(a)}; }

}  // namespace coeffcat
