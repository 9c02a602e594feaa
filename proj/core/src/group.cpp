#include "coeffcat/groups/group.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <numeric>
#include <set>

namespace coeffcat {

namespace {

constexpr std::uint32_t kMaxGroupOrder = 4096;

std::vector<std::vector<GroupElem>> tableFrom(std::uint32_t n,
                                              const auto& mul) {
  std::vector<std::vector<GroupElem>> t(n, std::vector<GroupElem>(n));
  for (GroupElem a = 0; a < n; ++a)
    for (GroupElem b = 0; b < n; ++b) t[a][b] = mul(a, b);
  return t;
}

}  // namespace

FiniteGroup FiniteGroup::fromTable(std::vector<std::vector<GroupElem>> table,
                                   std::vector<std::string> elementNames, std::string name) {
  const auto n = static_cast<std::uint32_t>(table.size());
  if (n == 0) throw Error("group table is empty");
  if (n > kMaxGroupOrder) throw LimitError("group order " + std::to_string(n) + " exceeds the limit");
  auto d = std::make_shared<Data>();
  d->n = n;
  d->table.reserve(std::size_t{n} * n);
  for (const auto& row : table) {
    if (row.size() != n) throw Error("group table is not square");
    for (auto x : row) {
      if (x >= n) throw Error("group table entry out of range");
      d->table.push_back(x);
    }
  }
  auto m = [&](GroupElem a, GroupElem b) { return d->table[a * n + b]; };
  for (GroupElem a = 0; a < n; ++a)
    for (GroupElem b = 0; b < n; ++b)
      for (GroupElem c = 0; c < n; ++c)
        if (m(m(a, b), c) != m(a, m(b, c)))
          throw AxiomViolation("group multiplication is not associative", Json{{"a", a}, {"b", b}, {"c", c}});
  std::optional<GroupElem> id;
  for (GroupElem e = 0; e < n && !id; ++e) {
    bool ok = true;
    for (GroupElem a = 0; a < n && ok; ++a) ok = m(e, a) == a && m(a, e) == a;
    if (ok) id = e;
  }
  if (!id) throw AxiomViolation("group table has no identity", Json::object());
  d->identity = *id;
  d->inverse.assign(n, n);
  for (GroupElem a = 0; a < n; ++a) {
    for (GroupElem b = 0; b < n; ++b)
      if (m(a, b) == *id && m(b, a) == *id) d->inverse[a] = b;
    if (d->inverse[a] == n) throw AxiomViolation("group element has no inverse", Json{{"element", a}});
  }
  if (elementNames.empty()) {
    for (GroupElem a = 0; a < n; ++a) elementNames.push_back("g" + std::to_string(a));
  }
  if (elementNames.size() != n) throw Error("group element name list has the wrong length");
  if (std::set<std::string>(elementNames.begin(), elementNames.end()).size() != n)
    throw Error("group element names are not distinct");
  d->names = std::move(elementNames);
  d->name = name.empty() ? "G" + std::to_string(n) : std::move(name);
  return FiniteGroup(std::move(d));
}

FiniteGroup FiniteGroup::trivial() { return fromTable({{0}}, {"e"}, "1"); }

FiniteGroup FiniteGroup::cyclic(std::uint32_t n) {
  if (n == 0) throw Error("cyclic group of order 0");
  std::vector<std::string> names{"e"};
  for (std::uint32_t k = 1; k < n; ++k) names.push_back(k == 1 ? "a" : "a" + std::to_string(k));
  return fromTable(tableFrom(n, [n](GroupElem a, GroupElem b) { return (a + b) % n; }), std::move(names),
                   "C" + std::to_string(n));
}

FiniteGroup FiniteGroup::kleinFour() {
  return fromTable(tableFrom(4, [](GroupElem a, GroupElem b) { return a ^ b; }), {"e", "a", "b", "ab"}, "C2xC2");
}

FiniteGroup FiniteGroup::symmetric3() {
  using Perm = std::array<int, 3>;
  const std::array<Perm, 6> perms{{{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}}};
  auto index = [&](const Perm& p) {
    return static_cast<GroupElem>(std::find(perms.begin(), perms.end(), p) - perms.begin());
  };
  // (s t)(i) = s(t(i)): apply t first.
  return fromTable(tableFrom(6,
                             [&](GroupElem a, GroupElem b) {
                               Perm r{};
                               for (int i = 0; i < 3; ++i) r[i] = perms[a][perms[b][i]];
                               return index(r);
                             }),
                   {"()", "(12)", "(13)", "(23)", "(123)", "(132)"}, "S3");
}

FiniteGroup FiniteGroup::quaternion8() {
  // index = 2 * unit + sign, unit in {1, i, j, k}, sign 1 means negative.
  static constexpr int unitMul[4][4][2] = {
      {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
      {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
      {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
      {{3, 0}, {2, 0}, {1, 1}, {0, 1}},
  };
  return fromTable(tableFrom(8,
                             [](GroupElem a, GroupElem b) {
                               const auto& [u, s] = unitMul[a / 2][b / 2];
                               const int sign = (s + static_cast<int>(a % 2) + static_cast<int>(b % 2)) % 2;
                               return static_cast<GroupElem>(2 * u + sign);
                             }),
                   {"1", "-1", "i", "-i", "j", "-j", "k", "-k"}, "Q8");
}

FiniteGroup FiniteGroup::dihedral4() {
  // index = a + 4 b for r^a s^b; s r s = r^-1.
  return fromTable(tableFrom(8,
                             [](GroupElem x, GroupElem y) {
                               const int a = x % 4, b = x / 4, c = y % 4, d = y / 4;
                               const int rot = ((a + (b ? -c : c)) % 4 + 4) % 4;
                               return static_cast<GroupElem>(rot + 4 * ((b + d) % 2));
                             }),
                   {"e", "r", "r2", "r3", "s", "rs", "r2s", "r3s"}, "D4");
}

FiniteGroup FiniteGroup::directProduct(const FiniteGroup& a, const FiniteGroup& b) {
  const std::uint32_t nb = b.order();
  const std::uint32_t n = a.order() * nb;
  std::vector<std::string> names;
  for (GroupElem x = 0; x < a.order(); ++x)
    for (GroupElem y = 0; y < nb; ++y) names.push_back("(" + a.elementName(x) + "," + b.elementName(y) + ")");
  return fromTable(tableFrom(n,
                             [&](GroupElem x, GroupElem y) {
                               return a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
                             }),
                   std::move(names), a.name() + "x" + b.name());
}

std::vector<std::string> FiniteGroup::catalogNames() { return {"1", "C2", "C3", "C4", "C2xC2", "S3", "Q8", "D4"}; }

FiniteGroup FiniteGroup::byName(std::string_view name) {
  if (name == "1" || name == "trivial") return trivial();
  if (name == "C2xC2" || name == "V4") return kleinFour();
  if (name == "S3") return symmetric3();
  if (name == "Q8") return quaternion8();
  if (name == "D4") return dihedral4();
  if (name.size() > 1 && name[0] == 'C') {
    std::uint32_t n = 0;
    auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), n);
    if (ec == std::errc() && ptr == name.data() + name.size() && n >= 1 && n <= kMaxGroupOrder) return cyclic(n);
  }
  throw Error("unknown group name '" + std::string(name) + "'");
}

FiniteGroup FiniteGroup::fromJson(const Json& j) {
  if (j.is_string()) return byName(j.get<std::string>());
  if (j.is_object() && j.contains("table")) {
    auto table = j.at("table").get<std::vector<std::vector<GroupElem>>>();
    std::vector<std::string> names;
    if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
    return fromTable(std::move(table), std::move(names), j.value("name", std::string{}));
  }
  if (j.is_object() && j.contains("name")) return byName(j.at("name").get<std::string>());
  throw Error("group description must be a name or an object with a table");
}

GroupElem FiniteGroup::power(GroupElem a, std::int64_t k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  GroupElem r = identity();
  for (std::int64_t i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

std::uint32_t FiniteGroup::elementOrder(GroupElem a) const {
  std::uint32_t k = 1;
  for (GroupElem x = a; x != identity(); x = mul(x, a)) ++k;
  return k;
}

GroupElem FiniteGroup::elementByName(std::string_view name) const {
  for (GroupElem a = 0; a < order(); ++a)
    if (data_->names[a] == name) return a;
  throw Error("group " + data_->name + " has no element named '" + std::string(name) + "'");
}

GroupElem FiniteGroup::elementFromJson(const Json& j) const {
  if (j.is_string()) return elementByName(j.get<std::string>());
  if (j.is_number_unsigned() || j.is_number_integer()) {
    auto v = j.get<std::int64_t>();
    if (v < 0 || v >= order()) throw Error("group element index out of range");
    return static_cast<GroupElem>(v);
  }
  throw Error("group element must be a name or an index");
}

bool FiniteGroup::isSubgroup(std::span<const GroupElem> subset) const {
  if (subset.empty()) return false;
  std::vector<bool> in(order(), false);
  for (auto x : subset) {
    if (x >= order()) return false;
    in[x] = true;
  }
  for (auto x : subset) {
    if (!in[inv(x)]) return false;
    for (auto y : subset)
      if (!in[mul(x, y)]) return false;
  }
  return true;
}

Subgroup FiniteGroup::generate(std::span<const GroupElem> generators) const {
  std::vector<bool> in(order(), false);
  std::vector<GroupElem> elems{identity()};
  in[identity()] = true;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (auto g : generators) {
      if (g >= order()) throw Error("generator out of range");
      GroupElem x = mul(elems[i], g);
      if (!in[x]) {
        in[x] = true;
        elems.push_back(x);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

bool FiniteGroup::isNormal(const Subgroup& h) const {
  std::vector<bool> in(order(), false);
  for (auto x : h) in[x] = true;
  for (GroupElem g = 0; g < order(); ++g)
    for (auto x : h)
      if (!in[mul(g, x, inv(g))]) return false;
  return true;
}

Subgroup FiniteGroup::center() const {
  Subgroup z;
  for (GroupElem a = 0; a < order(); ++a) {
    bool central = true;
    for (GroupElem b = 0; b < order() && central; ++b) central = mul(a, b) == mul(b, a);
    if (central) z.push_back(a);
  }
  return z;
}

Subgroup FiniteGroup::wholeGroup() const {
  Subgroup all(order());
  std::iota(all.begin(), all.end(), GroupElem{0});
  return all;
}

std::vector<Subgroup> FiniteGroup::allSubgroups() const {
  std::set<Subgroup> found;
  for (GroupElem a = 0; a < order(); ++a) found.insert(generate(std::span<const GroupElem>(&a, 1)));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Subgroup> current(found.begin(), found.end());
    for (std::size_t i = 0; i < current.size(); ++i) {
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        std::vector<GroupElem> gens = current[i];
        gens.insert(gens.end(), current[j].begin(), current[j].end());
        if (found.insert(generate(gens)).second) grew = true;
      }
    }
  }
  std::vector<Subgroup> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](const Subgroup& x, const Subgroup& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return out;
}

bool FiniteGroup::isAbelian() const { return center().size() == order(); }

bool FiniteGroup::operator==(const FiniteGroup& other) const {
  return data_ == other.data_ || data_->table == other.data_->table;
}

Json FiniteGroup::toJson() const {
  Json j;
  j["name"] = data_->name;
  j["order"] = data_->n;
  j["elements"] = data_->names;
  return j;
}

Subgroup makeSubgroup(const FiniteGroup& g, std::vector<GroupElem> subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  if (!g.isSubgroup(subset)) throw Error("element set is not a subgroup of " + g.name());
  return subset;
}

GroupHom::GroupHom(FiniteGroup source, FiniteGroup target, std::vector<GroupElem> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (map_.size() != source_.order()) throw Error("homomorphism table has the wrong length");
  for (auto x : map_)
    if (x >= target_.order()) throw Error("homomorphism value out of range");
  for (GroupElem a = 0; a < source_.order(); ++a)
    for (GroupElem b = 0; b < source_.order(); ++b)
      if (map_[source_.mul(a, b)] != target_.mul(map_[a], map_[b]))
        throw AxiomViolation("map is not a homomorphism", Json{{"a", source_.elementName(a)}, {"b", source_.elementName(b)}});
}

GroupHom GroupHom::identity(const FiniteGroup& g) { return GroupHom(g, g, g.wholeGroup()); }

GroupHom GroupHom::trivial(const FiniteGroup& source, const FiniteGroup& target) {
  return GroupHom(source, target, std::vector<GroupElem>(source.order(), target.identity()));
}

GroupHom GroupHom::subgroupInclusion(const FiniteGroup& g, const Subgroup& h) {
  if (!g.isSubgroup(h) || !std::is_sorted(h.begin(), h.end())) throw Error("not a sorted subgroup");
  auto indexOf = [&](GroupElem x) {
    return static_cast<GroupElem>(std::lower_bound(h.begin(), h.end(), x) - h.begin());
  };
  std::vector<std::vector<GroupElem>> table(h.size(), std::vector<GroupElem>(h.size()));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < h.size(); ++i) {
    names.push_back(g.elementName(h[i]));
    for (std::size_t j = 0; j < h.size(); ++j) table[i][j] = indexOf(g.mul(h[i], h[j]));
  }
  std::string name = h.size() == g.order() ? g.name() : g.name() + "_sub" + std::to_string(h.size());
  auto sub = FiniteGroup::fromTable(std::move(table), std::move(names), std::move(name));
  return GroupHom(sub, g, h);
}

GroupHom GroupHom::projectFirst(const FiniteGroup& a, const FiniteGroup& b) {
  auto prod = FiniteGroup::directProduct(a, b);
  std::vector<GroupElem> map(prod.order());
  for (GroupElem x = 0; x < prod.order(); ++x) map[x] = x / b.order();
  return GroupHom(prod, a, std::move(map));
}

GroupHom GroupHom::projectSecond(const FiniteGroup& a, const FiniteGroup& b) {
  auto prod = FiniteGroup::directProduct(a, b);
  std::vector<GroupElem> map(prod.order());
  for (GroupElem x = 0; x < prod.order(); ++x) map[x] = x % b.order();
  return GroupHom(prod, b, std::move(map));
}

Subgroup GroupHom::kernel() const {
  Subgroup k;
  for (GroupElem a = 0; a < source_.order(); ++a)
    if (map_[a] == target_.identity()) k.push_back(a);
  return k;
}

Subgroup GroupHom::image() const {
  Subgroup im(map_.begin(), map_.end());
  std::sort(im.begin(), im.end());
  im.erase(std::unique(im.begin(), im.end()), im.end());
  return im;
}

bool GroupHom::isInjective() const { return kernel().size() == 1; }
bool GroupHom::isSurjective() const { return image().size() == target_.order(); }

QuotientGroup quotientGroup(const FiniteGroup& g, const Subgroup& normal) {
  if (!g.isSubgroup(normal)) throw Error("quotient by a non-subgroup");
  if (!g.isNormal(normal)) throw Error("subgroup is not normal in " + g.name());
  QuotientGroup q;
  q.normal = normal;
  const std::uint32_t none = g.order();
  q.projection.assign(g.order(), none);
  // Ascending scan: the first unassigned element is the smallest of its coset.
  for (GroupElem a = 0; a < g.order(); ++a) {
    if (q.projection[a] != none) continue;
    const auto idx = static_cast<GroupElem>(q.representative.size());
    q.representative.push_back(a);
    for (auto n : normal) q.projection[g.mul(a, n)] = idx;
  }
  const auto m = static_cast<std::uint32_t>(q.representative.size());
  std::vector<std::vector<GroupElem>> table(m, std::vector<GroupElem>(m));
  std::vector<std::string> names;
  for (GroupElem x = 0; x < m; ++x) {
    names.push_back("[" + g.elementName(q.representative[x]) + "]");
    for (GroupElem y = 0; y < m; ++y)
      table[x][y] = q.projection[g.mul(q.representative[x], q.representative[y])];
  }
  q.group = FiniteGroup::fromTable(std::move(table), std::move(names),
                                   g.name() + "/N" + std::to_string(normal.size()));
  return q;
}

GroupExtension GroupExtension::fromNormalSubgroup(const FiniteGroup& total, const Subgroup& kernel,
                                                  std::optional<std::vector<GroupElem>> section) {
  auto q = quotientGroup(total, kernel);
  std::vector<GroupElem> s = section ? std::move(*section) : q.representative;
  if (s.size() != q.group.order()) throw Error("section has the wrong length");
  for (GroupElem g = 0; g < q.group.order(); ++g) {
    if (s[g] >= total.order() || q.projection[s[g]] != g)
      throw AxiomViolation("section is not a right inverse of the projection",
                           Json{{"g", q.group.elementName(g)}});
  }
  if (s[q.group.identity()] != total.identity())
    throw AxiomViolation("section does not send the identity to the identity", Json::object());
  return GroupExtension{total,          kernel, GroupHom::subgroupInclusion(total, kernel), q.group,
                        q.projection, std::move(s)};
}

GroupElem GroupExtension::kernelIndex(GroupElem gammaElem) const {
  auto it = std::lower_bound(kernel.begin(), kernel.end(), gammaElem);
  if (it == kernel.end() || *it != gammaElem) throw Error("element is not in the kernel");
  return static_cast<GroupElem>(it - kernel.begin());
}

}  // namespace coeffcat
