#include "coeffcat/swan/swan_module.hpp"

#include <deque>
#include <functional>

namespace coeffcat {

namespace {

std::optional<Json> representationDefect(const FiniteGroup& g, const std::vector<IntMatrix>& l) {
  const std::size_t n = l.empty() ? 0 : l.front().rows();
  for (GroupElem a = 0; a < g.order(); ++a) {
    if (!l[a].isSquare() || l[a].rows() != n) return Json{{"g", g.elementName(a)}, {"problem", "not square of the common rank"}};
    const Integer d = l[a].determinant();
    if (d != 1 && d != -1)
      return Json{{"g", g.elementName(a)}, {"problem", "not invertible over Z"}, {"determinant", integerJson(d)}};
  }
  if (!(l[g.identity()] == IntMatrix::identity(n))) return Json{{"g", g.elementName(g.identity())}, {"problem", "l_e != 1"}};
  for (GroupElem a = 0; a < g.order(); ++a)
    for (GroupElem b = 0; b < g.order(); ++b)
      if (!(l[a] * l[b] == l[g.mul(a, b)]))
        return Json{{"g", g.elementName(a)}, {"h", g.elementName(b)}, {"problem", "l_g l_h != l_gh"}};
  return std::nullopt;
}

}  // namespace

SwanModule::SwanModule(FiniteGroup group, std::vector<IntMatrix> action, std::string name)
    : group_(std::move(group)), action_(std::move(action)), name_(std::move(name)) {
  if (action_.size() != group_.order()) throw MismatchError("swan module: one matrix per group element is required");
  rank_ = action_.front().rows();
  if (auto d = representationDefect(group_, action_))
    throw AxiomViolation("swan module " + name_ + ": not a representation", *d);
}

SwanModule SwanModule::trivial(const FiniteGroup& g) {
  return SwanModule(g, std::vector<IntMatrix>(g.order(), IntMatrix::identity(1)), "Z");
}

SwanModule SwanModule::regular(const FiniteGroup& g) {
  const std::uint32_t n = g.order();
  std::vector<IntMatrix> l;
  for (GroupElem a = 0; a < n; ++a) {
    IntMatrix m(n, n);
    for (GroupElem h = 0; h < n; ++h) m(g.mul(a, h), h) = 1;
    l.push_back(std::move(m));
  }
  return SwanModule(g, std::move(l), "Z[" + g.name() + "]");
}

SwanModule SwanModule::character(const FiniteGroup& g, const std::vector<int>& signs, std::string name) {
  if (signs.size() != g.order()) throw MismatchError("swan module: one sign per group element is required");
  std::vector<IntMatrix> l;
  for (int s : signs) {
    if (s != 1 && s != -1) throw Error("swan module: character values must be +-1");
    l.push_back(IntMatrix::fromRows({{Integer(s)}}));
  }
  return SwanModule(g, std::move(l), std::move(name));
}

SwanModule SwanModule::fromGenerators(const FiniteGroup& g, const std::map<std::string, IntMatrix>& generators,
                                      std::string name) {
  if (generators.empty()) throw Error("swan module: no generators");
  const std::size_t n = generators.begin()->second.rows();
  std::vector<std::pair<GroupElem, IntMatrix>> gens;
  for (const auto& [k, m] : generators) gens.emplace_back(g.elementByName(k), m);
  std::vector<std::optional<IntMatrix>> l(g.order());
  l[g.identity()] = IntMatrix::identity(n);
  std::deque<GroupElem> queue{g.identity()};
  while (!queue.empty()) {
    const GroupElem x = queue.front();
    queue.pop_front();
    for (const auto& [a, m] : gens) {
      if (m.rows() != n || m.cols() != n) throw MismatchError("swan module: generators of different ranks");
      const GroupElem ax = g.mul(a, x);
      IntMatrix v = m * *l[x];
      if (!l[ax]) {
        l[ax] = std::move(v);
        queue.push_back(ax);
      } else if (!(*l[ax] == v)) {
        throw AxiomViolation("swan module " + name + ": generator matrices violate a relation of the group",
                             Json{{"generator", g.elementName(a)}, {"element", g.elementName(x)}});
      }
    }
  }
  std::vector<IntMatrix> action;
  for (GroupElem a = 0; a < g.order(); ++a) {
    if (!l[a]) throw Error("swan module " + name + ": generators do not generate the group");
    action.push_back(std::move(*l[a]));
  }
  return SwanModule(g, std::move(action), std::move(name));
}

SwanModule SwanModule::fromJson(const FiniteGroup& g, const Json& j) {
  const std::string name = j.value("name", std::string{});
  if (j.contains("builtin")) {
    const auto b = j.at("builtin").get<std::string>();
    if (b == "trivial") return trivial(g);
    if (b == "regular") return regular(g);
    throw Error("swan module: unknown builtin '" + b + "'");
  }
  if (!j.contains("generators")) throw Error("swan module: expected 'builtin' or 'generators'");
  std::map<std::string, IntMatrix> gens;
  for (const auto& [k, v] : j.at("generators").items()) gens.emplace(k, IntMatrix::fromJson(v));
  return fromGenerators(g, gens, name);
}

Json SwanModule::toJson() const {
  Json l = Json::object();
  for (GroupElem a = 0; a < group_.order(); ++a) l[group_.elementName(a)] = action_[a].toJson();
  return Json{{"name", name_}, {"group", group_.name()}, {"rank", rank_}, {"action", l}};
}

CheckResult verifySwanModule(const SwanModule& m, const std::string& id) {
  CheckBuilder check(id, "l_e = 1, l_g l_h = l_gh and det l_g = +-1 for all g, h");
  const auto& g = m.group();
  std::vector<IntMatrix> l;
  for (GroupElem a = 0; a < g.order(); ++a) l.push_back(m.action(a));
  check.count(std::uint64_t{g.order()} * g.order());
  if (auto d = representationDefect(g, l)) {
    Json w = *d;
    w["module"] = m.name();
    check.fail(std::move(w));
  }
  return std::move(check).finish();
}

SwanMap::SwanMap(SwanModule src, SwanModule tgt, IntMatrix m)
    : source(std::move(src)), target(std::move(tgt)), matrix(std::move(m)) {
  if (!(source.group() == target.group())) throw MismatchError("swan map between modules over different groups");
  if (matrix.rows() != target.rank() || matrix.cols() != source.rank())
    throw MismatchError("swan map: matrix shape does not match the ranks");
  const auto& g = source.group();
  for (GroupElem a = 0; a < g.order(); ++a)
    if (!(matrix * source.action(a) == target.action(a) * matrix))
      throw AxiomViolation("swan map " + source.name() + " -> " + target.name() + " is not G-linear",
                           Json{{"g", g.elementName(a)}});
}

CheckResult verifySplitting(const SplitSequence& seq, const std::string& id) {
  CheckBuilder check(id, "p i = 0, r i = 1, p s = 1 and i r + s p = 1 over Z");
  const auto& i = seq.i.matrix;
  const auto& p = seq.p.matrix;
  const std::size_t l = i.cols(), m = i.rows(), n = p.rows();
  check.count(4);
  auto fail = [&](const char* what) {
    check.fail(Json{{"equation", what}, {"i", i.toJson()}, {"p", p.toJson()}, {"r", seq.r.toJson()},
                    {"s", seq.s.toJson()}});
  };
  if (p.cols() != m || seq.r.rows() != l || seq.r.cols() != m || seq.s.rows() != m || seq.s.cols() != n)
    fail("shapes");
  else if (!(p * i).isZero())
    fail("p i = 0");
  else if (!(seq.r * i == IntMatrix::identity(l)))
    fail("r i = 1");
  else if (!(p * seq.s == IntMatrix::identity(n)))
    fail("p s = 1");
  else if (!(i * seq.r + seq.s * p == IntMatrix::identity(m)))
    fail("i r + s p = 1");
  return std::move(check).finish();
}

namespace {

/// Enumerates rows x cols integer matrices with entries in [-bound, bound]
/// until `accept` returns true.
std::optional<IntMatrix> searchMatrix(std::size_t rows, std::size_t cols, int bound,
                                      const std::function<bool(const IntMatrix&)>& accept) {
  IntMatrix m(rows, cols);
  const std::size_t cells = rows * cols;
  std::vector<int> digit(cells, -bound);
  for (;;) {
    for (std::size_t c = 0; c < cells; ++c) m(c / cols, c % cols) = digit[c];
    if (accept(m)) return m;
    std::size_t c = 0;
    while (c < cells && digit[c] == bound) digit[c++] = -bound;
    if (c == cells) return std::nullopt;
    ++digit[c];
  }
}

}  // namespace

std::optional<SplitSequence> findIntegerSplitting(const SwanMap& i, const SwanMap& p, int bound) {
  const std::size_t l = i.matrix.cols(), m = i.matrix.rows(), n = p.matrix.rows();
  if (p.matrix.cols() != m || !(p.matrix * i.matrix).isZero()) return std::nullopt;
  auto s = searchMatrix(m, n, bound, [&](const IntMatrix& x) { return p.matrix * x == IntMatrix::identity(n); });
  if (!s) return std::nullopt;
  auto r0 = searchMatrix(l, m, bound, [&](const IntMatrix& x) { return x * i.matrix == IntMatrix::identity(l); });
  if (!r0) return std::nullopt;
  IntMatrix r = *r0 * (IntMatrix::identity(m) - *s * p.matrix);
  SplitSequence seq{i, p, std::move(r), std::move(*s)};
  if (!verifySplitting(seq).passed()) return std::nullopt;  // not exact at M
  return seq;
}

SplitSequence augmentationSequence(const FiniteGroup& g) {
  const std::size_t n = g.order();
  const GroupElem e = g.identity();
  std::vector<std::size_t> basis(n, n);  // element -> index in I, n for e
  std::size_t next = 0;
  for (GroupElem a = 0; a < n; ++a)
    if (a != e) basis[a] = next++;
  std::vector<IntMatrix> l;
  for (GroupElem h = 0; h < n; ++h) {
    // h (a - e) = (ha - e) - (h - e)
    IntMatrix m(n - 1, n - 1);
    for (GroupElem a = 0; a < n; ++a) {
      if (a == e) continue;
      if (const GroupElem ha = g.mul(h, a); ha != e) m(basis[ha], basis[a]) += 1;
      if (h != e) m(basis[h], basis[a]) -= 1;
    }
    l.push_back(std::move(m));
  }
  SwanModule ideal(g, std::move(l), "I[" + g.name() + "]");
  auto zg = SwanModule::regular(g);
  auto z = SwanModule::trivial(g);
  IntMatrix i(n, n - 1), p(1, n), r(n - 1, n), s(n, 1);
  for (GroupElem a = 0; a < n; ++a) {
    p(0, a) = 1;
    if (a == e) continue;
    i(a, basis[a]) = 1;
    i(e, basis[a]) = -1;
    r(basis[a], a) = 1;
  }
  s(e, 0) = 1;
  return SplitSequence{SwanMap(ideal, zg, std::move(i)), SwanMap(zg, z, std::move(p)), std::move(r), std::move(s)};
}

std::pair<SwanMap, SwanMap> augmentationSequenceC2(const FiniteGroup& c2) {
  if (c2.order() != 2) throw MismatchError("the augmentation sequence is over a group of order 2");
  const GroupElem t = c2.identity() == 0 ? 1 : 0;
  std::vector<int> signs(2, 1);
  signs[t] = -1;
  auto z = SwanModule::trivial(c2);
  auto zg = SwanModule::regular(c2);
  auto zminus = SwanModule::character(c2, signs, "Z-");
  IntMatrix i(2, 1), p(1, 2);
  i(c2.identity(), 0) = 1;
  i(t, 0) = 1;
  p(0, c2.identity()) = 1;
  p(0, t) = -1;
  return {SwanMap(z, zg, i), SwanMap(zg, zminus, p)};
}

}  // namespace coeffcat
