#include "coeffcat/gcat/module_category.hpp"

#include <algorithm>

namespace coeffcat {

namespace {

constexpr std::uint64_t kMaxListedObjects = 1'000'000;

}  // namespace

ModuleCategory ModuleCategory::trivialRing(const FiniteRing& ring, const FiniteGroup& group, BiproductMode mode) {
  State s{ModuleKind::TrivialRing, mode, ring, group, std::nullopt, {"R"}, {RingAutomorphism::identity(ring)},
          std::vector<std::uint32_t>(group.order(), 0), {}};
  return ModuleCategory(std::make_shared<const State>(std::move(s)));
}

ModuleCategory ModuleCategory::twistedModule(const FiniteRing& ring, const FiniteGroup& group,
                                             std::vector<RingAutomorphism> alpha, BiproductMode mode) {
  const std::uint32_t n = group.order();
  if (alpha.size() != n) throw Error("twisted modules: one automorphism per group element is required");
  for (const auto& a : alpha)
    if (!(a.ring() == ring)) throw MismatchError("twisted modules: automorphism of a different ring");
  if (!alpha[group.identity()].isIdentity()) throw AxiomViolation("alpha(e) is not the identity", Json::object());
  for (GroupElem g = 0; g < n; ++g)
    for (GroupElem h = 0; h < n; ++h)
      if (!(alpha[group.mul(h, g)] == composeAutomorphisms(alpha[h], alpha[g])))
        throw AxiomViolation("alpha(hg) != alpha(h) o alpha(g)",
                             Json{{"g", group.elementName(g)}, {"h", group.elementName(h)}});

  std::vector<RingAutomorphism> tags{RingAutomorphism::identity(ring)};
  std::vector<std::string> names{"id"};
  for (GroupElem g = 0; g < n; ++g)
    if (std::find(tags.begin(), tags.end(), alpha[g]) == tags.end()) {
      tags.push_back(alpha[g]);
      names.push_back("alpha(" + group.elementName(g) + ")");
    }
  const auto t = static_cast<std::uint32_t>(tags.size());
  auto indexOf = [&](const RingAutomorphism& a) {
    return static_cast<std::uint32_t>(std::find(tags.begin(), tags.end(), a) - tags.begin());
  };
  State s{ModuleKind::TwistedModule, mode, ring, group, std::nullopt, names, {}, {}, {}};
  for (std::uint32_t a = 0; a < t; ++a)
    for (std::uint32_t b = 0; b < t; ++b) s.twists.push_back(composeAutomorphisms(tags[a], tags[b].inverse()));
  for (std::uint32_t a = 0; a < t; ++a)
    for (GroupElem g = 0; g < n; ++g) {
      // res_{alpha_g} res_theta R = res_{theta o alpha_g} R
      const auto idx = indexOf(composeAutomorphisms(tags[a], alpha[g]));
      if (idx == t) throw Error("twisted modules: image of alpha is not closed under composition");
      s.tagAction.push_back(idx);
    }
  return ModuleCategory(std::make_shared<const State>(std::move(s)));
}

ModuleCategory ModuleCategory::rigidCrossed(const CrossedData& data, BiproductMode mode) {
  const FiniteRing& r = data.ring();
  const FiniteGroup& g = data.group();
  const std::uint32_t n = g.order();
  State s{ModuleKind::RigidCrossed, mode, r, g, data, {}, {}, {}, {}};
  for (GroupElem a = 0; a < n; ++a) s.tagNames.push_back(g.elementName(a));
  for (GroupElem h = 0; h < n; ++h)
    for (GroupElem k = 0; k < n; ++k) s.twists.push_back(composeAutomorphisms(data.alpha(h), data.alpha(k).inverse()));
  for (GroupElem a = 0; a < n; ++a)
    for (GroupElem b = 0; b < n; ++b) s.tagAction.push_back(g.mul(a, b));
  // gamma^* phi = L^-1_{tau_{h,gamma}} o phi o L_{tau_{k,gamma}}; on an entry c from
  // (R, k) to (R, h) this is c |-> tau_{h,gamma}^-1 theta(tau_{k,gamma}) c.
  s.entryFactor.resize(std::size_t{n} * n * n);
  for (GroupElem gamma = 0; gamma < n; ++gamma)
    for (GroupElem h = 0; h < n; ++h)
      for (GroupElem k = 0; k < n; ++k) {
        const auto& theta = s.twists[h * n + k];
        s.entryFactor[(std::size_t{gamma} * n + h) * n + k] = r.mul(data.tauInverse(h, gamma), theta(data.tau(k, gamma)));
      }
  return ModuleCategory(std::make_shared<const State>(std::move(s)));
}

ModuleCategory::Object ModuleCategory::object(std::vector<std::uint32_t> tags) const {
  for (auto t : tags)
    if (t >= tagCount()) throw Error("module category: tag out of range");
  return Object{std::move(tags)};
}

ModuleCategory::Object ModuleCategory::freeObject(std::uint32_t n, std::uint32_t tag) const {
  return object(std::vector<std::uint32_t>(n, tag));
}

ModuleCategory::Morphism ModuleCategory::morphism(const Object& src, const Object& tgt, RingMatrix m) const {
  if (m.rows() != tgt.tags.size() || m.cols() != src.tags.size())
    throw MismatchError("module category: matrix shape does not match the objects");
  for (auto x : m.data())
    if (x >= ring().size()) throw Error("module category: entry out of range");
  return Morphism{src, tgt, std::move(m)};
}

ModuleCategory::Morphism ModuleCategory::identity(const Object& x) const {
  const auto n = static_cast<std::uint32_t>(x.tags.size());
  return Morphism{x, x, identityMatrix(ring(), n)};
}

ModuleCategory::Morphism ModuleCategory::zeroMorphism(const Object& x, const Object& y) const {
  return Morphism{x, y, RingMatrix(static_cast<std::uint32_t>(y.tags.size()), static_cast<std::uint32_t>(x.tags.size()), 0)};
}

ModuleCategory::Morphism ModuleCategory::compose(const Morphism& g, const Morphism& f) const {
  if (!(f.target == g.source)) throw MismatchError("module category: morphisms are not composable");
  const FiniteRing& r = ring();
  const auto rows = g.matrix.rows(), mid = g.matrix.cols(), cols = f.matrix.cols();
  RingMatrix c(rows, cols, r.zero());
  for (std::uint32_t k = 0; k < rows; ++k)
    for (std::uint32_t j = 0; j < mid; ++j) {
      const RingElem b = g.matrix(k, j);
      if (b == 0) continue;
      const auto& theta = twist(g.target.tags[k], g.source.tags[j]);
      for (std::uint32_t i = 0; i < cols; ++i) {
        const RingElem a = f.matrix(j, i);
        if (a == 0) continue;
        c(k, i) = r.add(c(k, i), r.mul(theta(a), b));
      }
    }
  return Morphism{f.source, g.target, std::move(c)};
}

ModuleCategory::Morphism ModuleCategory::add(const Morphism& f, const Morphism& g) const {
  if (!(f.source == g.source) || !(f.target == g.target)) throw MismatchError("module category: adding non-parallel morphisms");
  return Morphism{f.source, f.target, matAdd(ring(), f.matrix, g.matrix)};
}

ModuleCategory::Morphism ModuleCategory::negate(const Morphism& f) const {
  return Morphism{f.source, f.target, matNeg(ring(), f.matrix)};
}

std::uint64_t ModuleCategory::homSize(const Object& x, const Object& y) const {
  return saturatingPow(ring().size(), std::uint64_t{x.tags.size()} * y.tags.size());
}

ModuleCategory::Morphism ModuleCategory::homElement(const Object& x, const Object& y, std::uint64_t index) const {
  return Morphism{x, y,
                  matrixFromIndex(ring(), static_cast<std::uint32_t>(y.tags.size()),
                                  static_cast<std::uint32_t>(x.tags.size()), index)};
}

Biproduct<ModuleCategory::Object, ModuleCategory::Morphism> ModuleCategory::biproduct(std::span<const Object> xs) const {
  Object sum;
  for (const auto& x : xs) sum.tags.insert(sum.tags.end(), x.tags.begin(), x.tags.end());
  switch (biproductMode()) {
    case BiproductMode::Concatenate:
      break;
    case BiproductMode::Strict:
      if (std::adjacent_find(sum.tags.begin(), sum.tags.end(), std::not_equal_to<>()) != sum.tags.end())
        throw MismatchError("strict biproduct of summands with different tags");
      break;
    case BiproductMode::Lax:
      sum.tags.assign(sum.tags.size(), identityTag());
      break;
  }
  Biproduct<Object, Morphism> out{sum, {}, {}};
  const auto total = static_cast<std::uint32_t>(sum.tags.size());
  std::uint32_t offset = 0;
  for (const auto& x : xs) {
    const auto n = static_cast<std::uint32_t>(x.tags.size());
    RingMatrix inj(total, n, 0), proj(n, total, 0);
    for (std::uint32_t i = 0; i < n; ++i) {
      inj(offset + i, i) = ring().one();
      proj(i, offset + i) = ring().one();
    }
    out.injections.push_back(Morphism{x, sum, std::move(inj)});
    out.projections.push_back(Morphism{sum, x, std::move(proj)});
    offset += n;
  }
  return out;
}

std::vector<ModuleCategory::Object> ModuleCategory::objects(std::uint32_t maxRank) const {
  std::uint64_t count = 0;
  for (std::uint32_t r = 0; r <= maxRank; ++r) count += saturatingPow(tagCount(), r);
  if (count > kMaxListedObjects) throw LimitError("module category: too many objects to list");
  std::vector<Object> out{Object{}};
  std::vector<Object> layer{Object{}};
  for (std::uint32_t r = 1; r <= maxRank; ++r) {
    std::vector<Object> next;
    for (const auto& x : layer)
      for (std::uint32_t t = 0; t < tagCount(); ++t) {
        Object y = x;
        y.tags.push_back(t);
        next.push_back(std::move(y));
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

ModuleCategory::Object ModuleCategory::act(GroupElem g, const Object& x) const {
  Object y = x;
  const auto n = group().order();
  for (auto& t : y.tags) t = s_->tagAction[t * n + g];
  return y;
}

ModuleCategory::Morphism ModuleCategory::act(GroupElem g, const Morphism& f) const {
  Morphism out{act(g, f.source), act(g, f.target), f.matrix};
  if (kind() == ModuleKind::RigidCrossed) {
    const std::size_t n = tagCount();
    for (std::uint32_t j = 0; j < f.matrix.rows(); ++j)
      for (std::uint32_t i = 0; i < f.matrix.cols(); ++i) {
        const RingElem c = f.matrix(j, i);
        if (c == 0) continue;
        const RingElem factor = s_->entryFactor[(g * n + f.target.tags[j]) * n + f.source.tags[i]];
        out.matrix(j, i) = ring().mul(factor, c);
      }
  }
  return out;
}

Json ModuleCategory::toJson(const Object& x) const {
  if (kind() == ModuleKind::TrivialRing) return Json(x.tags.size());
  Json a = Json::array();
  for (auto t : x.tags) a.push_back(tagName(t));
  return a;
}

Json ModuleCategory::toJson(const Morphism& f) const {
  return Json{{"source", toJson(f.source)}, {"target", toJson(f.target)}, {"matrix", matrixToJson(ring(), f.matrix)}};
}

std::string ModuleCategory::describe() const {
  switch (kind()) {
    case ModuleKind::TrivialRing:
      return "free " + ring().label() + "-modules, trivial " + group().name() + "-action";
    case ModuleKind::TwistedModule:
      return "free " + ring().label() + "-modules, " + group().name() + " acting by restriction of scalars";
    case ModuleKind::RigidCrossed:
      return "twisted free " + ring().label() + "-modules indexed by " + group().name();
  }
  return {};
}

CheckResult ModuleCategory::verifyActionWellDefined() const {
  CheckBuilder check("crossed.action-well-defined",
                     "L^-1_{tau_{h,g}} o phi o L_{tau_{k,g}} twists scalars by alpha_{hg} alpha_{kg}^-1");
  if (kind() != ModuleKind::RigidCrossed) return std::move(check).finish();
  const auto& d = *crossedData();
  const FiniteGroup& g = group();
  const FiniteRing& r = ring();
  for (GroupElem gamma = 0; gamma < g.order(); ++gamma)
    for (GroupElem h = 0; h < g.order(); ++h)
      for (GroupElem k = 0; k < g.order(); ++k) {
        check.count();
        const auto actual =
            composeAutomorphisms(RingAutomorphism::conjugation(r, d.tauInverse(h, gamma)),
                                 composeAutomorphisms(twist(h, k), RingAutomorphism::conjugation(r, d.tau(k, gamma))));
        if (!(actual == twist(g.mul(h, gamma), g.mul(k, gamma)))) {
          check.fail(Json{{"gamma", g.elementName(gamma)}, {"source", g.elementName(k)}, {"target", g.elementName(h)}});
          return std::move(check).finish();
        }
      }
  return std::move(check).finish();
}

}  // namespace coeffcat
