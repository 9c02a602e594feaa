#include "coeffcat/controlled/support.hpp"

#include <algorithm>

namespace coeffcat {

namespace {

Json relationJson(const Relation& r) {
  Json out = Json::array();
  for (const auto& [x, y] : r) out.push_back(Json::array({x, y}));
  return out;
}

Json setJson(const PointSet& s) {
  Json out = Json::array();
  for (auto x : s) out.push_back(x);
  return out;
}

void checkRange(std::uint32_t n, Point p) {
  if (p >= n) throw Error("support condition: point " + std::to_string(p) + " outside a space of size " + std::to_string(n));
}

}  // namespace

Relation composeRelations(const Relation& e, const Relation& e2) {
  Relation out;
  for (const auto& [x, y] : e2) {
    auto it = e.lower_bound({y, 0});
    for (; it != e.end() && it->first == y; ++it) out.emplace(x, it->second);
  }
  return out;
}

MorphismSupport::MorphismSupport(std::uint32_t n, std::vector<Relation> members)
    : n_(n), members_(std::move(members)), reach_(std::size_t{n} * n, false) {
  for (const auto& m : members_)
    for (const auto& [x, y] : m) {
      checkRange(n_, x);
      checkRange(n_, y);
      reach_[x * n_ + y] = true;
    }
}

MorphismSupport MorphismSupport::fromFamily(std::uint32_t spaceSize, std::vector<Relation> members) {
  MorphismSupport e(spaceSize, std::move(members));
  Relation diag;
  for (Point x = 0; x < spaceSize; ++x) diag.emplace(x, x);
  if (!e.admits(diag)) throw AxiomViolation("morphism support condition: no member contains the diagonal", Json::object());
  for (std::size_t i = 0; i < e.members_.size(); ++i)
    for (std::size_t j = 0; j < e.members_.size(); ++j) {
      Relation u = e.members_[i];
      u.insert(e.members_[j].begin(), e.members_[j].end());
      if (!e.admits(u))
        throw AxiomViolation("morphism support condition: not closed under union",
                             Json{{"E", relationJson(e.members_[i])}, {"E'", relationJson(e.members_[j])}});
      if (!e.admits(composeRelations(e.members_[i], e.members_[j])))
        throw AxiomViolation("morphism support condition: not closed under composition",
                             Json{{"E", relationJson(e.members_[i])}, {"E'", relationJson(e.members_[j])}});
    }
  return e;
}

MorphismSupport MorphismSupport::generatedBy(std::uint32_t spaceSize, const std::vector<Relation>& gens) {
  Relation r;
  for (Point x = 0; x < spaceSize; ++x) r.emplace(x, x);
  for (const auto& g : gens) r.insert(g.begin(), g.end());
  for (;;) {
    auto next = composeRelations(r, r);
    next.insert(r.begin(), r.end());
    if (next.size() == r.size()) break;
    r = std::move(next);
  }
  return fromFamily(spaceSize, {std::move(r)});
}

MorphismSupport MorphismSupport::diagonal(std::uint32_t spaceSize) { return generatedBy(spaceSize, {}); }

MorphismSupport MorphismSupport::everything(std::uint32_t spaceSize) {
  Relation r;
  for (Point x = 0; x < spaceSize; ++x)
    for (Point y = 0; y < spaceSize; ++y) r.emplace(x, y);
  return fromFamily(spaceSize, {std::move(r)});
}

MorphismSupport MorphismSupport::pullback(const std::vector<Point>& p, const MorphismSupport& e) {
  const auto n = static_cast<std::uint32_t>(p.size());
  std::vector<Relation> members;
  for (const auto& m : e.members_) {
    Relation r;
    for (Point x = 0; x < n; ++x)
      for (Point y = 0; y < n; ++y)
        if (m.count({p[x], p[y]})) r.emplace(x, y);
    members.push_back(std::move(r));
  }
  return fromFamily(n, std::move(members));
}

bool MorphismSupport::admits(const Relation& r) const {
  return std::any_of(members_.begin(), members_.end(), [&](const Relation& m) {
    return std::includes(m.begin(), m.end(), r.begin(), r.end());
  });
}

bool MorphismSupport::isInvariant(const GSet& x) const {
  if (x.size() != n_) throw MismatchError("morphism support condition over a space of another size");
  for (GroupElem g = 0; g < x.group().order(); ++g)
    for (const auto& m : members_) {
      Relation moved;
      for (const auto& [a, b] : m) moved.emplace(x.act(g, a), x.act(g, b));
      if (std::find(members_.begin(), members_.end(), moved) == members_.end()) return false;
    }
  return true;
}

Json MorphismSupport::toJson() const {
  Json ms = Json::array();
  for (const auto& m : members_) ms.push_back(relationJson(m));
  return Json{{"space", n_}, {"members", ms}};
}

ObjectSupport::ObjectSupport(std::uint32_t n, std::vector<PointSet> members)
    : n_(n), members_(std::move(members)), reach_(n, false) {
  for (const auto& m : members_)
    for (auto x : m) {
      checkRange(n_, x);
      reach_[x] = true;
    }
}

ObjectSupport ObjectSupport::fromFamily(std::uint32_t spaceSize, std::vector<PointSet> members) {
  ObjectSupport f(spaceSize, std::move(members));
  for (std::size_t i = 0; i < f.members_.size(); ++i)
    for (std::size_t j = i + 1; j < f.members_.size(); ++j) {
      PointSet u = f.members_[i];
      u.insert(f.members_[j].begin(), f.members_[j].end());
      if (!f.admits(u))
        throw AxiomViolation("object support condition: not closed under union",
                             Json{{"F", setJson(f.members_[i])}, {"F'", setJson(f.members_[j])}});
    }
  return f;
}

ObjectSupport ObjectSupport::everything(std::uint32_t spaceSize) {
  PointSet all;
  for (Point x = 0; x < spaceSize; ++x) all.insert(x);
  return fromFamily(spaceSize, {std::move(all)});
}

bool ObjectSupport::admits(const PointSet& s) const {
  return std::any_of(members_.begin(), members_.end(),
                     [&](const PointSet& m) { return std::includes(m.begin(), m.end(), s.begin(), s.end()); });
}

bool ObjectSupport::isInvariant(const GSet& x) const {
  if (x.size() != n_) throw MismatchError("object support condition over a space of another size");
  for (GroupElem g = 0; g < x.group().order(); ++g)
    for (const auto& m : members_) {
      PointSet moved;
      for (auto a : m) moved.insert(x.act(g, a));
      if (std::find(members_.begin(), members_.end(), moved) == members_.end()) return false;
    }
  return true;
}

Json ObjectSupport::toJson() const {
  Json ms = Json::array();
  for (const auto& m : members_) ms.push_back(setJson(m));
  return Json{{"space", n_}, {"members", ms}};
}

}  // namespace coeffcat
