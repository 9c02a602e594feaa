#pragma once

#include <memory>
#include <optional>
#include <span>
#include <tuple>
#include <vector>

#include "coeffcat/equiv/audit.hpp"
#include "coeffcat/equiv/functor.hpp"
#include "coeffcat/gcat/verify.hpp"
#include "coeffcat/star/star_category.hpp"
#include "coeffcat/swan/swan_module.hpp"

namespace coeffcat {

/// n f for an integer n, by double-and-add in Hom(x, y).
template <AdditiveCategory A>
MorphismOf<A> scaleMorphism(const A& a, const Integer& n, const MorphismOf<A>& f) {
  Integer k = n < 0 ? Integer(-n) : n;
  MorphismOf<A> acc = a.zeroMorphism(a.source(f), a.target(f));
  MorphismOf<A> pow = f;
  while (k > 0) {
    if ((k & 1) != 0) acc = a.add(acc, pow);
    k >>= 1;
    if (k > 0) pow = a.add(pow, pow);
  }
  return n < 0 ? a.negate(acc) : acc;
}

/// A^f = A (x) F^f(Z): objects A (x) Z^k, written (A, k); a morphism
/// (A, k) -> (B, l) is an l x k array of morphisms A -> B, composed as
/// matrices. (A, k) is a zero object iff A is zero or k = 0, normalized to
/// (0, 0). The biproduct of (A_j, k_j) is (sum_j A_j^{k_j}, 1). G acts on the
/// first factor: g^*(A, k) = (g^*A, k).
template <AdditiveCategory A>
class TensorCategory {
 public:
  using BaseObject = ObjectOf<A>;
  using BaseMorphism = MorphismOf<A>;

  struct Object {
    BaseObject base;
    std::uint32_t copies = 0;
    bool operator==(const Object&) const = default;
    bool operator<(const Object& o) const { return std::tie(base, copies) < std::tie(o.base, o.copies); }
    bool operator>(const Object& o) const { return o < *this; }
    bool operator<=(const Object& o) const { return !(o < *this); }
    bool operator>=(const Object& o) const { return !(*this < o); }
  };
  struct Morphism {
    Object source;
    Object target;
    std::vector<BaseMorphism> entries;  // target.copies x source.copies, row-major
    bool operator==(const Morphism&) const = default;
    bool operator<(const Morphism& o) const {
      return std::tie(source, target, entries) < std::tie(o.source, o.target, o.entries);
    }
    bool operator>(const Morphism& o) const { return o < *this; }
    bool operator<=(const Morphism& o) const { return !(o < *this); }
    bool operator>=(const Morphism& o) const { return !(*this < o); }
  };

  explicit TensorCategory(A base) : base_(std::move(base)) {}

  const A& base() const { return base_; }

  Object object(BaseObject x, std::uint32_t k) const {
    if (k == 0 || base_.isZeroObject(x)) return Object{base_.zeroObject(), 0};
    return Object{std::move(x), k};
  }
  /// Checks that every entry is a morphism x.base -> y.base.
  Morphism morphism(const Object& x, const Object& y, std::vector<BaseMorphism> entries) const {
    if (entries.size() != std::size_t{x.copies} * y.copies) throw MismatchError("A^f: wrong number of entries");
    for (const auto& e : entries)
      if (!(base_.source(e) == x.base) || !(base_.target(e) == y.base))
        throw MismatchError("A^f: entry with the wrong source or target");
    return Morphism{x, y, std::move(entries)};
  }
  const BaseMorphism& entry(const Morphism& f, std::uint32_t row, std::uint32_t col) const {
    return f.entries[std::size_t{row} * f.source.copies + col];
  }

  Object zeroObject() const { return Object{base_.zeroObject(), 0}; }
  bool isZeroObject(const Object& x) const { return x.copies == 0; }
  std::uint64_t rank(const Object& x) const { return base_.rank(x.base) * x.copies; }
  Morphism identity(const Object& x) const {
    Morphism m = zeroMorphism(x, x);
    for (std::uint32_t i = 0; i < x.copies; ++i) m.entries[std::size_t{i} * x.copies + i] = base_.identity(x.base);
    return m;
  }
  Morphism zeroMorphism(const Object& x, const Object& y) const {
    return Morphism{x, y, std::vector<BaseMorphism>(std::size_t{x.copies} * y.copies, base_.zeroMorphism(x.base, y.base))};
  }
  const Object& source(const Morphism& f) const { return f.source; }
  const Object& target(const Morphism& f) const { return f.target; }

  Morphism compose(const Morphism& g, const Morphism& f) const {
    if (!(f.target == g.source)) throw MismatchError("A^f: morphisms are not composable");
    Morphism m = zeroMorphism(f.source, g.target);
    const std::uint32_t k = f.source.copies, l = f.target.copies, n = g.target.copies;
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < k; ++j) {
        auto& out = m.entries[std::size_t{i} * k + j];
        for (std::uint32_t c = 0; c < l; ++c)
          out = base_.add(out, base_.compose(g.entries[std::size_t{i} * l + c], f.entries[std::size_t{c} * k + j]));
      }
    return m;
  }
  Morphism add(const Morphism& f, const Morphism& g) const {
    if (!(f.source == g.source) || !(f.target == g.target)) throw MismatchError("A^f: adding non-parallel morphisms");
    Morphism m = f;
    for (std::size_t i = 0; i < m.entries.size(); ++i) m.entries[i] = base_.add(m.entries[i], g.entries[i]);
    return m;
  }
  Morphism negate(const Morphism& f) const {
    Morphism m = f;
    for (auto& e : m.entries) e = base_.negate(e);
    return m;
  }
  bool isZero(const Morphism& f) const {
    for (const auto& e : f.entries)
      if (!base_.isZero(e)) return false;
    return true;
  }

  std::uint64_t homSize(const Object& x, const Object& y) const {
    std::uint64_t n = 1;
    const auto h = base_.homSize(x.base, y.base);
    for (std::uint64_t i = 0; i < std::uint64_t{x.copies} * y.copies; ++i) n = saturatingMul(n, h);
    return n;
  }
  Morphism homElement(const Object& x, const Object& y, std::uint64_t index) const {
    Morphism m{x, y, {}};
    const auto h = base_.homSize(x.base, y.base);
    for (std::uint64_t i = 0; i < std::uint64_t{x.copies} * y.copies; ++i) {
      m.entries.push_back(base_.homElement(x.base, y.base, index % h));
      index /= h;
    }
    return m;
  }

  Biproduct<Object, Morphism> biproduct(std::span<const Object> xs) const {
    std::vector<BaseObject> parts;
    for (const auto& x : xs)
      for (std::uint32_t c = 0; c < x.copies; ++c) parts.push_back(x.base);
    auto bp = base_.biproduct(std::span<const BaseObject>(parts));
    Biproduct<Object, Morphism> out;
    out.object = object(bp.object, 1);
    std::size_t offset = 0;
    for (const auto& x : xs) {
      Morphism inj{x, out.object, {}}, proj{out.object, x, {}};
      for (std::uint32_t c = 0; c < x.copies; ++c) {
        if (isZeroObject(out.object)) break;
        inj.entries.push_back(bp.injections[offset + c]);   // 1 x k
        proj.entries.push_back(bp.projections[offset + c]);  // k x 1
      }
      offset += x.copies;
      out.injections.push_back(std::move(inj));
      out.projections.push_back(std::move(proj));
    }
    return out;
  }

  /// (A, k) for nonzero A and rank(A) k <= maxRank, and the zero object.
  std::vector<Object> objects(std::uint32_t maxRank) const {
    std::vector<Object> out{zeroObject()};
    for (auto& x : base_.objects(maxRank)) {
      const auto r = base_.rank(x);
      if (r == 0) continue;
      for (std::uint32_t k = 1; r * k <= maxRank; ++k) out.push_back(Object{x, k});
    }
    return out;
  }

  const FiniteGroup& group() const
    requires GCategory<A>
  {
    return base_.group();
  }
  Object act(GroupElem g, const Object& x) const
    requires GCategory<A>
  {
    return object(base_.act(g, x.base), x.copies);
  }
  Morphism act(GroupElem g, const Morphism& f) const
    requires GCategory<A>
  {
    Morphism m{act(g, f.source), act(g, f.target), {}};
    for (const auto& e : f.entries) m.entries.push_back(base_.act(g, e));
    return m;
  }

  /// (A, k) (x) Z^m = (A, km), with Z^k (x) Z^m ordered as in kronecker.
  Object tensor(const Object& x, std::size_t m) const { return object(x.base, static_cast<std::uint32_t>(x.copies * m)); }
  /// phi (x) f: entry (i m' + a, j m + b) is f(a, b) phi(i, j).
  Morphism tensor(const Morphism& f, const IntMatrix& c) const {
    Morphism m = zeroMorphism(tensor(f.source, c.cols()), tensor(f.target, c.rows()));
    const std::uint32_t k = f.source.copies, l = f.target.copies;
    const std::size_t cols = std::size_t{k} * c.cols();
    if (m.entries.empty()) return m;
    for (std::uint32_t i = 0; i < l; ++i)
      for (std::uint32_t j = 0; j < k; ++j)
        for (std::size_t a = 0; a < c.rows(); ++a)
          for (std::size_t b = 0; b < c.cols(); ++b)
            m.entries[(i * c.rows() + a) * cols + j * c.cols() + b] =
                scaleMorphism(base_, c(a, b), f.entries[std::size_t{i} * k + j]);
    return m;
  }

  Json toJson(const Object& x) const { return Json{{"base", base_.toJson(x.base)}, {"copies", x.copies}}; }
  Json toJson(const Morphism& f) const {
    Json es = Json::array();
    for (const auto& e : f.entries) es.push_back(base_.toJson(e));
    return Json{{"source", toJson(f.source)}, {"target", toJson(f.target)}, {"entries", es}};
  }

 private:
  A base_;
};

/// D(I) for a finite index set I = {0, ..., n-1}: objects are I-indexed
/// families, morphisms I x I matrices of D-morphisms, composed as matrices.
/// The action, when D has one, is entrywise.
template <AdditiveCategory D>
class MatrixCategory {
 public:
  using BaseObject = ObjectOf<D>;
  using BaseMorphism = MorphismOf<D>;
  struct Object {
    std::vector<BaseObject> entries;
    bool operator==(const Object&) const = default;
    bool operator<(const Object& o) const { return entries < o.entries; }
    bool operator>(const Object& o) const { return o < *this; }
    bool operator<=(const Object& o) const { return !(o < *this); }
    bool operator>=(const Object& o) const { return !(*this < o); }
  };
  struct Morphism {
    Object source;
    Object target;
    std::vector<BaseMorphism> entries;  // (i, j): source_j -> target_i, row-major
    bool operator==(const Morphism&) const = default;
    bool operator<(const Morphism& o) const {
      return std::tie(source, target, entries) < std::tie(o.source, o.target, o.entries);
    }
    bool operator>(const Morphism& o) const { return o < *this; }
    bool operator<=(const Morphism& o) const { return !(o < *this); }
    bool operator>=(const Morphism& o) const { return !(*this < o); }
  };

  MatrixCategory(D base, std::uint32_t indexSize) : base_(std::move(base)), n_(indexSize) {}

  const D& base() const { return base_; }
  std::uint32_t indexSize() const { return n_; }

  Object zeroObject() const { return Object{std::vector<BaseObject>(n_, base_.zeroObject())}; }
  bool isZeroObject(const Object& x) const {
    for (const auto& e : x.entries)
      if (!base_.isZeroObject(e)) return false;
    return true;
  }
  std::uint64_t rank(const Object& x) const {
    std::uint64_t r = 0;
    for (const auto& e : x.entries) r += base_.rank(e);
    return r;
  }
  Morphism zeroMorphism(const Object& x, const Object& y) const {
    Morphism m{x, y, {}};
    for (std::uint32_t i = 0; i < n_; ++i)
      for (std::uint32_t j = 0; j < n_; ++j) m.entries.push_back(base_.zeroMorphism(x.entries[j], y.entries[i]));
    return m;
  }
  Morphism identity(const Object& x) const {
    Morphism m = zeroMorphism(x, x);
    for (std::uint32_t i = 0; i < n_; ++i) m.entries[std::size_t{i} * n_ + i] = base_.identity(x.entries[i]);
    return m;
  }
  const Object& source(const Morphism& f) const { return f.source; }
  const Object& target(const Morphism& f) const { return f.target; }
  Morphism compose(const Morphism& g, const Morphism& f) const {
    if (!(f.target == g.source)) throw MismatchError("D(I): morphisms are not composable");
    Morphism m = zeroMorphism(f.source, g.target);
    for (std::uint32_t i = 0; i < n_; ++i)
      for (std::uint32_t j = 0; j < n_; ++j) {
        auto& out = m.entries[std::size_t{i} * n_ + j];
        for (std::uint32_t c = 0; c < n_; ++c)
          out = base_.add(out, base_.compose(g.entries[std::size_t{i} * n_ + c], f.entries[std::size_t{c} * n_ + j]));
      }
    return m;
  }
  Morphism add(const Morphism& f, const Morphism& g) const {
    if (!(f.source == g.source) || !(f.target == g.target)) throw MismatchError("D(I): adding non-parallel morphisms");
    Morphism m = f;
    for (std::size_t i = 0; i < m.entries.size(); ++i) m.entries[i] = base_.add(m.entries[i], g.entries[i]);
    return m;
  }
  Morphism negate(const Morphism& f) const {
    Morphism m = f;
    for (auto& e : m.entries) e = base_.negate(e);
    return m;
  }
  bool isZero(const Morphism& f) const {
    for (const auto& e : f.entries)
      if (!base_.isZero(e)) return false;
    return true;
  }
  std::uint64_t homSize(const Object& x, const Object& y) const {
    std::uint64_t n = 1;
    for (std::uint32_t i = 0; i < n_; ++i)
      for (std::uint32_t j = 0; j < n_; ++j) n = saturatingMul(n, base_.homSize(x.entries[j], y.entries[i]));
    return n;
  }
  Morphism homElement(const Object& x, const Object& y, std::uint64_t index) const {
    Morphism m{x, y, {}};
    for (std::uint32_t i = 0; i < n_; ++i)
      for (std::uint32_t j = 0; j < n_; ++j) {
        const auto h = base_.homSize(x.entries[j], y.entries[i]);
        m.entries.push_back(base_.homElement(x.entries[j], y.entries[i], index % h));
        index /= h;
      }
    return m;
  }
  Biproduct<Object, Morphism> biproduct(std::span<const Object> xs) const {
    Biproduct<Object, Morphism> out;
    std::vector<Biproduct<BaseObject, BaseMorphism>> local;
    out.object.entries.resize(n_);
    for (std::uint32_t i = 0; i < n_; ++i) {
      std::vector<BaseObject> parts;
      for (const auto& x : xs) parts.push_back(x.entries[i]);
      local.push_back(base_.biproduct(std::span<const BaseObject>(parts)));
      out.object.entries[i] = local.back().object;
    }
    for (std::size_t j = 0; j < xs.size(); ++j) {
      auto inj = zeroMorphism(xs[j], out.object);
      auto proj = zeroMorphism(out.object, xs[j]);
      for (std::uint32_t i = 0; i < n_; ++i) {
        inj.entries[std::size_t{i} * n_ + i] = local[i].injections[j];
        proj.entries[std::size_t{i} * n_ + i] = local[i].projections[j];
      }
      out.injections.push_back(std::move(inj));
      out.projections.push_back(std::move(proj));
    }
    return out;
  }
  std::vector<Object> objects(std::uint32_t maxRank) const {
    std::vector<BaseObject> pieces = base_.objects(maxRank);
    std::vector<Object> out;
    Object current{std::vector<BaseObject>(n_, base_.zeroObject())};
    enumerate(0, maxRank, pieces, current, out);
    return out;
  }

  const FiniteGroup& group() const
    requires GCategory<D>
  {
    return base_.group();
  }
  Object act(GroupElem g, const Object& x) const
    requires GCategory<D>
  {
    Object y;
    for (const auto& e : x.entries) y.entries.push_back(base_.act(g, e));
    return y;
  }
  Morphism act(GroupElem g, const Morphism& f) const
    requires GCategory<D>
  {
    Morphism m{act(g, f.source), act(g, f.target), {}};
    for (const auto& e : f.entries) m.entries.push_back(base_.act(g, e));
    return m;
  }

  Json toJson(const Object& x) const {
    Json j = Json::array();
    for (const auto& e : x.entries) j.push_back(base_.toJson(e));
    return j;
  }
  Json toJson(const Morphism& f) const {
    Json es = Json::array();
    for (const auto& e : f.entries) es.push_back(base_.toJson(e));
    return Json{{"source", toJson(f.source)}, {"target", toJson(f.target)}, {"entries", es}};
  }

 private:
  void enumerate(std::uint32_t i, std::uint64_t budget, const std::vector<BaseObject>& pieces, Object& current,
                 std::vector<Object>& out) const {
    if (i == n_) {
      out.push_back(current);
      return;
    }
    for (const auto& p : pieces) {
      const auto r = base_.rank(p);
      if (r > budget) continue;
      current.entries[i] = p;
      enumerate(i + 1, budget - r, pieces, current, out);
    }
    current.entries[i] = base_.zeroObject();
  }

  D base_;
  std::uint32_t n_;
};

/// The inclusion A -> A^f, x |-> (x, 1).
template <GCategory A>
Functor<A, TensorCategory<A>> tensorInclusion(const A& a) {
  TensorCategory<A> af(a);
  return Functor<A, TensorCategory<A>>(
      "tensor-inclusion", a, af, [af](const ObjectOf<A>& x) { return af.object(x, 1); },
      [af](const MorphismOf<A>& f) {
        const auto x = af.object(f.source, 1), y = af.object(f.target, 1);
        if (af.isZeroObject(x) || af.isZeroObject(y)) return af.zeroMorphism(x, y);
        return af.morphism(x, y, std::vector<MorphismOf<A>>{f});
      });
}

/// (A, k) ~ (A^k, 1) through the structure maps of the k-fold biproduct;
/// the essential-surjectivity hint for tensorInclusion.
template <GCategory A>
std::optional<IsoWitness<A, TensorCategory<A>>> tensorInclusionWitness(const TensorCategory<A>& af,
                                                                       const typename TensorCategory<A>::Object& x) {
  const A& a = af.base();
  std::vector<ObjectOf<A>> parts(x.copies, x.base);
  auto bp = a.biproduct(std::span<const ObjectOf<A>>(parts));
  const auto target = af.object(bp.object, 1);
  if (af.isZeroObject(x)) return IsoWitness<A, TensorCategory<A>>{a.zeroObject(), af.identity(x), af.identity(x)};
  return IsoWitness<A, TensorCategory<A>>{bp.object, af.morphism(x, target, bp.injections),
                                          af.morphism(target, x, bp.projections)};
}

/// The iso (sum_j x_j) (x) Z^m -> sum_j (x_j (x) Z^m), i.e. sum_j i'_j o (p_j (x) 1),
/// and its inverse sum_j (i_j (x) 1) o p'_j.
template <AdditiveCategory A>
std::pair<typename TensorCategory<A>::Morphism, typename TensorCategory<A>::Morphism> tensorSumIso(
    const TensorCategory<A>& af, std::span<const typename TensorCategory<A>::Object> xs, std::size_t m) {
  using Obj = typename TensorCategory<A>::Object;
  const auto sum = af.biproduct(xs);
  std::vector<Obj> tensored;
  for (const auto& x : xs) tensored.push_back(af.tensor(x, m));
  const auto sumOfTensors = af.biproduct(std::span<const Obj>(tensored));
  const IntMatrix one = IntMatrix::identity(m);
  const auto src = af.tensor(sum.object, m);
  auto fwd = af.zeroMorphism(src, sumOfTensors.object);
  auto bwd = af.zeroMorphism(sumOfTensors.object, src);
  for (std::size_t j = 0; j < xs.size(); ++j) {
    fwd = af.add(fwd, af.compose(sumOfTensors.injections[j], af.tensor(sum.projections[j], one)));
    bwd = af.add(bwd, af.compose(af.tensor(sum.injections[j], one), sumOfTensors.projections[j]));
  }
  return {fwd, bwd};
}

template <GCategory A>
using SwanStar = StarCategory<TensorCategory<A>>;

/// A^f *_G pt.
template <GCategory A>
SwanStar<A> swanStar(const A& a) {
  return SwanStar<A>::overSet(TensorCategory<A>(a), GSet::point(a.group()));
}

/// - (x) M on A^f *_G pt: objects x |-> x (x) UM, components (phi (x) M)_g = phi_g (x) l_g.
template <GCategory A>
Functor<SwanStar<A>, SwanStar<A>> swanAction(const SwanStar<A>& star, const SwanModule& m) {
  if (!(m.group() == star.baseGroup())) throw MismatchError("swan action: module over another group");
  auto onObject = [star, m](const typename SwanStar<A>::Object& x) {
    typename SwanStar<A>::Object y;
    for (const auto& [s, v] : x.entries) {
      auto t = star.base().tensor(v, m.rank());
      if (!star.base().isZeroObject(t)) y.entries.emplace(s, std::move(t));
    }
    return y;
  };
  auto onMorphism = [star, m, onObject](const typename SwanStar<A>::Morphism& f) {
    typename SwanStar<A>::Morphism out{onObject(f.source), onObject(f.target), {}};
    for (const auto& [key, v] : f.entries) {
      auto t = star.base().tensor(v, m.action(key.first));
      if (!star.base().isZero(t)) out.entries.emplace(key, std::move(t));
    }
    return out;
  };
  return Functor<SwanStar<A>, SwanStar<A>>("tensor-" + m.name(), star, star, onObject, onMorphism);
}

/// tau(f, A)_x: x (x) M -> x (x) N with component id (x) f at e and zero elsewhere.
template <GCategory A>
typename SwanStar<A>::Morphism swanTransformation(const SwanStar<A>& star, const IntMatrix& f,
                                                  const typename SwanStar<A>::Object& x) {
  const auto& af = star.base();
  typename SwanStar<A>::Morphism out;
  for (const auto& [s, v] : x.entries) {
    out.source.entries.emplace(s, af.tensor(v, f.cols()));
    out.target.entries.emplace(s, af.tensor(v, f.rows()));
  }
  std::erase_if(out.source.entries, [&](const auto& kv) { return af.isZeroObject(kv.second); });
  std::erase_if(out.target.entries, [&](const auto& kv) { return af.isZeroObject(kv.second); });
  for (const auto& [s, v] : x.entries) {
    auto t = af.tensor(af.identity(v), f);
    if (!af.isZero(t)) out.entries.emplace(typename SwanStar<A>::Key{star.baseGroup().identity(), s}, std::move(t));
  }
  return out;
}

/// The checks behind - (x) M on A^f *_G pt, at objects of rank <= maxRank:
///   swan.representation   - each l_g table (exhaustive);
///   swan.tensor           - (x (x) F) (x) F' = x (x) (F (x) F'), g^*(x (x) F) = (g^*x) (x) F,
///                           bilinearity, and the direct-sum iso;
///   swan.inclusion.*      - the audit of A -> A^f;
///   swan.functoriality    - (psi o phi) (x) M = (psi (x) M) o (phi (x) M), identities, sums;
///   swan.naturality       - tau(f, A) commutes with every phi, for each given map f.
template <GCategory A>
std::vector<CheckResult> verifySwanAction(const A& a, const std::vector<SwanModule>& modules,
                                          const std::vector<SwanMap>& maps, std::uint32_t maxRank,
                                          const Budget& budget) {
  std::vector<CheckResult> out;
  for (const auto& m : modules) out.push_back(verifySwanModule(m, "swan.representation." + m.name()));

  const auto star = swanStar(a);
  const auto& af = star.base();
  const auto afObjects = af.objects(maxRank);

  CheckBuilder tensor("swan.tensor",
                      "(x (x) F) (x) F' = x (x) (F (x) F'), g^*(x (x) F) = (g^*x) (x) F, bilinear, sums commute");
  {
    std::vector<IntMatrix> probes{IntMatrix::identity(1), IntMatrix::fromRows({{2}}), IntMatrix::fromRows({{0, 1}, {1, 0}}),
                                  IntMatrix::fromRows({{1, -1}})};
    for (const auto& m : modules)
      for (GroupElem g = 0; g < m.group().order(); ++g) probes.push_back(m.action(g));
    detail::record(tensor, sweepParallelPairs(af, afObjects, budget.derive("swan.tensor"), [&](const auto& f, const auto& f2) {
      return detail::guarded(tensor, [&] { return Json{{"f", af.toJson(f)}}; }, [&] {
        for (std::size_t p = 0; p < probes.size(); ++p) {
          const auto& c = probes[p];
          const auto& c2 = probes[(p + 1) % probes.size()];
          if (!(af.tensor(af.tensor(f, c), c2) == af.tensor(f, c.kronecker(c2))))
            return tensor.fail(Json{{"f", af.toJson(f)}, {"c", c.toJson()}, {"c'", c2.toJson()}, {"law", "associativity"}});
          for (GroupElem g = 0; g < a.group().order(); ++g)
            if (!(af.act(g, af.tensor(f, c)) == af.tensor(af.act(g, f), c)))
              return tensor.fail(Json{{"f", af.toJson(f)}, {"c", c.toJson()}, {"g", a.group().elementName(g)},
                                      {"law", "G-compatibility"}});
          if (!(af.tensor(af.add(f, f2), c) == af.add(af.tensor(f, c), af.tensor(f2, c))))
            return tensor.fail(Json{{"f", af.toJson(f)}, {"f'", af.toJson(f2)}, {"c", c.toJson()}, {"law", "additive in phi"}});
          if (c.rows() == c2.rows() && c.cols() == c2.cols() &&
              !(af.tensor(f, c + c2) == af.add(af.tensor(f, c), af.tensor(f, c2))))
            return tensor.fail(Json{{"f", af.toJson(f)}, {"c", c.toJson()}, {"c'", c2.toJson()}, {"law", "additive in f"}});
        }
        return true;
      });
    }));
    for (const auto& x : afObjects)
      for (const auto& y : afObjects) {
        tensor.count();
        const std::vector<typename TensorCategory<A>::Object> pair{x, y};
        detail::guarded(tensor, [&] { return Json{{"x", af.toJson(x)}, {"y", af.toJson(y)}}; }, [&] {
          for (std::size_t m : {1u, 2u}) {
            const auto [fwd, bwd] = tensorSumIso(af, std::span<const typename TensorCategory<A>::Object>(pair), m);
            if (!(af.compose(bwd, fwd) == af.identity(fwd.source)) || !(af.compose(fwd, bwd) == af.identity(fwd.target)))
              return tensor.fail(Json{{"x", af.toJson(x)}, {"y", af.toJson(y)}, {"m", m}, {"law", "direct sums"}});
          }
          return true;
        });
      }
  }
  out.push_back(std::move(tensor).finish());

  AuditOptions opt;
  opt.maxRank = maxRank;
  opt.budget = budget.derive("swan.inclusion");
  for (auto& r : auditFunctor<A, TensorCategory<A>>(tensorInclusion(a), "swan.inclusion", opt,
                                                    [&](const auto& x) { return tensorInclusionWitness(af, x); }))
    out.push_back(std::move(r));

  const auto objs = star.objects(maxRank);
  CheckBuilder functor("swan.functoriality", "(psi o phi) (x) M = (psi (x) M) o (phi (x) M), id (x) M = id, additive");
  for (const auto& m : modules) {
    const auto fm = swanAction(star, m);
    for (const auto& x : objs) {
      functor.count();
      if (!(fm.morphism(star.identity(x)) == star.identity(fm.object(x))))
        functor.fail(Json{{"module", m.name()}, {"x", star.toJson(x)}, {"law", "identity"}});
    }
    detail::record(functor, sweepComposable(star, objs, budget.derive("swan.functoriality." + m.name()),
                                            [&](const auto& f, const auto& g) {
      return detail::guarded(functor, [&] { return Json{{"phi", star.toJson(f)}, {"psi", star.toJson(g)}}; }, [&] {
        if (!(fm.morphism(star.compose(g, f)) == star.compose(fm.morphism(g), fm.morphism(f))))
          return functor.fail(Json{{"module", m.name()}, {"phi", star.toJson(f)}, {"psi", star.toJson(g)},
                                   {"law", "composition"}});
        return true;
      });
    }));
    detail::record(functor, sweepParallelPairs(star, objs, budget.derive("swan.additivity." + m.name()),
                                               [&](const auto& f, const auto& g) {
      return detail::guarded(functor, [&] { return Json{{"phi", star.toJson(f)}, {"psi", star.toJson(g)}}; }, [&] {
        if (!(fm.morphism(star.add(f, g)) == star.add(fm.morphism(f), fm.morphism(g))))
          return functor.fail(Json{{"module", m.name()}, {"phi", star.toJson(f)}, {"psi", star.toJson(g)},
                                   {"law", "additivity"}});
        return true;
      });
    }));
  }
  out.push_back(std::move(functor).finish());

  CheckBuilder natural("swan.naturality", "tau(f)_y o (phi (x) M) = (phi (x) N) o tau(f)_x, tau(f)_e = id (x) f, zero elsewhere");
  for (const auto& f : maps) {
    const auto fm = swanAction(star, f.source), fn = swanAction(star, f.target);
    detail::record(natural, sweepMorphisms(star, objs, budget.derive("swan.naturality"), [&](const auto& phi) {
      return detail::guarded(natural, [&] { return Json{{"phi", star.toJson(phi)}}; }, [&] {
        const auto tx = swanTransformation(star, f.matrix, star.source(phi));
        const auto ty = swanTransformation(star, f.matrix, star.target(phi));
        const auto lhs = star.compose(ty, fm.morphism(phi));
        const auto rhs = star.compose(fn.morphism(phi), tx);
        if (!(lhs == rhs))
          return natural.fail(Json{{"map", f.source.name() + " -> " + f.target.name()}, {"phi", star.toJson(phi)},
                                   {"lhs", star.toJson(lhs)}, {"rhs", star.toJson(rhs)}});
        return true;
      });
    }));
  }
  out.push_back(std::move(natural).finish());
  return out;
}

/// The sequence x (x) L -> x (x) M -> x (x) N of tau's at each object x of
/// rank <= maxRank, split by the components id (x) r and id (x) s at e.
template <GCategory A>
CheckResult verifyObjectwiseSplitting(const A& a, const SplitSequence& seq, std::uint32_t maxRank,
                                      const std::string& id = "swan.objectwise-splitting") {
  CheckBuilder check(id, "tau(p) tau(i) = 0, r i = 1, p s = 1 and i r + s p = 1 after - (x) x, for every object x");
  const auto integral = verifySplitting(seq);
  if (integral.failed()) {
    check.fail(*integral.witness);
    return std::move(check).finish();
  }
  const auto star = swanStar(a);
  for (const auto& x : star.objects(maxRank)) {
    check.count();
    detail::guarded(check, [&] { return Json{{"x", star.toJson(x)}}; }, [&] {
      const auto i = swanTransformation(star, seq.i.matrix, x);
      const auto p = swanTransformation(star, seq.p.matrix, x);
      const auto r = swanTransformation(star, seq.r, x);
      const auto s = swanTransformation(star, seq.s, x);
      const bool ok = star.isZero(star.compose(p, i)) && star.compose(r, i) == star.identity(i.source) &&
                      star.compose(p, s) == star.identity(p.target) &&
                      star.add(star.compose(i, r), star.compose(s, p)) == star.identity(i.target);
      if (!ok) return check.fail(Json{{"x", star.toJson(x)}});
      return true;
    });
  }
  return std::move(check).finish();
}

}  // namespace coeffcat
