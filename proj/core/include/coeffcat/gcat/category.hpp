#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "coeffcat/errors.hpp"
#include "coeffcat/groups/group.hpp"
#include "coeffcat/sampling.hpp"

namespace coeffcat {

template <class Object, class Morphism>
struct Biproduct {
  Object object;
  std::vector<Morphism> injections;
  std::vector<Morphism> projections;
};

/// A small additive category presented computationally. Hom sets are finite
/// and enumerable: homElement(x, y, i) for i < homSize(x, y) is a bijection
/// onto Hom(x, y), so exhaustive and uniformly sampled sweeps share one code
/// path. homSize saturates at 2^64-1; such homs can only be sampled.
/// objects(n) lists objects of total rank at most n, zero object included.
/// compose(g, f) is g o f.
template <class C>
concept AdditiveCategory = requires(const C& c, const typename C::Object& x, const typename C::Morphism& f,
                                    std::uint64_t i, std::span<const typename C::Object> xs, std::uint32_t n) {
  requires std::totally_ordered<typename C::Object>;
  requires std::totally_ordered<typename C::Morphism>;
  { c.zeroObject() } -> std::same_as<typename C::Object>;
  { c.isZeroObject(x) } -> std::same_as<bool>;
  { c.rank(x) } -> std::convertible_to<std::uint64_t>;
  { c.identity(x) } -> std::same_as<typename C::Morphism>;
  { c.zeroMorphism(x, x) } -> std::same_as<typename C::Morphism>;
  { c.source(f) } -> std::convertible_to<const typename C::Object&>;
  { c.target(f) } -> std::convertible_to<const typename C::Object&>;
  { c.compose(f, f) } -> std::same_as<typename C::Morphism>;
  { c.add(f, f) } -> std::same_as<typename C::Morphism>;
  { c.negate(f) } -> std::same_as<typename C::Morphism>;
  { c.isZero(f) } -> std::same_as<bool>;
  { c.homSize(x, x) } -> std::same_as<std::uint64_t>;
  { c.homElement(x, x, i) } -> std::same_as<typename C::Morphism>;
  { c.biproduct(xs) } -> std::same_as<Biproduct<typename C::Object, typename C::Morphism>>;
  { c.objects(n) } -> std::same_as<std::vector<typename C::Object>>;
  { c.toJson(x) } -> std::same_as<Json>;
  { c.toJson(f) } -> std::same_as<Json>;
};

/// An additive category with a right action of a finite group by additive
/// functors: act(g, act(h, -)) = act(hg, -) and act(e, -) = id, on the nose.
template <class C>
concept GCategory = AdditiveCategory<C> && requires(const C& c, const typename C::Object& x,
                                                    const typename C::Morphism& f, GroupElem g) {
  { c.group() } -> std::convertible_to<const FiniteGroup&>;
  { c.act(g, x) } -> std::same_as<typename C::Object>;
  { c.act(g, f) } -> std::same_as<typename C::Morphism>;
};

template <AdditiveCategory C>
using ObjectOf = typename C::Object;
template <AdditiveCategory C>
using MorphismOf = typename C::Morphism;

/// Biproduct of two objects, the common case.
template <AdditiveCategory C>
Biproduct<ObjectOf<C>, MorphismOf<C>> biproduct2(const C& c, const ObjectOf<C>& a, const ObjectOf<C>& b) {
  std::vector<ObjectOf<C>> xs{a, b};
  return c.biproduct(std::span<const ObjectOf<C>>(xs));
}

/// Sum of a list of parallel morphisms; `zero` is returned for an empty list.
template <AdditiveCategory C>
MorphismOf<C> sumMorphisms(const C& c, const ObjectOf<C>& src, const ObjectOf<C>& tgt,
                           const std::vector<MorphismOf<C>>& fs) {
  if (fs.empty()) return c.zeroMorphism(src, tgt);
  MorphismOf<C> acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = c.add(acc, fs[i]);
  return acc;
}

inline std::string tupleSalt(std::span<const std::size_t> idx) {
  std::string s;
  for (auto i : idx) s += std::to_string(i) + ",";
  return s;
}

inline std::string tupleSalt(std::initializer_list<std::size_t> idx) {
  return tupleSalt(std::span<const std::size_t>(idx.begin(), idx.size()));
}

/// Sweeps boxes of morphism indices attached to `arity`-tuples of object
/// indices. `dims(t)` gives the box of object tuple t; `fn(t, i)` visits index
/// tuple i of that box and returns false to stop.
///
/// The budget covers the whole sweep: everything is enumerated when the total
/// volume fits `exhaustiveLimit`; otherwise `samples` draws are spread over
/// the object tuples, and object tuples are drawn as well once there are more
/// of them than samples.
template <class DimsFn, class Fn>
SweepStats sweepObjectTuples(std::size_t objects, std::size_t arity, const Budget& b, DimsFn&& dims, Fn&& fn) {
  SweepStats total;
  if (objects == 0) return total;
  const std::uint64_t tuples = saturatingPow(objects, arity);
  std::vector<std::size_t> t(arity, 0);
  auto advance = [&] {
    for (std::size_t k = arity; k-- > 0;) {
      if (++t[k] < objects) return true;
      t[k] = 0;
    }
    return false;
  };

  // Total volume, abandoned as soon as it exceeds the limit. Every tuple
  // contributes at least one case, so this costs at most the limit in calls.
  std::uint64_t volume = 0;
  bool small = true;
  do {
    std::uint64_t v = 1;
    for (auto d : dims(std::span<const std::size_t>(t))) v = saturatingMul(v, d);
    volume = volume + v < volume ? UINT64_MAX : volume + v;
    if (volume > b.exhaustiveLimit) {
      small = false;
      break;
    }
  } while (advance());
  std::fill(t.begin(), t.end(), 0);

  if (small || tuples <= b.samples) {
    Budget per = b;
    if (!small) per.exhaustiveLimit = per.samples = std::max<std::uint64_t>(b.samples / tuples, 1);
    else per.exhaustiveLimit = UINT64_MAX;
    do {
      const std::span<const std::size_t> ts(t);
      per.seed = b.derive(tupleSalt(ts)).seed;
      const auto d = dims(ts);
      bool stop = false;
      const auto s = sweep(std::span<const std::uint64_t>(d), per, [&](std::span<const std::uint64_t> i) {
        if (!fn(ts, i)) stop = true;
        return !stop;
      });
      total.visited += s.visited;
      if (s.coverage == Coverage::Sampled) total.coverage = Coverage::Sampled;
      if (stop) return total;
    } while (advance());
    return total;
  }

  total.coverage = Coverage::Sampled;
  Rng rng(b.seed);
  std::vector<std::uint64_t> idx;
  for (std::uint64_t n = 0; n < b.samples; ++n) {
    for (auto& k : t) k = static_cast<std::size_t>(uniformIndex(rng, objects));
    const std::span<const std::size_t> ts(t);
    const auto d = dims(ts);
    idx.resize(d.size());
    bool empty = false;
    for (std::size_t k = 0; k < d.size(); ++k) {
      if (d[k] == 0) empty = true;
      else idx[k] = uniformIndex(rng, d[k]);
    }
    if (empty) continue;
    ++total.visited;
    if (!fn(ts, std::span<const std::uint64_t>(idx))) return total;
  }
  return total;
}

/// homSize for every ordered pair, row-major.
template <AdditiveCategory C>
std::vector<std::uint64_t> homSizeTable(const C& c, const std::vector<ObjectOf<C>>& objs) {
  std::vector<std::uint64_t> h;
  h.reserve(objs.size() * objs.size());
  for (const auto& x : objs)
    for (const auto& y : objs) h.push_back(c.homSize(x, y));
  return h;
}

/// Calls fn(f) for morphisms f: x -> y over every ordered pair of objects.
template <AdditiveCategory C, class Fn>
SweepStats sweepMorphisms(const C& c, const std::vector<ObjectOf<C>>& objs, const Budget& b, Fn&& fn) {
  const auto h = homSizeTable(c, objs);
  const auto n = objs.size();
  return sweepObjectTuples(
      n, 2, b, [&](auto t) { return std::vector<std::uint64_t>{h[t[0] * n + t[1]]}; },
      [&](auto t, auto i) { return fn(c.homElement(objs[t[0]], objs[t[1]], i[0])); });
}

/// Calls fn(f, f2) for pairs of parallel morphisms x -> y.
template <AdditiveCategory C, class Fn>
SweepStats sweepParallelPairs(const C& c, const std::vector<ObjectOf<C>>& objs, const Budget& b, Fn&& fn) {
  const auto h = homSizeTable(c, objs);
  const auto n = objs.size();
  return sweepObjectTuples(
      n, 2, b,
      [&](auto t) {
        const auto k = h[t[0] * n + t[1]];
        return std::vector<std::uint64_t>{k, k};
      },
      [&](auto t, auto i) {
        return fn(c.homElement(objs[t[0]], objs[t[1]], i[0]), c.homElement(objs[t[0]], objs[t[1]], i[1]));
      });
}

/// Calls fn(f, g) for composable pairs f: x -> y, g: y -> z.
template <AdditiveCategory C, class Fn>
SweepStats sweepComposable(const C& c, const std::vector<ObjectOf<C>>& objs, const Budget& b, Fn&& fn) {
  const auto h = homSizeTable(c, objs);
  const auto n = objs.size();
  return sweepObjectTuples(
      n, 3, b, [&](auto t) { return std::vector<std::uint64_t>{h[t[0] * n + t[1]], h[t[1] * n + t[2]]}; },
      [&](auto t, auto i) {
        return fn(c.homElement(objs[t[0]], objs[t[1]], i[0]), c.homElement(objs[t[1]], objs[t[2]], i[1]));
      });
}

/// Calls fn(f, g, h) for composable chains x -> y -> z -> w.
template <AdditiveCategory C, class Fn>
SweepStats sweepChains3(const C& c, const std::vector<ObjectOf<C>>& objs, const Budget& b, Fn&& fn) {
  const auto h = homSizeTable(c, objs);
  const auto n = objs.size();
  return sweepObjectTuples(
      n, 4, b,
      [&](auto t) {
        return std::vector<std::uint64_t>{h[t[0] * n + t[1]], h[t[1] * n + t[2]], h[t[2] * n + t[3]]};
      },
      [&](auto t, auto i) {
        return fn(c.homElement(objs[t[0]], objs[t[1]], i[0]), c.homElement(objs[t[1]], objs[t[2]], i[1]),
                  c.homElement(objs[t[2]], objs[t[3]], i[2]));
      });
}

inline void absorb(SweepStats& into, const SweepStats& s) {
  into.visited += s.visited;
  if (s.coverage == Coverage::Sampled) into.coverage = Coverage::Sampled;
}

}  // namespace coeffcat
