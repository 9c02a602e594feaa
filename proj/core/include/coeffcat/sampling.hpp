#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "coeffcat/check.hpp"

namespace coeffcat {

/// Exhaustive-versus-sampled policy. A search space no larger than
/// `exhaustiveLimit` is enumerated; anything larger gets `samples` seeded draws.
struct Budget {
  std::uint64_t exhaustiveLimit = 10'000;
  std::uint64_t samples = 10'000;
  std::uint64_t seed = 0x5eedULL;

  /// Same limits, seed mixed with `salt` so that independent checks draw
  /// independent streams while staying reproducible.
  Budget derive(std::string_view salt) const;
  Budget withSamples(std::uint64_t n) const {
    Budget b = *this;
    b.samples = n;
    return b;
  }
};

using Rng = std::mt19937_64;

inline std::uint64_t saturatingMul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

inline std::uint64_t saturatingPow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) r = saturatingMul(r, base);
  return r;
}

inline std::uint64_t uniformIndex(Rng& rng, std::uint64_t n) {
  return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng);
}

struct SweepStats {
  Coverage coverage = Coverage::Exhaustive;
  std::uint64_t visited = 0;
};

/// Visits index tuples of the box `dims`: all of them when the volume is within
/// budget, otherwise `budget.samples` seeded draws. `fn` receives the tuple and
/// returns false to stop early. A box with a zero side has no tuples.
template <class Fn>
SweepStats sweep(std::span<const std::uint64_t> dims, const Budget& budget, Fn&& fn) {
  SweepStats stats;
  std::uint64_t volume = 1;
  for (auto d : dims) volume = saturatingMul(volume, d);
  if (volume == 0) return stats;
  std::vector<std::uint64_t> idx(dims.size(), 0);
  if (volume <= budget.exhaustiveLimit) {
    for (std::uint64_t n = 0; n < volume; ++n) {
      ++stats.visited;
      if (!fn(std::span<const std::uint64_t>(idx))) return stats;
      for (std::size_t k = 0; k < idx.size(); ++k) {
        if (++idx[k] < dims[k]) break;
        idx[k] = 0;
      }
    }
    return stats;
  }
  stats.coverage = Coverage::Sampled;
  Rng rng(budget.seed);
  for (std::uint64_t n = 0; n < budget.samples; ++n) {
    for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = uniformIndex(rng, dims[k]);
    ++stats.visited;
    if (!fn(std::span<const std::uint64_t>(idx))) return stats;
  }
  return stats;
}

template <class Fn>
SweepStats sweep(std::initializer_list<std::uint64_t> dims, const Budget& budget, Fn&& fn) {
  std::vector<std::uint64_t> d(dims);
  return sweep(std::span<const std::uint64_t>(d), budget, std::forward<Fn>(fn));
}

}  // namespace coeffcat
