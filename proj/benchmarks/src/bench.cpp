#include <benchmark/benchmark.h>

#include "coeffcat/crossed/crossed_product.hpp"
#include "coeffcat/gcat/verify.hpp"
#include "coeffcat/harness/report.hpp"
#include "coeffcat/star/star_category.hpp"
#include "coeffcat/swan/tensor.hpp"

using namespace coeffcat;

namespace {

using Star = StarCategory<ModuleCategory>;

// Composition in A *_G G over F2 with rank-1 entries at every point; the hom
// sets have |G|^2 nonzero components.
void BM_StarCompose(benchmark::State& state) {
  const auto g = FiniteGroup::cyclic(static_cast<std::uint32_t>(state.range(0)));
  const auto star = Star::overSet(ModuleCategory::trivialRing(FiniteRing::zmod(2), g), GSet::regular(g));
  Star::Object x;
  for (const auto& y : star.objects(g.order()))
    if (y.entries.size() == g.order() && star.rank(y) == g.order()) x = y;
  const auto n = star.homSize(x, x);
  std::uint64_t i = 0;
  for (auto _ : state) {
    const auto f = star.homElement(x, x, i++ % n);
    const auto h = star.homElement(x, x, (i * 7) % n);
    benchmark::DoNotOptimize(star.compose(h, f));
  }
}
BENCHMARK(BM_StarCompose)->Arg(2)->Arg(3)->Arg(4);

void BM_CrossedMultiply(benchmark::State& state) {
  const auto q8 = FiniteGroup::quaternion8();
  const CrossedProductRing ring(
      fromExtension(GroupExtension::fromNormalSubgroup(q8, q8.center()), FiniteRing::zmod(3)));
  const auto x = ring.decode(12345 % ring.size()), y = ring.decode(54321 % ring.size());
  for (auto _ : state) benchmark::DoNotOptimize(ring.multiply(x, y));
}
BENCHMARK(BM_CrossedMultiply);

void BM_TensorKronecker(benchmark::State& state) {
  const auto g = FiniteGroup::cyclic(2);
  const auto a = ModuleCategory::trivialRing(FiniteRing::zmod(2), g);
  const TensorCategory<ModuleCategory> af(a);
  const auto x = af.object(a.objects(1).back(), static_cast<std::uint32_t>(state.range(0)));
  const auto f = af.identity(x);
  const auto m = IntMatrix::identity(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(af.tensor(f, m));
}
BENCHMARK(BM_TensorKronecker)->Arg(2)->Arg(4)->Arg(8);

// Composition laws of C2 on three fixed points under two exhaustive limits:
// the smaller one forces sampling.
void BM_CompositionLaws(benchmark::State& state) {
  const auto g = FiniteGroup::cyclic(2);
  const auto pt = GSet::point(g);
  const auto star = Star::overSet(ModuleCategory::trivialRing(FiniteRing::zmod(2), g),
                                  GSet::disjointUnion(GSet::disjointUnion(pt, pt), pt));
  const Budget budget{static_cast<std::uint64_t>(state.range(0)), 2'000, 1};
  for (auto _ : state) benchmark::DoNotOptimize(verifyCompositionLaws(star, 1, budget, "star"));
}
BENCHMARK(BM_CompositionLaws)->Arg(1'000)->Arg(100'000)->Unit(benchmark::kMillisecond);

void BM_RunBuiltin(benchmark::State& state, const char* name) {
  const auto d = loadInstance(name);
  for (auto _ : state) benchmark::DoNotOptimize(runSuites(d));
}
BENCHMARK_CAPTURE(BM_RunBuiltin, c2_trivial, "c2-trivial")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_RunBuiltin, c4_extension, "c4-extension")->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
