#include <benchmark/benchmark.h>

#include "freealg/freecert.hpp"
#include "freealg/series.hpp"

using namespace freealg;

namespace {

JetQ3 dense_tower_jet(const HeisenbergTower& h, int seed) {
  RationalSampler rng(static_cast<std::uint64_t>(seed));
  JetQ3 out(h.ring_x());
  for (int i = -2; i < h.order() / 2; ++i) {
    const JetQ z = JetQ::monomial(h.ring_z(), rng.next(9, 4), rng.uniform_int(-2, 2));
    const JetQ2 y = JetQ2::monomial(h.ring_y(), z, rng.uniform_int(-2, 2));
    out += JetQ3::monomial(h.ring_x(), y, i);
  }
  return out;
}

void BM_TowerMultiply(benchmark::State& state) {
  const HeisenbergTower h(static_cast<int>(state.range(0)));
  const JetQ3 a = dense_tower_jet(h, 1), b = dense_tower_jet(h, 2);
  const int mode = static_cast<int>(state.range(1));
  for (auto _ : state) {
    if (mode == 0)
      benchmark::DoNotOptimize(JetQ3::multiply_reference(a, b));
    else
      benchmark::DoNotOptimize(JetQ3::multiply(a, b, mode == 1 ? Exec::Serial : Exec::Parallel));
  }
}
BENCHMARK(BM_TowerMultiply)
    ->ArgNames({"order", "kernel"})
    ->ArgsProduct({{8, 12}, {0, 1, 2}})
    ->Unit(benchmark::kMillisecond);

void BM_SkewLaurentWords(benchmark::State& state) {
  const auto ring = skew_laurent_ring(ShiftAut{Rational(1)}, static_cast<int>(state.range(0)));
  const SymmetricImages im = build_heisenberg_images();
  const std::vector<JetK> gens{to_jet(ring, im.sbar), to_jet(ring, im.tbar)};
  const auto words = enumerate_words(2, 3, false);
  const std::function<JetK(const JetK&, const JetK&)> mul = [](const JetK& a, const JetK& b) { return a * b; };
  const bool reference = state.range(1) == 0;
  for (auto _ : state) {
    if (reference)
      benchmark::DoNotOptimize(evaluate_words_reference<JetK>(words, gens, {}, JetK::one(ring), mul));
    else
      benchmark::DoNotOptimize(evaluate_words<JetK>(words, gens, {}, JetK::one(ring), mul, Exec::Parallel));
  }
}
BENCHMARK(BM_SkewLaurentWords)
    ->ArgNames({"order", "levelwise"})
    ->ArgsProduct({{16}, {0, 1}})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
