#include <benchmark/benchmark.h>

#include "racg/ball.hpp"
#include "racg/center.hpp"
#include "racg/cosets.hpp"
#include "racg/growth.hpp"
#include "racg/hecke.hpp"

namespace {

using namespace racg;

CoxeterSystem pentagon() {
  return CoxeterSystem::from_names({"a", "b", "c", "d", "e"},
                                   {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"e", "a"}});
}

void BM_Normalize(benchmark::State& state) {
  const auto sys = pentagon();
  Word w;
  for (int i = 0; i < state.range(0); ++i) w.push_back(gen(static_cast<std::size_t>((i * 7 + i / 3) % 5)));
  for (auto _ : state) benchmark::DoNotOptimize(normalize(sys, w));
}
BENCHMARK(BM_Normalize)->Arg(16)->Arg(64)->Arg(256);

void BM_Ball(benchmark::State& state) {
  const auto sys = pentagon();
  for (auto _ : state) benchmark::DoNotOptimize(ball(sys, static_cast<std::size_t>(state.range(0))).size());
}
BENCHMARK(BM_Ball)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_HeckeProduct(benchmark::State& state) {
  const auto sys = pentagon();
  const ExactParam param{};
  const Ball b = ball(sys, static_cast<std::size_t>(state.range(0)));
  ExactHecke x(sys.tag(), param);
  for (const auto& w : b.sphere(static_cast<std::size_t>(state.range(0)))) x.add_term(w, LaurentPoly::u());
  for (auto _ : state) benchmark::DoNotOptimize(mul(sys, x, x).size());
}
BENCHMARK(BM_HeckeProduct)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_GammaBall(benchmark::State& state) {
  const auto sys = pentagon();
  for (auto _ : state)
    benchmark::DoNotOptimize(build_gamma_ball(sys, static_cast<std::size_t>(state.range(0))).component_count);
}
BENCHMARK(BM_GammaBall)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_GrowthAndRho(benchmark::State& state) {
  const auto sys = pentagon();
  for (auto _ : state) benchmark::DoNotOptimize(rho(sys));
}
BENCHMARK(BM_GrowthAndRho)->Unit(benchmark::kMicrosecond);

void BM_CentralProjection(benchmark::State& state) {
  const auto sys = pentagon();
  const Rational q(1, 6);
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_central_projection(sys, q, static_cast<std::size_t>(state.range(0))).idempotence_residual);
}
BENCHMARK(BM_CentralProjection)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
