#include <benchmark/benchmark.h>

#include "skewres/pipeline.hpp"

using namespace skewres;

namespace {

void BM_GroebnerI(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  SkewModel<ModP> model(n, FieldSpec::prime_field(), MonomialOrder::lex());
  auto gens = model.generators(n);
  gens.pop_back();
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(model.ring(), gens).size());
}
BENCHMARK(BM_GroebnerI)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_GroebnerL(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  SkewModel<ModP> model(n, FieldSpec::prime_field(), MonomialOrder::degrevlex());
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(model.ring(), model.generators(n)).size());
}
BENCHMARK(BM_GroebnerL)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

void BM_Colon(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  SkewModel<ModP> model(n, FieldSpec::prime_field(), MonomialOrder::degrevlex());
  auto gens = model.generators(n);
  auto f = gens.back();
  gens.pop_back();
  for (auto _ : state) {
    Ideal<ModP> ideal(model.ring(), gens);
    benchmark::DoNotOptimize(colon(ideal, f).generators().size());
  }
}
BENCHMARK(BM_Colon)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_RationalPipeline(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  PipelineOptions options;
  options.verify = false;
  for (auto _ : state) {
    auto run = resolve_L<Rational>(n, FieldSpec::rationals(), ResolveMode::pipeline, options);
    benchmark::DoNotOptimize(run.resolution().ranks());
  }
}
BENCHMARK(BM_RationalPipeline)->DenseRange(4, 5)->Unit(benchmark::kMillisecond);

void BM_Resolve(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto mode = state.range(1) ? ResolveMode::direct : ResolveMode::pipeline;
  PipelineOptions options;
  options.verify = false;
  for (auto _ : state) {
    auto run = resolve_L<ModP>(n, FieldSpec::prime_field(), mode, options);
    benchmark::DoNotOptimize(run.resolution().ranks());
  }
  state.SetLabel(to_string(mode));
}
BENCHMARK(BM_Resolve)->ArgsProduct({{4, 5, 6}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Resolve)->Args({7, 0})->Unit(benchmark::kMillisecond);

void BM_Minimalize(benchmark::State& state) {
  SkewModel<ModP> model(5, FieldSpec::prime_field(), MonomialOrder::degrevlex());
  auto prev = resolve_L<ModP>(4, FieldSpec::prime_field(), ResolveMode::pipeline).resolution().in_ring(model.ring());
  std::vector<Polynomial<ModP>> ys;
  for (int j = 1; j < 5; ++j) ys.push_back(model.y(j));
  auto cone = mapping_cone(lift_chain_map(koszul(ys), prev, model.pfaffian_minor(5, 5)));
  for (auto _ : state) benchmark::DoNotOptimize(minimalize(cone).total_cancellations());
}
BENCHMARK(BM_Minimalize)->Unit(benchmark::kMillisecond);

void BM_Verify(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto run = resolve_L<ModP>(n, FieldSpec::prime_field(), ResolveMode::pipeline);
  SkewModel<ModP> model(n, FieldSpec::prime_field(), run.resolution().ring()->order());
  Ideal<ModP> ideal(run.resolution().ring(), model.generators(n));
  for (auto _ : state) benchmark::DoNotOptimize(verify_resolution(run.resolution(), ideal).passed());
}
BENCHMARK(BM_Verify)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
