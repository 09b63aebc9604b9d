#include <benchmark/benchmark.h>

#include <random>

#include "hypspec/eigen.hpp"
#include "hypspec/pipeline.hpp"
#include "hypspec/rayleigh.hpp"

using namespace hypspec;

static void BM_Girth(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto g = graphs::random_pairing(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(graphs::girth(g));
}
BENCHMARK(BM_Girth)->Arg(100)->Arg(1000)->Arg(10000);

static void BM_Bridges(benchmark::State& state) {
  const auto built = pipeline::construct_chain(static_cast<std::size_t>(state.range(0)), 1.0, std::nullopt, 1);
  for (auto _ : state) benchmark::DoNotOptimize(graphs::bridges(built.graph.graph()));
}
BENCHMARK(BM_Bridges)->Arg(101)->Arg(1601);

static void BM_ChainBuild(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(pipeline::construct_chain(static_cast<std::size_t>(state.range(0)), 1.0, std::nullopt, 1));
  }
}
BENCHMARK(BM_ChainBuild)->Arg(101)->Arg(1601)->Unit(benchmark::kMillisecond);

static void BM_PathModelEigs(benchmark::State& state) {
  const auto built = pipeline::construct_chain(static_cast<std::size_t>(state.range(0)), 1.0, std::nullopt, 1);
  const auto model = rayleigh::build_path_model(surface::block_chain(surface::assemble(built.graph, 1.0)));
  for (auto _ : state) benchmark::DoNotOptimize(rayleigh::generalized_eigs(model, 4));
}
BENCHMARK(BM_PathModelEigs)->Arg(101)->Arg(1601);

static void BM_PantsModelEigs(benchmark::State& state) {
  const auto built = pipeline::construct_chain(static_cast<std::size_t>(state.range(0)), 1.0, std::nullopt, 1);
  const auto model = rayleigh::build_pants_model(surface::assemble(built.graph, 1.0));
  for (auto _ : state) benchmark::DoNotOptimize(rayleigh::generalized_eigs(model, 4));
}
BENCHMARK(BM_PantsModelEigs)->Arg(101)->Arg(1601)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
