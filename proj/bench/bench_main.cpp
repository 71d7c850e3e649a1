#include <benchmark/benchmark.h>

#include <vector>

#include "locassort/batch.hpp"
#include "locassort/kernels.hpp"
#include "locassort/synthgen.hpp"

using namespace locassort;

namespace {

const GeneratedNetwork& network(std::size_t per_group) {
  static std::vector<std::pair<std::size_t, GeneratedNetwork>> cache;
  for (const auto& [k, net] : cache)
    if (k == per_group) return net;
  BlockSpec spec;
  spec.group_sizes = {per_group, per_group, per_group, per_group};
  const auto m = 2 * per_group;
  spec.block_edges = {{m, m / 4, m / 8, 0}, {m / 4, m, 0, m / 8}, {m / 8, 0, m, m / 4}, {0, m / 8, m / 4, m}};
  spec.type_of_group = {"c", "d", "c", "d"};
  spec.seed = 11;
  cache.emplace_back(per_group, generate_block_network(spec));
  return cache.back().second;
}

template <bool Parallel>
void BM_WalkStep(benchmark::State& state) {
  const auto& g = network(static_cast<std::size_t>(state.range(0))).graph;
  std::vector<double> in(g.num_nodes(), 1.0 / static_cast<double>(g.num_nodes())), out(g.num_nodes());
  for (auto _ : state) {
    if constexpr (Parallel)
      kernels::walk_step(g, in, out, 0);
    else
      kernels::walk_step_serial(g, in, out, 0);
    std::swap(in, out);
    benchmark::DoNotOptimize(in.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(2 * g.num_edges()));
}

template <bool Parallel>
void BM_LocalAll(benchmark::State& state) {
  const auto& net = network(static_cast<std::size_t>(state.range(0)));
  const LocalAssortativity local(net.graph, net.attributes.column("type"));
  WalkerConfig cfg;
  cfg.alpha = 0.85;
  for (auto _ : state) {
    auto r = Parallel ? local_assortativity_all(local, cfg, LocalScale::FixedAlpha)
                      : local_assortativity_all_serial(local, cfg, LocalScale::FixedAlpha);
    benchmark::DoNotOptimize(r.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(net.graph.num_nodes()));
}

}  // namespace

BENCHMARK(BM_WalkStep<false>)->Name("walk_step/serial")->Arg(2500)->Arg(25000);
BENCHMARK(BM_WalkStep<true>)->Name("walk_step/openmp")->Arg(2500)->Arg(25000);
BENCHMARK(BM_LocalAll<false>)->Name("local_all/serial")->Arg(125)->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LocalAll<true>)->Name("local_all/openmp")->Arg(125)->Arg(500)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
