#include "locassort/batch.hpp"

#include <algorithm>
#include <exception>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace locassort {

namespace {

std::vector<NodeId> resolve_seeds(const LocalAssortativity& local, std::span<const NodeId> seeds) {
  if (!seeds.empty()) return {seeds.begin(), seeds.end()};
  std::vector<NodeId> all(local.graph().num_nodes());
  std::iota(all.begin(), all.end(), NodeId{0});
  return all;
}

LocalMixingResult compute_one(const LocalAssortativity& local, const WalkerConfig& config,
                              LocalScale scale, NodeId seed) {
  return scale == LocalScale::Multiscale ? local.multiscale(seed, config)
                                         : local.fixed_alpha(seed, config);
}

}  // namespace

int effective_jobs(int jobs) {
#ifdef _OPENMP
  return jobs > 0 ? jobs : omp_get_max_threads();
#else
  (void)jobs;
  return 1;
#endif
}

std::vector<LocalMixingResult> local_assortativity_all(const LocalAssortativity& local,
                                                       const WalkerConfig& config, LocalScale scale,
                                                       std::span<const NodeId> seeds, int jobs) {
  config.validate();
  const auto todo = resolve_seeds(local, seeds);
  std::vector<LocalMixingResult> results(todo.size());
  std::exception_ptr failure;
  const auto count = static_cast<std::ptrdiff_t>(todo.size());
  const int threads = effective_jobs(jobs);

#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    try {
      results[k] = compute_one(local, config, scale, todo[k]);
    } catch (...) {
#pragma omp critical(locassort_batch_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

std::vector<LocalMixingResult> local_assortativity_all_serial(const LocalAssortativity& local,
                                                              const WalkerConfig& config,
                                                              LocalScale scale,
                                                              std::span<const NodeId> seeds) {
  config.validate();
  const auto todo = resolve_seeds(local, seeds);
  std::vector<LocalMixingResult> results;
  results.reserve(todo.size());
  for (NodeId seed : todo) results.push_back(compute_one(local, config, scale, seed));
  return results;
}

void local_assortativity_stream(const LocalAssortativity& local, const WalkerConfig& config,
                                LocalScale scale, int jobs, std::size_t chunk,
                                const std::function<void(std::span<const LocalMixingResult>)>& sink) {
  const auto n = local.graph().num_nodes();
  chunk = std::max<std::size_t>(chunk, 1);
  std::vector<NodeId> seeds;
  for (std::size_t start = 0; start < n; start += chunk) {
    const auto stop = std::min(n, start + chunk);
    seeds.resize(stop - start);
    std::iota(seeds.begin(), seeds.end(), static_cast<NodeId>(start));
    const auto part = local_assortativity_all(local, config, scale, seeds, jobs);
    sink(part);
  }
}

}  // namespace locassort
