#pragma once

#include <functional>
#include <span>
#include <vector>

#include "locassort/mixing.hpp"
#include "locassort/walker.hpp"

namespace locassort {

enum class LocalScale { FixedAlpha, Multiscale };

/// Local assortativity for every seed in `seeds` (all nodes when empty),
/// returned in the order of `seeds`. Seeds are spread over OpenMP threads;
/// `jobs` <= 0 uses the OpenMP default. Each seed is computed serially, so
/// results are bitwise identical to local_assortativity_all_serial.
std::vector<LocalMixingResult> local_assortativity_all(const LocalAssortativity& local,
                                                       const WalkerConfig& config, LocalScale scale,
                                                       std::span<const NodeId> seeds = {},
                                                       int jobs = 0);

/// Single-threaded reference for local_assortativity_all.
std::vector<LocalMixingResult> local_assortativity_all_serial(const LocalAssortativity& local,
                                                              const WalkerConfig& config,
                                                              LocalScale scale,
                                                              std::span<const NodeId> seeds = {});

/// Streams results in node order, computing `chunk` seeds at a time in
/// parallel and handing each finished chunk to `sink` before starting the next.
void local_assortativity_stream(const LocalAssortativity& local, const WalkerConfig& config,
                                LocalScale scale, int jobs, std::size_t chunk,
                                const std::function<void(std::span<const LocalMixingResult>)>& sink);

/// Number of threads a parallel region will use for a `jobs` request.
int effective_jobs(int jobs);

}  // namespace locassort
