#include "locassort/walker.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "locassort/error.hpp"
#include "locassort/kernels.hpp"

namespace locassort {

void WalkerConfig::validate() const {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw Error(ErrorKind::Usage, "alpha must lie in [0,1]");
  if (!(tol > 0.0)) throw Error(ErrorKind::Usage, "tol must be positive");
  if (!(multi_tol > 0.0)) throw Error(ErrorKind::Usage, "multi_tol must be positive");
  if (max_iter < 1) throw Error(ErrorKind::Usage, "max_iter must be at least 1");
  if (eta_max < 1) throw Error(ErrorKind::Usage, "eta_max must be at least 1");
}

namespace {

void check_seed(const Graph& graph, NodeId seed) {
  if (seed >= graph.num_nodes())
    throw Error(ErrorKind::Usage, "seed node " + std::to_string(seed) + " out of range");
}

WeightVector component_stationary(const Graph& graph, NodeId seed) {
  WeightVector w;
  w.kind = WeightKind::Ppr;
  w.alpha = 1.0;
  w.seed = seed;
  w.values.assign(graph.num_nodes(), 0.0);
  const auto comp = graph.component_of(seed);
  double total = 0.0;
  for (NodeId v = 0; v < graph.num_nodes(); ++v)
    if (graph.component_of(v) == comp) total += static_cast<double>(graph.degree(v));
  if (total == 0.0) {
    w.values[seed] = 1.0;
    return w;
  }
  for (NodeId v = 0; v < graph.num_nodes(); ++v)
    if (graph.component_of(v) == comp) w.values[v] = static_cast<double>(graph.degree(v)) / total;
  return w;
}

}  // namespace

WeightVector ppr(const Graph& graph, NodeId seed, const WalkerConfig& config) {
  config.validate();
  check_seed(graph, seed);
  if (config.alpha == 1.0) {
    if (graph.directed())
      throw Error(ErrorKind::Usage,
                  "alpha = 1 is not supported for directed graphs: the walk has no closed-form "
                  "stationary distribution");
    return component_stationary(graph, seed);
  }

  const auto n = graph.num_nodes();
  const double alpha = config.alpha;
  std::vector<double> current(n, 0.0), next(n, 0.0);
  current[seed] = 1.0;

  double residual = 0.0;
  for (std::size_t it = 1; it <= config.max_iter; ++it) {
    kernels::walk_step(graph, current, next, seed);
    for (auto& x : next) x *= alpha;
    next[seed] += 1.0 - alpha;
    residual = kernels::l1_distance(current, next);
    current.swap(next);
    if (residual < config.tol) {
      WeightVector w;
      w.kind = WeightKind::Ppr;
      w.alpha = alpha;
      w.seed = seed;
      w.iterations = it;
      w.values = std::move(current);
      return w;
    }
  }
  throw NonConvergenceError("personalized PageRank did not converge within " +
                                std::to_string(config.max_iter) + " iterations (residual " +
                                std::to_string(residual) + ")",
                            residual);
}

WeightVector multiscale_weights(const Graph& graph, NodeId seed, const WalkerConfig& config) {
  config.validate();
  check_seed(graph, seed);
  const auto n = graph.num_nodes();

  std::vector<double> prev(n, 0.0), cur(n, 0.0), acc(n, 0.0);
  prev[seed] = 1.0;
  acc[seed] = 1.0;

  SeriesDiagnostics diag;
  diag.hit_cap = true;
  for (std::size_t s = 1; s <= config.eta_max; ++s) {
    kernels::walk_step(graph, prev, cur, seed);
    const double inv = 1.0 / static_cast<double>(s + 1);
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double d = cur[i] - prev[i];
      acc[i] += d * inv;
      norm += std::abs(d);
    }
    prev.swap(cur);
    diag.terms = s;
    diag.last_term = norm * inv;
    if (diag.last_term < config.multi_tol) {
      diag.hit_cap = false;
      break;
    }
  }

  // Tail: replace the remainder sum_{s>eta} (v_s - v_{s-1})/(s+1) by half of
  // its first term. Exact to O(1/eta^2) for period-2 oscillation and
  // negligible once the walk has mixed.
  kernels::walk_step(graph, prev, cur, seed);
  const double half = 0.5 / static_cast<double>(diag.terms + 1);
  double corr = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = (cur[i] - prev[i]) * half;
    acc[i] += d;
    corr += std::abs(d);
  }
  diag.residual_estimate = corr;

  // Guard against rounding pushing exact zeros slightly negative.
  for (auto& x : acc)
    if (x < 0.0) x = 0.0;

  WeightVector w;
  w.kind = WeightKind::Multiscale;
  w.seed = seed;
  w.series = diag;
  w.values = std::move(acc);
  return w;
}

AutocorrelationEstimate simulate_walk_autocorrelation(const Graph& graph,
                                                      const AttributeColumn& column,
                                                      std::size_t steps, std::uint64_t rng_seed) {
  if (graph.directed())
    throw Error(ErrorKind::Usage, "walk autocorrelation requires an undirected graph");
  if (graph.num_edges() == 0) throw Error(ErrorKind::Usage, "graph has no edges");
  if (graph.num_components() != 1)
    throw Error(ErrorKind::Disconnected,
                "walk autocorrelation requires a connected graph (found " +
                    std::to_string(graph.num_components()) + " components)");
  if (steps < 10000) throw Error(ErrorKind::Usage, "walk autocorrelation needs at least 10^4 steps");
  if (column.size() != graph.num_nodes())
    throw Error(ErrorKind::Usage, "column length does not match graph");
  if (column.missing_count() != 0)
    throw Error(ErrorKind::Usage, "walk autocorrelation requires a column without missing values");

  const auto n = graph.num_nodes();
  const double two_m = 2.0 * static_cast<double>(graph.num_edges());
  const bool categorical = column.kind == ColumnKind::Categorical;

  // Exact stationary moments define the centring and scaling.
  double offset = 0.0;  // sum_g a_g^2 for categorical
  double scale = 1.0;   // Q_max for categorical
  std::vector<double> standardized;
  if (categorical) {
    std::vector<double> a(column.num_categories(), 0.0);
    for (NodeId v = 0; v < n; ++v)
      a[static_cast<std::size_t>(column.categories[v])] += static_cast<double>(graph.degree(v)) / two_m;
    for (double ag : a) offset += ag * ag;
    scale = 1.0 - offset;
    if (scale <= 1e-12)
      throw Error(ErrorKind::DegenerateAttribute, "attribute '" + column.name + "' has a single effective category");
  } else {
    double mean = 0.0;
    for (NodeId v = 0; v < n; ++v) mean += static_cast<double>(graph.degree(v)) / two_m * column.values[v];
    double var = 0.0;
    for (NodeId v = 0; v < n; ++v) {
      const double d = column.values[v] - mean;
      var += static_cast<double>(graph.degree(v)) / two_m * d * d;
    }
    if (!(var > 0.0))
      throw Error(ErrorKind::DegenerateAttribute, "attribute '" + column.name + "' has zero variance");
    const double sd = std::sqrt(var);
    standardized.resize(n);
    for (NodeId v = 0; v < n; ++v) standardized[v] = (column.values[v] - mean) / sd;
  }

  std::mt19937_64 rng(rng_seed);
  // A uniformly random arc's source is pi-distributed.
  std::vector<NodeId> arc_source;
  arc_source.reserve(static_cast<std::size_t>(two_m));
  for (NodeId v = 0; v < n; ++v) arc_source.insert(arc_source.end(), graph.degree(v), v);
  NodeId at = arc_source[std::uniform_int_distribution<std::size_t>(0, arc_source.size() - 1)(rng)];

  constexpr std::size_t kBatches = 100;
  const std::size_t batch_len = steps / kBatches;
  std::vector<double> batch_means;
  batch_means.reserve(kBatches);
  double total = 0.0;
  std::size_t counted = 0;
  double batch_sum = 0.0;
  std::size_t in_batch = 0;
  for (std::size_t t = 0; t < steps; ++t) {
    const auto nbrs = graph.out_neighbors(at);
    const NodeId to = nbrs[std::uniform_int_distribution<std::size_t>(0, nbrs.size() - 1)(rng)];
    const double y = categorical ? (column.categories[at] == column.categories[to] ? 1.0 : 0.0)
                                 : standardized[at] * standardized[to];
    at = to;
    if (batch_means.size() < kBatches) {
      batch_sum += y;
      if (++in_batch == batch_len) {
        batch_means.push_back(batch_sum / static_cast<double>(batch_len));
        batch_sum = 0.0;
        in_batch = 0;
      }
    }
    total += y;
    ++counted;
  }

  const double mean_y = total / static_cast<double>(counted);
  double bm_mean = 0.0;
  for (double b : batch_means) bm_mean += b;
  bm_mean /= static_cast<double>(batch_means.size());
  double bm_var = 0.0;
  for (double b : batch_means) bm_var += (b - bm_mean) * (b - bm_mean);
  bm_var /= static_cast<double>(batch_means.size() - 1);
  const double se_y = std::sqrt(bm_var / static_cast<double>(batch_means.size()));

  return {(mean_y - offset) / scale, se_y / scale};
}

}  // namespace locassort
