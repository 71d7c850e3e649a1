#include "locassort/nullmodel.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <set>

#include "json.hpp"

#include "locassort/batch.hpp"
#include "locassort/error.hpp"
#include "locassort/mixing.hpp"

namespace locassort {

void NullModelConfig::validate() const {
  if (!(t_min > 0.0) || !(t_min <= t0))
    throw Error(ErrorKind::Usage, "temperatures must satisfy 0 < t_min <= t0");
  if (!(cooling > 0.0) || !(cooling <= 1.0))
    throw Error(ErrorKind::Usage, "cooling factor must lie in (0,1]");
}

double loglik_m_in(std::size_t m_in, std::size_t m, double omega_in) {
  if (m_in > m) throw Error(ErrorKind::Usage, "m_in exceeds m");
  if (!(omega_in >= 0.0 && omega_in <= 1.0)) throw Error(ErrorKind::Usage, "omega_in must lie in [0,1]");
  constexpr double neg_inf = -std::numeric_limits<double>::infinity();
  if (omega_in == 0.0) return m_in == 0 ? 0.0 : neg_inf;
  if (omega_in == 1.0) return m_in == m ? 0.0 : neg_inf;
  const double k = static_cast<double>(m_in);
  const double nn = static_cast<double>(m);
  return std::lgamma(nn + 1.0) - std::lgamma(k + 1.0) - std::lgamma(nn - k + 1.0) +
         k * std::log(omega_in) + (nn - k) * std::log1p(-omega_in);
}

NullSampler::NullSampler(const Graph& graph, const AttributeColumn& column,
                         const NullModelConfig& config)
    : source_(&graph), column_(&column), config_(config), rng_(config.seed), t_(config.t0) {
  config_.validate();
  if (graph.directed()) throw Error(ErrorKind::Usage, "the null model supports undirected graphs only");
  if (column.kind != ColumnKind::Categorical)
    throw Error(ErrorKind::Usage, "the null model needs a categorical attribute");
  if (column.size() != graph.num_nodes())
    throw Error(ErrorKind::Usage, "attribute length does not match graph");
  if (graph.num_edges() < 2) throw Error(ErrorKind::Usage, "the null model needs at least 2 edges");

  std::set<std::int32_t> seen;
  for (NodeId v = 0; v < graph.num_nodes(); ++v)
    if (graph.degree(v) > 0 && column.categories[v] != kMissingCategory) seen.insert(column.categories[v]);
  if (seen.size() < 2)
    throw Error(ErrorKind::DegenerateAttribute,
                "attribute '" + column.name +
                    "' has a single category on connected nodes; the assortativity constraint is vacuous");

  edges_ = graph.edges();
  present_.reserve(edges_.size() * 2);
  for (const auto& [u, v] : edges_) {
    present_.insert(key(u, v));
    if (labelled(u, v)) {
      ++m_known_;
      if (same_type(u, v)) ++m_in_;
    }
  }
  if (m_known_ == 0)
    throw Error(ErrorKind::EmptyMixing, "no edge has both endpoints labelled");
  omega_ = static_cast<double>(m_in_) / static_cast<double>(m_known_);
  loglik_ = loglik_m_in(m_in_, m_known_, omega_);
}

std::uint64_t NullSampler::key(NodeId u, NodeId v) noexcept {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

bool NullSampler::labelled(NodeId u, NodeId v) const noexcept {
  return column_->categories[u] != kMissingCategory && column_->categories[v] != kMissingCategory;
}

bool NullSampler::same_type(NodeId u, NodeId v) const noexcept {
  return labelled(u, v) && column_->categories[u] == column_->categories[v];
}

void NullSampler::step() {
  ++stats_.proposals;
  std::uniform_int_distribution<std::size_t> pick(0, edges_.size() - 1);
  const std::size_t e1 = pick(rng_);
  const std::size_t e2 = pick(rng_);
  const bool cross = std::bernoulli_distribution(0.5)(rng_);

  auto advance_temperature = [&] { t_ = std::max(config_.t_min, config_.cooling * t_); };

  const auto [a, b] = edges_[e1];
  const auto [c, d] = edges_[e2];
  // (a,b),(c,d) -> (a,c),(b,d) or (a,d),(b,c)
  const NodeId x1 = a, y1 = cross ? d : c;
  const NodeId x2 = b, y2 = cross ? c : d;
  if (e1 == e2 || x1 == y1 || x2 == y2 || present_.count(key(x1, y1)) ||
      present_.count(key(x2, y2))) {
    ++stats_.illegal;
    advance_temperature();
    return;
  }

  auto shift = [](std::size_t count, int before, int after) {
    return static_cast<std::size_t>(static_cast<std::ptrdiff_t>(count) - before + after);
  };
  // Rewiring around unlabelled nodes can change how many edges are fully labelled.
  const auto proposed_known = shift(m_known_, int(labelled(a, b)) + int(labelled(c, d)),
                                    int(labelled(x1, y1)) + int(labelled(x2, y2)));
  const auto proposed_m_in = shift(m_in_, int(same_type(a, b)) + int(same_type(c, d)),
                                   int(same_type(x1, y1)) + int(same_type(x2, y2)));
  const double proposed = loglik_m_in(proposed_m_in, proposed_known, omega_);
  const double delta = proposed - loglik_;
  const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng_);
  if (u < std::exp(delta / t_)) {
    present_.erase(key(a, b));
    present_.erase(key(c, d));
    present_.insert(key(x1, y1));
    present_.insert(key(x2, y2));
    edges_[e1] = {std::min(x1, y1), std::max(x1, y1)};
    edges_[e2] = {std::min(x2, y2), std::max(x2, y2)};
    m_in_ = proposed_m_in;
    m_known_ = proposed_known;
    loglik_ = proposed;
    ++stats_.accepted;
  } else {
    ++stats_.rejected;
  }
  advance_temperature();
}

NullSample NullSampler::next() {
  const auto m = edges_.size();
  if (!burned_in_) {
    for (std::size_t i = 0, n = config_.resolved_burn_in(m); i < n; ++i) step();
    burned_in_ = true;
  }
  for (std::size_t i = 0, n = config_.resolved_spacing(m); i < n; ++i) step();
  trace_.push_back(m_in_);

  NullSample s;
  s.graph = Graph::from_edges(source_->num_nodes(), edges_, false, source_->node_names());
  s.m_in = m_in_;
  s.loglik = loglik_;
  s.temperature = t_;
  s.stats = stats_;
  return s;
}

std::vector<NullSample> sample_null(const Graph& graph, const AttributeColumn& column,
                                    const NullModelConfig& config) {
  NullSampler sampler(graph, column, config);
  std::vector<NullSample> out;
  out.reserve(config.n_samples);
  for (std::size_t i = 0; i < config.n_samples; ++i) out.push_back(sampler.next());
  return out;
}

NullDistribution null_distribution(const Graph& graph, const AttributeColumn& column,
                                   const NullModelConfig& config, const WalkerConfig& walker,
                                   std::size_t bins, int jobs) {
  NullDistribution out;
  walker.validate();
  if (config.n_samples == 0) {
    config.validate();
    out.histogram = build_histogram({}, bins);
    out.diagnostic = "no null samples requested; histogram is empty";
    return out;
  }

  NullSampler sampler(graph, column, config);
  for (std::size_t k = 0; k < config.n_samples; ++k) {
    const auto sample = sampler.next();
    const LocalAssortativity local(sample.graph, column);
    const auto results = local_assortativity_all(local, walker, LocalScale::Multiscale, {}, jobs);
    for (const auto& r : results)
      if (r.r && r.z > 0.0) out.pooled.push_back({*r.r, r.z});
  }
  double total = 0.0;
  for (const auto& p : out.pooled) total += p.weight;
  if (total > 0.0)
    for (auto& p : out.pooled) p.weight /= total;
  out.histogram = build_histogram(out.pooled, bins);
  out.m_in_trace = sampler.m_in_trace();
  out.stats = sampler.stats();
  if (out.pooled.empty()) out.diagnostic = "no node had a defined local assortativity";
  return out;
}

void write_ensemble(const std::filesystem::path& dir, const std::vector<NullSample>& samples,
                    const NullModelConfig& config) {
  std::filesystem::create_directories(dir);
  nlohmann::json manifest;
  manifest["config"] = {{"n_samples", config.n_samples},
                        {"swaps_per_sample", config.swaps_per_sample},
                        {"burn_in", config.burn_in ? nlohmann::json(*config.burn_in) : nlohmann::json()},
                        {"t0", config.t0},
                        {"t_min", config.t_min},
                        {"cooling", config.cooling}};
  manifest["seed"] = config.seed;
  auto& list = manifest["samples"] = nlohmann::json::array();
  for (std::size_t k = 0; k < samples.size(); ++k) {
    char name[32];
    std::snprintf(name, sizeof name, "sample_%04zu.edges", k);
    std::ofstream out(dir / name);
    if (!out) throw Error(ErrorKind::Usage, "cannot write " + (dir / name).string());
    write_edge_list(samples[k].graph, out);
    const auto& s = samples[k];
    list.push_back({{"file", name},
                    {"m_in", s.m_in},
                    {"loglik", s.loglik},
                    {"temperature", s.temperature},
                    {"proposals", s.stats.proposals},
                    {"accepted", s.stats.accepted},
                    {"illegal", s.stats.illegal},
                    {"rejected", s.stats.rejected},
                    {"acceptance_rate", s.stats.acceptance_rate()}});
  }
  std::ofstream out(dir / "manifest.json");
  out << manifest.dump(2) << '\n';
}

}  // namespace locassort
