#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace locassort {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

/// Immutable simple graph in compressed sparse row form.
///
/// Undirected graphs store each edge in both endpoints' neighbor lists, so
/// `out_neighbors` and `in_neighbors` coincide. Directed graphs keep a second
/// CSR for the reverse orientation. Neighbor lists are sorted.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph over nodes [0, n). Throws on self-loops, duplicate edges
  /// or out-of-range endpoints. When `names` is empty nodes are named by index.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges, bool directed,
                          std::vector<std::string> names = {});

  std::size_t num_nodes() const noexcept { return names_.size(); }
  /// Undirected edges, or arcs when directed.
  std::size_t num_edges() const noexcept { return num_edges_; }
  bool directed() const noexcept { return directed_; }

  std::span<const NodeId> out_neighbors(NodeId v) const noexcept {
    return {out_targets_.data() + out_offsets_[v], out_targets_.data() + out_offsets_[v + 1]};
  }
  std::span<const NodeId> in_neighbors(NodeId v) const noexcept {
    if (!directed_) return out_neighbors(v);
    return {in_sources_.data() + in_offsets_[v], in_sources_.data() + in_offsets_[v + 1]};
  }

  std::size_t out_degree(NodeId v) const noexcept { return out_offsets_[v + 1] - out_offsets_[v]; }
  std::size_t in_degree(NodeId v) const noexcept {
    if (!directed_) return out_degree(v);
    return in_offsets_[v + 1] - in_offsets_[v];
  }
  /// k_i for undirected graphs, k_i^out for directed ones.
  std::size_t degree(NodeId v) const noexcept { return out_degree(v); }

  bool has_edge(NodeId u, NodeId v) const noexcept;

  /// Weakly connected component label per node, numbered in order of the
  /// smallest node id they contain.
  std::span<const std::uint32_t> component_ids() const noexcept { return component_id_; }
  std::uint32_t component_of(NodeId v) const noexcept { return component_id_[v]; }
  std::size_t num_components() const noexcept { return num_components_; }

  const std::vector<std::string>& node_names() const noexcept { return names_; }
  const std::string& node_name(NodeId v) const { return names_[v]; }
  std::optional<NodeId> find_node(std::string_view name) const;

  /// Undirected: each edge once as (u, v) with u < v. Directed: every arc.
  /// Ordered by source, then target.
  std::vector<Edge> edges() const;

 private:
  void compute_components();

  std::size_t num_edges_ = 0;
  bool directed_ = false;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<NodeId> out_targets_;
  std::vector<std::size_t> in_offsets_;
  std::vector<NodeId> in_sources_;
  std::vector<std::uint32_t> component_id_;
  std::size_t num_components_ = 0;
  std::vector<std::string> names_;
  std::unordered_map<std::string, NodeId> index_;
};

struct EdgeListOptions {
  bool directed = false;
  /// Drop duplicate edges instead of rejecting them.
  bool lenient = false;
};

/// Parses whitespace-separated node-id pairs, one edge per line. Lines
/// starting with `#` and blank lines are skipped. Node ids are assigned dense
/// indices in order of first appearance.
Graph load_edge_list(std::string_view text, const EdgeListOptions& options = {});
Graph load_edge_list_file(const std::filesystem::path& path, const EdgeListOptions& options = {});

/// Writes one "u v" line per edge using node names. Isolated nodes are lost.
void write_edge_list(const Graph& graph, std::ostream& out);

}  // namespace locassort
