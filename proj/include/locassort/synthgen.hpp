#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "locassort/attributes.hpp"
#include "locassort/graph.hpp"

namespace locassort {

/// Planted block network: exact edge counts between subgroups of nodes.
struct BlockSpec {
  std::vector<std::string> group_names;
  std::vector<std::size_t> group_sizes;
  /// Symmetric matrix of edge counts; the diagonal counts edges inside a group.
  std::vector<std::vector<std::size_t>> block_edges;
  /// Category label carried by every node of a group.
  std::vector<std::string> type_of_group;
  std::uint64_t seed = 1;

  std::size_t num_nodes() const;
  std::size_t num_edges() const;
  /// Throws ErrorKind::Infeasible naming the first block that cannot hold its
  /// edges, or ErrorKind::Usage for malformed shapes.
  void validate() const;
};

struct GeneratedNetwork {
  Graph graph;
  AttributeTable attributes;  // one categorical column named "type"
  std::vector<std::size_t> group_of;  // subgroup index per node
};

/// Places exactly block_edges[p][q] distinct edges uniformly at random
/// between groups p and q. Nodes are named "<group>_<k>".
GeneratedNetwork generate_block_network(const BlockSpec& spec);

struct Preset {
  std::string name;
  std::string description;
  BlockSpec spec;
};

/// Five 40-node, 160-edge two-type networks with equal global assortativity
/// (zero) and increasingly heterogeneous local mixing.
std::vector<Preset> list_presets();
const Preset& find_preset(std::string_view name);

/// Reads {"group_sizes", "block_edges", "type_of_group", optional
/// "group_names" and "seed"} from JSON text.
BlockSpec block_spec_from_json(std::string_view text);
BlockSpec load_block_spec(const std::filesystem::path& path);

}  // namespace locassort
