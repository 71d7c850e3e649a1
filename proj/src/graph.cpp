#include "locassort/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "locassort/error.hpp"

namespace locassort {

namespace {

std::uint64_t edge_key(NodeId u, NodeId v) {
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

void build_csr(std::size_t n, std::span<const Edge> arcs, std::vector<std::size_t>& offsets,
               std::vector<NodeId>& targets) {
  offsets.assign(n + 1, 0);
  for (const auto& [u, v] : arcs) ++offsets[u + 1];
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  targets.resize(arcs.size());
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const auto& [u, v] : arcs) targets[cursor[u]++] = v;
  for (std::size_t v = 0; v < n; ++v)
    std::sort(targets.begin() + static_cast<std::ptrdiff_t>(offsets[v]),
              targets.begin() + static_cast<std::ptrdiff_t>(offsets[v + 1]));
}

}  // namespace

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges, bool directed,
                        std::vector<std::string> names) {
  if (names.empty()) {
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  }
  if (names.size() != n) throw Error(ErrorKind::Usage, "node name count does not match node count");

  Graph g;
  g.directed_ = directed;
  g.num_edges_ = edges.size();

  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size() * 2);
  std::vector<Edge> arcs;
  arcs.reserve(directed ? edges.size() : 2 * edges.size());
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) throw Error(ErrorKind::Usage, "edge endpoint out of range");
    if (u == v)
      throw Error(ErrorKind::SelfLoop, "self-loop on node " + names[u]);
    const auto key = directed ? edge_key(u, v) : edge_key(std::min(u, v), std::max(u, v));
    if (!seen.insert(key).second)
      throw Error(ErrorKind::DuplicateEdge, "duplicate edge " + names[u] + " " + names[v]);
    arcs.emplace_back(u, v);
    if (!directed) arcs.emplace_back(v, u);
  }
  build_csr(n, arcs, g.out_offsets_, g.out_targets_);
  if (directed) {
    for (auto& [u, v] : arcs) std::swap(u, v);
    build_csr(n, arcs, g.in_offsets_, g.in_sources_);
  }

  g.names_ = std::move(names);
  g.index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!g.index_.emplace(g.names_[i], static_cast<NodeId>(i)).second)
      throw Error(ErrorKind::Usage, "duplicate node name " + g.names_[i]);
  }
  g.compute_components();
  return g;
}

void Graph::compute_components() {
  const auto n = num_nodes();
  constexpr auto unset = static_cast<std::uint32_t>(-1);
  component_id_.assign(n, unset);
  num_components_ = 0;
  std::vector<NodeId> stack;
  for (NodeId s = 0; s < n; ++s) {
    if (component_id_[s] != unset) continue;
    const auto label = static_cast<std::uint32_t>(num_components_++);
    component_id_[s] = label;
    stack.push_back(s);
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      auto visit = [&](std::span<const NodeId> nbrs) {
        for (NodeId u : nbrs) {
          if (component_id_[u] == unset) {
            component_id_[u] = label;
            stack.push_back(u);
          }
        }
      };
      visit(out_neighbors(v));
      if (directed_) visit(in_neighbors(v));
    }
  }
}

bool Graph::has_edge(NodeId u, NodeId v) const noexcept {
  auto nbrs = out_neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::optional<NodeId> Graph::find_node(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (NodeId u = 0; u < num_nodes(); ++u) {
    for (NodeId v : out_neighbors(u)) {
      if (directed_ || u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph load_edge_list(std::string_view text, const EdgeListOptions& options) {
  std::vector<std::string> names;
  std::unordered_map<std::string, NodeId> index;
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;

  auto intern = [&](const std::string& name) {
    auto [it, inserted] = index.emplace(name, static_cast<NodeId>(names.size()));
    if (inserted) names.push_back(name);
    return it->second;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();

    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a) || a.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (!(fields >> b))
      throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": expected two node ids",
                  line_no);
    if (fields >> extra && extra.front() != '#')
      throw Error(ErrorKind::Parse,
                  "line " + std::to_string(line_no) + ": unexpected trailing field '" + extra + "'",
                  line_no);
    if (a == b)
      throw Error(ErrorKind::SelfLoop,
                  "line " + std::to_string(line_no) + ": self-loop on node " + a, line_no);

    const NodeId u = intern(a);
    const NodeId v = intern(b);
    const auto key = options.directed ? edge_key(u, v) : edge_key(std::min(u, v), std::max(u, v));
    if (!seen.insert(key).second) {
      if (options.lenient) continue;
      throw Error(ErrorKind::DuplicateEdge,
                  "line " + std::to_string(line_no) + ": duplicate edge " + a + " " + b, line_no);
    }
    edges.emplace_back(u, v);
    if (end == text.size()) break;
  }
  const auto n = names.size();
  return Graph::from_edges(n, edges, options.directed, std::move(names));
}

Graph load_edge_list_file(const std::filesystem::path& path, const EdgeListOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "edge file not found: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_edge_list(buf.str(), options);
}

void write_edge_list(const Graph& graph, std::ostream& out) {
  for (const auto& [u, v] : graph.edges()) out << graph.node_name(u) << ' ' << graph.node_name(v) << '\n';
}

}  // namespace locassort
