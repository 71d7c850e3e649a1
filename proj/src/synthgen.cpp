#include "locassort/synthgen.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <unordered_set>

#include "json.hpp"
#include "locassort/error.hpp"

namespace locassort {

namespace {

std::string block_name(const BlockSpec& spec, std::size_t p, std::size_t q) {
  return "(" + spec.group_names[p] + "," + spec.group_names[q] + ")";
}

std::size_t block_capacity(const BlockSpec& spec, std::size_t p, std::size_t q) {
  const auto sp = spec.group_sizes[p];
  return p == q ? sp * (sp - (sp > 0 ? 1 : 0)) / 2 : sp * spec.group_sizes[q];
}

/// k distinct integers from [0, n), sorted (Floyd's algorithm).
std::vector<std::size_t> sample_distinct(std::size_t n, std::size_t k, std::mt19937_64& rng) {
  std::unordered_set<std::size_t> chosen;
  chosen.reserve(k * 2);
  for (std::size_t j = n - k; j < n; ++j) {
    const auto t = std::uniform_int_distribution<std::size_t>(0, j)(rng);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<std::size_t> out(chosen.begin(), chosen.end());
  std::sort(out.begin(), out.end());
  return out;
}

/// Maps a linear index over the unordered pairs {i < j} of [0, s) to (i, j).
std::pair<std::size_t, std::size_t> decode_pair(std::size_t index, std::size_t s) {
  std::size_t i = 0;
  while (index >= s - 1 - i) {
    index -= s - 1 - i;
    ++i;
  }
  return {i, i + 1 + index};
}

BlockSpec make_two_type(const std::vector<std::vector<std::size_t>>& blocks, std::uint64_t seed = 1) {
  BlockSpec spec;
  spec.group_names = {"c1", "c2", "d1", "d2"};
  spec.group_sizes = {10, 10, 10, 10};
  spec.type_of_group = {"c", "c", "d", "d"};
  spec.block_edges = blocks;
  spec.seed = seed;
  return spec;
}

}  // namespace

std::size_t BlockSpec::num_nodes() const {
  std::size_t n = 0;
  for (auto s : group_sizes) n += s;
  return n;
}

std::size_t BlockSpec::num_edges() const {
  std::size_t m = 0;
  for (std::size_t p = 0; p < block_edges.size(); ++p)
    for (std::size_t q = p; q < block_edges[p].size(); ++q) m += block_edges[p][q];
  return m;
}

void BlockSpec::validate() const {
  const auto g = group_sizes.size();
  if (g == 0) throw Error(ErrorKind::Usage, "block spec has no groups");
  if (type_of_group.size() != g)
    throw Error(ErrorKind::Usage, "type_of_group must list one type per group");
  if (!group_names.empty() && group_names.size() != g)
    throw Error(ErrorKind::Usage, "group_names must list one name per group");
  if (block_edges.size() != g)
    throw Error(ErrorKind::Usage, "block_edges must be a " + std::to_string(g) + "x" +
                                      std::to_string(g) + " matrix");
  for (const auto& row : block_edges)
    if (row.size() != g)
      throw Error(ErrorKind::Usage, "block_edges must be a " + std::to_string(g) + "x" +
                                        std::to_string(g) + " matrix");
  BlockSpec named = *this;
  if (named.group_names.empty())
    for (std::size_t p = 0; p < g; ++p) named.group_names.push_back("g" + std::to_string(p));
  for (std::size_t p = 0; p < g; ++p) {
    for (std::size_t q = 0; q < g; ++q) {
      if (block_edges[p][q] != block_edges[q][p])
        throw Error(ErrorKind::Usage, "block_edges is not symmetric at " + block_name(named, p, q));
      if (q < p) continue;
      const auto cap = block_capacity(named, p, q);
      if (block_edges[p][q] > cap)
        throw Error(ErrorKind::Infeasible, "block " + block_name(named, p, q) + " requests " +
                                               std::to_string(block_edges[p][q]) +
                                               " edges but holds at most " + std::to_string(cap));
    }
  }
}

GeneratedNetwork generate_block_network(const BlockSpec& input) {
  input.validate();
  BlockSpec spec = input;
  if (spec.group_names.empty())
    for (std::size_t p = 0; p < spec.group_sizes.size(); ++p)
      spec.group_names.push_back("g" + std::to_string(p));

  const auto g = spec.group_sizes.size();
  std::vector<std::size_t> first(g + 1, 0);
  for (std::size_t p = 0; p < g; ++p) first[p + 1] = first[p] + spec.group_sizes[p];
  const auto n = first[g];

  GeneratedNetwork net;
  std::vector<std::string> names;
  names.reserve(n);
  net.group_of.reserve(n);
  for (std::size_t p = 0; p < g; ++p)
    for (std::size_t k = 0; k < spec.group_sizes[p]; ++k) {
      names.push_back(spec.group_names[p] + "_" + std::to_string(k));
      net.group_of.push_back(p);
    }

  std::mt19937_64 rng(spec.seed);
  std::vector<Edge> edges;
  edges.reserve(spec.num_edges());
  for (std::size_t p = 0; p < g; ++p) {
    for (std::size_t q = p; q < g; ++q) {
      const auto want = spec.block_edges[p][q];
      if (want == 0) continue;
      const auto picks = sample_distinct(block_capacity(spec, p, q), want, rng);
      for (auto idx : picks) {
        if (p == q) {
          const auto [i, j] = decode_pair(idx, spec.group_sizes[p]);
          edges.emplace_back(static_cast<NodeId>(first[p] + i), static_cast<NodeId>(first[p] + j));
        } else {
          const auto sq = spec.group_sizes[q];
          edges.emplace_back(static_cast<NodeId>(first[p] + idx / sq),
                             static_cast<NodeId>(first[q] + idx % sq));
        }
      }
    }
  }
  net.graph = Graph::from_edges(n, edges, false, std::move(names));

  std::vector<std::optional<std::string>> labels(n);
  for (std::size_t v = 0; v < n; ++v) labels[v] = spec.type_of_group[net.group_of[v]];
  net.attributes = AttributeTable(n);
  net.attributes.add_column(AttributeColumn::categorical("type", labels));
  return net;
}

std::vector<Preset> list_presets() {
  using Blocks = std::vector<std::vector<std::size_t>>;
  // Group order: c1, c2, d1, d2. Every preset has 40 edges inside each type
  // and 80 across types, which forces zero global assortativity.
  std::vector<Preset> presets;
  presets.push_back({"fig2-homogeneous",
                     "(a) edges spread evenly over all subgroup pairs; unimodal local mixing",
                     make_two_type(Blocks{{10, 20, 20, 20}, {20, 10, 20, 20}, {20, 20, 10, 20}, {20, 20, 20, 10}})});
  presets.push_back({"fig2-polarized",
                     "(b) c1 and d1 are dense same-type pockets joined by two edges each to c2 and "
                     "d2, which only link across types; two modes near +1 and -1",
                     make_two_type(Blocks{{38, 2, 0, 0}, {2, 0, 0, 80}, {0, 0, 38, 2}, {0, 80, 2, 0}})});
  presets.push_back({"fig2-bridged",
                     "(c) assortative pockets c1 and d2, a disassortative c2-d1 core, five-edge "
                     "bridges between every other pair",
                     make_two_type(Blocks{{35, 5, 5, 0}, {5, 0, 70, 5}, {5, 70, 0, 5}, {0, 5, 5, 35}})});
  presets.push_back({"fig2-one-sided",
                     "(d) c1 is a same-type pocket, c2 links only to d, d mixes homogeneously "
                     "within itself; three modes",
                     make_two_type(Blocks{{38, 2, 0, 0}, {2, 0, 40, 40}, {0, 40, 10, 20}, {0, 40, 20, 10}})});
  presets.push_back({"fig2-graded",
                     "(e) c1 and d1 lean assortative, c2 and d2 lean disassortative; a smooth "
                     "spread between the modes",
                     make_two_type(Blocks{{25, 10, 5, 15}, {10, 5, 15, 45}, {5, 15, 25, 10}, {15, 45, 10, 5}})});
  return presets;
}

const Preset& find_preset(std::string_view name) {
  static const auto presets = list_presets();
  for (const auto& p : presets)
    if (p.name == name) return p;
  throw Error(ErrorKind::Usage, "unknown preset '" + std::string(name) + "'");
}

BlockSpec block_spec_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("block spec is not valid JSON: ") + e.what());
  }
  BlockSpec spec;
  try {
    spec.group_sizes = j.at("group_sizes").get<std::vector<std::size_t>>();
    spec.block_edges = j.at("block_edges").get<std::vector<std::vector<std::size_t>>>();
    spec.type_of_group = j.at("type_of_group").get<std::vector<std::string>>();
    if (j.contains("group_names")) spec.group_names = j["group_names"].get<std::vector<std::string>>();
    if (j.contains("seed")) spec.seed = j["seed"].get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("block spec field error: ") + e.what());
  }
  return spec;
}

BlockSpec load_block_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "spec file not found: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return block_spec_from_json(buf.str());
}

}  // namespace locassort
