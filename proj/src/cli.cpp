#include "locassort/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "CLI11.hpp"
#include "json.hpp"
#include "locassort/attributes.hpp"
#include "locassort/batch.hpp"
#include "locassort/csv.hpp"
#include "locassort/error.hpp"
#include "locassort/graph.hpp"
#include "locassort/histogram.hpp"
#include "locassort/mixing.hpp"
#include "locassort/nullmodel.hpp"
#include "locassort/synthgen.hpp"
#include "locassort/version.hpp"
#include "locassort/walker.hpp"

namespace locassort::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

struct Options {
  // inputs
  std::string edges;
  std::string attrs;
  std::string column;
  bool directed = false;
  bool lenient = false;
  bool force_scalar = false;
  bool force_categorical = false;
  // walker
  std::optional<double> alpha;
  bool multiscale = false;
  double tol = 1e-10;
  std::size_t eta_max = 10000;
  double multi_tol = 1e-9;
  std::size_t max_iter = 100000;
  // null model
  std::size_t samples = 100;
  std::size_t swaps_per_sample = 0;
  std::optional<std::size_t> burn_in;
  double t0 = 1.0;
  double t_min = 1e-3;
  double cooling = 0.9999;
  std::string ensemble_dir;
  // generate
  std::string preset;
  std::string spec;
  bool list = false;
  // compare / summary
  std::string local_a;
  std::string local_b;
  bool unweighted = false;
  std::size_t bins = 50;
  // common
  std::optional<std::uint64_t> seed;
  int jobs = 0;
  std::string output;
  std::string format;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fnv1a64_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::uint64_t h = 0xcbf29ce484222325ull;
  char c;
  while (in.get(c)) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

/// Records what produced an output file; written as <output>.manifest.json.
class RunManifest {
 public:
  explicit RunManifest(std::string command) : start_(Clock::now()) {
    doc_["command"] = std::move(command);
    doc_["library_version"] = kVersion;
    doc_["inputs"] = json::array();
    doc_["outputs"] = json::array();
    doc_["config"] = json::object();
  }
  void input(const std::string& path) {
    doc_["inputs"].push_back({{"path", path}, {"fnv1a64", fnv1a64_file(path)}});
  }
  void output(const std::string& path) { doc_["outputs"].push_back(path); }
  json& config() { return doc_["config"]; }
  json& operator[](const char* key) { return doc_[key]; }

  void write(const std::string& output_path) {
    doc_["wall_clock_seconds"] =
        std::chrono::duration<double>(Clock::now() - start_).count();
    std::ofstream out(output_path + ".manifest.json");
    if (!out) throw locassort::Error(ErrorKind::Usage, "cannot write manifest for " + output_path);
    out << doc_.dump(2) << '\n';
  }

 private:
  json doc_;
  Clock::time_point start_;
};

/// Output sink: the --output file when given, otherwise the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw locassort::Error(ErrorKind::Usage, "cannot open output file " + path);
      stream_ = file_.get();
    }
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

struct Inputs {
  Graph graph;
  AttributeTable table;
};

Inputs load_inputs(const Options& o) {
  if (!std::filesystem::exists(o.edges))
    throw locassort::Error(ErrorKind::Parse, "edge file not found: " + o.edges);
  if (!std::filesystem::exists(o.attrs))
    throw locassort::Error(ErrorKind::Parse, "attribute file not found: " + o.attrs);
  Inputs in;
  in.graph = load_edge_list_file(o.edges, {o.directed, o.lenient});
  AttributeOptions ao;
  if (o.force_scalar && o.force_categorical)
    throw locassort::Error(ErrorKind::Usage, "--scalar and --categorical are mutually exclusive");
  if (!o.column.empty()) {
    if (o.force_scalar) ao.force[o.column] = ColumnKind::Scalar;
    if (o.force_categorical) ao.force[o.column] = ColumnKind::Categorical;
  }
  in.table = load_attributes_file(o.attrs, in.graph, ao);
  if (!in.table.has_column(o.column))
    throw locassort::Error(ErrorKind::Usage, "attribute file has no column '" + o.column + "'");
  return in;
}

WalkerConfig walker_config(const Options& o) {
  WalkerConfig c;
  c.alpha = o.alpha.value_or(0.85);
  c.tol = o.tol;
  c.eta_max = o.eta_max;
  c.multi_tol = o.multi_tol;
  c.max_iter = o.max_iter;
  c.validate();
  return c;
}

json walker_json(const WalkerConfig& c, bool multiscale) {
  json j{{"tol", c.tol}, {"max_iter", c.max_iter}, {"eta_max", c.eta_max}, {"multi_tol", c.multi_tol}};
  if (multiscale)
    j["scale"] = "multiscale";
  else
    j["alpha"] = c.alpha;
  return j;
}

int cmd_global(const Options& o, std::ostream& out) {
  RunManifest manifest("global");
  const auto in = load_inputs(o);
  const auto& col = in.table.column(o.column);
  manifest.input(o.edges);
  manifest.input(o.attrs);
  manifest.config() = {{"column", o.column}, {"directed", o.directed}};

  json report{{"column", col.name},
              {"directed", in.graph.directed()},
              {"nodes", in.graph.num_nodes()},
              {"edges", in.graph.num_edges()},
              {"missing", col.missing_count()}};
  std::ostringstream text;
  if (col.kind == ColumnKind::Categorical) {
    const auto mix = mixing_matrix(in.graph, col);
    const double r = global_assort_cat(mix);
    const auto rmin = r_min(mix);
    report["kind"] = "categorical";
    report["r_global"] = r;
    report["q"] = mix.modularity();
    report["q_max"] = mix.q_max();
    report["r_min"] = rmin.value;
    report["r_min_below_minus_one"] = rmin.below_minus_one;
    report["omega_in"] = mix.trace();
    report["observed_mass"] = mix.observed_mass;
    json cats = json::array();
    for (std::size_t g = 0; g < mix.num_categories; ++g) {
      json c{{"category", col.category_names[g]}, {"a", mix.a[g]}};
      if (mix.directed) c["b"] = mix.b[g];
      cats.push_back(c);
    }
    report["categories"] = cats;
    text << "attribute   " << col.name << " (categorical, " << mix.num_categories << " categories)\n"
         << "r_global    " << fmt(r) << "\n"
         << "Q           " << fmt(mix.modularity()) << "\n"
         << "Q_max       " << fmt(mix.q_max()) << "\n"
         << "r_min       " << fmt(rmin.value) << (rmin.below_minus_one ? "  (below -1)" : "") << "\n";
    for (std::size_t g = 0; g < mix.num_categories; ++g) {
      text << "  a[" << col.category_names[g] << "] = " << fmt(mix.a[g]);
      if (mix.directed) text << "  b = " << fmt(mix.b[g]);
      text << "\n";
    }
  } else {
    const double r = global_assort_scalar(in.graph, col);
    const auto s = standardize(in.graph, col);
    report["kind"] = "scalar";
    report["r_global"] = r;
    report["mean"] = s.mean;
    report["sigma"] = s.sigma;
    text << "attribute   " << col.name << " (scalar)\n"
         << "r_global    " << fmt(r) << "\n"
         << "mean        " << fmt(s.mean) << "\n"
         << "sigma       " << fmt(s.sigma) << "\n";
  }

  Sink sink(o.output, out);
  if (o.format == "json")
    sink.stream() << report.dump(2) << '\n';
  else if (o.format == "csv") {
    sink.stream() << "key,value\n";
    for (const char* key : {"r_global", "q", "q_max", "r_min", "mean", "sigma"})
      if (report.contains(key)) sink.stream() << key << ',' << fmt(report[key].get<double>()) << '\n';
  } else {
    sink.stream() << text.str();
  }
  if (!o.output.empty()) {
    manifest.output(o.output);
    manifest.write(o.output);
  }
  return kSuccess;
}

void write_local_rows(std::ostream& os, const Graph& g, std::span<const LocalMixingResult> rows) {
  for (const auto& r : rows)
    os << csv::escape(g.node_name(r.node)) << ',' << (r.r ? fmt(*r.r) : "") << ',' << fmt(r.z) << '\n';
}

int cmd_local(const Options& o, std::ostream& out) {
  if (o.alpha && o.multiscale)
    throw locassort::Error(ErrorKind::Usage, "--alpha and --multiscale are mutually exclusive");
  if (!o.alpha && !o.multiscale)
    throw locassort::Error(ErrorKind::Usage, "local needs either --alpha or --multiscale");
  const auto config = walker_config(o);
  RunManifest manifest("local");
  const auto in = load_inputs(o);
  const auto& col = in.table.column(o.column);
  manifest.input(o.edges);
  manifest.input(o.attrs);
  manifest.config() = walker_json(config, o.multiscale);
  manifest.config()["column"] = o.column;
  manifest.config()["directed"] = o.directed;
  manifest.config()["jobs"] = effective_jobs(o.jobs);

  const LocalAssortativity local(in.graph, col);
  Sink sink(o.output, out);
  sink.stream() << "node,r,z\n";
  std::size_t undefined = 0;
  local_assortativity_stream(local, config, o.multiscale ? LocalScale::Multiscale : LocalScale::FixedAlpha,
                             o.jobs, 1024, [&](std::span<const LocalMixingResult> rows) {
                               for (const auto& r : rows) undefined += !r.r;
                               write_local_rows(sink.stream(), in.graph, rows);
                               sink.stream().flush();
                             });
  if (!o.output.empty()) {
    manifest["r_global"] = local.global();
    manifest["undefined_nodes"] = undefined;
    manifest.output(o.output);
    manifest.write(o.output);
  }
  return kSuccess;
}

void write_histogram_csv(std::ostream& os, const WeightedHistogram& h) {
  os << "bin_lo,bin_hi,mass\n";
  for (std::size_t k = 0; k < h.mass.size(); ++k)
    os << fmt(h.edges[k]) << ',' << fmt(h.edges[k + 1]) << ',' << fmt(h.mass[k]) << '\n';
}

json summary_json(const WeightedSummary& s) {
  json p = json::object();
  for (std::size_t k = 0; k < kSummaryPercentiles.size(); ++k)
    p["p" + std::to_string(static_cast<int>(kSummaryPercentiles[k]))] = s.percentiles[k];
  return {{"count", s.count}, {"total_weight", s.total_weight}, {"mean", s.mean},
          {"std_dev", s.std_dev}, {"percentiles", p}};
}

int cmd_null(const Options& o, std::ostream& out, std::ostream& err) {
  const auto walker = walker_config(o);
  RunManifest manifest("null");
  const auto in = load_inputs(o);
  const auto& col = in.table.column(o.column);
  manifest.input(o.edges);
  manifest.input(o.attrs);

  NullModelConfig cfg;
  cfg.n_samples = o.samples;
  cfg.swaps_per_sample = o.swaps_per_sample;
  cfg.burn_in = o.burn_in;
  cfg.t0 = o.t0;
  cfg.t_min = o.t_min;
  cfg.cooling = o.cooling;
  cfg.seed = o.seed.value_or(1);
  cfg.validate();
  const auto m = in.graph.num_edges();
  manifest.config() = {{"column", o.column},
                       {"samples", cfg.n_samples},
                       {"swaps_per_sample", cfg.resolved_spacing(m)},
                       {"burn_in", cfg.resolved_burn_in(m)},
                       {"t0", cfg.t0},
                       {"t_min", cfg.t_min},
                       {"cooling", cfg.cooling},
                       {"bins", o.bins},
                       {"walker", walker_json(walker, true)}};
  manifest["seeds"] = {cfg.seed};

  const auto dist = null_distribution(in.graph, col, cfg, walker, o.bins, o.jobs);
  if (!o.ensemble_dir.empty()) {
    // Re-run the identical chain to persist its graphs.
    write_ensemble(o.ensemble_dir, sample_null(in.graph, col, cfg), cfg);
  }
  if (!dist.diagnostic.empty()) err << "null: " << dist.diagnostic << '\n';

  Sink sink(o.output, out);
  if (o.format == "json") {
    json j{{"summary", summary_json(dist.histogram.summary)},
           {"edges", dist.histogram.edges},
           {"mass", dist.histogram.mass}};
    sink.stream() << j.dump(2) << '\n';
  } else {
    write_histogram_csv(sink.stream(), dist.histogram);
  }
  if (!o.output.empty()) {
    manifest["summary"] = summary_json(dist.histogram.summary);
    manifest["bin_policy"] = dist.histogram.bin_policy;
    manifest["m_in_trace"] = dist.m_in_trace;
    manifest["acceptance_rate"] = dist.stats.acceptance_rate();
    manifest["proposals"] = dist.stats.proposals;
    manifest["diagnostic"] = dist.diagnostic;
    manifest.output(o.output);
    manifest.write(o.output);
  }
  return kSuccess;
}

int cmd_generate(const Options& o, std::ostream& out) {
  if (o.list) {
    for (const auto& p : list_presets()) out << p.name << "  " << p.description << '\n';
    return kSuccess;
  }
  if (o.preset.empty() == o.spec.empty())
    throw locassort::Error(ErrorKind::Usage, "generate needs exactly one of --preset or --spec");
  if (o.output.empty()) throw locassort::Error(ErrorKind::Usage, "generate needs --output PREFIX");

  RunManifest manifest("generate");
  BlockSpec spec;
  if (!o.preset.empty()) {
    spec = find_preset(o.preset).spec;
    manifest.config()["preset"] = o.preset;
  } else {
    spec = load_block_spec(o.spec);
    manifest.input(o.spec);
  }
  if (o.seed) spec.seed = *o.seed;
  manifest["seeds"] = {spec.seed};
  const auto net = generate_block_network(spec);

  const auto edge_path = o.output + ".edges";
  const auto attr_path = o.output + ".csv";
  {
    std::ofstream e(edge_path);
    if (!e) throw locassort::Error(ErrorKind::Usage, "cannot write " + edge_path);
    e << "# generated by locassort " << kVersion << "; manifest " << o.output << ".manifest.json\n";
    write_edge_list(net.graph, e);
    std::ofstream a(attr_path);
    if (!a) throw locassort::Error(ErrorKind::Usage, "cannot write " + attr_path);
    a << write_attributes(net.attributes, net.graph);
  }
  manifest.config()["group_sizes"] = spec.group_sizes;
  manifest.config()["block_edges"] = spec.block_edges;
  manifest.config()["type_of_group"] = spec.type_of_group;
  manifest["nodes"] = net.graph.num_nodes();
  manifest["edges"] = net.graph.num_edges();
  manifest.output(edge_path);
  manifest.output(attr_path);
  manifest.write(o.output);
  out << "wrote " << edge_path << " and " << attr_path << " (n=" << net.graph.num_nodes()
      << ", m=" << net.graph.num_edges() << ")\n";
  return kSuccess;
}

struct LocalTable {
  std::vector<std::string> names;
  std::vector<LocalMixingResult> rows;
};

LocalTable read_local_csv(const std::string& path, std::unordered_map<std::string, NodeId>& ids) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw locassort::Error(ErrorKind::Parse, "local result file not found: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  const auto records = csv::parse(buf.str());
  if (records.empty()) throw locassort::Error(ErrorKind::Parse, path + ": empty file", 1);
  const auto& header = records.front().fields;
  auto find = [&](const char* name) -> std::size_t {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end())
      throw locassort::Error(ErrorKind::Parse, path + ": header lacks column '" + name + "'", 1);
    return static_cast<std::size_t>(it - header.begin());
  };
  const auto cn = find("node"), cr = find("r"), cz = find("z");

  LocalTable t;
  for (std::size_t i = 1; i < records.size(); ++i) {
    const auto& rec = records[i];
    if (rec.fields.size() != header.size())
      throw locassort::Error(ErrorKind::Parse, path + ": line " + std::to_string(rec.line) + ": ragged row",
                             rec.line);
    LocalMixingResult r;
    const auto& name = rec.fields[cn];
    auto [it, inserted] = ids.emplace(name, static_cast<NodeId>(ids.size()));
    r.node = it->second;
    try {
      if (!rec.fields[cr].empty()) r.r = std::stod(rec.fields[cr]);
      r.z = std::stod(rec.fields[cz]);
    } catch (const std::exception&) {
      throw locassort::Error(ErrorKind::Parse, path + ": line " + std::to_string(rec.line) + ": bad number",
                             rec.line);
    }
    t.names.push_back(name);
    t.rows.push_back(r);
  }
  return t;
}

int cmd_compare(const Options& o, std::ostream& out) {
  std::unordered_map<std::string, NodeId> ids;
  const auto a = read_local_csv(o.local_a, ids);
  const auto b = read_local_csv(o.local_b, ids);
  const auto c = assort_correlation(a.rows, b.rows, !o.unweighted);
  json j{{"pearson", c.pearson}, {"frac_a_gt_b", c.frac_a_gt_b}, {"compared", c.compared},
         {"weighting", o.unweighted ? "uniform" : "min_z"}};
  Sink sink(o.output, out);
  if (o.format == "csv")
    sink.stream() << "pearson,frac_a_gt_b,compared\n"
                  << fmt(c.pearson) << ',' << fmt(c.frac_a_gt_b) << ',' << c.compared << '\n';
  else
    sink.stream() << j.dump(2) << '\n';
  if (!o.output.empty()) {
    RunManifest manifest("compare");
    manifest.input(o.local_a);
    manifest.input(o.local_b);
    manifest.config()["unweighted"] = o.unweighted;
    manifest.output(o.output);
    manifest.write(o.output);
  }
  return kSuccess;
}

int cmd_summary(const Options& o, std::ostream& out) {
  std::unordered_map<std::string, NodeId> ids;
  const auto t = read_local_csv(o.local_a, ids);
  std::vector<WeightedValue> data;
  for (const auto& r : t.rows)
    if (r.r) data.push_back({*r.r, r.z});
  const auto h = build_histogram(data, o.bins);
  Sink sink(o.output, out);
  if (o.format == "json") {
    json j{{"summary", summary_json(h.summary)}, {"edges", h.edges}, {"mass", h.mass},
           {"bin_policy", h.bin_policy}};
    sink.stream() << j.dump(2) << '\n';
  } else {
    write_histogram_csv(sink.stream(), h);
  }
  if (!o.output.empty()) {
    RunManifest manifest("summary");
    manifest.input(o.local_a);
    manifest.config()["bins"] = o.bins;
    manifest["bin_policy"] = h.bin_policy;
    manifest["summary"] = summary_json(h.summary);
    manifest.output(o.output);
    manifest.write(o.output);
  }
  return kSuccess;
}

void add_input_options(CLI::App* sub, Options& o) {
  sub->add_option("edges", o.edges, "Edge list file")->required();
  sub->add_option("attributes", o.attrs, "Attribute CSV file")->required();
  sub->add_option("--column", o.column, "Attribute column to analyse")->required();
  sub->add_flag("--directed", o.directed, "Treat edges as directed arcs");
  sub->add_flag("--lenient", o.lenient, "Drop duplicate edges instead of failing");
  sub->add_flag("--scalar", o.force_scalar, "Treat the column as scalar");
  sub->add_flag("--categorical", o.force_categorical, "Treat the column as categorical");
}

void add_walker_options(CLI::App* sub, Options& o) {
  sub->add_option("--tol", o.tol, "L1 tolerance of the power iteration");
  sub->add_option("--eta-max", o.eta_max, "Truncation cap of the multiscale series");
  sub->add_option("--multi-tol", o.multi_tol, "Per-term stopping threshold of the multiscale series");
  sub->add_option("--max-iter", o.max_iter, "Power iteration cap");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  if (const char* env = std::getenv("ASSORT_JOBS")) {
    try {
      o.jobs = std::stoi(env);
    } catch (const std::exception&) {
      err << "ignoring non-numeric ASSORT_JOBS\n";
    }
  }

  CLI::App app{"Global, local and multiscale assortativity of node attributes", "locassort"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  auto* global = app.add_subcommand("global", "Global assortativity of one attribute");
  add_input_options(global, o);
  global->add_option("--output", o.output, "Write the report to a file");
  global->add_option("--format", o.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));

  auto* local = app.add_subcommand("local", "Per-node local assortativity as CSV (node,r,z)");
  add_input_options(local, o);
  add_walker_options(local, o);
  local->add_option("--alpha", o.alpha, "Restart parameter alpha of the personalized PageRank");
  local->add_flag("--multiscale", o.multiscale, "Integrate over alpha");
  local->add_option("--jobs", o.jobs, "Worker threads (default ASSORT_JOBS or all cores)");
  local->add_option("--output", o.output, "CSV output path");

  auto* null = app.add_subcommand("null", "Null distribution of multiscale local assortativity");
  add_input_options(null, o);
  add_walker_options(null, o);
  null->add_option("--samples", o.samples, "Number of null graphs");
  null->add_option("--swaps-per-sample", o.swaps_per_sample, "Proposals between samples (default 10m)");
  null->add_option("--burn-in", o.burn_in, "Proposals before the first sample (default 100m)");
  null->add_option("--t0", o.t0, "Initial temperature");
  null->add_option("--t-min", o.t_min, "Temperature floor");
  null->add_option("--cooling", o.cooling, "Geometric cooling factor per proposal");
  null->add_option("--seed", o.seed, "RNG seed");
  null->add_option("--bins", o.bins, "Histogram bins");
  null->add_option("--jobs", o.jobs, "Worker threads");
  null->add_option("--ensemble-dir", o.ensemble_dir, "Also persist sampled graphs and a manifest here");
  null->add_option("--output", o.output, "Histogram CSV output path");
  null->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* generate = app.add_subcommand("generate", "Write a synthetic planted-block network");
  generate->add_option("--preset", o.preset, "Preset name (see --list)");
  generate->add_option("--spec", o.spec, "JSON block specification");
  generate->add_option("--seed", o.seed, "RNG seed override");
  generate->add_option("--output", o.output, "Output prefix: writes PREFIX.edges and PREFIX.csv");
  generate->add_flag("--list", o.list, "List presets");

  auto* compare = app.add_subcommand("compare", "Correlate two local assortativity CSVs");
  compare->add_option("local_a", o.local_a, "First node,r,z CSV")->required();
  compare->add_option("local_b", o.local_b, "Second node,r,z CSV")->required();
  compare->add_flag("--unweighted", o.unweighted, "Weight nodes equally instead of by min(z)");
  compare->add_option("--output", o.output, "Report output path");
  compare->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* summary = app.add_subcommand("summary", "z-weighted histogram and percentiles of a local CSV");
  summary->add_option("local", o.local_a, "node,r,z CSV")->required();
  summary->add_option("--bins", o.bins, "Histogram bins");
  summary->add_option("--output", o.output, "Histogram CSV output path");
  summary->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (global->parsed()) return cmd_global(o, out);
    if (local->parsed()) return cmd_local(o, out);
    if (null->parsed()) return cmd_null(o, out, err);
    if (generate->parsed()) return cmd_generate(o, out);
    if (compare->parsed()) return cmd_compare(o, out);
    if (summary->parsed()) return cmd_summary(o, out);
  } catch (const locassort::Error& e) {
    err << "error: " << e.what() << '\n';
    return e.is_input_error() ? kInputError : kDegenerate;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace locassort::cli
