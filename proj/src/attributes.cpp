#include "locassort/attributes.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

#include "locassort/csv.hpp"
#include "locassort/error.hpp"

namespace locassort {

namespace {

std::optional<double> parse_number(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(value)) return std::nullopt;
  return value;
}

std::string format_number(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

AttributeColumn AttributeColumn::categorical(std::string name,
                                             const std::vector<std::optional<std::string>>& labels) {
  AttributeColumn col;
  col.name = std::move(name);
  col.kind = ColumnKind::Categorical;
  for (const auto& l : labels)
    if (l) col.category_names.push_back(*l);
  std::sort(col.category_names.begin(), col.category_names.end());
  col.category_names.erase(std::unique(col.category_names.begin(), col.category_names.end()),
                           col.category_names.end());
  col.categories.reserve(labels.size());
  for (const auto& l : labels) {
    if (!l) {
      col.categories.push_back(kMissingCategory);
      continue;
    }
    auto it = std::lower_bound(col.category_names.begin(), col.category_names.end(), *l);
    col.categories.push_back(static_cast<std::int32_t>(it - col.category_names.begin()));
  }
  return col;
}

AttributeColumn AttributeColumn::scalar(std::string name,
                                        const std::vector<std::optional<double>>& values) {
  AttributeColumn col;
  col.name = std::move(name);
  col.kind = ColumnKind::Scalar;
  col.values.reserve(values.size());
  for (const auto& v : values) col.values.push_back(v ? *v : std::numeric_limits<double>::quiet_NaN());
  return col;
}

std::size_t AttributeColumn::missing_count() const noexcept {
  std::size_t count = 0;
  for (std::size_t i = 0; i < size(); ++i) count += is_missing(static_cast<NodeId>(i));
  return count;
}

void AttributeTable::add_column(AttributeColumn column) {
  if (column.size() != node_count_)
    throw Error(ErrorKind::Usage, "column '" + column.name + "' has " +
                                      std::to_string(column.size()) + " entries, expected " +
                                      std::to_string(node_count_));
  if (has_column(column.name))
    throw Error(ErrorKind::Usage, "duplicate column '" + column.name + "'");
  columns_.push_back(std::move(column));
}

const AttributeColumn& AttributeTable::column(std::string_view name) const {
  for (const auto& c : columns_)
    if (c.name == name) return c;
  throw Error(ErrorKind::Usage, "no attribute column named '" + std::string(name) + "'");
}

bool AttributeTable::has_column(std::string_view name) const noexcept {
  return std::any_of(columns_.begin(), columns_.end(), [&](const auto& c) { return c.name == name; });
}

AttributeTable load_attributes(std::string_view text, const Graph& graph,
                               const AttributeOptions& options) {
  const auto records = csv::parse(text);
  if (records.empty()) throw Error(ErrorKind::Parse, "attribute file is empty", 1);
  const auto& header = records.front().fields;
  if (header.size() < 2)
    throw Error(ErrorKind::Parse, "line 1: header needs a node column and at least one attribute", 1);
  const std::size_t width = header.size();
  const std::size_t n = graph.num_nodes();

  std::vector<std::vector<std::optional<std::string>>> raw(width - 1,
                                                           std::vector<std::optional<std::string>>(n));
  std::vector<bool> seen(n, false);
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    const auto line = std::to_string(rec.line);
    if (rec.fields.size() != width)
      throw Error(ErrorKind::Parse,
                  "line " + line + ": expected " + std::to_string(width) + " fields, found " +
                      std::to_string(rec.fields.size()),
                  rec.line);
    const auto node = graph.find_node(rec.fields[0]);
    if (!node)
      throw Error(ErrorKind::UnknownNode, "line " + line + ": unknown node '" + rec.fields[0] + "'",
                  rec.line);
    if (seen[*node])
      throw Error(ErrorKind::Parse, "line " + line + ": node '" + rec.fields[0] + "' listed twice",
                  rec.line);
    seen[*node] = true;
    for (std::size_t c = 1; c < width; ++c) {
      if (!rec.fields[c].empty()) raw[c - 1][*node] = rec.fields[c];
    }
  }

  AttributeTable table(n);
  for (std::size_t c = 1; c < width; ++c) {
    const auto& name = header[c];
    const auto& cells = raw[c - 1];

    ColumnKind kind = ColumnKind::Scalar;
    bool any_value = false;
    for (const auto& cell : cells) {
      if (!cell) continue;
      any_value = true;
      if (!parse_number(*cell)) {
        kind = ColumnKind::Categorical;
        break;
      }
    }
    if (!any_value) kind = ColumnKind::Categorical;
    if (options.force_all) kind = *options.force_all;
    if (auto it = options.force.find(name); it != options.force.end()) kind = it->second;

    if (kind == ColumnKind::Categorical) {
      table.add_column(AttributeColumn::categorical(name, cells));
    } else {
      std::vector<std::optional<double>> values(n);
      for (std::size_t i = 0; i < n; ++i) {
        if (!cells[i]) continue;
        values[i] = parse_number(*cells[i]);
        if (!values[i])
          throw Error(ErrorKind::Parse,
                      "column '" + name + "': value '" + *cells[i] + "' is not numeric");
      }
      table.add_column(AttributeColumn::scalar(name, values));
    }
  }
  return table;
}

AttributeTable load_attributes_file(const std::filesystem::path& path, const Graph& graph,
                                    const AttributeOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "attribute file not found: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_attributes(buf.str(), graph, options);
}

std::string write_attributes(const AttributeTable& table, const Graph& graph) {
  std::vector<std::string> header{"node"};
  for (const auto& c : table.columns()) header.push_back(c.name);
  std::string out = csv::join(header) + "\n";
  for (NodeId v = 0; v < graph.num_nodes(); ++v) {
    std::vector<std::string> row{graph.node_name(v)};
    for (const auto& c : table.columns()) {
      if (c.is_missing(v))
        row.emplace_back();
      else if (c.kind == ColumnKind::Categorical)
        row.push_back(c.category_names[static_cast<std::size_t>(c.categories[v])]);
      else
        row.push_back(format_number(c.values[v]));
    }
    out += csv::join(row) + "\n";
  }
  return out;
}

}  // namespace locassort
