#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "locassort/graph.hpp"

namespace locassort {

enum class ColumnKind { Categorical, Scalar };

inline constexpr std::int32_t kMissingCategory = -1;

/// One node attribute. Categorical columns hold dense indices into
/// `category_names` (or kMissingCategory); scalar columns hold reals with NaN
/// marking a missing value.
struct AttributeColumn {
  std::string name;
  ColumnKind kind = ColumnKind::Categorical;
  std::vector<std::int32_t> categories;
  std::vector<std::string> category_names;
  std::vector<double> values;

  /// Category indices follow the sorted order of the distinct labels.
  static AttributeColumn categorical(std::string name,
                                     const std::vector<std::optional<std::string>>& labels);
  static AttributeColumn scalar(std::string name, const std::vector<std::optional<double>>& values);

  std::size_t size() const noexcept {
    return kind == ColumnKind::Categorical ? categories.size() : values.size();
  }
  bool is_missing(NodeId v) const noexcept {
    return kind == ColumnKind::Categorical ? categories[v] == kMissingCategory
                                           : std::isnan(values[v]);
  }
  std::size_t num_categories() const noexcept { return category_names.size(); }
  std::size_t missing_count() const noexcept;
};

class AttributeTable {
 public:
  explicit AttributeTable(std::size_t node_count = 0) : node_count_(node_count) {}

  std::size_t node_count() const noexcept { return node_count_; }
  const std::vector<AttributeColumn>& columns() const noexcept { return columns_; }

  /// Throws when the column length does not match or the name is taken.
  void add_column(AttributeColumn column);
  const AttributeColumn& column(std::string_view name) const;
  bool has_column(std::string_view name) const noexcept;

 private:
  std::size_t node_count_;
  std::vector<AttributeColumn> columns_;
};

struct AttributeOptions {
  /// Overrides the inferred type of every column.
  std::optional<ColumnKind> force_all;
  /// Per-column overrides; take precedence over `force_all`.
  std::map<std::string, ColumnKind, std::less<>> force;
};

/// Reads a CSV whose header is "node,col1,col2,...". Empty fields are
/// missing. A column whose non-empty fields all parse as numbers is scalar,
/// otherwise categorical. Nodes absent from the file are missing everywhere.
AttributeTable load_attributes(std::string_view text, const Graph& graph,
                               const AttributeOptions& options = {});
AttributeTable load_attributes_file(const std::filesystem::path& path, const Graph& graph,
                                    const AttributeOptions& options = {});

/// Writes the table back as CSV with one row per graph node.
std::string write_attributes(const AttributeTable& table, const Graph& graph);

}  // namespace locassort
