#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace locassort::csv {

struct Record {
  std::size_t line = 0;  // 1-based line on which the record starts
  std::vector<std::string> fields;
};

/// RFC-4180 reader: comma separated, double-quoted fields may contain commas,
/// line breaks and doubled quotes. Accepts LF or CRLF line endings. Blank
/// lines are skipped.
std::vector<Record> parse(std::string_view text);

/// Quotes a field only when it needs quoting.
std::string escape(std::string_view field);

std::string join(const std::vector<std::string>& fields);

}  // namespace locassort::csv
