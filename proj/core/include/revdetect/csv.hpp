#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace revdetect::csv {

// UTF-8, comma-separated, RFC-4180 quoting. Quoted cells may contain commas,
// doubled quotes and embedded newlines. A header row is required.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  // 1-based line number on which each row started (for error reporting).
  std::vector<std::size_t> row_lines;

  std::size_t column_index(const std::string& name) const;  // npos if absent
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

Table read(std::istream& in, const std::string& origin = "<stream>");
Table read_file(const std::filesystem::path& path);

std::string escape_cell(const std::string& cell);
void write(std::ostream& out, const Table& table);
void write_file(const std::filesystem::path& path, const Table& table);

}  // namespace revdetect::csv
