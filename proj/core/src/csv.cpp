#include "revdetect/csv.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "revdetect/errors.hpp"

namespace revdetect::csv {

std::size_t Table::column_index(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  return npos;
}

namespace {

// Parses one record starting at the current stream position. Returns false on
// clean EOF before any character of a new record.
bool parse_record(std::istream& in, const std::string& origin,
                  std::size_t& line, std::vector<std::string>& out) {
  out.clear();
  int first = in.peek();
  if (first == std::char_traits<char>::eof()) return false;

  std::string cell;
  bool quoted = false;
  bool cell_started = false;
  const std::size_t record_line = line;

  for (;;) {
    int ci = in.get();
    if (ci == std::char_traits<char>::eof()) {
      if (quoted) {
        throw ParseError("unterminated quoted cell", origin, record_line);
      }
      out.push_back(std::move(cell));
      return true;
    }
    char c = static_cast<char>(ci);
    if (c == '\n') ++line;

    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get();
          cell.push_back('"');
        } else {
          quoted = false;
        }
      } else {
        cell.push_back(c);
      }
      continue;
    }

    switch (c) {
      case '"':
        if (!cell.empty() || cell_started) {
          throw ParseError("quote inside unquoted cell", origin, record_line);
        }
        quoted = true;
        cell_started = true;
        break;
      case ',':
        out.push_back(std::move(cell));
        cell.clear();
        cell_started = false;
        break;
      case '\r':
        if (in.peek() == '\n') {
          in.get();
          ++line;
        }
        out.push_back(std::move(cell));
        return true;
      case '\n':
        out.push_back(std::move(cell));
        return true;
      default:
        cell.push_back(c);
        cell_started = true;
        break;
    }
  }
}

}  // namespace

Table read(std::istream& in, const std::string& origin) {
  Table table;
  std::size_t line = 1;
  std::vector<std::string> record;

  if (!parse_record(in, origin, line, record)) {
    throw ParseError("missing header row", origin, 1);
  }
  table.header = record;

  for (;;) {
    const std::size_t record_line = line;
    if (!parse_record(in, origin, line, record)) break;
    if (record.size() == 1 && record[0].empty()) continue;  // blank line
    if (record.size() != table.header.size()) {
      throw ParseError("expected " + std::to_string(table.header.size()) +
                           " cells, got " + std::to_string(record.size()),
                       origin, record_line);
    }
    table.rows.push_back(record);
    table.row_lines.push_back(record_line);
  }
  return table;
}

Table read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open CSV file: " + path.string());
  return read(in, path.string());
}

std::string escape_cell(const std::string& cell) {
  bool needs_quote = cell.find_first_of(",\"\r\n") != std::string::npos;
  if (!needs_quote) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void write(std::ostream& out, const Table& table) {
  auto write_row = [&out](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << escape_cell(row[i]);
    }
    out << '\n';
  };
  write_row(table.header);
  for (const auto& row : table.rows) write_row(row);
}

void write_file(const std::filesystem::path& path, const Table& table) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write CSV file: " + path.string());
  write(out, table);
}

}  // namespace revdetect::csv
