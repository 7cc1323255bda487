#include "tdabm/csv.hpp"

#include "tdabm/error.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace tdabm {

std::optional<std::size_t> Table::find_column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t Table::column_index(std::string_view name) const {
  if (auto idx = find_column(name)) return *idx;
  throw ValidationError(ErrorCode::UnknownVariable,
                        "unknown variable '" + std::string(name) + "'");
}

namespace {

// Splits the text into records. A record ends at an unquoted LF (a preceding
// CR is dropped). Returns the 1-based line number each record starts on.
std::vector<std::vector<std::string>> split_records(std::string_view text, char delimiter,
                                                    std::vector<std::size_t>& lines) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string cell;
  bool in_quotes = false;
  bool cell_was_quoted = false;
  std::size_t line = 1;
  std::size_t record_line = 1;

  auto end_cell = [&] {
    record.push_back(std::move(cell));
    cell.clear();
    cell_was_quoted = false;
  };
  auto end_record = [&] {
    end_cell();
    // A lone empty cell is a blank line, not a record.
    if (!(record.size() == 1 && record[0].empty())) {
      records.push_back(std::move(record));
      lines.push_back(record_line);
    }
    record.clear();
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          cell.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        cell.push_back(c);
      }
      continue;
    }
    if (c == '"' && cell.empty() && !cell_was_quoted) {
      in_quotes = true;
      cell_was_quoted = true;
    } else if (c == delimiter) {
      end_cell();
    } else if (c == '\n') {
      if (!cell.empty() && cell.back() == '\r' && !cell_was_quoted) cell.pop_back();
      end_record();
      ++line;
      record_line = line;
    } else if (c == '\r' && cell_was_quoted) {
      // CR after a closing quote belongs to a CRLF line end.
    } else {
      cell.push_back(c);
    }
  }
  if (in_quotes) {
    throw ValidationError(ErrorCode::MalformedInput,
                          "unterminated quoted field starting on line " +
                              std::to_string(record_line));
  }
  if (!cell.empty() || !record.empty()) {
    if (!cell.empty() && cell.back() == '\r') cell.pop_back();
    end_record();
  }
  return records;
}

bool needs_quoting(std::string_view cell, char delimiter) {
  for (char c : cell) {
    if (c == delimiter || c == '"' || c == '\n' || c == '\r') return true;
  }
  return false;
}

} // namespace

Table parse_csv(std::string_view text, char delimiter) {
  // UTF-8 byte order mark.
  if (text.size() >= 3 && text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);

  std::vector<std::size_t> lines;
  auto records = split_records(text, delimiter, lines);
  if (records.empty()) {
    throw ValidationError(ErrorCode::MalformedInput, "missing header row");
  }

  Table table;
  table.header = std::move(records.front());
  std::set<std::string_view> seen;
  for (const auto& name : table.header) {
    if (is_blank(name)) {
      throw ValidationError(ErrorCode::EmptyColumnName, "empty column name in header");
    }
    if (!seen.insert(name).second) {
      throw ValidationError(ErrorCode::DuplicateColumn, "duplicate column name '" + name + "'");
    }
  }

  table.rows.reserve(records.size() - 1);
  for (std::size_t r = 1; r < records.size(); ++r) {
    if (records[r].size() != table.header.size()) {
      throw ValidationError(ErrorCode::RaggedRow,
                            "row " + std::to_string(r - 1) + " (line " + std::to_string(lines[r]) +
                                ") has " + std::to_string(records[r].size()) + " fields, expected " +
                                std::to_string(table.header.size()));
    }
    table.rows.push_back(std::move(records[r]));
  }
  return table;
}

Table read_csv(const std::filesystem::path& path, char delimiter) {
  return parse_csv(read_file(path), delimiter);
}

void write_csv(std::ostream& out, const Table& table, char delimiter) {
  auto write_record = [&](const std::vector<std::string>& record) {
    for (std::size_t i = 0; i < record.size(); ++i) {
      if (i) out << delimiter;
      const auto& cell = record[i];
      if (needs_quoting(cell, delimiter)) {
        out << '"';
        for (char c : cell) {
          if (c == '"') out << '"';
          out << c;
        }
        out << '"';
      } else {
        out << cell;
      }
    }
    out << '\n';
  };
  write_record(table.header);
  for (const auto& row : table.rows) write_record(row);
}

std::string to_csv_string(const Table& table, char delimiter) {
  std::ostringstream out;
  write_csv(out, table, delimiter);
  return out.str();
}

void write_csv(const std::filesystem::path& path, const Table& table, char delimiter) {
  write_file(path, to_csv_string(table, delimiter));
}

std::string format_number(double value) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) throw std::logic_error("to_chars failed");
  return std::string(buf.data(), end);
}

bool is_blank(std::string_view text) {
  return text.find_first_not_of(" \t\r") == std::string_view::npos;
}

std::optional<double> parse_number(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return std::nullopt;
  const auto last = text.find_last_not_of(" \t\r");
  text = text.substr(first, last - first + 1);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return std::nullopt;

  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  if (!std::isfinite(value)) return std::nullopt;
  return value;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error while reading '" + path.string() + "'");
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw IoError("error while writing '" + path.string() + "'");
}

} // namespace tdabm
