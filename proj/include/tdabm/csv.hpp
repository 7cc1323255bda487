#ifndef TDABM_CSV_HPP
#define TDABM_CSV_HPP

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tdabm {

/// Raw text table: a header plus rows of cells, exactly as read from disk.
/// Cells are kept as text so identifier columns (e.g. a car make) survive
/// untouched; numeric views are taken on demand.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::size_t row_count() const { return rows.size(); }
  std::size_t column_count() const { return header.size(); }

  std::optional<std::size_t> find_column(std::string_view name) const;
  /// Throws ValidationError(UnknownVariable) naming the column.
  std::size_t column_index(std::string_view name) const;
};

/// RFC-4180 reader: quoted fields, doubled quotes, LF or CRLF line ends.
/// Header row is mandatory; duplicate or empty header names and ragged rows
/// are rejected.
Table parse_csv(std::string_view text, char delimiter = ',');
Table read_csv(const std::filesystem::path& path, char delimiter = ',');

/// Always writes LF line ends; quotes a cell only when it needs quoting.
void write_csv(std::ostream& out, const Table& table, char delimiter = ',');
void write_csv(const std::filesystem::path& path, const Table& table, char delimiter = ',');
std::string to_csv_string(const Table& table, char delimiter = ',');

/// Shortest representation that parses back to the same double.
std::string format_number(double value);

/// Finite decimal or scientific notation, surrounding blanks ignored.
/// Returns nullopt for anything else (including inf/nan).
std::optional<double> parse_number(std::string_view text);

/// True when the cell holds nothing but whitespace.
bool is_blank(std::string_view text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

} // namespace tdabm

#endif // TDABM_CSV_HPP
