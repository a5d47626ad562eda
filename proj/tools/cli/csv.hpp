#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bandedge::cli {

/// A comma-separated table with leading '#' comment lines.
struct CsvTable {
  std::vector<std::string> comments;  // without the leading "# "
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Writes comments, header and rows with '\n' line ends and shortest
/// round-trip number formatting.
void write_csv(std::ostream& out, const CsvTable& table);

/// Inverse of write_csv. Throws ConfigError on malformed input.
CsvTable read_csv(std::istream& in);

/// Writes the text atomically enough for our purposes; throws IoError.
void write_file(const std::string& path, const std::string& contents);

}  // namespace bandedge::cli
