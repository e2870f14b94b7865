#pragma once

#include <string>
#include <vector>

namespace lipatrol {

// Minimal reader for the artifact's own CSV outputs (no quoting or escapes).
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Index of a header column; throws std::invalid_argument if absent.
  std::size_t column(const std::string& name) const;
};

std::vector<std::string> split_csv_line(const std::string& line);
CsvTable read_csv(const std::string& text);
CsvTable read_csv_file(const std::string& path);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace lipatrol
