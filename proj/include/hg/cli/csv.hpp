#pragma once

// Byte-stable delimited output: header row, LF line ends, 17 significant digits.

#include <ostream>
#include <string>
#include <vector>

namespace hg::cli {

/// %.17g, with "nan", "inf" and "-inf" spelled out.
std::string format_number(double v);

struct Cell {
  std::string text;
  Cell(const std::string& s) : text(s) {}
  Cell(const char* s) : text(s) {}
  Cell(double v) : text(format_number(v)) {}
  Cell(int v) : text(std::to_string(v)) {}
  Cell(long v) : text(std::to_string(v)) {}
  Cell(std::size_t v) : text(std::to_string(v)) {}
  Cell(bool v) : text(v ? "true" : "false") {}
};

using Row = std::vector<Cell>;

struct Table {
  std::vector<std::string> header;
  std::vector<Row> rows;
};

void write_table(std::ostream& out, const Table& table, char sep = ',');
std::string render_row(const Row& row, char sep = ',');

}  // namespace hg::cli
