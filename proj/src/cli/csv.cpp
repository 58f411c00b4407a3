#include "hg/cli/csv.hpp"

#include <cmath>
#include <cstdio>

namespace hg::cli {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string render_row(const Row& row, char sep) {
  std::string line;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) line += sep;
    line += row[i].text;
  }
  return line;
}

void write_table(std::ostream& out, const Table& table, char sep) {
  std::string head;
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (i) head += sep;
    head += table.header[i];
  }
  out << head << '\n';
  for (const auto& r : table.rows) out << render_row(r, sep) << '\n';
}

}  // namespace hg::cli
