#pragma once

// Parsing of the `name:key=value,key=value` map grammar and of number lists.

#include <stdexcept>
#include <string>
#include <vector>

#include "hg/gallery.hpp"

namespace hg::cli {

/// Bad flags, unknown names or malformed values; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MapSpec {
  std::string name;
  Params params;
  /// Set instead of name/params when the spec is a path to a CSV file.
  std::string path;
};

/// Accepts integers, reals and scientific notation; throws UsageError otherwise.
double parse_number(const std::string& text);
/// Comma-separated numbers, e.g. "1e-2,1e-3".
std::vector<double> parse_list(const std::string& text);
/// `name`, `name:k=v,...`, or a path ending in .csv.
MapSpec parse_map_spec(const std::string& text);

/// Reads (theta, Re f, Im f) rows after a header line.  Thetas must be the
/// uniform grid 2 pi j / M.
CircleMap read_circle_csv(const std::string& path);

}  // namespace hg::cli
