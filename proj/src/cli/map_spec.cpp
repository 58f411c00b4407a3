#include "hg/cli/map_spec.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace hg::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

}  // namespace

double parse_number(const std::string& text) {
  const std::string t = trim(text);
  if (t.empty()) throw UsageError("empty number");
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size() || !std::isfinite(v)) throw UsageError("not a number: '" + text + "'");
  return v;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& item : split(text, ',')) out.push_back(parse_number(item));
  if (out.empty()) throw UsageError("empty list");
  return out;
}

MapSpec parse_map_spec(const std::string& text) {
  MapSpec spec;
  const std::string t = trim(text);
  if (ends_with(t, ".csv")) {
    spec.path = t;
    return spec;
  }
  const auto colon = t.find(':');
  spec.name = trim(t.substr(0, colon));
  if (spec.name.empty()) throw UsageError("map spec has no name: '" + text + "'");
  if (colon == std::string::npos) return spec;
  for (const auto& item : split(t.substr(colon + 1), ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("expected key=value in '" + item + "'");
    const std::string key = trim(item.substr(0, eq));
    if (key.empty()) throw UsageError("empty key in '" + item + "'");
    if (spec.params.count(key)) throw UsageError("duplicate key '" + key + "'");
    spec.params[key] = parse_number(item.substr(eq + 1));
  }
  return spec;
}

CircleMap read_circle_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::string line;
  if (!std::getline(in, line)) throw UsageError("'" + path + "' is empty");
  std::vector<cplx> values;
  std::vector<double> thetas;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    const auto cols = split(line, ',');
    if (cols.size() < 3) throw UsageError("'" + path + "': expected theta,re,im");
    thetas.push_back(parse_number(cols[0]));
    values.emplace_back(parse_number(cols[1]), parse_number(cols[2]));
  }
  const std::size_t M = values.size();
  if (!is_power_of_two(M) || M < 16) throw UsageError("'" + path + "': row count must be a power of two >= 16");
  for (std::size_t j = 0; j < M; ++j) {
    if (std::fabs(thetas[j] - grid_theta(j, M)) > 1e-9) {
      throw UsageError("'" + path + "': thetas must be the uniform grid 2 pi j / M");
    }
  }
  // Renormalize rounding from the text representation.
  for (auto& v : values) {
    const double r = std::abs(v);
    if (std::fabs(r - 1.0) > 1e-6) throw UsageError("'" + path + "': values must have modulus 1");
    v /= r;
  }
  return CircleMap(std::move(values));
}

}  // namespace hg::cli
