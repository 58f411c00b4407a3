#pragma once

// Named reproduction experiments.  Each one declares its parameters with
// defaults, produces a table, and evaluates its own tolerance checks.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hg/cli/csv.hpp"
#include "hg/gallery.hpp"

namespace hg::cli {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ExperimentResult {
  Table table;
  std::vector<Check> checks;
  bool passed() const;
};

/// String-valued parameters with typed accessors (lists are comma separated).
class ExperimentParams {
 public:
  explicit ExperimentParams(std::map<std::string, std::string> values) : values_(std::move(values)) {}
  double number(const std::string& key) const;
  int integer(const std::string& key) const;
  std::vector<double> list(const std::string& key) const;
  std::vector<int> int_list(const std::string& key) const;

 private:
  const std::string& raw(const std::string& key) const;
  std::map<std::string, std::string> values_;
};

struct ExperimentInfo {
  std::string name;
  /// What is measured and the expected value with its tolerance.
  std::string description;
  std::map<std::string, std::string> defaults;
  std::function<ExperimentResult(const ExperimentParams&)> run;
};

const std::vector<ExperimentInfo>& experiment_registry();
const ExperimentInfo* find_experiment(const std::string& name);

/// Runs `name` with the defaults updated by `overrides`.  Throws UsageError
/// for an unknown experiment or parameter before computing anything.
ExperimentResult run_experiment(const std::string& name, const std::map<std::string, std::string>& overrides);

/// |f - g| in W^{s,p}: analytic W^{1,p} quadrature for s = 1, the Fourier
/// H^{1/2} form for (1/2, 2), and the uniform Gagliardo sum on M points otherwise.
double pair_distance(const GalleryPair& pair, double s, double p, std::size_t M);

}  // namespace hg::cli
