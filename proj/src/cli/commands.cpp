#include "hg/cli/commands.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <variant>

#include "hg/cli/csv.hpp"
#include "hg/cli/experiments.hpp"
#include "hg/cli/map_spec.hpp"
#include "hg/errors.hpp"
#include "hg/optimizer.hpp"
#include "hg/seminorms.hpp"
#include "hg/sphere2.hpp"

namespace hg::cli {

namespace {

std::size_t default_grid() {
  const char* env = std::getenv("HG_GRID_M");
  if (!env || !*env) return kDefaultGridM;
  const double v = parse_number(env);
  if (v < 16 || v != std::round(v) || !is_power_of_two(static_cast<std::size_t>(v))) {
    throw UsageError("HG_GRID_M must be a power of two >= 16");
  }
  return static_cast<std::size_t>(v);
}

std::size_t checked_grid(std::size_t M) {
  if (M < 16 || !is_power_of_two(M)) throw UsageError("--grid must be a power of two >= 16");
  return M;
}

// `--key value` and `--key=value` pairs left over after the declared flags.
std::map<std::string, std::string> parse_extras(const std::vector<std::string>& extras) {
  std::map<std::string, std::string> out;
  for (std::size_t i = 0; i < extras.size(); ++i) {
    const std::string& tok = extras[i];
    if (tok.rfind("--", 0) != 0 || tok.size() < 3) throw UsageError("unexpected argument '" + tok + "'");
    std::string key = tok.substr(2), value;
    const auto eq = key.find('=');
    if (eq != std::string::npos) {
      value = key.substr(eq + 1);
      key = key.substr(0, eq);
    } else {
      if (i + 1 >= extras.size()) throw UsageError("missing value for '" + tok + "'");
      value = extras[++i];
    }
    if (out.count(key)) throw UsageError("duplicate parameter '--" + key + "'");
    out[key] = value;
  }
  return out;
}

char separator(const std::string& format) {
  if (format == "csv") return ',';
  if (format == "tsv") return '\t';
  throw UsageError("--format must be csv or tsv");
}

// ---- map loading ------------------------------------------------------------------------

using LoadedCircle = std::variant<AnalyticCircleMap, CircleMap>;

LoadedCircle load_circle(const std::string& text) {
  const MapSpec spec = parse_map_spec(text);
  if (!spec.path.empty()) return read_circle_csv(spec.path);
  return make_circle_map(spec.name, spec.params);
}

CircleMap sampled(const LoadedCircle& m, std::size_t M) {
  if (const auto* a = std::get_if<AnalyticCircleMap>(&m)) return a->sample(M);
  const auto& c = std::get<CircleMap>(m);
  return c;
}

bool is_s2_name(const std::string& name) {
  return name == "stereo" || name == "suspension" || name == "multibump-s2" || name == "identity-s2" ||
         name == "constant-s2";
}

double take(Params& p, const std::string& key, double fallback) {
  const auto it = p.find(key);
  if (it == p.end()) return fallback;
  const double v = it->second;
  p.erase(it);
  return v;
}

int take_int(Params& p, const std::string& key, double fallback) {
  const double v = take(p, key, fallback);
  if (v != std::round(v)) throw UsageError("'" + key + "' must be an integer");
  return static_cast<int>(v);
}

Sphere2Map load_sphere(const MapSpec& spec) {
  Params p = spec.params;
  const auto grid = Sphere2Grid::uniform(static_cast<std::size_t>(take_int(p, "n_phi", 128)),
                                         static_cast<std::size_t>(take_int(p, "n_lambda", 256)));
  std::optional<Sphere2Map> out;
  if (spec.name == "stereo") {
    out = stereographic_power(take_int(p, "d", 1), grid);
  } else if (spec.name == "suspension") {
    SuspensionSpec s;
    s.k = take_int(p, "k", 1);
    s.h_degree = take_int(p, "dh", 1);
    s.R = take(p, "R", 0.5);
    s.F = default_suspension_profile(s.k, s.R);
    out = suspension(s, grid);
  } else if (spec.name == "multibump-s2") {
    const int d = take_int(p, "d", 1);
    out = multi_bump_s2(d, take_int(p, "n", 4), grid);
  } else if (spec.name == "identity-s2") {
    out = Sphere2Map::from_function(grid, [](const Vec3& s) { return s; });
  } else {
    out = Sphere2Map::from_function(grid, [](const Vec3&) { return Vec3{0.0, 0.0, 1.0}; });
  }
  if (!p.empty()) throw UsageError(spec.name + ": unknown parameter '" + p.begin()->first + "'");
  return *out;
}

void emit(std::ostream& out, const Table& t, const std::string& path, char sep) {
  if (path.empty()) {
    write_table(out, t, sep);
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
  write_table(f, t, sep);
}

// ---- commands ----------------------------------------------------------------------------

struct DegreeOpts {
  std::string map;
  std::size_t grid = 0;
};

int cmd_degree(const DegreeOpts& o, std::ostream& out, std::ostream& err) {
  const MapSpec spec = parse_map_spec(o.map);
  Table t;
  t.header = {"method", "estimate", "rounded"};
  if (spec.path.empty() && is_s2_name(spec.name)) {
    const auto est = degree_kronecker_s2(load_sphere(spec));
    t.header.push_back("pole_warning");
    t.rows.push_back({"kronecker", est.value, static_cast<long>(std::lround(est.value)), est.pole_warning});
    write_table(out, t);
    return kExitOk;
  }
  const LoadedCircle m = load_circle(o.map);
  const std::size_t M = o.grid ? checked_grid(o.grid) : default_grid();
  const CircleMap f = sampled(m, M);
  const int wind = degree_winding(lift(f));
  double kron;
  if (const auto* a = std::get_if<AnalyticCircleMap>(&m)) {
    kron = degree_kronecker_s1(*a, M);
  } else {
    kron = degree_kronecker_s1(f);
  }
  const double four = degree_fourier(fourier(f));
  t.rows.push_back({"winding", static_cast<double>(wind), wind});
  t.rows.push_back({"kronecker", kron, static_cast<long>(std::lround(kron))});
  t.rows.push_back({"fourier", four, static_cast<long>(std::lround(four))});
  write_table(out, t);
  if (std::lround(kron) != wind) {
    err << "degree estimates disagree: winding " << wind << ", kronecker " << format_number(kron) << "\n";
    return kExitNumeric;
  }
  return kExitOk;
}

struct SeminormOpts {
  std::string map, against, method = "auto", kernel = "arc";
  double s = 1.0, p = 1.0;
  std::size_t grid = 0;
};

int cmd_seminorm(const SeminormOpts& o, std::ostream& out) {
  const SobolevIndex index(o.s, o.p);
  const std::size_t M = o.grid ? checked_grid(o.grid) : default_grid();
  const LoadedCircle f = load_circle(o.map);
  const std::optional<LoadedCircle> g = o.against.empty() ? std::nullopt : std::optional(load_circle(o.against));
  std::string method = o.method;
  if (method == "auto") method = o.s == 1.0 ? "w1p" : (o.s == 0.5 && o.p == 2.0 ? "fourier" : "gagliardo");
  KernelDistance kernel;
  if (o.kernel == "arc") {
    kernel = KernelDistance::arc;
  } else if (o.kernel == "chord") {
    kernel = KernelDistance::chord;
  } else {
    throw UsageError("--kernel must be arc or chord");
  }
  double value;
  if (method == "w1p") {
    if (o.s != 1.0) throw UsageError("--method w1p needs --s 1");
    const auto* fa = std::get_if<AnalyticCircleMap>(&f);
    const auto* ga = g ? std::get_if<AnalyticCircleMap>(&*g) : nullptr;
    if (fa && (!g || ga)) {
      value = w1p_distance(*fa, ga ? *ga : analytic_constant(0.0), o.p, M);
    } else {
      const CircleMap fs = sampled(f, M);
      value = w1p_distance(fs, g ? sampled(*g, fs.size()) : CircleMap::constant(fs.size()), o.p);
    }
  } else {
    const CircleMap fs = sampled(f, M);
    std::vector<cplx> h(fs.samples().begin(), fs.samples().end());
    if (g) h = difference(fs, sampled(*g, fs.size()));
    if (method == "fourier") {
      if (o.s != 0.5 || o.p != 2.0) throw UsageError("--method fourier needs --s 0.5 --p 2");
      value = std::sqrt(h_half_seminorm_sq(h));
    } else if (method == "gagliardo") {
      value = gagliardo_seminorm(std::span<const cplx>(h), o.s, o.p, kernel);
    } else if (method == "sup") {
      if (!g) throw UsageError("--method sup needs --against");
      value = sup_distance(fs, sampled(*g, fs.size()));
    } else {
      throw UsageError("--method must be auto, w1p, fourier, gagliardo or sup");
    }
  }
  Table t;
  t.header = {"method", "s", "p", "grid", "seminorm", "seminorm_sq"};
  t.rows.push_back({method, o.s, o.p, M, value, value * value});
  write_table(out, t);
  return kExitOk;
}

struct OptimizeOpts {
  std::string from, mode = "inf", trace;
  int to_class = 0;
  double s = 1.0, p = 1.0;
  OptimizeBudget budget;
};

int cmd_optimize(const OptimizeOpts& o, std::ostream& out) {
  const SobolevIndex index(o.s, o.p);
  const LoadedCircle f = load_circle(o.from);
  if (o.mode != "inf" && o.mode != "point") throw UsageError("--mode must be inf or point");
  const bool inf = o.mode == "inf";
  const OptimizeReport r = std::visit(
      [&](const auto& m) {
        return inf ? estimate_inf_distance(m, o.to_class, index, o.budget)
                   : estimate_point_to_class(m, o.to_class, index, o.budget);
      },
      f);
  if (!o.trace.empty()) {
    Table tr;
    tr.header = {"restart", "iteration", "value"};
    for (const auto& tp : r.trace) tr.rows.push_back({tp.restart, tp.iteration, tp.value});
    emit(out, tr, o.trace, ',');
  }
  Table t;
  t.header = {"mode", "d2", "s", "p", "optimizer_value", "best_value", "witness", "witness_value", "target", "gap",
              "restarts_used", "budget_exhausted", "max_phase_derivative"};
  t.rows.push_back({o.mode, o.to_class, o.s, o.p, r.optimizer_value, r.best_value, r.witness.empty() ? "none" : r.witness,
                    r.witness_value, r.target, r.gap, r.restarts_used, r.budget_exhausted, r.max_phase_derivative});
  write_table(out, t);
  return kExitOk;
}

struct SweepOpts {
  std::string name;
  double s = 1.0, p = 1.0;
  std::size_t grid = 0;
  std::vector<std::string> extras;
};

int cmd_sweep(const SweepOpts& o, std::ostream& out) {
  const SobolevIndex index(o.s, o.p);
  const auto raw = parse_extras(o.extras);
  std::string sweep_key;
  std::vector<double> sweep_values;
  Params fixed;
  for (const auto& [k, v] : raw) {
    const auto values = parse_list(v);
    if (values.size() > 1) {
      if (!sweep_key.empty()) throw UsageError("only one parameter may hold a list");
      sweep_key = k;
      sweep_values = values;
    } else {
      fixed[k] = values.front();
    }
  }
  if (sweep_key.empty()) {
    if (fixed.empty()) throw UsageError("sweep needs a list-valued parameter");
    sweep_key = fixed.begin()->first;
    sweep_values = {fixed.begin()->second};
    fixed.erase(fixed.begin());
  }
  const std::size_t M = o.grid ? checked_grid(o.grid) : default_grid();
  Table t;
  t.header = {sweep_key, "d1", "d2", "distance", "claimed_value"};
  for (double v : sweep_values) {
    Params params = fixed;
    params[sweep_key] = v;
    const GalleryPair pr = hg::make_pair(o.name, params);
    t.rows.push_back({v, pr.f.winding, pr.g.winding, pair_distance(pr, index.s, index.p, M), pr.claimed_value});
  }
  write_table(out, t);
  return kExitOk;
}

struct PairOpts {
  std::string name;
  std::size_t grid = 0;
  std::vector<std::string> extras;
};

int cmd_pair(const PairOpts& o, std::ostream& out) {
  Params params;
  for (const auto& [k, v] : parse_extras(o.extras)) params[k] = parse_number(v);
  const GalleryPair pr = hg::make_pair(o.name, params);
  const std::size_t M = o.grid ? checked_grid(o.grid) : default_grid();
  Table t;
  t.header = {"theta", "f_re", "f_im", "g_re", "g_im"};
  for (std::size_t j = 0; j < M; ++j) {
    const double th = grid_theta(j, M);
    const cplx a = pr.f.value_at(th), b = pr.g.value_at(th);
    t.rows.push_back({th, a.real(), a.imag(), b.real(), b.imag()});
  }
  write_table(out, t);
  return kExitOk;
}

struct ExperimentOpts {
  std::string name, output, format = "csv";
  bool list = false;
  std::vector<std::string> extras;
};

bool report(const std::string& name, const ExperimentResult& r, std::ostream& err) {
  for (const auto& c : r.checks) {
    err << (c.passed ? "PASS " : "FAIL ") << name << ": " << c.name;
    if (!c.detail.empty()) err << " [" << c.detail << "]";
    err << "\n";
  }
  if (!r.passed()) {
    err << name << " rows:\n";
    write_table(err, r.table);
  }
  return r.passed();
}

int cmd_experiment(const ExperimentOpts& o, std::ostream& out, std::ostream& err) {
  const char sep = separator(o.format);
  if (o.list || o.name.empty()) {
    Table t;
    t.header = {"name", "description"};
    for (const auto& e : experiment_registry()) t.rows.push_back({e.name, e.description});
    write_table(out, t, sep);
    return o.list ? kExitOk : kExitUsage;
  }
  const auto overrides = parse_extras(o.extras);
  if (o.name != "all") {
    const auto r = run_experiment(o.name, overrides);
    emit(out, r.table, o.output, sep);
    return report(o.name, r, err) ? kExitOk : kExitNumeric;
  }
  if (!overrides.empty()) throw UsageError("'experiment all' takes no parameter overrides");
  if (!o.output.empty()) std::filesystem::create_directories(o.output);
  bool ok = true;
  for (const auto& e : experiment_registry()) {
    const auto r = run_experiment(e.name, {});
    const std::string ext = sep == ',' ? ".csv" : ".tsv";
    if (o.output.empty()) {
      out << "# " << e.name << "\n";
      write_table(out, r.table, sep);
    } else {
      emit(out, r.table, (std::filesystem::path(o.output) / (e.name + ext)).string(), sep);
    }
    ok = report(e.name, r, err) && ok;
  }
  err << (ok ? "all experiments passed" : "some experiments failed") << "\n";
  return ok ? kExitOk : kExitNumeric;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Degree, distance and Sobolev semi-norm computations for maps into spheres"};
  app.require_subcommand(1);

  DegreeOpts deg;
  auto* c_deg = app.add_subcommand("degree", "degree estimates of a circle or sphere map");
  c_deg->add_option("--map", deg.map, "name[:k=v,...] or a CSV file")->required();
  c_deg->add_option("--grid", deg.grid, "grid size (default HG_GRID_M or 4096)");

  SeminormOpts sn;
  auto* c_sn = app.add_subcommand("seminorm", "Sobolev semi-norm of a map or of the difference of two maps");
  c_sn->add_option("--map", sn.map, "name[:k=v,...] or a CSV file")->required();
  c_sn->add_option("--against", sn.against, "second map; the difference is measured");
  c_sn->add_option("--s", sn.s, "smoothness")->required();
  c_sn->add_option("--p", sn.p, "integrability")->required();
  c_sn->add_option("--method", sn.method, "auto | w1p | fourier | gagliardo | sup");
  c_sn->add_option("--kernel", sn.kernel, "arc | chord (gagliardo only)");
  c_sn->add_option("--grid", sn.grid, "grid size");

  OptimizeOpts op;
  auto* c_op = app.add_subcommand("optimize", "upper bound for a class distance by phase optimization");
  c_op->add_option("--from", op.from, "starting map")->required();
  c_op->add_option("--to-class", op.to_class, "target degree")->required();
  c_op->add_option("--s", op.s, "smoothness");
  c_op->add_option("--p", op.p, "integrability");
  c_op->add_option("--mode", op.mode, "inf (both maps move) | point (first map fixed)");
  c_op->add_option("--modes", op.budget.modes, "Fourier modes");
  c_op->add_option("--restarts", op.budget.restarts, "restarts");
  c_op->add_option("--iterations", op.budget.iterations, "iterations per stage");
  c_op->add_option("--grid", op.budget.grid, "quadrature grid");
  c_op->add_option("--seed", op.budget.seed, "random seed");
  c_op->add_option("--trace", op.trace, "write (restart, iteration, value) rows to this file");

  SweepOpts sw;
  auto* c_sw = app.add_subcommand("sweep", "distance of a gallery pair over one list-valued parameter");
  c_sw->add_option("name", sw.name, "pair name")->required();
  c_sw->add_option("--s", sw.s, "smoothness");
  c_sw->add_option("--p", sw.p, "integrability");
  c_sw->add_option("--grid", sw.grid, "grid size");
  c_sw->allow_extras();

  PairOpts pa;
  auto* c_pa = app.add_subcommand("pair", "samples of a gallery pair");
  c_pa->add_option("name", pa.name, "pair name")->required();
  c_pa->add_option("--grid", pa.grid, "number of samples");
  c_pa->allow_extras();

  ExperimentOpts ex;
  auto* c_ex = app.add_subcommand("experiment", "named reproduction experiment, or 'all'");
  c_ex->add_option("name", ex.name, "experiment name or 'all'");
  c_ex->add_option("--output", ex.output, "output file (directory for 'all')");
  c_ex->add_option("--format", ex.format, "csv | tsv");
  c_ex->add_flag("--list", ex.list, "list registered experiments");
  c_ex->allow_extras();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help requests exit 0; anything else is a usage error.
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (c_deg->parsed()) return cmd_degree(deg, out, err);
    if (c_sn->parsed()) return cmd_seminorm(sn, out);
    if (c_op->parsed()) return cmd_optimize(op, out);
    if (c_sw->parsed()) {
      sw.extras = c_sw->remaining();
      return cmd_sweep(sw, out);
    }
    if (c_pa->parsed()) {
      pa.extras = c_pa->remaining();
      return cmd_pair(pa, out);
    }
    ex.extras = c_ex->remaining();
    return cmd_experiment(ex, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GridTooCoarse& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const Error& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace hg::cli
