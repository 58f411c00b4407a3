#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hg/cli/commands.hpp"
#include "hg/cli/csv.hpp"
#include "hg/cli/experiments.hpp"
#include "hg/cli/map_spec.hpp"
#include "hg/optimizer.hpp"

using namespace hg;
using namespace hg::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "hgcli");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("hgcli_test_" + name);
}

}  // namespace

TEST_CASE("numbers and lists") {
  CHECK(parse_number("3") == 3.0);
  CHECK(parse_number("-2.5") == -2.5);
  CHECK(parse_number("1e-3") == 1e-3);
  CHECK(parse_number(" 4 ") == 4.0);
  CHECK_THROWS_AS(parse_number("abc"), UsageError);
  CHECK_THROWS_AS(parse_number("1.5x"), UsageError);
  CHECK_THROWS_AS(parse_number(""), UsageError);
  CHECK_THROWS_AS(parse_number("nan"), UsageError);
  CHECK(parse_list("1e-2,1e-3,1e-4") == std::vector<double>{1e-2, 1e-3, 1e-4});
  CHECK_THROWS_AS(parse_list("1,,2"), UsageError);
  CHECK_THROWS_AS(parse_list("1,2,"), UsageError);
}

TEST_CASE("map spec grammar") {
  const auto a = parse_map_spec("blaschke:d=2,delta=0.4");
  CHECK(a.name == "blaschke");
  CHECK(a.params.at("d") == 2.0);
  CHECK(a.params.at("delta") == 0.4);
  CHECK(parse_map_spec("power").params.empty());
  CHECK(parse_map_spec("data/f.csv").path == "data/f.csv");
  CHECK_THROWS_AS(parse_map_spec(":d=1"), UsageError);
  CHECK_THROWS_AS(parse_map_spec("power:d"), UsageError);
  CHECK_THROWS_AS(parse_map_spec("power:d=1,d=2"), UsageError);
  CHECK_THROWS_AS(parse_map_spec("power:d=x"), UsageError);
}

TEST_CASE("number formatting and tables") {
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(4.0) == "4");
  CHECK(format_number(std::nan("")) == "nan");
  CHECK(format_number(-INFINITY) == "-inf");
  Table t;
  t.header = {"a", "b"};
  t.rows.push_back({1, 2.5});
  t.rows.push_back({"x", true});
  std::ostringstream csv, tsv;
  write_table(csv, t);
  write_table(tsv, t, '\t');
  CHECK(csv.str() == "a,b\n1,2.5\nx,true\n");
  CHECK(tsv.str() == "a\tb\n1\t2.5\nx\ttrue\n");
}

TEST_CASE("degree command") {
  auto r = run({"degree", "--map", "power:d=3"});
  CHECK(r.code == 0);
  auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == std::vector<std::string>{"method", "estimate", "rounded"});
  for (std::size_t i = 1; i < 4; ++i) CHECK(rows[i][2] == "3");

  r = run({"degree", "--map", "blaschke:d=2,delta=0.4"});
  CHECK(r.code == 0);
  for (const auto& row : parse_csv(r.out)) {
    if (row[0] != "method") CHECK(row[2] == "-2");
  }

  r = run({"degree", "--map", "suspension:k=2,dh=3"});
  CHECK(r.code == 0);
  rows = parse_csv(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[1][2] == "0");

  r = run({"degree", "--map", "suspension:k=3,dh=2"});
  CHECK(parse_csv(r.out)[1][2] == "2");
  r = run({"degree", "--map", "stereo:d=-2"});
  CHECK(parse_csv(r.out)[1][2] == "-2");
}

TEST_CASE("degree of a CSV map") {
  const auto path = temp_path("square.csv");
  {
    std::ofstream f(path);
    f << "theta,re,im\n";
    const std::size_t M = 64;
    for (std::size_t j = 0; j < M; ++j) {
      const double t = grid_theta(j, M);
      char buf[128];
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", t, std::cos(2 * t), std::sin(2 * t));
      f << buf;
    }
  }
  const auto r = run({"degree", "--map", path.string()});
  CHECK(r.code == 0);
  for (const auto& row : parse_csv(r.out)) {
    if (row[0] != "method") CHECK(row[2] == "2");
  }
  std::ofstream(temp_path("bad.csv")) << "theta,re,im\n0,1,0\n0.5,1,0\n";
  CHECK(run({"degree", "--map", temp_path("bad.csv").string()}).code == 2);
  CHECK(run({"degree", "--map", temp_path("missing.csv").string()}).code == 2);
  std::filesystem::remove(path);
  std::filesystem::remove(temp_path("bad.csv"));
}

TEST_CASE("seminorm command") {
  auto r = run({"seminorm", "--map", "power:d=1", "--s", "0.5", "--p", "2", "--method", "fourier"});
  CHECK(r.code == 0);
  auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0][5] == "seminorm_sq");
  CHECK(std::stod(rows[1][5]) == doctest::Approx(4.0 * kPi * kPi).epsilon(1e-12));

  r = run({"seminorm", "--map", "zigzag:d1=1,d2=0", "--against", "zigzag:d1=1,d2=0,side=1", "--s", "1", "--p", "1"});
  CHECK(r.code == 0);
  CHECK(std::stod(parse_csv(r.out)[1][4]) == doctest::Approx(4.0).epsilon(1e-3));

  r = run({"seminorm", "--map", "power:d=1", "--s", "0.5", "--p", "2", "--method", "gagliardo", "--kernel", "chord",
           "--grid", "512"});
  CHECK(r.code == 0);
  CHECK(std::stod(parse_csv(r.out)[1][5]) == doctest::Approx(4.0 * kPi * kPi).epsilon(1e-2));

  CHECK(run({"seminorm", "--map", "power:d=1", "--s", "0.5", "--p", "2", "--kernel", "taxicab"}).code == 2);
  CHECK(run({"seminorm", "--map", "power:d=1", "--s", "0.5", "--p", "2", "--grid", "1000"}).code == 2);
  CHECK(run({"seminorm", "--map", "power:d=1", "--s", "1.5", "--p", "2"}).code == 2);
}

TEST_CASE("grid size from the environment") {
  ::setenv("HG_GRID_M", "256", 1);
  auto r = run({"seminorm", "--map", "power:d=1", "--s", "0.5", "--p", "2"});
  CHECK(parse_csv(r.out)[1][3] == "256");
  ::setenv("HG_GRID_M", "300", 1);
  CHECK(run({"seminorm", "--map", "power:d=1", "--s", "0.5", "--p", "2"}).code == 2);
  ::unsetenv("HG_GRID_M");
  r = run({"seminorm", "--map", "power:d=1", "--s", "0.5", "--p", "2"});
  CHECK(parse_csv(r.out)[1][3] == std::to_string(kDefaultGridM));
}

TEST_CASE("sweep command") {
  const auto r = run({"sweep", "product-shift", "--d", "1,2,4,8", "--s", "1", "--p", "1"});
  CHECK(r.code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 5);
  const double base = std::stod(rows[1][3]);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(std::stod(rows[i][3]) / std::stod(rows[i][0]) == doctest::Approx(base).epsilon(1e-3));
  }
  CHECK(run({"sweep", "product-shift", "--d", "1,2", "--d2", "1,2"}).code == 2);
  CHECK(run({"sweep", "product-shift"}).code == 2);
  CHECK(run({"sweep", "nope", "--d", "1,2"}).code == 2);
}

TEST_CASE("pair command") {
  const auto r = run({"pair", "zigzag", "--d1", "1", "--d2", "0", "--grid", "64"});
  CHECK(r.code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 65);
  CHECK(rows[0] == std::vector<std::string>{"theta", "f_re", "f_im", "g_re", "g_im"});
  CHECK(run({"pair", "zigzag", "--d1", "1"}).code == 2);
}

TEST_CASE("optimize command") {
  const auto trace = temp_path("trace.csv");
  const auto r = run({"optimize", "--from", "power:d=0", "--to-class", "1", "--s", "1", "--p", "2", "--modes", "4",
                      "--restarts", "2", "--iterations", "100", "--grid", "256", "--trace", trace.string()});
  CHECK(r.code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0][4] == "optimizer_value");
  const double target = w1p_class_distance(0, 1, 2.0);
  CHECK(std::stod(rows[1][4]) >= target * (1 - 1e-3));
  CHECK(std::stod(rows[1][4]) < target * 1.3);
  std::ifstream in(trace);
  std::string header;
  std::getline(in, header);
  CHECK(header == "restart,iteration,value");
  std::filesystem::remove(trace);
  CHECK(run({"optimize", "--from", "power:d=0", "--to-class", "1", "--mode", "both"}).code == 2);
  CHECK(run({"optimize", "--from", "power:d=0", "--to-class", "1", "--s", "0.3", "--p", "2"}).code == 2);
}

TEST_CASE("experiment command") {
  auto r = run({"experiment", "w11-zigzag", "--d1", "1", "--d2", "0"});
  CHECK(r.code == 0);
  auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(std::stod(rows[1][2]) == doctest::Approx(4.0).epsilon(1e-3));
  CHECK(r.err.find("PASS") != std::string::npos);

  r = run({"experiment", "w11-zigzag", "--d1=2", "--d2=-1"});
  CHECK(r.code == 0);

  r = run({"experiment", "s2-energy", "--d", "2"});
  CHECK(r.code == 0);
  CHECK(std::stod(parse_csv(r.out)[1][2]) == doctest::Approx(16.0 * kPi).epsilon(1e-2));

  r = run({"experiment", "eps-bump-critical", "--p", "2", "--eps", "1e-2,1e-3,1e-4"});
  CHECK(r.code == 0);

  // Increasing eps makes the norm column increase, so the check fails.
  r = run({"experiment", "eps-bump-critical", "--p", "2", "--eps", "1e-3,1e-2"});
  CHECK(r.code == 1);
  CHECK(r.err.find("FAIL") != std::string::npos);

  CHECK(run({"experiment", "nope"}).code == 2);
  CHECK(run({"experiment", "w11-zigzag", "--bogus", "1"}).code == 2);
  CHECK(run({"experiment", "w11-zigzag", "--d1", "x"}).code == 2);
  CHECK(run({"experiment", "w11-zigzag", "--d1"}).code == 2);
  CHECK(run({"experiment", "all", "--d1", "1"}).code == 2);
  CHECK(run({"experiment", "w11-zigzag", "--format", "json"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("experiment registry") {
  const std::vector<std::string> expected = {
      "w11-zigzag",  "w1p-formula",   "dist-w11-hausdorff", "h-half-blaschke",       "eps-bump-critical",
      "capacity-decay", "s2-energy",  "s2-vo1",             "attainment",            "oscillator-lb",
      "multibump-scaling", "product-shift-scaling", "degree-stability"};
  REQUIRE(experiment_registry().size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(experiment_registry()[i].name == expected[i]);
    CHECK_FALSE(experiment_registry()[i].description.empty());
  }
  const auto r = run({"experiment", "--list"});
  CHECK(r.code == 0);
  CHECK(parse_csv(r.out).size() == expected.size() + 1);
}

TEST_CASE("CSV output is byte stable") {
  const auto a = temp_path("a.csv"), b = temp_path("b.csv");
  for (const auto& path : {a, b}) {
    CHECK(run({"experiment", "multibump-scaling", "--output", path.string()}).code == 0);
  }
  auto slurp = [](const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  const std::string x = slurp(a), y = slurp(b);
  CHECK(!x.empty());
  CHECK(x == y);
  CHECK(x.find('\r') == std::string::npos);
  CHECK(x.back() == '\n');
  CHECK(x.rfind("d,h_half_sq,per_degree\n", 0) == 0);
  const auto t = run({"experiment", "multibump-scaling", "--format", "tsv"});
  CHECK(t.out.rfind("d\th_half_sq\tper_degree\n", 0) == 0);
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}
