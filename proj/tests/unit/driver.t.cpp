#include "icn/cli/driver.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace icn;
using namespace icn::cli;
using namespace std::chrono_literals;

namespace fs = std::filesystem;

namespace {

const fs::path GRID = fs::path(ICN_SCENARIO_DIR) / "grid16.scn";

struct TempDir
{
  fs::path path;

  TempDir()
    : path(fs::temp_directory_path() / ("icn-driver-" + std::to_string(std::random_device{}())))
  {
    fs::remove_all(path);
    fs::create_directories(path);
  }

  ~TempDir()
  {
    fs::remove_all(path);
  }
};

std::string
slurp(const fs::path& p)
{
  std::ifstream is(p);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

std::vector<std::string>
lines(const std::string& text)
{
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);)
    out.push_back(line);
  return out;
}

std::string
column(const std::string& csv, std::size_t row, std::string_view name)
{
  auto rows = lines(csv);
  auto split = [] (const std::string& line) {
    std::vector<std::string> cells(1);
    for (char c : line) {
      if (c == ',')
        cells.emplace_back();
      else
        cells.back() += c;
    }
    return cells;
  };
  auto header = split(rows.at(0));
  auto cells = split(rows.at(row + 1));
  auto it = std::find(header.begin(), header.end(), name);
  REQUIRE(it != header.end());
  return cells.at(it - header.begin());
}

} // namespace

TEST_SUITE("driver") {

TEST_CASE("a missing scenario file fails with a message")
{
  DriverOptions opt;
  opt.scenario = "/nonexistent/none.scn";
  std::ostringstream out, err;
  CHECK(runCommand(opt, out, err) != 0);
  CHECK_FALSE(err.str().empty());
}

TEST_CASE("a malformed scenario fails naming the line")
{
  TempDir dir;
  auto path = dir.path / "bad.scn";
  std::ofstream(path) << "[run]\nduration = soon\n";
  DriverOptions opt;
  opt.scenario = path;
  std::ostringstream out, err;
  CHECK(runCommand(opt, out, err) == 1);
  CHECK(err.str().find("line 2") != std::string::npos);
}

TEST_CASE("sweep rejects a fixed loop fraction")
{
  DriverOptions opt;
  opt.scenario = GRID;
  opt.loopFraction = 0.1;
  std::ostringstream out, err;
  CHECK(sweepCommand(opt, out, err) == 2);
}

TEST_CASE("check mode validates without running")
{
  TempDir dir;
  DriverOptions opt;
  opt.scenario = GRID;
  opt.outDir = dir.path;
  opt.checkOnly = true;
  std::ostringstream out, err;
  CHECK(sweepCommand(opt, out, err) == 0);
  CHECK(out.str() == "grid16: ok (15 runs)\n");
  CHECK_FALSE(fs::exists(dir.path / "grid16-summary.csv"));
}

TEST_CASE("the grid without loops gives equal pending time under all strategies")
{
  TempDir dir;
  DriverOptions opt;
  opt.scenario = GRID;
  opt.outDir = dir.path;
  opt.loopFraction = 0.0;
  opt.duration = 2s;
  std::ostringstream out, err;
  REQUIRE(runCommand(opt, out, err) == 0);

  std::string csv = slurp(dir.path / "grid16-summary.csv");
  REQUIRE(lines(csv).size() == 4);
  CHECK(column(csv, 0, "strategy") == "ccn");
  CHECK(column(csv, 1, "strategy") == "ndn");
  CHECK(column(csv, 2, "strategy") == "sifah");
  CHECK(column(csv, 0, "avg_pending_ms") == column(csv, 1, "avg_pending_ms"));
  CHECK(column(csv, 0, "avg_pending_ms") == column(csv, 2, "avg_pending_ms"));
  CHECK(column(csv, 0, "avg_pending_ms") != "");
  CHECK(fs::exists(dir.path / "grid16-series.csv"));
}

TEST_CASE("a sweep writes one row per strategy and fraction")
{
  TempDir dir;
  DriverOptions opt;
  opt.scenario = GRID;
  opt.outDir = dir.path;
  opt.duration = 1s;
  opt.writeTrace = true;
  std::ostringstream out, err;
  REQUIRE(sweepCommand(opt, out, err) == 0);
  std::string csv = slurp(dir.path / "grid16-summary.csv");
  CHECK(lines(csv).size() == 16);
  CHECK(column(csv, 6, "strategy") == "ndn");
  CHECK(column(csv, 6, "loop_fraction") == "0.1");
  CHECK(fs::exists(dir.path / "grid16-sifah-f0.5.trace"));
  CHECK(traceFileName("g", RunJob{sim::StrategyKind::Ndn, std::nullopt}) == "g-ndn.trace");
}

TEST_CASE("a one-fraction sweep equals a run at that fraction")
{
  TempDir dir;
  std::string text = slurp(GRID);
  text.replace(text.find("fractions = 0 0.1 0.2 0.5 1"), 27, "fractions = 0.2");
  fs::create_directories(dir.path / "sweep");
  std::ofstream(dir.path / "grid16.scn") << text;

  DriverOptions opt;
  opt.scenario = dir.path / "grid16.scn";
  opt.duration = 1s;
  opt.strategy = sim::StrategyKind::Ndn;
  opt.outDir = dir.path / "sweep";
  std::ostringstream out, err;
  REQUIRE(sweepCommand(opt, out, err) == 0);

  opt.outDir = dir.path / "run";
  opt.loopFraction = 0.2;
  REQUIRE(runCommand(opt, out, err) == 0);

  CHECK(slurp(dir.path / "sweep" / "grid16-summary.csv") == slurp(dir.path / "run" / "grid16-summary.csv"));
}

TEST_CASE("seed override reproduces identical output")
{
  TempDir dir;
  DriverOptions opt;
  opt.scenario = GRID;
  opt.duration = 1s;
  opt.seed = 99;
  opt.loopFraction = 0.5;
  std::ostringstream out, err;
  opt.outDir = dir.path / "a";
  REQUIRE(runCommand(opt, out, err) == 0);
  opt.outDir = dir.path / "b";
  opt.jobs = 1;
  REQUIRE(runCommand(opt, out, err) == 0);

  std::string a = slurp(dir.path / "a" / "grid16-summary.csv");
  CHECK(a == slurp(dir.path / "b" / "grid16-summary.csv"));
  CHECK(column(a, 0, "seed") == "99");
  CHECK(slurp(dir.path / "a" / "grid16-series.csv") == slurp(dir.path / "b" / "grid16-series.csv"));
}

} // TEST_SUITE
