#ifndef ICN_CLI_DRIVER_HPP
#define ICN_CLI_DRIVER_HPP

#include "icn/cli/scenario.hpp"
#include "icn/metrics/csv.hpp"

#include <filesystem>
#include <iosfwd>

namespace icn::cli {

struct DriverOptions
{
  std::filesystem::path scenario;
  std::optional<sim::StrategyKind> strategy;
  std::optional<std::uint64_t> seed;
  std::optional<Duration> duration;
  std::optional<Duration> mil;
  std::optional<double> loopFraction;
  std::filesystem::path outDir = ".";
  bool writeTrace = false;
  bool checkOnly = false;
  unsigned jobs = 0; ///< 0 = hardware concurrency
};

struct RunJob
{
  sim::StrategyKind strategy;
  std::optional<double> loopFraction;
};

struct JobResult
{
  metrics::RunRow row;
  std::string trace;
};

/// Applies the command-line overrides to a loaded scenario.
Scenario
applyOverrides(Scenario scenario, const DriverOptions& options);

/// Runs \p jobs on worker threads; results keep the order of \p jobs.
std::vector<JobResult>
executeJobs(const Scenario& scenario, const std::vector<RunJob>& jobs, bool keepTrace,
            unsigned threads = 0);

/** \brief `run`: every scenario strategy (or --strategy) at the scenario weights
 *         (or --loop-fraction). Writes <name>-summary.csv, <name>-series.csv and,
 *         with --trace, one <name>-<strategy>[-f<fraction>].trace per run.
 *  \return process exit status
 */
int
runCommand(const DriverOptions& options, std::ostream& out, std::ostream& err);

/// `sweep`: the cross product of strategies and [sweep] fractions.
int
sweepCommand(const DriverOptions& options, std::ostream& out, std::ostream& err);

std::string
traceFileName(const std::string& scenario, const RunJob& job);

} // namespace icn::cli

#endif // ICN_CLI_DRIVER_HPP
