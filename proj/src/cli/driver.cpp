#include "icn/cli/driver.hpp"
#include "icn/sim/simulator.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

namespace icn::cli {

Scenario
applyOverrides(Scenario scenario, const DriverOptions& options)
{
  if (options.strategy)
    scenario.strategies = {*options.strategy};
  if (options.seed)
    scenario.config.seed = *options.seed;
  if (options.duration)
    scenario.config.duration = *options.duration;
  if (options.mil)
    scenario.config.mil = *options.mil;
  scenario.config.strategy = scenario.strategies.front();
  return scenario;
}

std::string
traceFileName(const std::string& scenario, const RunJob& job)
{
  std::string name = scenario + "-" + std::string(sim::toString(job.strategy));
  if (job.loopFraction)
    name += "-f" + formatDouble(*job.loopFraction);
  return name + ".trace";
}

std::vector<JobResult>
executeJobs(const Scenario& scenario, const std::vector<RunJob>& jobs, bool keepTrace, unsigned threads)
{
  // build every config up front so config errors surface before any run starts
  std::vector<sim::RunConfig> configs;
  for (const auto& job : jobs) {
    configs.push_back(makeRunConfig(scenario, job.strategy, job.loopFraction));
    sim::validate(configs.back());
  }

  std::vector<JobResult> results(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        auto result = sim::run(configs[i]);
        results[i].row = metrics::RunRow{scenario.name, jobs[i].strategy, jobs[i].loopFraction,
                                         configs[i].seed, std::move(result.metrics)};
        if (keepTrace)
          results[i].trace = result.trace.str();
      }
      catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  if (threads == 0)
    threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(jobs.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t)
    pool.emplace_back(worker);
  worker();
  for (auto& t : pool)
    t.join();

  for (auto& e : errors) {
    if (e)
      std::rethrow_exception(e);
  }
  return results;
}

static void
writeFile(const std::filesystem::path& path, const std::string& content)
{
  std::ofstream os(path, std::ios::binary);
  if (!os)
    throw std::runtime_error("cannot write '" + path.string() + "'");
  os << content;
}

static void
printSummary(std::ostream& out, const std::vector<JobResult>& results)
{
  for (const auto& r : results) {
    const auto& m = r.row.report;
    out << r.row.scenario << ' ' << sim::toString(r.row.strategy);
    if (r.row.loopFraction)
      out << " f=" << formatDouble(*r.row.loopFraction);
    out << ": pending=" << (m.avgPendingMs ? metrics::formatNumber(*m.avgPendingMs) + "ms" : "n/a")
        << " pit=" << (m.avgPitSize ? metrics::formatNumber(*m.avgPitSize) : "n/a")
        << " rtt=" << (m.avgRttMs ? metrics::formatNumber(*m.avgRttMs) + "ms" : "n/a")
        << " loops=" << m.undetectedLoops << '\n';
  }
}

static int
execute(const DriverOptions& options, bool isSweep, std::ostream& out, std::ostream& err)
{
  try {
    Scenario scenario = applyOverrides(loadScenario(options.scenario), options);

    std::vector<RunJob> jobs;
    if (isSweep) {
      if (scenario.fractions.empty()) {
        err << "error: scenario '" << scenario.name << "' has no [sweep] section\n";
        return 2;
      }
      for (auto s : scenario.strategies) {
        for (double f : scenario.fractions)
          jobs.push_back({s, f});
      }
    }
    else {
      for (auto s : scenario.strategies)
        jobs.push_back({s, options.loopFraction});
    }

    if (options.checkOnly) {
      for (const auto& job : jobs)
        sim::validate(makeRunConfig(scenario, job.strategy, job.loopFraction));
      out << scenario.name << ": ok (" << jobs.size() << " run" << (jobs.size() == 1 ? "" : "s") << ")\n";
      return 0;
    }

    auto results = executeJobs(scenario, jobs, options.writeTrace, options.jobs);

    std::filesystem::create_directories(options.outDir);
    std::vector<metrics::RunRow> rows;
    for (const auto& r : results)
      rows.push_back(r.row);

    std::ostringstream summary;
    metrics::writeSummaryCsv(summary, rows);
    writeFile(options.outDir / (scenario.name + "-summary.csv"), summary.str());
    std::ostringstream series;
    metrics::writeSeriesCsv(series, rows);
    writeFile(options.outDir / (scenario.name + "-series.csv"), series.str());
    if (options.writeTrace) {
      for (std::size_t i = 0; i < jobs.size(); ++i)
        writeFile(options.outDir / traceFileName(scenario.name, jobs[i]), results[i].trace);
    }

    printSummary(out, results);
    return 0;
  }
  catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
  }
  catch (const sim::ConfigError& e) {
    err << "error: invalid configuration: " << e.what() << '\n';
  }
  catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return 1;
}

int
runCommand(const DriverOptions& options, std::ostream& out, std::ostream& err)
{
  return execute(options, false, out, err);
}

int
sweepCommand(const DriverOptions& options, std::ostream& out, std::ostream& err)
{
  if (options.loopFraction) {
    err << "error: --loop-fraction does not apply to sweep\n";
    return 2;
  }
  return execute(options, true, out, err);
}

} // namespace icn::cli
