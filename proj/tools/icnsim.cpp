#include "icn/cli/driver.hpp"

#include <CLI11.hpp>

#include <iostream>

int
main(int argc, char** argv)
{
  using namespace icn;

  CLI::App app{"Interest forwarding simulator (CCN, NDN, SIFAH)"};
  app.require_subcommand(1);

  cli::DriverOptions options;
  std::string strategy;
  std::string duration;
  std::string mil;

  auto addCommon = [&] (CLI::App* cmd) {
    cmd->add_option("scenario", options.scenario, "Scenario file")->required();
    cmd->add_option("--strategy", strategy, "Run only this strategy (ccn, ndn, sifah)");
    cmd->add_option("--seed", options.seed, "Override the scenario seed");
    cmd->add_option("--duration", duration, "Override the run duration (e.g. 10s)");
    cmd->add_option("--mil", mil, "Override the PIT entry lifetime (e.g. 1000ms)");
    cmd->add_option("--out-dir", options.outDir, "Output directory for CSV and trace files");
    cmd->add_flag("--trace", options.writeTrace, "Write one trace log per run");
    cmd->add_flag("--check", options.checkOnly, "Validate the scenario and exit");
    cmd->add_option("-j,--jobs", options.jobs, "Worker threads (0 = all cores)");
  };

  auto* run = app.add_subcommand("run", "Run a scenario once per strategy");
  addCommon(run);
  run->add_option("--loop-fraction", options.loopFraction, "Share of Interests for the loop prefix")
    ->check(CLI::Range(0.0, 1.0));
  auto* sweep = app.add_subcommand("sweep", "Run strategies x loop fractions");
  addCommon(sweep);

  CLI11_PARSE(app, argc, argv);

  try {
    if (!strategy.empty())
      options.strategy = sim::parseStrategyKind(strategy);
    if (!duration.empty())
      options.duration = cli::parseDuration(duration);
    if (!mil.empty())
      options.mil = cli::parseDuration(mil);
  }
  catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  if (run->parsed())
    return cli::runCommand(options, std::cout, std::cerr);
  return cli::sweepCommand(options, std::cout, std::cerr);
}
