#ifndef ICN_CLI_SCENARIO_HPP
#define ICN_CLI_SCENARIO_HPP

#include "icn/sim/config.hpp"

#include <filesystem>

namespace icn::cli {

/** \brief A scenario file: one topology and traffic setup, the strategies to run it
 *         under and an optional loop-fraction sweep.
 *
 *  Text format, one section per `[header]`, `#` starts a comment:
 *
 *      [run]        key = value: strategies, duration, seed, mil, phase, retx_interval,
 *                   cs_capacity, verification, pit_sample_interval
 *      [nodes]      <name> router|consumer|producer
 *      [links]      <a> <b> [delay=10ms] [loss=0]
 *      [fib]        auto <prefix>
 *                   <node> <prefix> <neighbor> hop=<h> rank=<r>
 *      [consumers]  <node> prefixes=<p>[:<w>],... [rate=] [start=] [stop=] [limit=]
 *                   [max_retx=] [retx_backoff=] [timeout=]
 *      [producers]  <node> prefixes=<p>,... [payload=16]
 *      [failures]   <a> <b> at=<time>
 *      [sweep]      loop_prefix = <prefix>
 *                   fractions = <f> <f> ...
 *
 *  Durations take an ns, us, ms or s suffix.
 */
struct Scenario
{
  std::string name;
  std::vector<sim::StrategyKind> strategies{sim::StrategyKind::Ccn, sim::StrategyKind::Ndn,
                                            sim::StrategyKind::Sifah};
  sim::RunConfig config;
  std::optional<Prefix> loopPrefix;
  std::vector<double> fractions;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

class ParseError : public std::runtime_error
{
public:
  ParseError(std::size_t line, std::string field, const std::string& message);

  std::size_t
  line() const noexcept
  {
    return m_line;
  }

  const std::string&
  field() const noexcept
  {
    return m_field;
  }

private:
  std::size_t m_line;
  std::string m_field;
};

Scenario
parseScenario(std::string_view text, std::string name = "scenario");

/// The scenario name is the file stem.
Scenario
loadScenario(const std::filesystem::path& path);

std::string
renderScenario(const Scenario& scenario);

/** \brief Config for one run. With \p loopFraction set, every consumer requesting the
 *         loop prefix gets weight f on it and the rest of its weights scaled to 1 - f.
 *  \throw sim::ConfigError if the fraction is out of range or no loop prefix is set
 */
sim::RunConfig
makeRunConfig(const Scenario& scenario, sim::StrategyKind strategy,
              std::optional<double> loopFraction = std::nullopt);

/// Parses "250ms", "10s", "500us", "42ns"; throws std::invalid_argument.
Duration
parseDuration(std::string_view text);

std::string
formatDuration(Duration d);

/// Shortest text that parses back to exactly \p value.
std::string
formatDouble(double value);

double
parseDouble(std::string_view text);

} // namespace icn::cli

#endif // ICN_CLI_SCENARIO_HPP
