#ifndef ICN_SIM_CONFIG_HPP
#define ICN_SIM_CONFIG_HPP

#include "icn/core/message.hpp"
#include "icn/core/name.hpp"
#include "icn/core/types.hpp"
#include "icn/fw/sifah-strategy.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace icn::sim {

using namespace std::chrono_literals;

enum class StrategyKind {
  Ccn,
  Ndn,
  Sifah,
};

std::string_view
toString(StrategyKind kind);

StrategyKind
parseStrategyKind(std::string_view text);

/** \brief Consumer nodes are routers hosting a local consumer application on face 0.
 *  Producer nodes answer Interests directly and keep no forwarding state.
 */
enum class NodeRole {
  Router,
  Consumer,
  Producer,
};

std::string_view
toString(NodeRole role);

NodeRole
parseNodeRole(std::string_view text);

struct NodeSpec
{
  std::string name;
  NodeRole role = NodeRole::Router;

  friend bool operator==(const NodeSpec&, const NodeSpec&) = default;
};

/// Bidirectional point-to-point link with pure propagation delay.
struct LinkSpec
{
  std::string a;
  std::string b;
  Duration delay = 10ms;
  double lossRate = 0.0;

  friend bool operator==(const LinkSpec&, const LinkSpec&) = default;
};

struct FibRow
{
  std::string node;
  Prefix prefix;
  std::string neighbor;
  HopCount hopCount;
  std::uint32_t rank = 1;

  friend bool operator==(const FibRow&, const FibRow&) = default;
};

struct WeightedPrefix
{
  Prefix prefix;
  double weight = 1.0;

  friend bool operator==(const WeightedPrefix&, const WeightedPrefix&) = default;
};

struct ConsumerSpec
{
  std::string node;
  std::vector<WeightedPrefix> prefixes;
  /// Interests per second.
  double rate = 1.0;
  /// First Interest time; defaults to (consumer index) * RunConfig::phase.
  std::optional<Duration> start;
  /// No Interests are generated at or after this time; defaults to the run duration.
  std::optional<Duration> stop;
  /// Maximum number of distinct Interests to generate.
  std::optional<std::uint64_t> limit;
  unsigned maxRetx = 0;
  Duration retxBackoff{0};
  /// Local timeout per emission; defaults to 2 * MIL.
  std::optional<Duration> timeout;

  friend bool operator==(const ConsumerSpec&, const ConsumerSpec&) = default;
};

struct ProducerSpec
{
  std::string node;
  std::vector<Prefix> prefixes;
  std::size_t payloadSize = 16;

  friend bool operator==(const ProducerSpec&, const ProducerSpec&) = default;
};

struct FailureSpec
{
  std::string a;
  std::string b;
  SimTime at{0};

  friend bool operator==(const FailureSpec&, const FailureSpec&) = default;
};

/** \brief Everything that determines one simulation run.
 *
 *  The same RunConfig always yields a byte-identical trace.
 */
struct RunConfig
{
  StrategyKind strategy = StrategyKind::Sifah;
  Duration duration = 10s;
  std::uint64_t seed = 1;
  Duration mil = 1000ms;
  /// Start offset between consecutive consumers.
  Duration phase = 1ms;
  /// NDN/CCN re-forwarding delay for aggregated Interests; unset means the PIT lifetime.
  std::optional<Duration> retxInterval;
  std::size_t csCapacity = 0;
  fw::sifah::Verification verification = fw::sifah::Verification::AlwaysValid;
  Duration pitSampleInterval = 100ms;

  std::vector<NodeSpec> nodes;
  std::vector<LinkSpec> links;
  /// Prefixes whose FIB rows are derived from shortest paths to the producers advertising them.
  std::vector<Prefix> autoFib;
  /// Explicit rows; they replace derived rows for the same (node, prefix).
  std::vector<FibRow> fib;
  std::vector<ConsumerSpec> consumers;
  std::vector<ProducerSpec> producers;
  std::vector<FailureSpec> failures;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

class ConfigError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Throws ConfigError naming the offending element.
void
validate(const RunConfig& config);

/// Derived plus explicit FIB rows, grouped by node and prefix in a deterministic order.
std::vector<FibRow>
resolveFib(const RunConfig& config);

Duration
consumerStart(const RunConfig& config, std::size_t consumerIndex);

Duration
consumerTimeout(const RunConfig& config, const ConsumerSpec& consumer);

const NodeSpec*
findNode(const RunConfig& config, std::string_view name);

} // namespace icn::sim

#endif // ICN_SIM_CONFIG_HPP
