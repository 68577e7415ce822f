#ifndef ICN_METRICS_METRICS_HPP
#define ICN_METRICS_METRICS_HPP

#include "icn/sim/config.hpp"
#include "icn/sim/trace.hpp"

#include <map>

namespace icn::metrics {

struct RouterMetrics
{
  std::string node;
  std::uint64_t pendingSamples = 0;
  std::optional<double> avgPendingMs;
  std::optional<double> avgPitSize;
  std::size_t maxPitSize = 0;
};

struct ConsumerMetrics
{
  std::string node;
  std::uint64_t requests = 0;  ///< distinct names requested
  std::uint64_t emissions = 0; ///< including retransmissions
  std::uint64_t data = 0;
  std::uint64_t nacks = 0;
  std::uint64_t timeouts = 0;
  std::uint64_t rttSamples = 0;
  std::optional<double> avgRttMs;
  /// 10 ms bins: lower bound in ms -> sample count.
  std::map<std::int64_t, std::uint64_t> rttHistogram;
};

struct PitSample
{
  SimTime time;
  std::string node;
  std::size_t entries;
};

/** \brief Measurements folded from one run's trace.
 *
 *  Pending time is PIT deletion minus creation. PIT size is sampled at a fixed
 *  interval over the routers that received at least one Interest. RTT runs from the
 *  first emission of a name to the NDO or NACK that ends the request.
 */
struct MetricsReport
{
  bool partial = false;

  std::optional<double> avgPendingMs;
  std::uint64_t pendingSamples = 0;
  std::optional<double> avgPitSize;
  std::size_t maxPitSize = 0;
  std::vector<PitSample> pitSeries;
  std::vector<RouterMetrics> routers;

  std::optional<double> avgRttMs;
  std::uint64_t rttSamples = 0;
  std::vector<ConsumerMetrics> consumers;

  std::map<NackCode, std::uint64_t> nacksSent;
  std::map<NackCode, std::uint64_t> nacksToConsumers;
  std::uint64_t pitCreated = 0;
  std::uint64_t expired = 0;
  std::uint64_t aggregations = 0;
  std::uint64_t csHits = 0;
  std::uint64_t liveAtEnd = 0;
  std::uint64_t undetectedLoops = 0;
  std::uint64_t duplicateDrops = 0;
};

MetricsReport
computeMetrics(const sim::TraceLog& trace, const sim::RunConfig& config);

} // namespace icn::metrics

#endif // ICN_METRICS_METRICS_HPP
