#ifndef ICN_METRICS_CSV_HPP
#define ICN_METRICS_CSV_HPP

#include "icn/metrics/metrics.hpp"
#include "icn/metrics/storage.hpp"

#include <iosfwd>

namespace icn::metrics {

struct RunRow
{
  std::string scenario;
  sim::StrategyKind strategy;
  std::optional<double> loopFraction;
  std::uint64_t seed = 0;
  MetricsReport report;
};

/** \brief Summary CSV columns, in order.
 *
 *  scenario, strategy, loop_fraction, seed, routers_in_flows, requests, emissions,
 *  avg_pending_ms, pending_samples, avg_pit_size, max_pit_size, avg_rtt_ms,
 *  rtt_samples, data, timeouts, then one nack_<code> column per NACK code (sent
 *  anywhere), expired, aggregations, cs_hits, live_at_end, undetected_loops,
 *  duplicate_drops, pit_storage_bytes, partial. Undefined averages are empty.
 */
std::vector<std::string>
summaryColumns();

void
writeSummaryCsv(std::ostream& os, const std::vector<RunRow>& rows,
                const StorageParams& storage = StorageParams{});

/// Long format: scenario, strategy, loop_fraction, series, node, time_ms, value.
void
writeSeriesCsv(std::ostream& os, const std::vector<RunRow>& rows);

std::string
formatNumber(double value);

} // namespace icn::metrics

#endif // ICN_METRICS_CSV_HPP
