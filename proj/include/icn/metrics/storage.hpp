#ifndef ICN_METRICS_STORAGE_HPP
#define ICN_METRICS_STORAGE_HPP

#include "icn/metrics/metrics.hpp"

namespace icn::metrics {

/** \brief PIT storage cost parameters.
 *
 *  An NDN/CCN entry stores the name (intBytes) plus one nonce per neighbor; a SIFAH
 *  entry stores the name plus one hop count.
 */
struct StorageParams
{
  double intBytes = 32;
  unsigned idBits = 32;
  unsigned mhBits = 8;
  unsigned neighbors = 4;
};

double
bytesPerEntry(sim::StrategyKind strategy, const StorageParams& params);

/// Bytes needed for \p avgEntries PIT entries.
double
storageEstimate(sim::StrategyKind strategy, double avgEntries, const StorageParams& params);

/// Uses the report's average PIT size (0 if undefined).
double
storageEstimate(sim::StrategyKind strategy, const MetricsReport& report, const StorageParams& params);

/// NDN minus SIFAH bytes for \p avgEntries entries.
double
storageSavings(double avgEntries, const StorageParams& params);

/// Extra FIB bytes for storing one hop count per next hop.
double
fibOverhead(unsigned mhBits, std::size_t fibEntries, unsigned nextHopsPerEntry);

} // namespace icn::metrics

#endif // ICN_METRICS_STORAGE_HPP
