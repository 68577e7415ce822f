#include "icn/metrics/storage.hpp"

namespace icn::metrics {

double
bytesPerEntry(sim::StrategyKind strategy, const StorageParams& params)
{
  if (strategy == sim::StrategyKind::Sifah)
    return params.intBytes + params.mhBits / 8.0;
  return params.intBytes + params.idBits / 8.0 * params.neighbors;
}

double
storageEstimate(sim::StrategyKind strategy, double avgEntries, const StorageParams& params)
{
  return bytesPerEntry(strategy, params) * avgEntries;
}

double
storageEstimate(sim::StrategyKind strategy, const MetricsReport& report, const StorageParams& params)
{
  return storageEstimate(strategy, report.avgPitSize.value_or(0.0), params);
}

double
storageSavings(double avgEntries, const StorageParams& params)
{
  return storageEstimate(sim::StrategyKind::Ndn, avgEntries, params) -
         storageEstimate(sim::StrategyKind::Sifah, avgEntries, params);
}

double
fibOverhead(unsigned mhBits, std::size_t fibEntries, unsigned nextHopsPerEntry)
{
  return mhBits / 8.0 * static_cast<double>(fibEntries) * nextHopsPerEntry;
}

} // namespace icn::metrics
