#ifndef ICN_FW_NDN_STRATEGY_HPP
#define ICN_FW_NDN_STRATEGY_HPP

#include "icn/fw/actions.hpp"
#include "icn/table/cs.hpp"
#include "icn/table/fib.hpp"
#include "icn/table/pit-entry.hpp"
#include "icn/table/pit.hpp"

#include <optional>

/** \brief Nonce-based Interest processing and rank-ordered forwarding.
 *
 *  With nacksEnabled = false this is the original CCN behavior: identical control
 *  flow, every NACK emission suppressed.
 */
namespace icn::fw::ndn {

struct Options
{
  bool nacksEnabled = true;
  Duration mil = std::chrono::milliseconds(1000);
  /// Delay before an aggregated Interest may be forwarded again; nullopt means the PIT lifetime.
  std::optional<Duration> retxInterval;
};

struct RouterState
{
  Fib fib;
  Pit<NdnPitEntry> pit;
  ContentStore cs;
  Options options;
};

StrategyActions
processInterest(RouterState& state, const Interest& interest, FaceId from, SimTime now);

/** \brief Forwards the Interest recorded in tuple \p tupleIndex of \p entry.
 *
 *  Picks the first next hop by rank that is available and is neither an in-face nor
 *  an out-face of any tuple. On failure the entry is deleted and must not be used.
 *  \return true if the Interest was forwarded
 */
bool
forward(RouterState& state, NdnPitEntry& entry, std::size_t tupleIndex, SimTime now,
        StrategyActions& actions);

StrategyActions
processData(RouterState& state, const NdoMessage& ndo, FaceId from, SimTime now);

StrategyActions
processNack(RouterState& state, const Nack& nack, FaceId from, SimTime now);

/// Deletes the entry silently if its lifetime has run out; stale calls are no-ops.
StrategyActions
expirePitEntry(RouterState& state, const Name& name, SimTime now);

} // namespace icn::fw::ndn

#endif // ICN_FW_NDN_STRATEGY_HPP
