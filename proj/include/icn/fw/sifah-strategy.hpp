#ifndef ICN_FW_SIFAH_STRATEGY_HPP
#define ICN_FW_SIFAH_STRATEGY_HPP

#include "icn/fw/actions.hpp"
#include "icn/table/cs.hpp"
#include "icn/table/fib.hpp"
#include "icn/table/pit-entry.hpp"
#include "icn/table/pit.hpp"

#include <optional>
#include <string_view>

/** \brief Hop-count based Interest forwarding and aggregation.
 *
 *  A router accepts an Interest carrying hop count h from a neighbor only if
 *   - it has no PIT entry for the name and some available FIB next hop v has
 *     h > hop(v) (the Interest is forwarded to the best-ranked such v), or
 *   - it has a PIT entry and h is greater than the hop count it stated when it
 *     forwarded its own Interest (the Interest is aggregated).
 *  Any other Interest is answered with Nack(Loop). Every PIT entry ends in an NDO
 *  or a NACK towards each requester: expiry and link failures emit NACKs too.
 */
namespace icn::fw::sifah {

enum class Verification {
  AlwaysValid,
  AlwaysInvalid,
  HashCheck, ///< signature must equal computeSignature(name, payload)
};

std::string_view
toString(Verification v);

Verification
parseVerification(std::string_view text);

struct Options
{
  Duration mil = std::chrono::milliseconds(1000);
  Verification verification = Verification::AlwaysValid;
};

struct RouterState
{
  Fib fib;
  Pit<SifahPitEntry> pit;
  ContentStore cs;
  Options options;
};

/// New-Interest admission: the best-ranked available face v with \p incoming > hop(v).
std::optional<FaceId>
admitNew(const FibEntry& fibEntry, HopCount incoming);

/// Aggregation admission: \p incoming strictly exceeds the entry's stated hop count.
bool
admitAggregate(const SifahPitEntry& entry, HopCount incoming);

StrategyActions
processInterest(RouterState& state, const Interest& interest, FaceId from, SimTime now);

/** \brief Creates the PIT entry and forwards the Interest to the first next hop
 *         (by rank) that admits it; sends Nack(NoRoute) to \p from if none does.
 *  \pre a FIB entry matches the Interest name and no PIT entry exists
 */
void
forward(RouterState& state, const Interest& interest, FaceId from, SimTime now,
        StrategyActions& actions);

StrategyActions
processData(RouterState& state, const NdoMessage& ndo, FaceId from, SimTime now);

StrategyActions
processNack(RouterState& state, const Nack& nack, FaceId from, SimTime now);

/// Sends Nack(InterestExpired) to every requester and deletes the entry; stale calls are no-ops.
StrategyActions
expirePitEntry(RouterState& state, const Name& name, SimTime now);

/// Removes \p face from every entry; entries left without requesters or next hops are closed.
StrategyActions
processLinkFailure(RouterState& state, FaceId face, SimTime now);

bool
verifySignature(Verification mode, const NdoMessage& ndo);

} // namespace icn::fw::sifah

#endif // ICN_FW_SIFAH_STRATEGY_HPP
