#ifndef ICN_TESTS_SUPPORT_RANDOM_CONFIG_HPP
#define ICN_TESTS_SUPPORT_RANDOM_CONFIG_HPP

#include "icn/sim/config.hpp"

namespace icn::test {

enum class FibStyle {
  Consistent,   ///< shortest-path hop counts
  Inconsistent, ///< random next hops, hop counts and ranks
  Mixed,        ///< shortest paths with some stale rows
};

struct RandomConfigParams
{
  sim::StrategyKind strategy = sim::StrategyKind::Sifah;
  std::size_t maxNodes = 12;
  double maxLoss = 0.1;
  bool allowFailures = true;
  /// Picked from the seed when unset.
  std::optional<FibStyle> fibStyle;
};

/** \brief A valid random run: connected topology, one or two producers, one to three
 *         consumers sharing a prefix with jittered start times.
 *
 *  Consumers stop early enough that every request can finish before the run ends.
 */
sim::RunConfig
makeRandomConfig(std::uint64_t seed, const RandomConfigParams& params);

} // namespace icn::test

#endif // ICN_TESTS_SUPPORT_RANDOM_CONFIG_HPP
