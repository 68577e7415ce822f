#ifndef ICN_SIM_SIMULATOR_HPP
#define ICN_SIM_SIMULATOR_HPP

#include "icn/metrics/metrics.hpp"
#include "icn/sim/config.hpp"
#include "icn/sim/trace.hpp"

namespace icn::sim {

/** \brief Runs the discrete-event simulation described by \p config.
 *
 *  Events dispatch in (time, scheduling order) until config.duration. Neighbor faces
 *  of a node are numbered from 1 in link declaration order; face 0 is the local
 *  consumer application. The same config always yields a byte-identical trace.
 *  \throw ConfigError if the config is invalid
 */
TraceLog
simulate(const RunConfig& config);

struct RunResult
{
  TraceLog trace;
  metrics::MetricsReport metrics;
};

RunResult
run(const RunConfig& config);

} // namespace icn::sim

#endif // ICN_SIM_SIMULATOR_HPP
