#ifndef ICN_SIM_TRACE_ANALYSIS_HPP
#define ICN_SIM_TRACE_ANALYSIS_HPP

#include "icn/sim/trace.hpp"

namespace icn::sim {

/** \brief A cycle of routers each waiting on the next for the same name.
 *
 *  Router v waits on w when v forwarded its Interest to w (w is an out-face of
 *  v's PIT entry) and w recorded v as a requester (v is an in-face of w's entry).
 *  Such a cycle can only end by PIT expiry; no NDO or NACK can break it.
 */
struct InterestLoop
{
  SimTime time;
  std::string name;
  std::vector<std::string> cycle;
};

struct HopViolation
{
  SimTime time;
  std::string node;
  std::string name;
  int received = -1; ///< -1 when no Interest for the name arrived in the same dispatch
  int sent = 0;
};

struct LivenessViolation
{
  std::string node;
  std::string name;
  std::string problem;
};

/// Wait-for cycles in the order they formed.
std::vector<InterestLoop>
findUndetectedLoops(const TraceLog& trace);

/// Forwarded hop counts must be strictly below the hop count of the Interest that triggered them.
std::vector<HopViolation>
checkHopMonotonicity(const TraceLog& trace);

/// Every consumer emission must get exactly one NDO or NACK, and no local timeout may fire.
std::vector<LivenessViolation>
checkLiveness(const TraceLog& trace);

struct LoopAccounting
{
  std::uint64_t undetected = 0;     ///< wait-for cycles
  std::uint64_t loopNacks = 0;      ///< Nack(Loop) emissions
  std::uint64_t duplicateDrops = 0; ///< Interests dropped as duplicates
};

LoopAccounting
accountLoops(const TraceLog& trace);

} // namespace icn::sim

#endif // ICN_SIM_TRACE_ANALYSIS_HPP
