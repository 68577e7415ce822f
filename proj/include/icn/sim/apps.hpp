#ifndef ICN_SIM_APPS_HPP
#define ICN_SIM_APPS_HPP

#include "icn/sim/config.hpp"
#include "icn/sim/trace.hpp"

#include <map>
#include <random>

namespace icn::sim {

struct ConsumerOutput
{
  struct Timeout
  {
    SimTime at;
    Name name;
    std::uint64_t emission;
  };

  /// Interests handed to the local router, in order.
  std::vector<Interest> interests;
  std::vector<TraceRecord> records;
  std::optional<SimTime> nextTick;
  std::vector<std::pair<SimTime, Name>> retransmits;
  std::vector<Timeout> timeouts;
};

/** \brief Constant-rate consumer application attached to a router's face 0.
 *
 *  Each tick requests the next name /<prefix>/seq/<n> of a prefix chosen by smooth
 *  weighted round-robin. A request ends with an NDO, a NACK, or a local timeout;
 *  NACKs and timeouts are retransmitted up to maxRetx times with a fresh nonce
 *  (CCN/NDN) or hop count 255 (SIFAH).
 */
class ConsumerApp
{
public:
  ConsumerApp(std::string node, ConsumerSpec spec, StrategyKind strategy, SimTime start,
              Duration timeout, SimTime stop, std::uint64_t seed);

  static Duration
  periodFor(double rate);

  SimTime
  firstTick() const noexcept
  {
    return m_start;
  }

  Duration
  period() const noexcept
  {
    return m_period;
  }

  ConsumerOutput
  onTick(SimTime now);

  ConsumerOutput
  onData(const NdoMessage& ndo, SimTime now);

  ConsumerOutput
  onNack(const Nack& nack, SimTime now);

  ConsumerOutput
  onTimeout(const Name& name, std::uint64_t emission, SimTime now);

  ConsumerOutput
  onRetransmit(const Name& name, SimTime now);

  std::size_t
  pendingCount() const noexcept
  {
    return m_pending.size();
  }

  std::uint64_t
  generated() const noexcept
  {
    return m_generated;
  }

private:
  struct Pending
  {
    SimTime firstSent;
    unsigned retx = 0;
    std::uint64_t emission = 0;
    bool awaiting = true;
  };

  std::size_t
  choosePrefix();

  void
  emit(const Name& name, Pending& pending, SimTime now, ConsumerOutput& out);

  void
  close(const Name& name, std::string_view outcome, SimTime now, ConsumerOutput& out);

  void
  retryOrClose(const Name& name, std::string_view outcome, SimTime now, ConsumerOutput& out);

  TraceRecord
  record(SimTime now, std::string kind, const Name& name, std::string detail) const;

private:
  std::string m_node;
  ConsumerSpec m_spec;
  StrategyKind m_strategy;
  SimTime m_start;
  Duration m_timeout;
  SimTime m_stop;
  Duration m_period;
  std::mt19937 m_nonceGen;

  std::vector<double> m_credit;
  std::vector<std::uint64_t> m_sequence;
  std::uint64_t m_generated = 0;
  std::uint64_t m_emissions = 0;
  std::map<Name, Pending> m_pending;
};

/// Deterministic payload of \p size bytes for \p name.
std::string
makePayload(const Name& name, std::size_t size);

/** \brief A producer's reply to an Interest arriving on some face.
 *
 *  Matching names get an NDO (echoing the nonce under CCN/NDN). Other names get
 *  Nack(NoData) under NDN, Nack(NoRoute) under SIFAH and no reply under CCN.
 */
std::optional<Message>
producerOnInterest(const ProducerSpec& spec, StrategyKind strategy, const Interest& interest);

} // namespace icn::sim

#endif // ICN_SIM_APPS_HPP
