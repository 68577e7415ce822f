#include "icn/sim/apps.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace icn::sim {

ConsumerApp::ConsumerApp(std::string node, ConsumerSpec spec, StrategyKind strategy, SimTime start,
                         Duration timeout, SimTime stop, std::uint64_t seed)
  : m_node(std::move(node))
  , m_spec(std::move(spec))
  , m_strategy(strategy)
  , m_start(start)
  , m_timeout(timeout)
  , m_stop(stop)
  , m_period(periodFor(m_spec.rate))
  , m_nonceGen(static_cast<std::uint32_t>(seed ^ (seed >> 32)))
  , m_credit(m_spec.prefixes.size(), 0.0)
  , m_sequence(m_spec.prefixes.size(), 0)
{
  if (m_spec.prefixes.empty())
    throw std::invalid_argument("consumer " + m_node + " has no prefixes");
}

Duration
ConsumerApp::periodFor(double rate)
{
  if (!(rate > 0.0))
    throw std::invalid_argument("rate must be positive");
  return Duration(std::llround(1e9 / rate));
}

std::size_t
ConsumerApp::choosePrefix()
{
  double total = 0;
  std::size_t best = 0;
  for (std::size_t i = 0; i < m_credit.size(); ++i) {
    m_credit[i] += m_spec.prefixes[i].weight;
    total += m_spec.prefixes[i].weight;
    if (m_credit[i] > m_credit[best])
      best = i;
  }
  m_credit[best] -= total;
  return best;
}

TraceRecord
ConsumerApp::record(SimTime now, std::string kind, const Name& name, std::string detail) const
{
  return TraceRecord{now, m_node, std::move(kind), name.toUri(), std::move(detail)};
}

void
ConsumerApp::emit(const Name& name, Pending& pending, SimTime now, ConsumerOutput& out)
{
  Interest interest = m_strategy == StrategyKind::Sifah ?
                      Interest{name, HopCount::infinity()} :
                      Interest{name, Nonce{static_cast<std::uint32_t>(m_nonceGen())}};
  pending.emission = ++m_emissions;
  pending.awaiting = true;
  out.records.push_back(record(now, "app-interest", name,
                               encodeMessageFields(interest) + " retx=" + std::to_string(pending.retx)));
  out.interests.push_back(std::move(interest));
  out.timeouts.push_back({now + m_timeout, name, pending.emission});
}

ConsumerOutput
ConsumerApp::onTick(SimTime now)
{
  ConsumerOutput out;
  if (now >= m_stop || (m_spec.limit && m_generated >= *m_spec.limit))
    return out;

  std::size_t i = choosePrefix();
  Name name = Name(m_spec.prefixes[i].prefix.components())
                .append("seq")
                .append(std::to_string(m_sequence[i]++));
  ++m_generated;

  auto [it, isNew] = m_pending.try_emplace(name, Pending{now});
  if (isNew)
    emit(name, it->second, now, out);

  SimTime next = now + m_period;
  if (next < m_stop && !(m_spec.limit && m_generated >= *m_spec.limit))
    out.nextTick = next;
  return out;
}

void
ConsumerApp::close(const Name& name, std::string_view outcome, SimTime now, ConsumerOutput& out)
{
  auto it = m_pending.find(name);
  std::string detail = "outcome=" + std::string(outcome);
  if (outcome != "timeout")
    detail += " rtt_ns=" + std::to_string((now - it->second.firstSent).count());
  detail += " retx=" + std::to_string(it->second.retx);
  out.records.push_back(record(now, "app-close", name, std::move(detail)));
  m_pending.erase(it);
}

void
ConsumerApp::retryOrClose(const Name& name, std::string_view outcome, SimTime now,
                          ConsumerOutput& out)
{
  Pending& pending = m_pending.at(name);
  pending.awaiting = false;
  if (pending.retx < m_spec.maxRetx) {
    out.retransmits.emplace_back(now + m_spec.retxBackoff, name);
    return;
  }
  close(name, outcome, now, out);
}

ConsumerOutput
ConsumerApp::onData(const NdoMessage& ndo, SimTime now)
{
  ConsumerOutput out;
  auto it = m_pending.find(ndo.name);
  bool isAwaited = it != m_pending.end() && it->second.awaiting;
  out.records.push_back(record(now, "app-data", ndo.name, isAwaited ? "" : "late=1"));
  if (it != m_pending.end())
    close(ndo.name, "data", now, out);
  return out;
}

ConsumerOutput
ConsumerApp::onNack(const Nack& nack, SimTime now)
{
  ConsumerOutput out;
  auto it = m_pending.find(nack.name);
  bool isAwaited = it != m_pending.end() && it->second.awaiting;
  out.records.push_back(record(now, "app-nack", nack.name,
                               "code=" + std::string(toString(nack.code)) + (isAwaited ? "" : " late=1")));
  if (isAwaited)
    retryOrClose(nack.name, "nack", now, out);
  return out;
}

ConsumerOutput
ConsumerApp::onTimeout(const Name& name, std::uint64_t emission, SimTime now)
{
  ConsumerOutput out;
  auto it = m_pending.find(name);
  if (it == m_pending.end() || it->second.emission != emission || !it->second.awaiting)
    return out;
  out.records.push_back(record(now, "app-timeout", name, ""));
  retryOrClose(name, "timeout", now, out);
  return out;
}

ConsumerOutput
ConsumerApp::onRetransmit(const Name& name, SimTime now)
{
  ConsumerOutput out;
  auto it = m_pending.find(name);
  if (it == m_pending.end() || it->second.awaiting)
    return out;
  ++it->second.retx;
  emit(name, it->second, now, out);
  return out;
}

std::string
makePayload(const Name& name, std::size_t size)
{
  std::uint64_t state = 0xcbf29ce484222325ULL;
  for (unsigned char c : name.toUri()) {
    state ^= c;
    state *= 0x100000001b3ULL;
  }
  std::string payload(size, '\0');
  for (std::size_t i = 0; i < size; ++i) {
    state ^= state >> 29;
    state *= 0xbf58476d1ce4e5b9ULL;
    payload[i] = static_cast<char>(state >> 56);
  }
  return payload;
}

std::optional<Message>
producerOnInterest(const ProducerSpec& spec, StrategyKind strategy, const Interest& interest)
{
  bool isServed = std::any_of(spec.prefixes.begin(), spec.prefixes.end(),
                              [&] (const Prefix& p) { return p.isPrefixOf(interest.name); });
  if (isServed) {
    NdoMessage ndo{interest.name, {}, makePayload(interest.name, spec.payloadSize), std::nullopt};
    ndo.signature = computeSignature(ndo.name, ndo.payload);
    if (interest.hasNonce())
      ndo.echoNonce = interest.nonce();
    return ndo;
  }
  switch (strategy) {
    case StrategyKind::Ndn:
      return Nack{interest.name, NackCode::NoData};
    case StrategyKind::Sifah:
      return Nack{interest.name, NackCode::NoRoute};
    case StrategyKind::Ccn:
      break;
  }
  return std::nullopt;
}

} // namespace icn::sim
