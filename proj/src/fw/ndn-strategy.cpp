#include "icn/fw/ndn-strategy.hpp"

#include <stdexcept>

namespace icn::fw::ndn {

static void
deleteEntry(RouterState& state, const Name& name, DeleteReason reason, StrategyActions& actions)
{
  Name key = name; // name may alias the entry being erased
  state.pit.erase(key);
  actions.add(PitDeleted{std::move(key), reason});
}

StrategyActions
processInterest(RouterState& state, const Interest& interest, FaceId from, SimTime now)
{
  if (!interest.hasNonce()) {
    throw std::invalid_argument("NDN/CCN Interest without nonce: " + interest.name.toUri());
  }
  StrategyActions actions;
  const Nonce nonce = interest.nonce();

  if (auto cached = state.cs.lookup(interest.name)) {
    actions.add(CsHit{interest.name});
    cached->echoNonce = nonce;
    actions.send(std::move(*cached), from);
    return actions;
  }

  NdnPitEntry* entry = state.pit.find(interest.name);
  if (entry == nullptr) {
    NdnPitEntry fresh{interest.name, {NdnPitTuple{nonce, from, {}}}, now + state.options.mil};
    entry = &state.pit.insert(std::move(fresh));
    actions.add(PitCreated{interest.name, from, nonce});
    actions.add(ExpiryArmed{interest.name, entry->lifetimeDeadline});
    forward(state, *entry, 0, now, actions);
    return actions;
  }

  if (entry->hasNonce(nonce)) {
    // duplicate Interest: the same nonce came back
    if (state.options.nacksEnabled) {
      actions.send(Nack{interest.name, NackCode::Duplicate}, from);
    }
    actions.add(Dropped{interest.name, DropReason::Duplicate});
    return actions;
  }

  entry->tuples.push_back(NdnPitTuple{nonce, from, {}});
  actions.add(PitAggregated{interest.name, from, nonce});
  if (entry->retxDeadline() <= now) {
    forward(state, *entry, entry->tuples.size() - 1, now, actions);
  }
  return actions;
}

bool
forward(RouterState& state, NdnPitEntry& entry, std::size_t tupleIndex, SimTime now,
        StrategyActions& actions)
{
  const FaceId requester = entry.tuples.at(tupleIndex).inFace;
  const Nonce nonce = entry.tuples[tupleIndex].nonce;

  const FibEntry* fibEntry = state.fib.findLongestPrefixMatch(entry.name);
  if (fibEntry == nullptr) {
    if (state.options.nacksEnabled) {
      actions.send(Nack{entry.name, NackCode::NoData}, requester);
    }
    actions.add(Dropped{entry.name, DropReason::NoData});
    deleteEntry(state, entry.name, DeleteReason::NoData, actions);
    return false;
  }

  for (const auto& nh : fibEntry->nextHops()) {
    if (entry.isInFace(nh.face) || entry.isOutFace(nh.face) || !nh.isAvailable)
      continue;

    auto& tuple = entry.tuples[tupleIndex];
    tuple.outFaces.insert(nh.face);
    tuple.retxDeadline = state.options.retxInterval ? now + *state.options.retxInterval
                                                    : entry.lifetimeDeadline;
    actions.add(PitOutAdded{entry.name, nh.face});
    actions.send(Interest{entry.name, nonce}, nh.face);
    return true;
  }

  if (state.options.nacksEnabled) {
    actions.send(Nack{entry.name, NackCode::Congestion}, requester);
  }
  actions.add(Dropped{entry.name, DropReason::Congestion});
  deleteEntry(state, entry.name, DeleteReason::Congestion, actions);
  return false;
}

StrategyActions
processData(RouterState& state, const NdoMessage& ndo, FaceId from, SimTime)
{
  StrategyActions actions;
  NdnPitEntry* entry = state.pit.find(ndo.name);
  if (entry == nullptr) {
    actions.add(Dropped{ndo.name, DropReason::NoPitEntry});
    return actions;
  }
  if (!entry->isOutFace(from)) {
    actions.add(Dropped{ndo.name, DropReason::Unsolicited});
    return actions;
  }

  for (FaceId face : entry->inFaces()) {
    NdoMessage reply = ndo;
    for (const auto& t : entry->tuples) {
      if (t.inFace == face) {
        reply.echoNonce = t.nonce;
        break;
      }
    }
    actions.send(std::move(reply), face);
  }

  if (state.cs.capacity() > 0) {
    NdoMessage stored = ndo;
    stored.echoNonce.reset();
    state.cs.insert(stored);
    actions.add(CsInserted{ndo.name});
  }
  deleteEntry(state, ndo.name, DeleteReason::Satisfied, actions);
  return actions;
}

StrategyActions
processNack(RouterState& state, const Nack& nack, FaceId from, SimTime)
{
  StrategyActions actions;
  if (!state.options.nacksEnabled) {
    actions.add(Dropped{nack.name, DropReason::NacksDisabled});
    return actions;
  }
  NdnPitEntry* entry = state.pit.find(nack.name);
  if (entry == nullptr) {
    actions.add(Dropped{nack.name, DropReason::NoPitEntry});
    return actions;
  }
  if (!entry->isOutFace(from)) {
    actions.add(Dropped{nack.name, DropReason::Unsolicited});
    return actions;
  }

  for (FaceId face : entry->inFaces()) {
    actions.send(Nack{nack.name, nack.code}, face);
  }
  deleteEntry(state, nack.name, DeleteReason::Nacked, actions);
  return actions;
}

StrategyActions
expirePitEntry(RouterState& state, const Name& name, SimTime now)
{
  StrategyActions actions;
  const NdnPitEntry* entry = state.pit.find(name);
  if (entry == nullptr || entry->lifetimeDeadline > now)
    return actions;
  deleteEntry(state, name, DeleteReason::Expired, actions);
  return actions;
}

} // namespace icn::fw::ndn
