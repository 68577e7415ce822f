#include "icn/fw/sifah-strategy.hpp"

#include <stdexcept>

namespace icn::fw::sifah {

std::string_view
toString(Verification v)
{
  switch (v) {
    case Verification::AlwaysValid:
      return "valid";
    case Verification::AlwaysInvalid:
      return "invalid";
    case Verification::HashCheck:
      return "hash";
  }
  return "?";
}

Verification
parseVerification(std::string_view text)
{
  for (auto v : {Verification::AlwaysValid, Verification::AlwaysInvalid, Verification::HashCheck}) {
    if (toString(v) == text)
      return v;
  }
  throw std::invalid_argument("unknown verification mode '" + std::string(text) + "'");
}

bool
verifySignature(Verification mode, const NdoMessage& ndo)
{
  switch (mode) {
    case Verification::AlwaysValid:
      return true;
    case Verification::AlwaysInvalid:
      return false;
    case Verification::HashCheck:
      return ndo.signature == computeSignature(ndo.name, ndo.payload);
  }
  return false;
}

std::optional<FaceId>
admitNew(const FibEntry& fibEntry, HopCount incoming)
{
  for (const auto& nh : fibEntry.nextHops()) {
    if (nh.isAvailable && incoming > nh.hopCount)
      return nh.face;
  }
  return std::nullopt;
}

bool
admitAggregate(const SifahPitEntry& entry, HopCount incoming)
{
  return incoming > entry.outHopCount;
}

static void
deleteEntry(RouterState& state, const Name& name, DeleteReason reason, StrategyActions& actions)
{
  Name key = name;
  state.pit.erase(key);
  actions.add(PitDeleted{std::move(key), reason});
}

static void
rejectAsLoop(const Interest& interest, FaceId from, StrategyActions& actions)
{
  actions.send(Nack{interest.name, NackCode::Loop}, from);
  actions.add(Dropped{interest.name, DropReason::Loop});
}

StrategyActions
processInterest(RouterState& state, const Interest& interest, FaceId from, SimTime now)
{
  if (interest.hasNonce()) {
    throw std::invalid_argument("SIFAH Interest without hop count: " + interest.name.toUri());
  }
  StrategyActions actions;
  const HopCount incoming = interest.hopCount();

  if (auto cached = state.cs.lookup(interest.name)) {
    actions.add(CsHit{interest.name});
    actions.send(std::move(*cached), from);
    return actions;
  }

  SifahPitEntry* entry = state.pit.find(interest.name);
  if (entry == nullptr) {
    const FibEntry* fibEntry = state.fib.findLongestPrefixMatch(interest.name);
    if (fibEntry == nullptr || !fibEntry->hasAvailableNextHop()) {
      actions.send(Nack{interest.name, NackCode::NoRoute}, from);
      actions.add(Dropped{interest.name, DropReason::NoRoute});
    }
    else if (admitNew(*fibEntry, incoming)) {
      forward(state, interest, from, now, actions);
    }
    else {
      rejectAsLoop(interest, from, actions);
    }
    return actions;
  }

  if (admitAggregate(*entry, incoming)) {
    entry->inSet.insert(from);
    actions.add(PitAggregated{interest.name, from, std::nullopt});
  }
  else {
    rejectAsLoop(interest, from, actions);
  }
  return actions;
}

void
forward(RouterState& state, const Interest& interest, FaceId from, SimTime now,
        StrategyActions& actions)
{
  const FibEntry* fibEntry = state.fib.findLongestPrefixMatch(interest.name);
  if (fibEntry == nullptr) {
    throw std::logic_error("SIFAH forward without FIB entry for " + interest.name.toUri());
  }
  const HopCount incoming = interest.hopCount();

  for (const auto& nh : fibEntry->nextHops()) {
    if (!nh.isAvailable || !(incoming > nh.hopCount))
      continue;

    SifahPitEntry fresh{interest.name, nh.hopCount, {from}, {nh.face}, now + state.options.mil};
    const SimTime deadline = fresh.lifetimeDeadline;
    state.pit.insert(std::move(fresh));
    actions.add(PitCreated{interest.name, from, std::nullopt});
    actions.add(PitOutAdded{interest.name, nh.face});
    actions.add(ExpiryArmed{interest.name, deadline});
    actions.send(Interest{interest.name, nh.hopCount}, nh.face);
    return;
  }

  // no PIT entry exists yet, so the only requester is `from`
  actions.send(Nack{interest.name, NackCode::NoRoute}, from);
  actions.add(Dropped{interest.name, DropReason::NoRoute});
}

StrategyActions
processData(RouterState& state, const NdoMessage& ndo, FaceId from, SimTime)
{
  StrategyActions actions;
  if (!verifySignature(state.options.verification, ndo)) {
    actions.add(Dropped{ndo.name, DropReason::InvalidSignature});
    return actions;
  }
  SifahPitEntry* entry = state.pit.find(ndo.name);
  if (entry == nullptr) {
    actions.add(Dropped{ndo.name, DropReason::NoPitEntry});
    return actions;
  }
  if (entry->outSet.count(from) == 0) {
    actions.add(Dropped{ndo.name, DropReason::Unsolicited});
    return actions;
  }

  for (FaceId face : entry->inSet) {
    actions.send(ndo, face);
  }
  if (state.cs.capacity() > 0) {
    state.cs.insert(ndo);
    actions.add(CsInserted{ndo.name});
  }
  deleteEntry(state, ndo.name, DeleteReason::Satisfied, actions);
  return actions;
}

StrategyActions
processNack(RouterState& state, const Nack& nack, FaceId from, SimTime)
{
  StrategyActions actions;
  SifahPitEntry* entry = state.pit.find(nack.name);
  if (entry == nullptr) {
    actions.add(Dropped{nack.name, DropReason::NoPitEntry});
    return actions;
  }
  if (entry->outSet.count(from) == 0) {
    actions.add(Dropped{nack.name, DropReason::Unsolicited});
    return actions;
  }

  for (FaceId face : entry->inSet) {
    actions.send(Nack{nack.name, nack.code}, face);
  }
  deleteEntry(state, nack.name, DeleteReason::Nacked, actions);
  return actions;
}

StrategyActions
expirePitEntry(RouterState& state, const Name& name, SimTime now)
{
  StrategyActions actions;
  const SifahPitEntry* entry = state.pit.find(name);
  if (entry == nullptr || entry->lifetimeDeadline > now)
    return actions;

  for (FaceId face : entry->inSet) {
    actions.send(Nack{name, NackCode::InterestExpired}, face);
  }
  deleteEntry(state, name, DeleteReason::Expired, actions);
  return actions;
}

StrategyActions
processLinkFailure(RouterState& state, FaceId face, SimTime)
{
  StrategyActions actions;
  for (const Name& name : state.pit.sortedNames()) {
    SifahPitEntry* entry = state.pit.find(name);

    if (entry->inSet.erase(face) > 0) {
      actions.add(PitInRemoved{name, face});
      if (entry->inSet.empty()) {
        deleteEntry(state, name, DeleteReason::LinkFailure, actions);
        continue;
      }
    }

    if (entry->outSet.erase(face) > 0) {
      actions.add(PitOutRemoved{name, face});
      if (entry->outSet.empty()) {
        for (FaceId requester : entry->inSet) {
          actions.send(Nack{name, NackCode::RouteFailed}, requester);
        }
        deleteEntry(state, name, DeleteReason::LinkFailure, actions);
      }
    }
  }
  return actions;
}

} // namespace icn::fw::sifah
