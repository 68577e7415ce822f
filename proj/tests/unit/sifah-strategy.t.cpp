#include "icn/fw/sifah-strategy.hpp"

#include <doctest.h>

using namespace icn;
using namespace icn::fw;
using namespace std::chrono_literals;

namespace {

const Name NAME = Name::parse("/ndn/content/1");
const Prefix PREFIX = Prefix::parse("/ndn/content");

// faces at router a: b=1, p=2, x=3, y=4
const FaceId B{1}, P{2}, X{3}, Y{4};

sifah::RouterState
routerA()
{
  sifah::RouterState s;
  s.options.mil = 1000ms;
  s.fib.addNextHop(PREFIX, {B, HopCount(7), 1});
  s.fib.addNextHop(PREFIX, {P, HopCount(7), 2});
  s.fib.addNextHop(PREFIX, {X, HopCount(9), 3});
  return s;
}

Interest
interest(std::uint8_t hop)
{
  return Interest{NAME, HopCount(hop)};
}

std::optional<NackCode>
nackSentTo(const StrategyActions& actions, FaceId face)
{
  for (const auto& s : actions.sends()) {
    if (const auto* n = std::get_if<Nack>(&s.message); n && s.face == face)
      return n->code;
  }
  return std::nullopt;
}

} // namespace

TEST_SUITE("strategy-sifah") {

TEST_CASE("new-Interest admission picks the best-ranked face with a smaller hop count")
{
  auto s = routerA();
  const FibEntry& e = *s.fib.findExactMatch(PREFIX);
  CHECK(sifah::admitNew(e, HopCount(8)) == B);
  CHECK(sifah::admitNew(e, HopCount(255)) == B);
  CHECK_FALSE(sifah::admitNew(e, HopCount(7)));
  CHECK_FALSE(sifah::admitNew(e, HopCount(0)));

  FibEntry single(PREFIX);
  single.addNextHop({FaceId{5}, HopCount(10), 1});
  CHECK_FALSE(sifah::admitNew(single, HopCount(7)));
  CHECK(sifah::admitNew(single, HopCount(11)) == FaceId{5});
}

TEST_CASE("unavailable faces are skipped by admission")
{
  auto s = routerA();
  s.fib.setFaceAvailability(B, false);
  CHECK(sifah::admitNew(*s.fib.findExactMatch(PREFIX), HopCount(8)) == P);
}

TEST_CASE("aggregation admission compares against the stated hop count")
{
  SifahPitEntry e{NAME, HopCount(7), {Y}, {B}, SimTime(0)};
  CHECK(sifah::admitAggregate(e, HopCount(8)));
  CHECK(sifah::admitAggregate(e, HopCount(255)));
  CHECK_FALSE(sifah::admitAggregate(e, HopCount(7)));
  CHECK_FALSE(sifah::admitAggregate(e, HopCount(3)));
}

TEST_CASE("an accepted Interest is forwarded with the next hop's hop count")
{
  auto s = routerA();
  auto acts = sifah::processInterest(s, interest(8), Y, 0ms);
  REQUIRE(acts.sends().size() == 1);
  CHECK(acts.sends()[0].face == B);
  CHECK(std::get<Interest>(acts.sends()[0].message).hopCount() == HopCount(7));

  const SifahPitEntry* e = s.pit.find(NAME);
  REQUIRE(e);
  CHECK(e->outHopCount == HopCount(7));
  CHECK(e->inSet == std::set<FaceId>{Y});
  CHECK(e->outSet == std::set<FaceId>{B});
  CHECK(e->lifetimeDeadline == SimTime(1000ms));
}

TEST_CASE("aggregation accepts a larger hop count and rejects an equal one")
{
  auto s = routerA();
  sifah::processInterest(s, interest(8), Y, 0ms);

  auto acts = sifah::processInterest(s, interest(8), X, 5ms);
  CHECK(acts.sends().empty());
  CHECK(acts.ofType<PitAggregated>().size() == 1);
  CHECK(s.pit.find(NAME)->inSet == std::set<FaceId>{X, Y});

  acts = sifah::processInterest(s, interest(7), P, 6ms);
  CHECK((nackSentTo(acts, P) == NackCode::Loop));
  CHECK(s.pit.find(NAME)->inSet.count(P) == 0);
}

TEST_CASE("a rank-2 face is used when the rank-1 face fails admission")
{
  // router b: a=1 (hop 8), c=2 (hop 10), q=3 (hop 6)
  sifah::RouterState s;
  s.fib.addNextHop(PREFIX, {FaceId{1}, HopCount(8), 1});
  s.fib.addNextHop(PREFIX, {FaceId{2}, HopCount(10), 2});
  s.fib.addNextHop(PREFIX, {FaceId{3}, HopCount(6), 3});
  auto acts = sifah::processInterest(s, interest(7), FaceId{1}, 0ms);
  REQUIRE(acts.sends().size() == 1);
  CHECK(acts.sends()[0].face == FaceId{3});
  CHECK(std::get<Interest>(acts.sends()[0].message).hopCount() == HopCount(6));
}

TEST_CASE("Interests that cannot advance are answered with a NACK")
{
  SUBCASE("hop count not above any next hop is a loop")
  {
    sifah::RouterState s;
    s.fib.addNextHop(PREFIX, {FaceId{1}, HopCount(5), 1});
    auto acts = sifah::processInterest(s, interest(5), FaceId{2}, 0ms);
    CHECK((nackSentTo(acts, FaceId{2}) == NackCode::Loop));
    CHECK(s.pit.empty());
  }
  SUBCASE("no FIB entry")
  {
    sifah::RouterState s;
    auto acts = sifah::processInterest(s, interest(5), FaceId{2}, 0ms);
    CHECK((nackSentTo(acts, FaceId{2}) == NackCode::NoRoute));
  }
  SUBCASE("every next hop unavailable")
  {
    auto s = routerA();
    for (FaceId f : {B, P, X})
      s.fib.setFaceAvailability(f, false);
    auto acts = sifah::processInterest(s, interest(200), Y, 0ms);
    CHECK((nackSentTo(acts, Y) == NackCode::NoRoute));
  }
}

TEST_CASE("data is accepted only from the out-set and goes to the whole in-set")
{
  auto s = routerA();
  sifah::processInterest(s, interest(8), Y, 0ms);
  sifah::processInterest(s, interest(10), X, 1ms);
  NdoMessage ndo{NAME, computeSignature(NAME, "d"), "d", std::nullopt};

  CHECK((sifah::processData(s, ndo, P, 5ms).ofType<Dropped>().at(0).reason ==
        DropReason::Unsolicited));

  auto acts = sifah::processData(s, ndo, B, 5ms);
  REQUIRE(acts.sends().size() == 2);
  CHECK(acts.sends()[0].face == X);
  CHECK(acts.sends()[1].face == Y);
  CHECK(s.pit.empty());
}

TEST_CASE("signature verification modes")
{
  NdoMessage good{NAME, computeSignature(NAME, "d"), "d", std::nullopt};
  NdoMessage bad{NAME, "xxxxxxxx", "d", std::nullopt};
  CHECK(sifah::verifySignature(sifah::Verification::HashCheck, good));
  CHECK_FALSE(sifah::verifySignature(sifah::Verification::HashCheck, bad));
  CHECK(sifah::verifySignature(sifah::Verification::AlwaysValid, bad));
  CHECK_FALSE(sifah::verifySignature(sifah::Verification::AlwaysInvalid, good));

  auto s = routerA();
  s.options.verification = sifah::Verification::AlwaysInvalid;
  sifah::processInterest(s, interest(8), Y, 0ms);
  auto acts = sifah::processData(s, good, B, 5ms);
  CHECK(acts.sends().empty());
  CHECK((acts.ofType<Dropped>().at(0).reason == DropReason::InvalidSignature));
  CHECK(s.pit.find(NAME));

  for (auto v : {sifah::Verification::AlwaysValid, sifah::Verification::AlwaysInvalid,
                 sifah::Verification::HashCheck})
    CHECK((sifah::parseVerification(sifah::toString(v)) == v));
}

TEST_CASE("nack is relayed to every requester")
{
  auto s = routerA();
  sifah::processInterest(s, interest(8), Y, 0ms);
  sifah::processInterest(s, interest(9), X, 1ms);
  auto acts = sifah::processNack(s, Nack{NAME, NackCode::Loop}, B, 5ms);
  CHECK((nackSentTo(acts, X) == NackCode::Loop));
  CHECK((nackSentTo(acts, Y) == NackCode::Loop));
  CHECK(s.pit.empty());
}

TEST_CASE("expiry notifies every requester")
{
  auto s = routerA();
  sifah::processInterest(s, interest(8), Y, 0ms);
  SUBCASE("one requester")
  {
    auto acts = sifah::expirePitEntry(s, NAME, 1000ms);
    REQUIRE(acts.sends().size() == 1);
    CHECK((nackSentTo(acts, Y) == NackCode::InterestExpired));
  }
  SUBCASE("three requesters")
  {
    sifah::processInterest(s, interest(9), X, 1ms);
    sifah::processInterest(s, interest(9), FaceId{7}, 1ms);
    CHECK(sifah::expirePitEntry(s, NAME, 999ms).empty());
    auto acts = sifah::expirePitEntry(s, NAME, 1000ms);
    CHECK(acts.sends().size() == 3);
    for (FaceId f : {X, Y, FaceId{7}})
      CHECK((nackSentTo(acts, f) == NackCode::InterestExpired));
  }
  CHECK(s.pit.empty());
}

TEST_CASE("link failure closes affected entries")
{
  SUBCASE("losing the only next hop sends Nack(RouteFailed)")
  {
    auto s = routerA();
    sifah::processInterest(s, interest(8), Y, 0ms);
    sifah::processInterest(s, interest(9), X, 0ms);
    auto acts = sifah::processLinkFailure(s, B, 3ms);
    CHECK((nackSentTo(acts, X) == NackCode::RouteFailed));
    CHECK((nackSentTo(acts, Y) == NackCode::RouteFailed));
    CHECK(acts.ofType<PitOutRemoved>().size() == 1);
    CHECK(s.pit.empty());
  }
  SUBCASE("losing the only requester deletes without NACKs")
  {
    auto s = routerA();
    sifah::processInterest(s, interest(8), Y, 0ms);
    auto acts = sifah::processLinkFailure(s, Y, 3ms);
    CHECK(acts.sends().empty());
    CHECK((acts.ofType<PitDeleted>().at(0).reason == DeleteReason::LinkFailure));
    CHECK(s.pit.empty());
  }
  SUBCASE("losing one of several requesters keeps the entry")
  {
    auto s = routerA();
    sifah::processInterest(s, interest(8), Y, 0ms);
    sifah::processInterest(s, interest(9), X, 0ms);
    auto acts = sifah::processLinkFailure(s, Y, 3ms);
    CHECK(acts.sends().empty());
    CHECK(acts.ofType<PitInRemoved>().size() == 1);
    REQUIRE(s.pit.find(NAME));
    CHECK(s.pit.find(NAME)->inSet == std::set<FaceId>{X});
  }
  SUBCASE("an unrelated face changes nothing")
  {
    auto s = routerA();
    sifah::processInterest(s, interest(8), Y, 0ms);
    CHECK(sifah::processLinkFailure(s, P, 3ms).empty());
    CHECK(s.pit.size() == 1);
  }
}

TEST_CASE("an Interest without a hop count is rejected")
{
  auto s = routerA();
  CHECK_THROWS_AS(sifah::processInterest(s, Interest{NAME, Nonce{1}}, Y, 0ms),
                  std::invalid_argument);
}

} // TEST_SUITE
