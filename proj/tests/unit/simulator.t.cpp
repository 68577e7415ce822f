#include "icn/sim/apps.hpp"
#include "icn/sim/simulator.hpp"
#include "icn/sim/trace-analysis.hpp"

#include "random-config.hpp"

#include <doctest.h>

using namespace icn;
using namespace icn::sim;
using namespace std::chrono_literals;

namespace {

const Prefix CONTENT = Prefix::parse("/content");

/// consumer c -- producer j over one link
RunConfig
lineConfig(StrategyKind strategy, Duration delay)
{
  RunConfig cfg;
  cfg.strategy = strategy;
  cfg.duration = 1s;
  cfg.mil = 200ms;
  cfg.nodes = {{"c", NodeRole::Consumer}, {"j", NodeRole::Producer}};
  cfg.links = {{"c", "j", delay}};
  cfg.autoFib = {CONTENT};
  cfg.producers = {{"j", {CONTENT}, 8}};
  ConsumerSpec c;
  c.node = "c";
  c.prefixes = {{CONTENT, 1.0}};
  c.rate = 10;
  c.start = 0ms;
  c.limit = 3;
  cfg.consumers = {c};
  return cfg;
}

std::vector<TraceRecord>
ofKind(const TraceLog& log, std::string_view kind)
{
  std::vector<TraceRecord> out;
  for (const auto& r : log.records()) {
    if (r.kind == kind)
      out.push_back(r);
  }
  return out;
}

} // namespace

TEST_SUITE("simulator") {

TEST_CASE("round-trip time on a single link is twice the delay")
{
  for (auto strategy : {StrategyKind::Ccn, StrategyKind::Ndn, StrategyKind::Sifah}) {
    CAPTURE(toString(strategy));
    TraceLog log = simulate(lineConfig(strategy, 7ms));
    auto closes = ofKind(log, "app-close");
    REQUIRE(closes.size() == 3);
    for (const auto& r : closes) {
      CHECK(detailValue(r.detail, "outcome") == "data");
      CHECK(detailValue(r.detail, "rtt_ns") == std::to_string((14ms).count() * 1'000'000));
    }
    auto interests = ofKind(log, "app-interest");
    REQUIRE(interests.size() == 3);
    CHECK(interests[0].time == 0ms);
    CHECK(interests[1].time == 100ms);
    CHECK(interests[2].name == "/content/seq/2");
    CHECK(log.isComplete());
    CHECK(log.records().back().time == 1s);
  }
}

TEST_CASE("request period follows the rate")
{
  CHECK(ConsumerApp::periodFor(2000) == 500us);
  CHECK(ConsumerApp::periodFor(3) == Duration(333'333'333));
  CHECK_THROWS(ConsumerApp::periodFor(0));
}

TEST_CASE("SIFAH consumers originate with the infinite hop count")
{
  TraceLog log = simulate(lineConfig(StrategyKind::Sifah, 5ms));
  auto sends = ofKind(log, "send-interest");
  REQUIRE_FALSE(sends.empty());
  CHECK(detailValue(sends[0].detail, "hop") == "1");
  CHECK(detailValue(ofKind(log, "app-interest")[0].detail, "hop") == "255");
}

TEST_CASE("an NDN retransmission carries a fresh nonce")
{
  RunConfig cfg = lineConfig(StrategyKind::Ndn, 5ms);
  cfg.failures = {{"c", "j", 0ms}};
  cfg.consumers[0].limit = 1;
  cfg.consumers[0].maxRetx = 2;
  cfg.consumers[0].timeout = 50ms;
  TraceLog log = simulate(cfg);

  auto emissions = ofKind(log, "app-interest");
  REQUIRE(emissions.size() == 3);
  std::set<std::string_view> nonces;
  for (const auto& r : emissions)
    nonces.insert(*detailValue(r.detail, "nonce"));
  CHECK(nonces.size() == 3);
  CHECK(detailValue(emissions[2].detail, "retx") == "2");
  auto closes = ofKind(log, "app-close");
  REQUIRE(closes.size() == 1);
  CHECK(detailValue(closes[0].detail, "outcome") == "timeout");
}

TEST_CASE("an NDN Interest that returns to its origin is nacked as a duplicate")
{
  // c -> a -> b -> c with the producer unreachable through the cycle
  RunConfig cfg;
  cfg.strategy = StrategyKind::Ndn;
  cfg.duration = 2s;
  cfg.mil = 500ms;
  cfg.nodes = {{"c", NodeRole::Consumer}, {"a", NodeRole::Router}, {"b", NodeRole::Router},
               {"j", NodeRole::Producer}};
  cfg.links = {{"c", "a", 5ms}, {"a", "b", 5ms}, {"b", "c", 5ms}, {"b", "j", 5ms}};
  cfg.fib = {{"c", CONTENT, "a", HopCount(3), 1},
             {"a", CONTENT, "b", HopCount(2), 1},
             {"b", CONTENT, "c", HopCount(1), 1}};
  cfg.producers = {{"j", {CONTENT}, 8}};
  ConsumerSpec c;
  c.node = "c";
  c.prefixes = {{CONTENT, 1.0}};
  c.start = 0ms;
  c.limit = 1;
  cfg.consumers = {c};

  TraceLog log = simulate(cfg);
  auto nacks = ofKind(log, "send-nack");
  REQUIRE_FALSE(nacks.empty());
  CHECK(nacks[0].node == "c");
  CHECK(detailValue(nacks[0].detail, "code") == "Duplicate");
  CHECK(nacks[0].time == 15ms);
  CHECK(findUndetectedLoops(log).empty());

  auto appNacks = ofKind(log, "app-nack");
  REQUIRE(appNacks.size() == 1);
  CHECK(appNacks[0].time == 30ms);
}

TEST_CASE("identical configs give identical traces")
{
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    test::RandomConfigParams params;
    params.strategy = seed % 2 ? StrategyKind::Ndn : StrategyKind::Sifah;
    RunConfig cfg = test::makeRandomConfig(seed, params);
    CHECK(simulate(cfg).str() == simulate(cfg).str());
  }
}

TEST_CASE("a different seed changes loss outcomes")
{
  RunConfig cfg = lineConfig(StrategyKind::Ndn, 5ms);
  cfg.links[0].lossRate = 0.5;
  cfg.consumers[0].limit.reset();
  cfg.consumers[0].rate = 100;
  cfg.seed = 1;
  std::string first = simulate(cfg).str();
  cfg.seed = 2;
  CHECK(simulate(cfg).str() != first);
}

TEST_CASE("records are in time order and every receive follows a send")
{
  for (std::uint64_t seed = 100; seed < 110; ++seed) {
    RunConfig cfg = test::makeRandomConfig(seed, {});
    TraceLog log = simulate(cfg);
    std::map<std::string, int> inFlight; // "sender>receiver kind name fields"
    SimTime last{0};
    for (const auto& r : log.records()) {
      CHECK(r.time >= last);
      last = r.time;
      if (r.kind.rfind("send-", 0) == 0) {
        auto to = *detailValue(r.detail, "to");
        if (to != "app")
          ++inFlight[r.node + ">" + std::string(to) + " " + r.kind.substr(5) + " " + r.name];
      }
      else if (r.kind.rfind("recv-", 0) == 0) {
        auto from = *detailValue(r.detail, "from");
        if (from == "app")
          continue;
        auto& count = inFlight[std::string(from) + ">" + r.node + " " + r.kind.substr(5) + " " + r.name];
        CHECK(count > 0);
        --count;
      }
    }
  }
}

TEST_CASE("producer replies")
{
  ProducerSpec spec{"j", {CONTENT}, 4};
  Interest served{Name::parse("/content/seq/1"), Nonce{9}};
  auto reply = producerOnInterest(spec, StrategyKind::Ndn, served);
  REQUIRE(reply);
  const auto& ndo = std::get<NdoMessage>(*reply);
  CHECK(ndo.echoNonce == Nonce{9});
  CHECK(ndo.payload.size() == 4);
  CHECK(ndo.signature == computeSignature(ndo.name, ndo.payload));

  Interest other{Name::parse("/other/1"), Nonce{9}};
  CHECK((std::get<Nack>(*producerOnInterest(spec, StrategyKind::Ndn, other)).code == NackCode::NoData));
  CHECK_FALSE(producerOnInterest(spec, StrategyKind::Ccn, other));
  Interest otherHop{Name::parse("/other/1"), HopCount(3)};
  CHECK((std::get<Nack>(*producerOnInterest(spec, StrategyKind::Sifah, otherHop)).code ==
        NackCode::NoRoute));
}

TEST_CASE("a failure scheduled after the run never fires")
{
  RunConfig cfg = lineConfig(StrategyKind::Sifah, 5ms);
  cfg.failures = {{"c", "j", 5s}};
  TraceLog log = simulate(cfg);
  CHECK(ofKind(log, "link-fail").empty());
  CHECK(ofKind(log, "app-close").size() == 3);
}

TEST_CASE("a link failure closes pending SIFAH requests with a NACK")
{
  RunConfig cfg = lineConfig(StrategyKind::Sifah, 50ms);
  cfg.failures = {{"c", "j", 20ms}};
  cfg.consumers[0].limit = 1;
  TraceLog log = simulate(cfg);
  auto fails = ofKind(log, "link-fail");
  CHECK(fails.size() == 2);
  auto appNacks = ofKind(log, "app-nack");
  REQUIRE(appNacks.size() == 1);
  CHECK(appNacks[0].time == 20ms);
  CHECK(detailValue(appNacks[0].detail, "code") == "RouteFailed");
  CHECK(checkLiveness(log).empty());
}

TEST_CASE("invalid configs are rejected naming the offending element")
{
  RunConfig cfg = lineConfig(StrategyKind::Ndn, 5ms);
  cfg.links.push_back({"c", "ghost", 5ms});
  try {
    simulate(cfg);
    FAIL("expected ConfigError");
  }
  catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("ghost") != std::string::npos);
  }

  cfg = lineConfig(StrategyKind::Ndn, 5ms);
  cfg.fib = {{"c", CONTENT, "j", HopCount(1), 0}};
  CHECK_THROWS_AS(simulate(cfg), ConfigError);

  cfg = lineConfig(StrategyKind::Ndn, 5ms);
  cfg.consumers[0].prefixes[0].weight = 0.5;
  CHECK_THROWS_AS(simulate(cfg), ConfigError);
}

TEST_CASE("run attaches metrics to the trace")
{
  RunResult result = run(lineConfig(StrategyKind::Sifah, 10ms));
  CHECK(result.trace.isComplete());
  REQUIRE(result.metrics.avgRttMs);
  CHECK(*result.metrics.avgRttMs == doctest::Approx(20.0));
}

} // TEST_SUITE
