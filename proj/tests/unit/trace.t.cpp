#include "icn/sim/trace.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace icn;
using namespace icn::sim;
using namespace std::chrono_literals;

namespace {

Message
randomMessage(std::mt19937& rng)
{
  Name name = Name::parse("/p/seq/" + std::to_string(rng() % 1000));
  switch (rng() % 5) {
    case 0:
      return Interest{name, Nonce{static_cast<std::uint32_t>(rng())}};
    case 1:
      return Interest{name, HopCount(static_cast<std::uint8_t>(rng() % 256))};
    case 2: {
      std::string payload(rng() % 20, '\0');
      for (auto& c : payload)
        c = static_cast<char>(rng() % 256);
      NdoMessage ndo{name, computeSignature(name, payload), payload, std::nullopt};
      if (rng() % 2)
        ndo.echoNonce = Nonce{static_cast<std::uint32_t>(rng())};
      return ndo;
    }
    default:
      return Nack{name, ALL_NACK_CODES[rng() % std::size(ALL_NACK_CODES)]};
  }
}

} // namespace

TEST_SUITE("trace") {

TEST_CASE("record formatting")
{
  TraceRecord r{SimTime(15'000'000), "a", "pit-aggregate", "/ndn/content/1", "from=x"};
  CHECK(formatRecord(r) == "15000000 a pit-aggregate /ndn/content/1 from=x");
  CHECK(formatRecord(TraceRecord{3s, "-", "end", "", ""}) == "3000000000 - end -");
}

TEST_CASE("message records round-trip through text")
{
  std::mt19937 rng(42);
  TraceLog log;
  std::vector<Message> sent;
  for (int i = 0; i < 500; ++i) {
    Message m = randomMessage(rng);
    sent.push_back(m);
    log.add(messageRecord(SimTime(i * 1000), "n" + std::to_string(i % 7),
                          i % 2 ? "send" : "recv", "peer", m));
  }
  log.add(TraceRecord{SimTime(500'000), "-", "end", "-", ""});

  std::istringstream is(log.str());
  TraceLog parsed = TraceLog::parse(is);
  REQUIRE(parsed.size() == log.size());
  CHECK(parsed.records() == log.records());
  CHECK(parsed.isComplete());
  for (std::size_t i = 0; i < sent.size(); ++i) {
    auto decoded = messageOf(parsed.records()[i]);
    REQUIRE(decoded);
    CHECK(*decoded == sent[i]);
  }
}

TEST_CASE("message record detail layout")
{
  Name n = Name::parse("/a/1");
  auto r = messageRecord(5ms, "b", "send", "q", Interest{n, HopCount(6)});
  CHECK(r.kind == "send-interest");
  CHECK(r.detail == "to=q hop=6");

  r = messageRecord(5ms, "b", "recv", "a", Nack{n, NackCode::Loop});
  CHECK(r.kind == "recv-nack");
  CHECK(r.detail == "from=a code=Loop");

  r = messageRecord(5ms, "b", "send", "a", NdoMessage{n, "\x01\xff", "hi", Nonce{7}});
  CHECK(r.detail == "to=a sig=01ff payload=6869 nonce=7");
}

TEST_CASE("non-message records carry no message")
{
  CHECK_FALSE(messageOf(TraceRecord{0ms, "a", "pit-create", "/a/1", "in=x"}));
}

TEST_CASE("detail lookup matches whole keys")
{
  CHECK(detailValue("from=x nonce=5", "nonce") == "5");
  CHECK(detailValue("from=x nonce=5", "from") == "x");
  CHECK_FALSE(detailValue("xnonce=5", "nonce"));
  CHECK_FALSE(detailValue("", "nonce"));
}

TEST_CASE("malformed input is rejected")
{
  CHECK_THROWS_AS(TraceLog::parseLine("12 a"), TraceLog::ParseError);
  CHECK_THROWS_AS(TraceLog::parseLine("1x a send-interest /a"), TraceLog::ParseError);
  CHECK_THROWS_AS(decodeMessage("interest", Name::parse("/a"), "hop=300"), std::invalid_argument);
  CHECK_THROWS_AS(decodeMessage("data", Name::parse("/a"), "sig=0"), std::invalid_argument);
  CHECK_THROWS_AS(decodeMessage("nack", Name::parse("/a"), "code=Nope"), std::invalid_argument);
  CHECK_THROWS_AS(decodeMessage("blob", Name::parse("/a"), ""), std::invalid_argument);
  CHECK_THROWS_AS(fromHex("abc"), std::invalid_argument);
  CHECK_THROWS_AS(fromHex("zz"), std::invalid_argument);
}

TEST_CASE("a trace without the end record is incomplete")
{
  TraceLog log;
  CHECK_FALSE(log.isComplete());
  log.add(TraceRecord{0ms, "a", "pit-create", "/a", "in=app"});
  CHECK_FALSE(log.isComplete());
}

} // TEST_SUITE
