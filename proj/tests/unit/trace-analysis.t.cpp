#include "icn/sim/trace-analysis.hpp"

#include <doctest.h>

#include <sstream>

using namespace icn;
using namespace icn::sim;

namespace {

TraceLog
traceOf(std::string_view text)
{
  std::istringstream is{std::string(text)};
  return TraceLog::parse(is);
}

} // namespace

TEST_SUITE("trace-analysis") {

TEST_CASE("a three-router wait-for cycle is an undetected loop")
{
  auto log = traceOf(R"(
0 a pit-create /n/1 in=app nonce=1
0 a pit-out /n/1 to=b
10 b pit-create /n/1 in=a nonce=1
10 b pit-out /n/1 to=c
20 c pit-create /n/1 in=b nonce=2
20 c pit-out /n/1 to=a
30 a pit-aggregate /n/1 from=c nonce=2
100 - end -
)");
  auto loops = findUndetectedLoops(log);
  REQUIRE(loops.size() == 1);
  CHECK(loops[0].time == SimTime(30));
  CHECK(loops[0].name == "/n/1");
  CHECK(loops[0].cycle.size() == 3);
  CHECK(accountLoops(log).undetected == 1);
}

TEST_CASE("a rejected Interest does not close the cycle")
{
  // c forwards to a but a refuses it, so a never lists c as a requester
  auto log = traceOf(R"(
0 a pit-create /n/1 in=app
0 a pit-out /n/1 to=b
10 b pit-create /n/1 in=a
10 b pit-out /n/1 to=c
20 c pit-create /n/1 in=b
20 c pit-out /n/1 to=a
30 a send-nack /n/1 to=c code=Loop
30 a drop /n/1 reason=loop
100 - end -
)");
  CHECK(findUndetectedLoops(log).empty());
  auto acc = accountLoops(log);
  CHECK(acc.undetected == 0);
  CHECK(acc.loopNacks == 1);
}

TEST_CASE("deleted and trimmed entries break wait-for edges")
{
  auto deleted = traceOf(R"(
0 a pit-create /n/1 in=app
0 a pit-out /n/1 to=b
10 b pit-create /n/1 in=a
10 b pit-out /n/1 to=a
15 b pit-delete /n/1 reason=expired
20 a pit-aggregate /n/1 from=b
)");
  CHECK(findUndetectedLoops(deleted).empty());

  auto trimmed = traceOf(R"(
0 a pit-create /n/1 in=app
0 a pit-out /n/1 to=b
10 b pit-create /n/1 in=a
10 b pit-out /n/1 to=a
15 a pit-out-remove /n/1 peer=b
20 a pit-aggregate /n/1 from=b
)");
  CHECK(findUndetectedLoops(trimmed).empty());
}

TEST_CASE("distinct names never form a cycle together")
{
  auto log = traceOf(R"(
0 a pit-create /n/1 in=app
0 a pit-out /n/1 to=b
10 b pit-create /n/2 in=a
10 b pit-out /n/2 to=a
20 a pit-aggregate /n/2 from=b
)");
  CHECK(findUndetectedLoops(log).empty());
}

TEST_CASE("duplicate drops are counted")
{
  auto log = traceOf(R"(
10 b drop /n/1 reason=duplicate
11 b drop /n/2 reason=duplicate
12 b drop /n/2 reason=no-route
)");
  CHECK(accountLoops(log).duplicateDrops == 2);
}

TEST_CASE("hop counts must fall along the forwarding path")
{
  auto good = traceOf(R"(
0 a recv-interest /n/1 from=app hop=255
0 a send-interest /n/1 to=b hop=7
10 b recv-interest /n/1 from=a hop=7
10 b send-interest /n/1 to=q hop=6
)");
  CHECK(checkHopMonotonicity(good).empty());

  auto equal = traceOf(R"(
10 b recv-interest /n/1 from=a hop=7
10 b send-interest /n/1 to=q hop=7
)");
  auto v = checkHopMonotonicity(equal);
  REQUIRE(v.size() == 1);
  CHECK(v[0].node == "b");
  CHECK(v[0].received == 7);
  CHECK(v[0].sent == 7);

  auto unprompted = traceOf(R"(
10 b recv-interest /n/1 from=a hop=7
11 b send-interest /n/1 to=q hop=6
)");
  v = checkHopMonotonicity(unprompted);
  REQUIRE(v.size() == 1);
  CHECK(v[0].received == -1);

  auto nonces = traceOf(R"(
10 b recv-interest /n/1 from=a nonce=5
10 b send-interest /n/1 to=q nonce=5
)");
  CHECK(checkHopMonotonicity(nonces).empty());
}

TEST_CASE("liveness accepts one response per emission")
{
  auto log = traceOf(R"(
0 x app-interest /n/1 hop=255 retx=0
40 x app-nack /n/1 code=Loop
40 x app-interest /n/1 hop=255 retx=1
80 x app-data /n/1
80 x app-close /n/1 outcome=data rtt_ns=80 retx=1
100 - end -
)");
  CHECK(checkLiveness(log).empty());
}

TEST_CASE("liveness violations")
{
  SUBCASE("timeout")
  {
    auto log = traceOf(R"(
0 x app-interest /n/1 hop=255 retx=0
2000 x app-timeout /n/1
3000 - end -
)");
    auto v = checkLiveness(log);
    REQUIRE(v.size() == 1);
    CHECK(v[0].problem == "local timeout");
  }
  SUBCASE("unanswered at run end")
  {
    auto v = checkLiveness(traceOf("0 x app-interest /n/1 hop=255 retx=0\n100 - end -\n"));
    REQUIRE(v.size() == 1);
    CHECK(v[0].node == "x");
  }
  SUBCASE("a second response")
  {
    auto log = traceOf(R"(
0 x app-interest /n/1 hop=255 retx=0
10 x app-data /n/1
20 x app-nack /n/1 code=Loop late=1
100 - end -
)");
    CHECK(checkLiveness(log).size() == 1);
  }
  SUBCASE("incomplete trace")
  {
    auto v = checkLiveness(traceOf("0 x app-interest /n/1 hop=255 retx=0\n10 x app-data /n/1\n"));
    REQUIRE(v.size() == 1);
    CHECK(v[0].problem == "trace incomplete");
  }
}

} // TEST_SUITE
