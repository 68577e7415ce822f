#include "icn/sim/trace-analysis.hpp"

#include <charconv>
#include <map>
#include <set>
#include <unordered_map>

namespace icn::sim {

namespace {

struct PendingState
{
  std::set<std::string> in;
  std::set<std::string> out;
};

using NameGraph = std::map<std::string, PendingState>;

bool
hasEdge(const NameGraph& graph, const std::string& v, const std::string& w)
{
  auto vi = graph.find(v);
  auto wi = graph.find(w);
  return vi != graph.end() && wi != graph.end() && vi->second.out.count(w) > 0 &&
         wi->second.in.count(v) > 0;
}

/// Path from \p from to \p to along wait-for edges, or empty.
std::vector<std::string>
findPath(const NameGraph& graph, const std::string& from, const std::string& to)
{
  std::vector<std::string> stack{from};
  std::map<std::string, std::string> parent{{from, ""}};
  while (!stack.empty()) {
    auto u = stack.back();
    stack.pop_back();
    if (u == to) {
      std::vector<std::string> path;
      for (std::string at = to; !at.empty(); at = parent[at])
        path.insert(path.begin(), at);
      return path;
    }
    auto it = graph.find(u);
    if (it == graph.end())
      continue;
    for (const auto& z : it->second.out) {
      if (parent.count(z) == 0 && hasEdge(graph, u, z)) {
        parent[z] = u;
        stack.push_back(z);
      }
    }
  }
  return {};
}

int
parseInt(std::string_view text)
{
  int value = -1;
  std::from_chars(text.data(), text.data() + text.size(), value);
  return value;
}

} // namespace

std::vector<InterestLoop>
findUndetectedLoops(const TraceLog& trace)
{
  std::unordered_map<std::string, NameGraph> graphs;
  std::vector<InterestLoop> loops;

  auto onEdge = [&] (const TraceRecord& r, NameGraph& graph, const std::string& v, const std::string& w) {
    if (!hasEdge(graph, v, w))
      return;
    auto path = findPath(graph, w, v);
    if (!path.empty())
      loops.push_back(InterestLoop{r.time, r.name, std::move(path)});
  };

  for (const auto& r : trace.records()) {
    if (r.kind.compare(0, 4, "pit-") != 0)
      continue;
    auto& graph = graphs[r.name];
    auto& self = graph[r.node];

    if (r.kind == "pit-create" || r.kind == "pit-aggregate") {
      auto peer = detailValue(r.detail, r.kind == "pit-create" ? "in" : "from");
      if (!peer || *peer == "app")
        continue;
      std::string v(*peer);
      if (self.in.insert(v).second)
        onEdge(r, graph, v, r.node);
    }
    else if (r.kind == "pit-out") {
      auto peer = detailValue(r.detail, "to");
      if (!peer)
        continue;
      std::string w(*peer);
      if (self.out.insert(w).second)
        onEdge(r, graph, r.node, w);
    }
    else if (r.kind == "pit-in-remove") {
      if (auto peer = detailValue(r.detail, "peer"))
        self.in.erase(std::string(*peer));
    }
    else if (r.kind == "pit-out-remove") {
      if (auto peer = detailValue(r.detail, "peer"))
        self.out.erase(std::string(*peer));
    }
    else if (r.kind == "pit-delete") {
      graph.erase(r.node);
      if (graph.empty())
        graphs.erase(r.name);
    }
  }
  return loops;
}

std::vector<HopViolation>
checkHopMonotonicity(const TraceLog& trace)
{
  struct LastReceived
  {
    SimTime time;
    int hop;
  };
  std::map<std::pair<std::string, std::string>, LastReceived> last;
  std::vector<HopViolation> violations;

  for (const auto& r : trace.records()) {
    if (r.kind == "recv-interest") {
      if (auto hop = detailValue(r.detail, "hop"))
        last[{r.node, r.name}] = {r.time, parseInt(*hop)};
    }
    else if (r.kind == "send-interest") {
      auto hop = detailValue(r.detail, "hop");
      if (!hop)
        continue;
      int sent = parseInt(*hop);
      auto it = last.find({r.node, r.name});
      if (it == last.end() || it->second.time != r.time) {
        violations.push_back({r.time, r.node, r.name, -1, sent});
      }
      else if (!(it->second.hop > sent)) {
        violations.push_back({r.time, r.node, r.name, it->second.hop, sent});
      }
    }
  }
  return violations;
}

std::vector<LivenessViolation>
checkLiveness(const TraceLog& trace)
{
  std::map<std::pair<std::string, std::string>, bool> awaiting;
  std::vector<LivenessViolation> violations;

  for (const auto& r : trace.records()) {
    auto key = std::make_pair(r.node, r.name);
    if (r.kind == "app-interest") {
      if (awaiting[key])
        violations.push_back({r.node, r.name, "re-expressed before a response"});
      awaiting[key] = true;
    }
    else if (r.kind == "app-data" || r.kind == "app-nack") {
      if (!awaiting[key])
        violations.push_back({r.node, r.name, "extra " + r.kind.substr(4)});
      awaiting[key] = false;
    }
    else if (r.kind == "app-timeout") {
      violations.push_back({r.node, r.name, "local timeout"});
      awaiting[key] = false;
    }
  }
  for (const auto& [key, isAwaiting] : awaiting) {
    if (isAwaiting)
      violations.push_back({key.first, key.second, "unanswered at run end"});
  }
  if (!trace.isComplete())
    violations.push_back({"-", "-", "trace incomplete"});
  return violations;
}

LoopAccounting
accountLoops(const TraceLog& trace)
{
  LoopAccounting acc;
  acc.undetected = findUndetectedLoops(trace).size();
  for (const auto& r : trace.records()) {
    if (r.kind == "send-nack" && detailValue(r.detail, "code") == "Loop")
      ++acc.loopNacks;
    else if (r.kind == "drop" && detailValue(r.detail, "reason") == "duplicate")
      ++acc.duplicateDrops;
  }
  return acc;
}

} // namespace icn::sim
