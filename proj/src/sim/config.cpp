#include "icn/sim/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <set>

namespace icn::sim {

std::string_view
toString(StrategyKind kind)
{
  switch (kind) {
    case StrategyKind::Ccn:
      return "ccn";
    case StrategyKind::Ndn:
      return "ndn";
    case StrategyKind::Sifah:
      return "sifah";
  }
  return "?";
}

StrategyKind
parseStrategyKind(std::string_view text)
{
  for (auto kind : {StrategyKind::Ccn, StrategyKind::Ndn, StrategyKind::Sifah}) {
    if (toString(kind) == text)
      return kind;
  }
  throw std::invalid_argument("unknown strategy '" + std::string(text) + "' (expected ccn, ndn or sifah)");
}

std::string_view
toString(NodeRole role)
{
  switch (role) {
    case NodeRole::Router:
      return "router";
    case NodeRole::Consumer:
      return "consumer";
    case NodeRole::Producer:
      return "producer";
  }
  return "?";
}

NodeRole
parseNodeRole(std::string_view text)
{
  for (auto role : {NodeRole::Router, NodeRole::Consumer, NodeRole::Producer}) {
    if (toString(role) == text)
      return role;
  }
  throw std::invalid_argument("unknown node role '" + std::string(text) + "'");
}

const NodeSpec*
findNode(const RunConfig& config, std::string_view name)
{
  auto it = std::find_if(config.nodes.begin(), config.nodes.end(),
                         [name] (const auto& n) { return n.name == name; });
  return it == config.nodes.end() ? nullptr : &*it;
}

static bool
isValidNodeName(std::string_view name)
{
  if (name.empty() || name == "app" || name == "-")
    return false;
  return std::all_of(name.begin(), name.end(), [] (char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
  });
}

static std::string
linkLabel(const std::string& a, const std::string& b)
{
  return "link " + a + "-" + b;
}

static const LinkSpec*
findLink(const RunConfig& config, std::string_view a, std::string_view b)
{
  for (const auto& l : config.links) {
    if ((l.a == a && l.b == b) || (l.a == b && l.b == a))
      return &l;
  }
  return nullptr;
}

void
validate(const RunConfig& config)
{
  if (config.duration <= Duration::zero())
    throw ConfigError("run: duration must be positive");
  if (config.mil <= Duration::zero())
    throw ConfigError("run: mil must be positive");
  if (config.phase < Duration::zero())
    throw ConfigError("run: phase must not be negative");
  if (config.retxInterval && *config.retxInterval <= Duration::zero())
    throw ConfigError("run: retx_interval must be positive");
  if (config.pitSampleInterval <= Duration::zero())
    throw ConfigError("run: pit sampling interval must be positive");

  std::set<std::string> names;
  for (const auto& n : config.nodes) {
    if (!isValidNodeName(n.name))
      throw ConfigError("node '" + n.name + "': invalid name");
    if (!names.insert(n.name).second)
      throw ConfigError("node '" + n.name + "': duplicate");
  }
  if (config.nodes.empty())
    throw ConfigError("nodes: no nodes defined");

  std::set<std::pair<std::string, std::string>> linkKeys;
  for (const auto& l : config.links) {
    const auto label = linkLabel(l.a, l.b);
    if (!findNode(config, l.a))
      throw ConfigError(label + ": unknown node '" + l.a + "'");
    if (!findNode(config, l.b))
      throw ConfigError(label + ": unknown node '" + l.b + "'");
    if (l.a == l.b)
      throw ConfigError(label + ": self-loop");
    if (!linkKeys.insert(std::minmax(l.a, l.b)).second)
      throw ConfigError(label + ": duplicate link");
    if (l.delay <= Duration::zero())
      throw ConfigError(label + ": delay must be positive");
    if (!(l.lossRate >= 0.0 && l.lossRate <= 1.0))
      throw ConfigError(label + ": loss must be in [0, 1]");
  }

  std::map<std::pair<std::string, Prefix>, std::pair<std::set<std::uint32_t>, std::set<std::string>>> fibKeys;
  for (const auto& row : config.fib) {
    const auto label = "fib " + row.node + " " + row.prefix.toUri() + " " + row.neighbor;
    const NodeSpec* node = findNode(config, row.node);
    if (!node)
      throw ConfigError(label + ": unknown node '" + row.node + "'");
    if (node->role == NodeRole::Producer)
      throw ConfigError(label + ": producers keep no FIB");
    if (!findNode(config, row.neighbor))
      throw ConfigError(label + ": unknown neighbor '" + row.neighbor + "'");
    if (!findLink(config, row.node, row.neighbor))
      throw ConfigError(label + ": no link between " + row.node + " and " + row.neighbor);
    if (row.hopCount.isInfinite())
      throw ConfigError(label + ": hop count must be below 255");
    if (row.rank == 0)
      throw ConfigError(label + ": rank must be positive");
    auto& [ranks, neighbors] = fibKeys[{row.node, row.prefix}];
    if (!ranks.insert(row.rank).second)
      throw ConfigError(label + ": duplicate rank " + std::to_string(row.rank));
    if (!neighbors.insert(row.neighbor).second)
      throw ConfigError(label + ": duplicate neighbor");
  }

  std::set<std::string> consumerNodes;
  for (const auto& c : config.consumers) {
    const auto label = "consumer " + c.node;
    const NodeSpec* node = findNode(config, c.node);
    if (!node)
      throw ConfigError(label + ": unknown node");
    if (node->role != NodeRole::Consumer)
      throw ConfigError(label + ": node role is not consumer");
    if (!consumerNodes.insert(c.node).second)
      throw ConfigError(label + ": duplicate consumer");
    if (c.prefixes.empty())
      throw ConfigError(label + ": no prefixes");
    double sum = 0;
    for (const auto& wp : c.prefixes) {
      if (!(wp.weight >= 0.0))
        throw ConfigError(label + ": negative weight for " + wp.prefix.toUri());
      sum += wp.weight;
    }
    if (std::abs(sum - 1.0) > 1e-9)
      throw ConfigError(label + ": prefix weights must sum to 1");
    if (!(c.rate > 0.0) || !std::isfinite(c.rate))
      throw ConfigError(label + ": rate must be positive");
    if (c.timeout && *c.timeout <= Duration::zero())
      throw ConfigError(label + ": timeout must be positive");
    if (c.retxBackoff < Duration::zero())
      throw ConfigError(label + ": retx_backoff must not be negative");
    if (c.start && *c.start < Duration::zero())
      throw ConfigError(label + ": start must not be negative");
  }

  std::set<std::string> producerNodes;
  for (const auto& p : config.producers) {
    const auto label = "producer " + p.node;
    const NodeSpec* node = findNode(config, p.node);
    if (!node)
      throw ConfigError(label + ": unknown node");
    if (node->role != NodeRole::Producer)
      throw ConfigError(label + ": node role is not producer");
    if (!producerNodes.insert(p.node).second)
      throw ConfigError(label + ": duplicate producer");
    if (p.prefixes.empty())
      throw ConfigError(label + ": no prefixes");
  }

  for (const auto& f : config.failures) {
    const auto label = "failure " + f.a + "-" + f.b;
    if (!findLink(config, f.a, f.b))
      throw ConfigError(label + ": no such link");
    if (f.at < Duration::zero())
      throw ConfigError(label + ": time must not be negative");
  }
}

std::vector<FibRow>
resolveFib(const RunConfig& config)
{
  std::map<std::string, std::vector<std::string>> neighbors;
  for (const auto& l : config.links) {
    neighbors[l.a].push_back(l.b);
    neighbors[l.b].push_back(l.a);
  }
  for (auto& [node, list] : neighbors)
    std::sort(list.begin(), list.end());

  std::map<std::pair<std::string, Prefix>, std::vector<FibRow>> rows;

  for (const auto& prefix : config.autoFib) {
    constexpr int UNREACHABLE = std::numeric_limits<int>::max();
    std::map<std::string, int> dist;
    for (const auto& n : config.nodes)
      dist[n.name] = UNREACHABLE;

    std::deque<std::string> queue;
    for (const auto& p : config.producers) {
      if (std::find(p.prefixes.begin(), p.prefixes.end(), prefix) != p.prefixes.end()) {
        dist[p.node] = 0;
        queue.push_back(p.node);
      }
    }
    // producers do not forward, so only routers and consumers relay distances
    while (!queue.empty()) {
      auto node = queue.front();
      queue.pop_front();
      for (const auto& nb : neighbors[node]) {
        if (findNode(config, nb)->role == NodeRole::Producer || dist[nb] != UNREACHABLE)
          continue;
        dist[nb] = dist[node] + 1;
        queue.push_back(nb);
      }
    }

    for (const auto& n : config.nodes) {
      if (n.role == NodeRole::Producer)
        continue;
      std::vector<std::pair<int, std::string>> candidates;
      for (const auto& nb : neighbors[n.name]) {
        if (dist[nb] != UNREACHABLE && dist[nb] + 1 < HopCount::INFINITE)
          candidates.emplace_back(dist[nb] + 1, nb);
      }
      std::sort(candidates.begin(), candidates.end());
      auto& list = rows[{n.name, prefix}];
      std::uint32_t rank = 1;
      for (const auto& [hops, nb] : candidates) {
        list.push_back(FibRow{n.name, prefix, nb, HopCount(static_cast<std::uint8_t>(hops)), rank++});
      }
    }
  }

  std::set<std::pair<std::string, Prefix>> overridden;
  for (const auto& row : config.fib) {
    auto key = std::make_pair(row.node, row.prefix);
    if (overridden.insert(key).second)
      rows[key].clear();
    rows[key].push_back(row);
  }

  std::vector<FibRow> out;
  for (auto& [key, list] : rows) {
    std::sort(list.begin(), list.end(), [] (const auto& a, const auto& b) { return a.rank < b.rank; });
    out.insert(out.end(), list.begin(), list.end());
  }
  return out;
}

Duration
consumerStart(const RunConfig& config, std::size_t consumerIndex)
{
  const auto& c = config.consumers.at(consumerIndex);
  return c.start.value_or(config.phase * static_cast<std::int64_t>(consumerIndex));
}

Duration
consumerTimeout(const RunConfig& config, const ConsumerSpec& consumer)
{
  return consumer.timeout.value_or(2 * config.mil);
}

} // namespace icn::sim
