#include "icn/metrics/metrics.hpp"
#include "icn/sim/trace-analysis.hpp"

#include <charconv>
#include <set>

namespace icn::metrics {

namespace {

constexpr double NS_PER_MS = 1e6;

std::int64_t
parseNs(std::string_view text)
{
  std::int64_t value = 0;
  std::from_chars(text.data(), text.data() + text.size(), value);
  return value;
}

struct Mean
{
  double sum = 0;
  std::uint64_t count = 0;

  void
  add(double v)
  {
    sum += v;
    ++count;
  }

  std::optional<double>
  value() const
  {
    if (count == 0)
      return std::nullopt;
    return sum / static_cast<double>(count);
  }
};

} // namespace

MetricsReport
computeMetrics(const sim::TraceLog& trace, const sim::RunConfig& config)
{
  MetricsReport report;
  report.partial = !trace.isComplete();

  std::set<std::string> producers;
  for (const auto& n : config.nodes) {
    if (n.role == sim::NodeRole::Producer)
      producers.insert(n.name);
  }

  // routers included in Interest flows
  std::set<std::string> flowRouters;
  for (const auto& r : trace.records()) {
    if (r.kind == "recv-interest" && producers.count(r.node) == 0)
      flowRouters.insert(r.node);
  }

  std::map<std::string, Mean> pendingByNode;
  std::map<std::string, Mean> sizeByNode;
  std::map<std::string, std::size_t> maxByNode;
  std::map<std::string, std::size_t> liveCount;
  std::map<std::pair<std::string, std::string>, SimTime> created;
  Mean pending;
  Mean pitSize;

  std::map<std::string, ConsumerMetrics> consumers;
  for (const auto& c : config.consumers)
    consumers[c.node].node = c.node;
  Mean rtt;
  std::map<std::string, Mean> rttByNode;

  const auto interval = config.pitSampleInterval;
  SimTime nextSample{0};
  const SimTime end = trace.isComplete() ? trace.records().back().time : config.duration;

  auto takeSamplesUpTo = [&] (SimTime t, bool inclusive) {
    while (nextSample <= end && (inclusive ? nextSample <= t : nextSample < t)) {
      for (const auto& node : flowRouters) {
        std::size_t n = liveCount[node];
        report.pitSeries.push_back({nextSample, node, n});
        sizeByNode[node].add(static_cast<double>(n));
        pitSize.add(static_cast<double>(n));
      }
      nextSample += interval;
    }
  };

  for (const auto& r : trace.records()) {
    // sample state as of the end of each instant
    takeSamplesUpTo(r.time, false);

    if (r.kind == "pit-create") {
      created[{r.node, r.name}] = r.time;
      std::size_t n = ++liveCount[r.node];
      maxByNode[r.node] = std::max(maxByNode[r.node], n);
      ++report.pitCreated;
    }
    else if (r.kind == "pit-delete") {
      auto it = created.find({r.node, r.name});
      if (it != created.end()) {
        double ms = static_cast<double>((r.time - it->second).count()) / NS_PER_MS;
        pending.add(ms);
        pendingByNode[r.node].add(ms);
        created.erase(it);
        --liveCount[r.node];
      }
      if (sim::detailValue(r.detail, "reason") == "expired")
        ++report.expired;
    }
    else if (r.kind == "pit-aggregate") {
      ++report.aggregations;
    }
    else if (r.kind == "cs-hit") {
      ++report.csHits;
    }
    else if (r.kind == "send-nack") {
      if (auto code = sim::detailValue(r.detail, "code"))
        ++report.nacksSent[parseNackCode(*code)];
    }
    else if (r.kind == "drop") {
      if (sim::detailValue(r.detail, "reason") == "duplicate")
        ++report.duplicateDrops;
    }
    else if (r.kind == "app-interest") {
      auto& c = consumers[r.node];
      c.node = r.node;
      ++c.emissions;
      if (sim::detailValue(r.detail, "retx") == "0")
        ++c.requests;
    }
    else if (r.kind == "app-data") {
      ++consumers[r.node].data;
    }
    else if (r.kind == "app-nack") {
      ++consumers[r.node].nacks;
      if (auto code = sim::detailValue(r.detail, "code"))
        ++report.nacksToConsumers[parseNackCode(*code)];
    }
    else if (r.kind == "app-timeout") {
      ++consumers[r.node].timeouts;
    }
    else if (r.kind == "app-close") {
      if (auto value = sim::detailValue(r.detail, "rtt_ns")) {
        double ms = static_cast<double>(parseNs(*value)) / NS_PER_MS;
        auto& c = consumers[r.node];
        rtt.add(ms);
        rttByNode[r.node].add(ms);
        ++c.rttSamples;
        ++c.rttHistogram[static_cast<std::int64_t>(ms / 10.0) * 10];
      }
    }
  }
  takeSamplesUpTo(end, true);

  report.avgPendingMs = pending.value();
  report.pendingSamples = pending.count;
  report.avgPitSize = pitSize.value();
  report.avgRttMs = rtt.value();
  report.rttSamples = rtt.count;
  report.liveAtEnd = created.size();

  for (const auto& node : flowRouters) {
    RouterMetrics m;
    m.node = node;
    m.pendingSamples = pendingByNode[node].count;
    m.avgPendingMs = pendingByNode[node].value();
    m.avgPitSize = sizeByNode[node].value();
    m.maxPitSize = maxByNode[node];
    report.maxPitSize = std::max(report.maxPitSize, m.maxPitSize);
    report.routers.push_back(std::move(m));
  }
  for (auto& [node, c] : consumers) {
    c.avgRttMs = rttByNode[node].value();
    report.consumers.push_back(std::move(c));
  }

  report.undetectedLoops = sim::findUndetectedLoops(trace).size();
  return report;
}

} // namespace icn::metrics
