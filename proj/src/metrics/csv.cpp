#include "icn/metrics/csv.hpp"

#include <cctype>
#include <charconv>
#include <ostream>

namespace icn::metrics {

std::string
formatNumber(double value)
{
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed, 4);
  std::string out(buf, ptr);
  // trim trailing zeros so integers print bare
  if (out.find('.') != std::string::npos) {
    while (out.back() == '0')
      out.pop_back();
    if (out.back() == '.')
      out.pop_back();
  }
  return out;
}

static std::string
formatOptional(const std::optional<double>& value)
{
  return value ? formatNumber(*value) : "";
}

static std::string
nackColumn(NackCode code)
{
  std::string name = "nack_";
  for (char c : toString(code)) {
    if (std::isupper(static_cast<unsigned char>(c)) && name.size() > 5)
      name += '_';
    name += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return name;
}

std::vector<std::string>
summaryColumns()
{
  std::vector<std::string> cols{
    "scenario", "strategy", "loop_fraction", "seed", "routers_in_flows", "requests", "emissions",
    "avg_pending_ms", "pending_samples", "avg_pit_size", "max_pit_size", "avg_rtt_ms",
    "rtt_samples", "data", "timeouts",
  };
  for (auto code : ALL_NACK_CODES)
    cols.push_back(nackColumn(code));
  for (const char* c : {"expired", "aggregations", "cs_hits", "live_at_end", "undetected_loops",
                        "duplicate_drops", "pit_storage_bytes", "partial"})
    cols.emplace_back(c);
  return cols;
}

static void
writeLine(std::ostream& os, const std::vector<std::string>& fields)
{
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0)
      os << ',';
    os << fields[i];
  }
  os << '\n';
}

void
writeSummaryCsv(std::ostream& os, const std::vector<RunRow>& rows, const StorageParams& storage)
{
  writeLine(os, summaryColumns());
  for (const auto& row : rows) {
    const auto& r = row.report;
    std::uint64_t requests = 0;
    std::uint64_t emissions = 0;
    std::uint64_t data = 0;
    std::uint64_t timeouts = 0;
    for (const auto& c : r.consumers) {
      requests += c.requests;
      emissions += c.emissions;
      data += c.data;
      timeouts += c.timeouts;
    }
    std::vector<std::string> f{
      row.scenario,
      std::string(sim::toString(row.strategy)),
      formatOptional(row.loopFraction),
      std::to_string(row.seed),
      std::to_string(r.routers.size()),
      std::to_string(requests),
      std::to_string(emissions),
      formatOptional(r.avgPendingMs),
      std::to_string(r.pendingSamples),
      formatOptional(r.avgPitSize),
      std::to_string(r.maxPitSize),
      formatOptional(r.avgRttMs),
      std::to_string(r.rttSamples),
      std::to_string(data),
      std::to_string(timeouts),
    };
    for (auto code : ALL_NACK_CODES) {
      auto it = r.nacksSent.find(code);
      f.push_back(std::to_string(it == r.nacksSent.end() ? 0 : it->second));
    }
    f.push_back(std::to_string(r.expired));
    f.push_back(std::to_string(r.aggregations));
    f.push_back(std::to_string(r.csHits));
    f.push_back(std::to_string(r.liveAtEnd));
    f.push_back(std::to_string(r.undetectedLoops));
    f.push_back(std::to_string(r.duplicateDrops));
    f.push_back(formatNumber(storageEstimate(row.strategy, r, storage)));
    f.push_back(r.partial ? "1" : "0");
    writeLine(os, f);
  }
}

void
writeSeriesCsv(std::ostream& os, const std::vector<RunRow>& rows)
{
  writeLine(os, {"scenario", "strategy", "loop_fraction", "series", "node", "time_ms", "value"});
  for (const auto& row : rows) {
    const std::string prefix = row.scenario + "," + std::string(sim::toString(row.strategy)) + "," +
                               formatOptional(row.loopFraction) + ",";
    for (const auto& s : row.report.pitSeries) {
      os << prefix << "pit_size," << s.node << ','
         << formatNumber(static_cast<double>(s.time.count()) / 1e6) << ',' << s.entries << '\n';
    }
  }
}

} // namespace icn::metrics
