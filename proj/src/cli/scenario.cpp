#include "icn/cli/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace icn::cli {

using sim::ConfigError;

ParseError::ParseError(std::size_t line, std::string field, const std::string& message)
  : std::runtime_error("line " + std::to_string(line) + ", field '" + field + "': " + message)
  , m_line(line)
  , m_field(std::move(field))
{
}

Duration
parseDuration(std::string_view text)
{
  static const std::pair<std::string_view, std::int64_t> UNITS[] = {
    {"ns", 1}, {"us", 1'000}, {"ms", 1'000'000}, {"s", 1'000'000'000},
  };
  for (const auto& [suffix, scale] : UNITS) {
    if (text.size() <= suffix.size() || text.substr(text.size() - suffix.size()) != suffix)
      continue;
    auto digits = text.substr(0, text.size() - suffix.size());
    // "ms" also ends in "s"; a digit must precede the unit
    if (!std::isdigit(static_cast<unsigned char>(digits.back())))
      continue;
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || value < 0)
      break;
    if (value > std::numeric_limits<std::int64_t>::max() / scale)
      throw std::invalid_argument("duration out of range: '" + std::string(text) + "'");
    return Duration(value * scale);
  }
  throw std::invalid_argument("invalid duration '" + std::string(text) + "' (expected e.g. 10ms, 2s)");
}

std::string
formatDuration(Duration d)
{
  const auto ns = d.count();
  if (ns != 0 && ns % 1'000'000'000 == 0)
    return std::to_string(ns / 1'000'000'000) + "s";
  if (ns != 0 && ns % 1'000'000 == 0)
    return std::to_string(ns / 1'000'000) + "ms";
  if (ns != 0 && ns % 1'000 == 0)
    return std::to_string(ns / 1'000) + "us";
  return std::to_string(ns) + "ns";
}

std::string
formatDouble(double value)
{
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

double
parseDouble(std::string_view text)
{
  double value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value))
    throw std::invalid_argument("invalid number '" + std::string(text) + "'");
  return value;
}

namespace {

template<typename T>
T
parseUnsigned(std::string_view text)
{
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
    throw std::invalid_argument("invalid non-negative integer '" + std::string(text) + "'");
  return value;
}

std::string_view
trim(std::string_view s)
{
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view>
splitWords(std::string_view s)
{
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
      ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])))
      ++j;
    if (j > i)
      words.push_back(s.substr(i, j - i));
    i = j;
  }
  return words;
}

std::vector<std::string_view>
splitList(std::string_view s, char sep)
{
  std::vector<std::string_view> items;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    items.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos)
      break;
    start = pos + 1;
  }
  return items;
}

class LineParser
{
public:
  LineParser(std::size_t line, std::string_view section)
    : m_line(line)
    , m_section(section)
  {
  }

  [[noreturn]] void
  fail(std::string_view field, const std::string& message) const
  {
    throw ParseError(m_line, std::string(m_section) + "." + std::string(field), message);
  }

  /// Runs \p fn, converting parse failures into ParseError for \p field.
  template<typename Fn>
  auto
  convert(std::string_view field, Fn&& fn) const
  {
    try {
      return fn();
    }
    catch (const ParseError&) {
      throw;
    }
    catch (const std::exception& e) {
      fail(field, e.what());
    }
  }

  /// Splits key=value options after \p positional leading words.
  std::map<std::string, std::string>
  options(const std::vector<std::string_view>& words, std::size_t positional,
          std::initializer_list<std::string_view> allowed) const
  {
    if (words.size() < positional)
      fail("line", "expected " + std::to_string(positional) + " positional fields");
    std::map<std::string, std::string> opts;
    for (std::size_t i = positional; i < words.size(); ++i) {
      auto eq = words[i].find('=');
      if (eq == std::string_view::npos)
        fail(words[i], "expected key=value");
      std::string key(words[i].substr(0, eq));
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
        fail(key, "unknown key");
      if (!opts.emplace(key, std::string(words[i].substr(eq + 1))).second)
        fail(key, "given twice");
    }
    return opts;
  }

private:
  std::size_t m_line;
  std::string_view m_section;
};

const std::set<std::string_view> SECTIONS{"run", "nodes", "links", "fib", "consumers",
                                          "producers", "failures", "sweep"};

} // namespace

Scenario
parseScenario(std::string_view text, std::string name)
{
  Scenario sc;
  sc.name = std::move(name);
  auto& cfg = sc.config;
  std::string section;
  std::set<std::string> seenRunKeys;
  std::set<std::string> seenSections;
  std::size_t lineNo = 0;

  for (auto rawLine : splitList(text, '\n')) {
    ++lineNo;
    auto hash = rawLine.find('#');
    auto line = trim(rawLine.substr(0, hash));
    if (line.empty())
      continue;

    if (line.front() == '[') {
      if (line.back() != ']')
        throw ParseError(lineNo, "section", "unterminated section header");
      section = std::string(trim(line.substr(1, line.size() - 2)));
      if (SECTIONS.count(section) == 0)
        throw ParseError(lineNo, "section", "unknown section '" + section + "'");
      if (!seenSections.insert(section).second)
        throw ParseError(lineNo, "section", "section '" + section + "' given twice");
      continue;
    }
    if (section.empty())
      throw ParseError(lineNo, "section", "content before the first section header");

    LineParser p(lineNo, section);
    auto words = splitWords(line);

    if (section == "run" || section == "sweep") {
      auto eq = line.find('=');
      if (eq == std::string_view::npos)
        p.fail("line", "expected key = value");
      std::string key(trim(line.substr(0, eq)));
      auto value = trim(line.substr(eq + 1));
      if (!seenRunKeys.insert(section + "." + key).second)
        p.fail(key, "given twice");

      if (section == "sweep") {
        if (key == "loop_prefix")
          sc.loopPrefix = p.convert(key, [&] { return Prefix::parse(value); });
        else if (key == "fractions")
          sc.fractions = p.convert(key, [&] {
            std::vector<double> out;
            for (auto w : splitWords(value))
              out.push_back(parseDouble(w));
            return out;
          });
        else
          p.fail(key, "unknown key");
        continue;
      }

      if (key == "strategies") {
        sc.strategies = p.convert(key, [&] {
          std::vector<sim::StrategyKind> out;
          for (auto w : splitWords(value))
            out.push_back(sim::parseStrategyKind(w));
          if (out.empty())
            throw std::invalid_argument("at least one strategy required");
          return out;
        });
      }
      else if (key == "duration")
        cfg.duration = p.convert(key, [&] { return parseDuration(value); });
      else if (key == "seed")
        cfg.seed = p.convert(key, [&] { return parseUnsigned<std::uint64_t>(value); });
      else if (key == "mil")
        cfg.mil = p.convert(key, [&] { return parseDuration(value); });
      else if (key == "phase")
        cfg.phase = p.convert(key, [&] { return parseDuration(value); });
      else if (key == "retx_interval")
        cfg.retxInterval = p.convert(key, [&] { return parseDuration(value); });
      else if (key == "cs_capacity")
        cfg.csCapacity = p.convert(key, [&] { return parseUnsigned<std::size_t>(value); });
      else if (key == "verification")
        cfg.verification = p.convert(key, [&] { return fw::sifah::parseVerification(value); });
      else if (key == "pit_sample_interval")
        cfg.pitSampleInterval = p.convert(key, [&] { return parseDuration(value); });
      else
        p.fail(key, "unknown key");
    }
    else if (section == "nodes") {
      if (words.size() != 2)
        p.fail("line", "expected '<name> <role>'");
      cfg.nodes.push_back(sim::NodeSpec{std::string(words[0]),
                                        p.convert("role", [&] { return sim::parseNodeRole(words[1]); })});
    }
    else if (section == "links") {
      auto opts = p.options(words, 2, {"delay", "loss"});
      sim::LinkSpec link{std::string(words[0]), std::string(words[1])};
      if (opts.count("delay"))
        link.delay = p.convert("delay", [&] { return parseDuration(opts["delay"]); });
      if (opts.count("loss"))
        link.lossRate = p.convert("loss", [&] { return parseDouble(opts["loss"]); });
      cfg.links.push_back(std::move(link));
    }
    else if (section == "fib") {
      if (words.size() == 2 && words[0] == "auto") {
        cfg.autoFib.push_back(p.convert("prefix", [&] { return Prefix::parse(words[1]); }));
        continue;
      }
      auto opts = p.options(words, 3, {"hop", "rank"});
      if (!opts.count("hop") || !opts.count("rank"))
        p.fail(opts.count("hop") ? "rank" : "hop", "required");
      sim::FibRow row;
      row.node = words[0];
      row.prefix = p.convert("prefix", [&] { return Prefix::parse(words[1]); });
      row.neighbor = words[2];
      row.hopCount = HopCount(p.convert("hop", [&] { return parseUnsigned<std::uint8_t>(opts["hop"]); }));
      row.rank = p.convert("rank", [&] { return parseUnsigned<std::uint32_t>(opts["rank"]); });
      cfg.fib.push_back(std::move(row));
    }
    else if (section == "consumers") {
      auto opts = p.options(words, 1, {"prefixes", "rate", "start", "stop", "limit", "max_retx",
                                       "retx_backoff", "timeout"});
      sim::ConsumerSpec c;
      c.node = words[0];
      if (!opts.count("prefixes"))
        p.fail("prefixes", "required");
      c.prefixes = p.convert("prefixes", [&] {
        std::vector<sim::WeightedPrefix> out;
        for (auto item : splitList(opts["prefixes"], ',')) {
          auto colon = item.rfind(':');
          if (colon == std::string_view::npos)
            out.push_back({Prefix::parse(item), 1.0});
          else
            out.push_back({Prefix::parse(item.substr(0, colon)), parseDouble(item.substr(colon + 1))});
        }
        return out;
      });
      if (opts.count("rate"))
        c.rate = p.convert("rate", [&] { return parseDouble(opts["rate"]); });
      if (opts.count("start"))
        c.start = p.convert("start", [&] { return parseDuration(opts["start"]); });
      if (opts.count("stop"))
        c.stop = p.convert("stop", [&] { return parseDuration(opts["stop"]); });
      if (opts.count("limit"))
        c.limit = p.convert("limit", [&] { return parseUnsigned<std::uint64_t>(opts["limit"]); });
      if (opts.count("max_retx"))
        c.maxRetx = p.convert("max_retx", [&] { return parseUnsigned<unsigned>(opts["max_retx"]); });
      if (opts.count("retx_backoff"))
        c.retxBackoff = p.convert("retx_backoff", [&] { return parseDuration(opts["retx_backoff"]); });
      if (opts.count("timeout"))
        c.timeout = p.convert("timeout", [&] { return parseDuration(opts["timeout"]); });
      cfg.consumers.push_back(std::move(c));
    }
    else if (section == "producers") {
      auto opts = p.options(words, 1, {"prefixes", "payload"});
      sim::ProducerSpec prod;
      prod.node = words[0];
      if (!opts.count("prefixes"))
        p.fail("prefixes", "required");
      prod.prefixes = p.convert("prefixes", [&] {
        std::vector<Prefix> out;
        for (auto item : splitList(opts["prefixes"], ','))
          out.push_back(Prefix::parse(item));
        return out;
      });
      if (opts.count("payload"))
        prod.payloadSize = p.convert("payload", [&] { return parseUnsigned<std::size_t>(opts["payload"]); });
      cfg.producers.push_back(std::move(prod));
    }
    else if (section == "failures") {
      auto opts = p.options(words, 2, {"at"});
      if (words.size() < 2)
        p.fail("line", "expected '<a> <b> at=<time>'");
      if (!opts.count("at"))
        p.fail("at", "required");
      cfg.failures.push_back(sim::FailureSpec{std::string(words[0]), std::string(words[1]),
                                              p.convert("at", [&] { return parseDuration(opts["at"]); })});
    }
  }

  if (sc.fractions.empty() != !sc.loopPrefix)
    throw ParseError(lineNo, "sweep", "loop_prefix and fractions must be given together");
  for (double f : sc.fractions) {
    if (!(f >= 0.0 && f <= 1.0))
      throw ParseError(lineNo, "sweep.fractions", "fractions must lie in [0, 1]");
  }
  cfg.strategy = sc.strategies.front();
  return sc;
}

Scenario
loadScenario(const std::filesystem::path& path)
{
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open scenario file '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parseScenario(ss.str(), path.stem().string());
  }
  catch (const ParseError& e) {
    throw ParseError(e.line(), e.field(), path.string() + ": " + e.what());
  }
}

std::string
renderScenario(const Scenario& sc)
{
  const auto& cfg = sc.config;
  std::ostringstream os;

  os << "[run]\nstrategies =";
  for (auto s : sc.strategies)
    os << ' ' << sim::toString(s);
  os << "\nduration = " << formatDuration(cfg.duration)
     << "\nseed = " << cfg.seed
     << "\nmil = " << formatDuration(cfg.mil)
     << "\nphase = " << formatDuration(cfg.phase) << '\n';
  if (cfg.retxInterval)
    os << "retx_interval = " << formatDuration(*cfg.retxInterval) << '\n';
  os << "cs_capacity = " << cfg.csCapacity
     << "\nverification = " << fw::sifah::toString(cfg.verification)
     << "\npit_sample_interval = " << formatDuration(cfg.pitSampleInterval) << '\n';

  os << "\n[nodes]\n";
  for (const auto& n : cfg.nodes)
    os << n.name << ' ' << sim::toString(n.role) << '\n';

  os << "\n[links]\n";
  for (const auto& l : cfg.links)
    os << l.a << ' ' << l.b << " delay=" << formatDuration(l.delay) << " loss=" << formatDouble(l.lossRate) << '\n';

  os << "\n[fib]\n";
  for (const auto& p : cfg.autoFib)
    os << "auto " << p.toUri() << '\n';
  for (const auto& r : cfg.fib)
    os << r.node << ' ' << r.prefix.toUri() << ' ' << r.neighbor << " hop=" << int(r.hopCount.value())
       << " rank=" << r.rank << '\n';

  os << "\n[consumers]\n";
  for (const auto& c : cfg.consumers) {
    os << c.node << " prefixes=";
    for (std::size_t i = 0; i < c.prefixes.size(); ++i)
      os << (i ? "," : "") << c.prefixes[i].prefix.toUri() << ':' << formatDouble(c.prefixes[i].weight);
    os << " rate=" << formatDouble(c.rate);
    if (c.start)
      os << " start=" << formatDuration(*c.start);
    if (c.stop)
      os << " stop=" << formatDuration(*c.stop);
    if (c.limit)
      os << " limit=" << *c.limit;
    os << " max_retx=" << c.maxRetx << " retx_backoff=" << formatDuration(c.retxBackoff);
    if (c.timeout)
      os << " timeout=" << formatDuration(*c.timeout);
    os << '\n';
  }

  os << "\n[producers]\n";
  for (const auto& p : cfg.producers) {
    os << p.node << " prefixes=";
    for (std::size_t i = 0; i < p.prefixes.size(); ++i)
      os << (i ? "," : "") << p.prefixes[i].toUri();
    os << " payload=" << p.payloadSize << '\n';
  }

  if (!cfg.failures.empty()) {
    os << "\n[failures]\n";
    for (const auto& f : cfg.failures)
      os << f.a << ' ' << f.b << " at=" << formatDuration(f.at) << '\n';
  }

  if (sc.loopPrefix) {
    os << "\n[sweep]\nloop_prefix = " << sc.loopPrefix->toUri() << "\nfractions =";
    for (double f : sc.fractions)
      os << ' ' << formatDouble(f);
    os << '\n';
  }
  return os.str();
}

sim::RunConfig
makeRunConfig(const Scenario& scenario, sim::StrategyKind strategy, std::optional<double> loopFraction)
{
  sim::RunConfig cfg = scenario.config;
  cfg.strategy = strategy;
  if (!loopFraction)
    return cfg;

  const double f = *loopFraction;
  if (!(f >= 0.0 && f <= 1.0))
    throw ConfigError("loop fraction must lie in [0, 1]");
  if (!scenario.loopPrefix)
    throw ConfigError("scenario '" + scenario.name + "' has no [sweep] loop_prefix");

  for (auto& c : cfg.consumers) {
    auto loop = std::find_if(c.prefixes.begin(), c.prefixes.end(),
                             [&] (const auto& wp) { return wp.prefix == *scenario.loopPrefix; });
    if (loop == c.prefixes.end())
      continue;
    double others = 0;
    for (const auto& wp : c.prefixes)
      others += &wp == &*loop ? 0.0 : wp.weight;
    if (others <= 0.0 && f < 1.0)
      throw ConfigError("consumer " + c.node + ": no other prefix to carry weight " + formatDouble(1.0 - f));
    for (auto& wp : c.prefixes)
      wp.weight = &wp == &*loop ? f : (others > 0.0 ? wp.weight / others * (1.0 - f) : 0.0);
  }
  return cfg;
}

} // namespace icn::cli
