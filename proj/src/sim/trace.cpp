#include "icn/sim/trace.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace icn::sim {

bool
TraceLog::isComplete() const noexcept
{
  return !m_records.empty() && m_records.back().kind == "end";
}

std::string
formatRecord(const TraceRecord& record)
{
  std::string line = std::to_string(record.time.count());
  line += ' ';
  line += record.node;
  line += ' ';
  line += record.kind;
  line += ' ';
  line += record.name.empty() ? "-" : record.name;
  if (!record.detail.empty()) {
    line += ' ';
    line += record.detail;
  }
  return line;
}

void
TraceLog::write(std::ostream& os) const
{
  for (const auto& r : m_records) {
    os << formatRecord(r) << '\n';
  }
}

std::string
TraceLog::str() const
{
  std::ostringstream os;
  write(os);
  return os.str();
}

static std::string_view
nextToken(std::string_view& rest)
{
  auto pos = rest.find(' ');
  auto token = rest.substr(0, pos);
  rest = pos == std::string_view::npos ? std::string_view{} : rest.substr(pos + 1);
  return token;
}

TraceRecord
TraceLog::parseLine(std::string_view line)
{
  std::string_view rest = line;
  auto timeTok = nextToken(rest);
  auto node = nextToken(rest);
  auto kind = nextToken(rest);
  auto name = nextToken(rest);
  if (timeTok.empty() || node.empty() || kind.empty() || name.empty())
    throw ParseError("malformed trace line: '" + std::string(line) + "'");

  std::int64_t ns = 0;
  auto [ptr, ec] = std::from_chars(timeTok.data(), timeTok.data() + timeTok.size(), ns);
  if (ec != std::errc{} || ptr != timeTok.data() + timeTok.size())
    throw ParseError("bad time in trace line: '" + std::string(line) + "'");

  TraceRecord r;
  r.time = SimTime(ns);
  r.node = node;
  r.kind = kind;
  r.name = name;
  r.detail = rest;
  return r;
}

TraceLog
TraceLog::parse(std::istream& is)
{
  TraceLog log;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty())
      continue;
    log.add(parseLine(line));
  }
  return log;
}

std::string
toHex(std::string_view bytes)
{
  static constexpr char DIGITS[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out += DIGITS[c >> 4];
    out += DIGITS[c & 0xF];
  }
  return out;
}

static int
hexValue(char c)
{
  if (c >= '0' && c <= '9')
    return c - '0';
  if (c >= 'a' && c <= 'f')
    return c - 'a' + 10;
  if (c >= 'A' && c <= 'F')
    return c - 'A' + 10;
  return -1;
}

std::string
fromHex(std::string_view hex)
{
  if (hex.size() % 2 != 0)
    throw std::invalid_argument("odd-length hex string");
  std::string out;
  out.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    int hi = hexValue(hex[i]);
    int lo = hexValue(hex[i + 1]);
    if (hi < 0 || lo < 0)
      throw std::invalid_argument("invalid hex digit");
    out += static_cast<char>(hi * 16 + lo);
  }
  return out;
}

std::optional<std::string_view>
detailValue(std::string_view detail, std::string_view key)
{
  std::string_view rest = detail;
  while (!rest.empty()) {
    auto token = nextToken(rest);
    if (token.size() > key.size() && token.substr(0, key.size()) == key && token[key.size()] == '=')
      return token.substr(key.size() + 1);
  }
  return std::nullopt;
}

static std::string_view
messageType(const Message& message)
{
  switch (message.index()) {
    case 0:
      return "interest";
    case 1:
      return "data";
    default:
      return "nack";
  }
}

std::string
encodeMessageFields(const Message& message)
{
  if (const auto* interest = std::get_if<Interest>(&message)) {
    if (interest->hasNonce())
      return "nonce=" + std::to_string(interest->nonce().value);
    return "hop=" + std::to_string(interest->hopCount().value());
  }
  if (const auto* ndo = std::get_if<NdoMessage>(&message)) {
    std::string out = "sig=" + toHex(ndo->signature) + " payload=" + toHex(ndo->payload);
    if (ndo->echoNonce)
      out += " nonce=" + std::to_string(ndo->echoNonce->value);
    return out;
  }
  return "code=" + std::string(toString(std::get<Nack>(message).code));
}

template<typename T>
static T
parseUnsigned(std::string_view text, std::string_view field)
{
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw std::invalid_argument("bad " + std::string(field) + " value '" + std::string(text) + "'");
  return value;
}

static std::string_view
requireField(std::string_view fields, std::string_view key)
{
  auto value = detailValue(fields, key);
  if (!value)
    throw std::invalid_argument("missing field '" + std::string(key) + "'");
  return *value;
}

Message
decodeMessage(std::string_view type, const Name& name, std::string_view fields)
{
  if (type == "interest") {
    if (auto nonce = detailValue(fields, "nonce"))
      return Interest{name, Nonce{parseUnsigned<std::uint32_t>(*nonce, "nonce")}};
    return Interest{name, HopCount(parseUnsigned<std::uint8_t>(requireField(fields, "hop"), "hop"))};
  }
  if (type == "data") {
    NdoMessage ndo{name, fromHex(requireField(fields, "sig")), fromHex(requireField(fields, "payload")),
                   std::nullopt};
    if (auto nonce = detailValue(fields, "nonce"))
      ndo.echoNonce = Nonce{parseUnsigned<std::uint32_t>(*nonce, "nonce")};
    return ndo;
  }
  if (type == "nack")
    return Nack{name, parseNackCode(requireField(fields, "code"))};
  throw std::invalid_argument("unknown message type '" + std::string(type) + "'");
}

TraceRecord
messageRecord(SimTime time, std::string node, std::string_view direction, std::string_view peer,
              const Message& message)
{
  TraceRecord r;
  r.time = time;
  r.node = std::move(node);
  r.kind = std::string(direction) + "-" + std::string(messageType(message));
  r.name = nameOf(message).toUri();
  r.detail = std::string(direction == "send" ? "to=" : "from=") + std::string(peer) + " " +
             encodeMessageFields(message);
  return r;
}

std::optional<Message>
messageOf(const TraceRecord& record)
{
  std::string_view kind = record.kind;
  std::string_view type;
  if (kind.substr(0, 5) == "send-")
    type = kind.substr(5);
  else if (kind.substr(0, 5) == "recv-")
    type = kind.substr(5);
  else
    return std::nullopt;
  return decodeMessage(type, Name::parse(record.name), record.detail);
}

} // namespace icn::sim
