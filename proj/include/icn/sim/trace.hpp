#ifndef ICN_SIM_TRACE_HPP
#define ICN_SIM_TRACE_HPP

#include "icn/core/message.hpp"
#include "icn/core/types.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace icn::sim {

/** \brief One trace line: `time_ns node kind name detail`.
 *
 *  `name` is "-" for records not tied to a content name. `detail` is a sequence of
 *  space-separated key=value tokens and may be empty.
 *
 *  Kinds written by the simulator:
 *  - send-interest|send-data|send-nack   detail: to=<peer> <message fields>
 *  - recv-interest|recv-data|recv-nack   detail: from=<peer> <message fields>
 *  - loss / link-down                    message discarded by a lossy or failed link
 *  - pit-create in=<peer> [nonce=] | pit-aggregate from=<peer> [nonce=] | pit-out to=<peer>
 *  - pit-in-remove peer= | pit-out-remove peer= | pit-delete reason=
 *  - pit-timer | cs-hit | cs-insert | drop reason= | link-fail peer=
 *  - app-interest retx=<n> <fields> | app-data | app-nack code= | app-timeout
 *  - app-close outcome=data|nack|timeout [rtt_ns=]
 *  - end (last line of a complete trace)
 *
 *  Peers are neighbor node names, or "app" for the local application face.
 */
struct TraceRecord
{
  SimTime time{0};
  std::string node;
  std::string kind;
  std::string name;
  std::string detail;

  friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

class TraceLog
{
public:
  class ParseError : public std::runtime_error
  {
  public:
    using std::runtime_error::runtime_error;
  };

  void
  add(TraceRecord record)
  {
    m_records.push_back(std::move(record));
  }

  const std::vector<TraceRecord>&
  records() const noexcept
  {
    return m_records;
  }

  std::size_t
  size() const noexcept
  {
    return m_records.size();
  }

  /// A complete trace ends with an `end` record.
  bool
  isComplete() const noexcept;

  void
  write(std::ostream& os) const;

  std::string
  str() const;

  static TraceLog
  parse(std::istream& is);

  static TraceRecord
  parseLine(std::string_view line);

private:
  std::vector<TraceRecord> m_records;
};

std::string
formatRecord(const TraceRecord& record);

/// Message fields without the name, e.g. "hop=8", "nonce=12", "code=Loop", "sig=.. payload=..".
std::string
encodeMessageFields(const Message& message);

/** \brief Rebuilds a message from its type ("interest", "data", "nack"), name and fields.
 *  \throw std::invalid_argument on malformed fields
 */
Message
decodeMessage(std::string_view type, const Name& name, std::string_view fields);

/// Builds a send-* or recv-* record for \p message; \p direction is "send" or "recv".
TraceRecord
messageRecord(SimTime time, std::string node, std::string_view direction, std::string_view peer,
              const Message& message);

/// Decodes the message carried by a send-* or recv-* record.
std::optional<Message>
messageOf(const TraceRecord& record);

/// Value of `key=` in a detail string.
std::optional<std::string_view>
detailValue(std::string_view detail, std::string_view key);

std::string
toHex(std::string_view bytes);

std::string
fromHex(std::string_view hex);

} // namespace icn::sim

#endif // ICN_SIM_TRACE_HPP
