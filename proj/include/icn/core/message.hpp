#ifndef ICN_CORE_MESSAGE_HPP
#define ICN_CORE_MESSAGE_HPP

#include "icn/core/name.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace icn {

/// 32-bit Interest nonce used by CCN/NDN for duplicate detection.
struct Nonce
{
  std::uint32_t value = 0;

  friend auto operator<=>(const Nonce&, const Nonce&) = default;
};

/** \brief Hop count to a name prefix, in [0, 255].
 *
 *  255 is the single "infinite" value: consumers originate Interests with it, and
 *  it compares greater than every routable hop count.
 */
class HopCount
{
public:
  static constexpr std::uint8_t INFINITE = 255;

  constexpr HopCount() = default;

  constexpr explicit
  HopCount(std::uint8_t value)
    : m_value(value)
  {
  }

  static constexpr HopCount
  infinity()
  {
    return HopCount(INFINITE);
  }

  constexpr std::uint8_t
  value() const noexcept
  {
    return m_value;
  }

  constexpr bool
  isInfinite() const noexcept
  {
    return m_value == INFINITE;
  }

  friend constexpr auto operator<=>(const HopCount&, const HopCount&) = default;

private:
  std::uint8_t m_value = 0;
};

enum class NackCode {
  Duplicate,
  Congestion,
  NoData,
  Loop,
  NoRoute,
  InterestExpired,
  RouteFailed,
};

inline constexpr NackCode ALL_NACK_CODES[] = {
  NackCode::Duplicate, NackCode::Congestion, NackCode::NoData, NackCode::Loop,
  NackCode::NoRoute, NackCode::InterestExpired, NackCode::RouteFailed,
};

std::string_view
toString(NackCode code);

/// Throws std::invalid_argument on an unknown code.
NackCode
parseNackCode(std::string_view text);

/** \brief Interest: a name plus either a nonce (CCN/NDN) or a hop count (SIFAH).
 */
struct Interest
{
  Name name;
  std::variant<Nonce, HopCount> tag;

  bool
  hasNonce() const noexcept
  {
    return std::holds_alternative<Nonce>(tag);
  }

  Nonce
  nonce() const
  {
    return std::get<Nonce>(tag);
  }

  HopCount
  hopCount() const
  {
    return std::get<HopCount>(tag);
  }

  friend bool operator==(const Interest&, const Interest&) = default;
};

struct NdoMessage
{
  Name name;
  std::string signature;
  std::string payload;
  std::optional<Nonce> echoNonce;

  friend bool operator==(const NdoMessage&, const NdoMessage&) = default;
};

struct Nack
{
  Name name;
  NackCode code;

  friend bool operator==(const Nack&, const Nack&) = default;
};

using Message = std::variant<Interest, NdoMessage, Nack>;

const Name&
nameOf(const Message& message);

/** \brief Stub content signature: FNV-1a 64 over the name URI and payload, as 8 raw bytes.
 */
std::string
computeSignature(const Name& name, std::string_view payload);

} // namespace icn

#endif // ICN_CORE_MESSAGE_HPP
