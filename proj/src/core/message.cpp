#include "icn/core/message.hpp"

#include <stdexcept>

namespace icn {

std::string_view
toString(NackCode code)
{
  switch (code) {
    case NackCode::Duplicate:
      return "Duplicate";
    case NackCode::Congestion:
      return "Congestion";
    case NackCode::NoData:
      return "NoData";
    case NackCode::Loop:
      return "Loop";
    case NackCode::NoRoute:
      return "NoRoute";
    case NackCode::InterestExpired:
      return "InterestExpired";
    case NackCode::RouteFailed:
      return "RouteFailed";
  }
  return "?";
}

NackCode
parseNackCode(std::string_view text)
{
  for (auto code : ALL_NACK_CODES) {
    if (toString(code) == text)
      return code;
  }
  throw std::invalid_argument("unknown NACK code '" + std::string(text) + "'");
}

const Name&
nameOf(const Message& message)
{
  return std::visit([] (const auto& m) -> const Name& { return m.name; }, message);
}

std::string
computeSignature(const Name& name, std::string_view payload)
{
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  auto mix = [&hash] (std::string_view bytes) {
    for (unsigned char c : bytes) {
      hash ^= c;
      hash *= 0x100000001b3ULL;
    }
  };
  mix(name.toUri());
  mix(payload);

  std::string sig(8, '\0');
  for (int i = 0; i < 8; ++i) {
    sig[i] = static_cast<char>((hash >> (56 - 8 * i)) & 0xFF);
  }
  return sig;
}

} // namespace icn
