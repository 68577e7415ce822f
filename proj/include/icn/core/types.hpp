#ifndef ICN_CORE_TYPES_HPP
#define ICN_CORE_TYPES_HPP

#include <chrono>
#include <compare>
#include <cstdint>
#include <functional>

namespace icn {

/// Simulated time: integer nanoseconds since the start of a run.
using SimTime = std::chrono::nanoseconds;
using Duration = std::chrono::nanoseconds;

/** \brief Identifies one adjacency (neighbor link or local application) at a node.
 *
 *  Face ids are only meaningful relative to the node that owns them.
 */
struct FaceId
{
  std::uint32_t value = 0;

  friend auto operator<=>(const FaceId&, const FaceId&) = default;
};

/// Face 0 of every consumer node leads to its local application.
inline constexpr FaceId APP_FACEID{0};

struct NodeId
{
  std::uint32_t value = 0;

  friend auto operator<=>(const NodeId&, const NodeId&) = default;
};

} // namespace icn

template<>
struct std::hash<icn::FaceId>
{
  std::size_t
  operator()(icn::FaceId f) const noexcept
  {
    return std::hash<std::uint32_t>{}(f.value);
  }
};

#endif // ICN_CORE_TYPES_HPP
