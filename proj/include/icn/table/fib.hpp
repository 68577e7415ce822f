#ifndef ICN_TABLE_FIB_HPP
#define ICN_TABLE_FIB_HPP

#include "icn/core/message.hpp"
#include "icn/core/name.hpp"
#include "icn/core/types.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <vector>

namespace icn {

/** \brief One FIB next hop: face, hop count to the prefix through it, and its rank (1 = best).
 */
struct FibNextHop
{
  FaceId face;
  HopCount hopCount;
  std::uint32_t rank = 1;
  bool isAvailable = true;

  friend bool operator==(const FibNextHop&, const FibNextHop&) = default;
};

/** \brief FIB entry for one prefix. Next hops are kept in strictly ascending rank order.
 */
class FibEntry
{
public:
  class Error : public std::invalid_argument
  {
  public:
    using std::invalid_argument::invalid_argument;
  };

  explicit
  FibEntry(Prefix prefix)
    : m_prefix(std::move(prefix))
  {
  }

  const Prefix&
  prefix() const noexcept
  {
    return m_prefix;
  }

  const std::vector<FibNextHop>&
  nextHops() const noexcept
  {
    return m_nextHops;
  }

  /// Throws Error on a duplicate rank or face, a zero rank, or an infinite hop count.
  void
  addNextHop(const FibNextHop& nextHop);

  bool
  hasAvailableNextHop() const noexcept;

  void
  setAvailability(FaceId face, bool isAvailable);

private:
  Prefix m_prefix;
  std::vector<FibNextHop> m_nextHops;
};

/** \brief Forwarding information base keyed by a component-wise prefix tree.
 *
 *  Lookup cost is O(number of name components).
 */
class Fib
{
public:
  Fib();
  Fib(Fib&&) noexcept;
  Fib& operator=(Fib&&) noexcept;
  ~Fib();

  /// Adds a next hop under \p prefix, creating the entry if needed.
  FibEntry&
  addNextHop(const Prefix& prefix, const FibNextHop& nextHop);

  const FibEntry*
  findExactMatch(const Prefix& prefix) const;

  /// \return the entry with the longest prefix matching \p name, or nullptr
  const FibEntry*
  findLongestPrefixMatch(const Name& name) const;

  /// Marks \p face available or unavailable in every entry.
  void
  setFaceAvailability(FaceId face, bool isAvailable);

  std::size_t
  size() const noexcept
  {
    return m_nEntries;
  }

private:
  struct Node
  {
    std::map<Component, std::unique_ptr<Node>> children;
    std::unique_ptr<FibEntry> entry;
  };

  template<typename Fn>
  static void
  forEachEntry(Node& node, const Fn& fn);

private:
  std::unique_ptr<Node> m_root;
  std::size_t m_nEntries = 0;
};

} // namespace icn

#endif // ICN_TABLE_FIB_HPP
