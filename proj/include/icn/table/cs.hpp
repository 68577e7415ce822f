#ifndef ICN_TABLE_CS_HPP
#define ICN_TABLE_CS_HPP

#include "icn/core/message.hpp"

#include <list>
#include <optional>
#include <unordered_map>

namespace icn {

/** \brief Content store with least-recently-used eviction. Capacity 0 disables caching.
 */
class ContentStore
{
public:
  explicit
  ContentStore(std::size_t capacity = 0)
    : m_capacity(capacity)
  {
  }

  void
  insert(const NdoMessage& ndo);

  /// A hit refreshes the entry's recency.
  std::optional<NdoMessage>
  lookup(const Name& name);

  std::size_t
  size() const noexcept
  {
    return m_order.size();
  }

  std::size_t
  capacity() const noexcept
  {
    return m_capacity;
  }

private:
  std::size_t m_capacity;
  std::list<NdoMessage> m_order; // front = most recently used
  std::unordered_map<Name, std::list<NdoMessage>::iterator> m_index;
};

} // namespace icn

#endif // ICN_TABLE_CS_HPP
