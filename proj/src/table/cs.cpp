#include "icn/table/cs.hpp"

namespace icn {

void
ContentStore::insert(const NdoMessage& ndo)
{
  if (m_capacity == 0)
    return;

  if (auto it = m_index.find(ndo.name); it != m_index.end()) {
    *it->second = ndo;
    m_order.splice(m_order.begin(), m_order, it->second);
    return;
  }

  if (m_order.size() >= m_capacity) {
    m_index.erase(m_order.back().name);
    m_order.pop_back();
  }
  m_order.push_front(ndo);
  m_index.emplace(ndo.name, m_order.begin());
}

std::optional<NdoMessage>
ContentStore::lookup(const Name& name)
{
  auto it = m_index.find(name);
  if (it == m_index.end())
    return std::nullopt;
  m_order.splice(m_order.begin(), m_order, it->second);
  return *it->second;
}

} // namespace icn
