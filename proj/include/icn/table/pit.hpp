#ifndef ICN_TABLE_PIT_HPP
#define ICN_TABLE_PIT_HPP

#include "icn/core/name.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace icn {

/** \brief Pending Interest table keyed by exact Name.
 *
 *  Lookups never do prefix matching. \p Entry must expose `const Name& key() const`.
 */
template<typename Entry>
class Pit
{
public:
  /// \throw std::logic_error if an entry for the name already exists (caller must aggregate)
  Entry&
  insert(Entry entry)
  {
    Name key = entry.key();
    auto [it, isNew] = m_entries.try_emplace(std::move(key), std::move(entry));
    if (!isNew) {
      throw std::logic_error("PIT entry already exists for " + it->first.toUri());
    }
    return it->second;
  }

  Entry*
  find(const Name& name)
  {
    auto it = m_entries.find(name);
    return it == m_entries.end() ? nullptr : &it->second;
  }

  const Entry*
  find(const Name& name) const
  {
    auto it = m_entries.find(name);
    return it == m_entries.end() ? nullptr : &it->second;
  }

  bool
  erase(const Name& name)
  {
    return m_entries.erase(name) > 0;
  }

  std::size_t
  size() const noexcept
  {
    return m_entries.size();
  }

  bool
  empty() const noexcept
  {
    return m_entries.empty();
  }

  /// Names of all entries in canonical order, for deterministic whole-table scans.
  std::vector<Name>
  sortedNames() const
  {
    std::vector<Name> names;
    names.reserve(m_entries.size());
    for (const auto& [name, entry] : m_entries)
      names.push_back(name);
    std::sort(names.begin(), names.end());
    return names;
  }

private:
  std::unordered_map<Name, Entry> m_entries;
};

} // namespace icn

#endif // ICN_TABLE_PIT_HPP
