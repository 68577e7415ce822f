#ifndef ICN_CORE_NAME_HPP
#define ICN_CORE_NAME_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace icn {

/** \brief One name component: a non-empty byte string without '/'.
 */
using Component = std::string;

class Prefix;

/** \brief Hierarchical content name, e.g. /prefix2/seq/41.
 *
 *  A Name always has at least one component. Its canonical text form joins the
 *  percent-encoded components with '/' and carries a leading '/'.
 */
class Name
{
public:
  class Error : public std::invalid_argument
  {
  public:
    using std::invalid_argument::invalid_argument;
  };

  explicit
  Name(std::vector<Component> components);

  /// Parses the canonical text form; throws Name::Error on malformed input.
  static Name
  parse(std::string_view uri);

  const std::vector<Component>&
  components() const noexcept
  {
    return m_components;
  }

  std::size_t
  size() const noexcept
  {
    return m_components.size();
  }

  const Component&
  operator[](std::size_t i) const
  {
    return m_components[i];
  }

  /// Returns a copy with \p component appended.
  Name
  append(Component component) const;

  std::string
  toUri() const;

  friend auto operator<=>(const Name&, const Name&) = default;
  friend bool operator==(const Name&, const Name&) = default;

private:
  std::vector<Component> m_components;
};

/** \brief Name prefix as advertised in FIBs. May be empty (the root "/").
 */
class Prefix
{
public:
  Prefix() = default;

  explicit
  Prefix(std::vector<Component> components);

  /// A Name is its own longest prefix.
  explicit
  Prefix(const Name& name);

  static Prefix
  parse(std::string_view uri);

  const std::vector<Component>&
  components() const noexcept
  {
    return m_components;
  }

  std::size_t
  size() const noexcept
  {
    return m_components.size();
  }

  /// True iff this prefix's components equal the first size() components of \p name.
  bool
  isPrefixOf(const Name& name) const noexcept;

  std::string
  toUri() const;

  friend auto operator<=>(const Prefix&, const Prefix&) = default;
  friend bool operator==(const Prefix&, const Prefix&) = default;

private:
  std::vector<Component> m_components;
};

/** \brief Longest-prefix match over an arbitrary candidate set.
 *  \return the matching candidate with the most components, or nullopt
 */
std::optional<Prefix>
longestPrefixMatch(const Name& name, std::span<const Prefix> candidates);

namespace detail {

std::string
encodeComponent(std::string_view component);

std::vector<Component>
parseComponents(std::string_view uri, bool allowEmpty);

} // namespace detail
} // namespace icn

template<>
struct std::hash<icn::Name>
{
  std::size_t
  operator()(const icn::Name& name) const noexcept;
};

#endif // ICN_CORE_NAME_HPP
