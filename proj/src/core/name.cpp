#include "icn/core/name.hpp"

#include <algorithm>
#include <cctype>

namespace icn {

namespace detail {

static bool
isUnreserved(unsigned char c)
{
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
         c == '-' || c == '.' || c == '_' || c == '~';
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
encodeComponent(std::string_view component)
{
  static constexpr char HEX[] = "0123456789ABCDEF";
  std::string out;
  out.reserve(component.size());
  for (unsigned char c : component) {
    if (isUnreserved(c)) {
      out.push_back(static_cast<char>(c));
    }
    else {
      out.push_back('%');
      out.push_back(HEX[c >> 4]);
      out.push_back(HEX[c & 0xF]);
    }
  }
  return out;
}

static Component
decodeComponent(std::string_view text)
{
  Component out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '%') {
      if (i + 2 >= text.size()) {
        throw Name::Error("truncated percent-escape in '" + std::string(text) + "'");
      }
      int hi = hexValue(text[i + 1]);
      int lo = hexValue(text[i + 2]);
      if (hi < 0 || lo < 0) {
        throw Name::Error("invalid percent-escape in '" + std::string(text) + "'");
      }
      out.push_back(static_cast<char>((hi << 4) | lo));
      i += 2;
    }
    else if (static_cast<unsigned char>(c) <= 0x20 || c == 0x7F) {
      throw Name::Error("unescaped control or space byte in '" + std::string(text) + "'");
    }
    else {
      out.push_back(c);
    }
  }
  if (out.empty()) {
    throw Name::Error("empty name component");
  }
  return out;
}

std::vector<Component>
parseComponents(std::string_view uri, bool allowEmpty)
{
  if (uri.empty() || uri.front() != '/') {
    throw Name::Error("name must start with '/': '" + std::string(uri) + "'");
  }
  std::vector<Component> components;
  std::string_view rest = uri.substr(1);
  if (rest.empty()) {
    if (!allowEmpty) {
      throw Name::Error("name must have at least one component");
    }
    return components;
  }
  while (true) {
    auto slash = rest.find('/');
    std::string_view piece = rest.substr(0, slash);
    if (piece.empty()) {
      throw Name::Error("empty name component in '" + std::string(uri) + "'");
    }
    components.push_back(decodeComponent(piece));
    if (slash == std::string_view::npos)
      break;
    rest = rest.substr(slash + 1);
  }
  return components;
}

static void
checkComponents(const std::vector<Component>& components)
{
  for (const auto& c : components) {
    if (c.empty()) {
      throw Name::Error("empty name component");
    }
    if (c.find('/') != Component::npos) {
      throw Name::Error("name component contains separator");
    }
  }
}

static std::string
joinUri(const std::vector<Component>& components)
{
  if (components.empty())
    return "/";
  std::string out;
  for (const auto& c : components) {
    out.push_back('/');
    out += encodeComponent(c);
  }
  return out;
}

} // namespace detail

Name::Name(std::vector<Component> components)
  : m_components(std::move(components))
{
  if (m_components.empty()) {
    throw Error("name must have at least one component");
  }
  detail::checkComponents(m_components);
}

Name
Name::parse(std::string_view uri)
{
  return Name(detail::parseComponents(uri, false));
}

Name
Name::append(Component component) const
{
  auto components = m_components;
  components.push_back(std::move(component));
  return Name(std::move(components));
}

std::string
Name::toUri() const
{
  return detail::joinUri(m_components);
}

Prefix::Prefix(std::vector<Component> components)
  : m_components(std::move(components))
{
  detail::checkComponents(m_components);
}

Prefix::Prefix(const Name& name)
  : m_components(name.components())
{
}

Prefix
Prefix::parse(std::string_view uri)
{
  return Prefix(detail::parseComponents(uri, true));
}

bool
Prefix::isPrefixOf(const Name& name) const noexcept
{
  if (m_components.size() > name.size())
    return false;
  return std::equal(m_components.begin(), m_components.end(), name.components().begin());
}

std::string
Prefix::toUri() const
{
  return detail::joinUri(m_components);
}

std::optional<Prefix>
longestPrefixMatch(const Name& name, std::span<const Prefix> candidates)
{
  const Prefix* best = nullptr;
  for (const auto& candidate : candidates) {
    if (candidate.isPrefixOf(name) && (best == nullptr || candidate.size() > best->size())) {
      best = &candidate;
    }
  }
  if (best == nullptr)
    return std::nullopt;
  return *best;
}

} // namespace icn

std::size_t
std::hash<icn::Name>::operator()(const icn::Name& name) const noexcept
{
  std::size_t seed = name.size();
  for (const auto& c : name.components()) {
    seed ^= std::hash<std::string>{}(c) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  }
  return seed;
}
