#include "icn/table/fib.hpp"

#include <algorithm>

namespace icn {

void
FibEntry::addNextHop(const FibNextHop& nextHop)
{
  if (nextHop.rank == 0) {
    throw Error("rank must be positive for prefix " + m_prefix.toUri());
  }
  if (nextHop.hopCount.isInfinite()) {
    throw Error("hop count 255 is reserved for consumer Interests (prefix " + m_prefix.toUri() + ")");
  }
  for (const auto& nh : m_nextHops) {
    if (nh.rank == nextHop.rank) {
      throw Error("duplicate rank " + std::to_string(nextHop.rank) + " for prefix " + m_prefix.toUri());
    }
    if (nh.face == nextHop.face) {
      throw Error("duplicate next hop face " + std::to_string(nextHop.face.value) +
                  " for prefix " + m_prefix.toUri());
    }
  }
  auto pos = std::upper_bound(m_nextHops.begin(), m_nextHops.end(), nextHop,
                              [] (const auto& a, const auto& b) { return a.rank < b.rank; });
  m_nextHops.insert(pos, nextHop);
}

bool
FibEntry::hasAvailableNextHop() const noexcept
{
  return std::any_of(m_nextHops.begin(), m_nextHops.end(),
                     [] (const auto& nh) { return nh.isAvailable; });
}

void
FibEntry::setAvailability(FaceId face, bool isAvailable)
{
  for (auto& nh : m_nextHops) {
    if (nh.face == face)
      nh.isAvailable = isAvailable;
  }
}

Fib::Fib()
  : m_root(std::make_unique<Node>())
{
}

Fib::Fib(Fib&&) noexcept = default;
Fib& Fib::operator=(Fib&&) noexcept = default;
Fib::~Fib() = default;

FibEntry&
Fib::addNextHop(const Prefix& prefix, const FibNextHop& nextHop)
{
  Node* node = m_root.get();
  for (const auto& c : prefix.components()) {
    auto& child = node->children[c];
    if (!child)
      child = std::make_unique<Node>();
    node = child.get();
  }
  if (!node->entry) {
    node->entry = std::make_unique<FibEntry>(prefix);
    ++m_nEntries;
  }
  node->entry->addNextHop(nextHop);
  return *node->entry;
}

const FibEntry*
Fib::findExactMatch(const Prefix& prefix) const
{
  const Node* node = m_root.get();
  for (const auto& c : prefix.components()) {
    auto it = node->children.find(c);
    if (it == node->children.end())
      return nullptr;
    node = it->second.get();
  }
  return node->entry.get();
}

const FibEntry*
Fib::findLongestPrefixMatch(const Name& name) const
{
  const Node* node = m_root.get();
  const FibEntry* best = node->entry.get();
  for (const auto& c : name.components()) {
    auto it = node->children.find(c);
    if (it == node->children.end())
      break;
    node = it->second.get();
    if (node->entry)
      best = node->entry.get();
  }
  return best;
}

template<typename Fn>
void
Fib::forEachEntry(Node& node, const Fn& fn)
{
  if (node.entry)
    fn(*node.entry);
  for (auto& [c, child] : node.children)
    forEachEntry(*child, fn);
}

void
Fib::setFaceAvailability(FaceId face, bool isAvailable)
{
  forEachEntry(*m_root, [&] (FibEntry& entry) { entry.setAvailability(face, isAvailable); });
}

} // namespace icn
