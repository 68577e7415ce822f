#ifndef ICN_FW_ACTIONS_HPP
#define ICN_FW_ACTIONS_HPP

#include "icn/core/message.hpp"
#include "icn/core/types.hpp"

#include <string_view>
#include <variant>
#include <vector>

namespace icn::fw {

enum class DeleteReason {
  Satisfied,   ///< NDO forwarded to requesters
  Nacked,      ///< NACK relayed to requesters
  Expired,     ///< lifetime ran out
  NoData,      ///< NDN: no FIB entry
  Congestion,  ///< NDN: every FIB face excluded or unavailable
  LinkFailure, ///< SIFAH: in-set or out-set emptied by a link failure
};

enum class DropReason {
  Duplicate,       ///< nonce already recorded in the PIT entry
  Loop,            ///< HFAR not satisfied
  NoRoute,         ///< no usable FIB entry
  NoData,          ///< NDN: no FIB entry
  Congestion,      ///< NDN: all FIB faces excluded
  Unsolicited,     ///< NDO/NACK from a face the Interest was not sent to
  NoPitEntry,      ///< NDO/NACK for a name with no PIT entry
  InvalidSignature,
  NacksDisabled,   ///< CCN mode received a NACK
};

std::string_view
toString(DeleteReason reason);

std::string_view
toString(DropReason reason);

struct SendAction
{
  Message message;
  FaceId face;
};

struct PitCreated
{
  Name name;
  FaceId inFace;
  std::optional<Nonce> nonce;
};

/// A subsequent Interest recorded in an existing entry.
struct PitAggregated
{
  Name name;
  FaceId inFace;
  std::optional<Nonce> nonce;
};

struct PitOutAdded
{
  Name name;
  FaceId face;
};

struct PitInRemoved
{
  Name name;
  FaceId face;
};

struct PitOutRemoved
{
  Name name;
  FaceId face;
};

struct PitDeleted
{
  Name name;
  DeleteReason reason;
};

struct CsHit
{
  Name name;
};

struct CsInserted
{
  Name name;
};

/// Request a lifetime-expiry callback for \p name at \p deadline.
struct ExpiryArmed
{
  Name name;
  SimTime deadline;
};

struct Dropped
{
  Name name;
  DropReason reason;
};

using Action = std::variant<SendAction, PitCreated, PitAggregated, PitOutAdded, PitInRemoved,
                            PitOutRemoved, PitDeleted, CsHit, CsInserted, ExpiryArmed, Dropped>;

/** \brief Ordered output of one strategy invocation.
 */
class StrategyActions
{
public:
  template<typename T>
  void
  add(T&& action)
  {
    m_actions.emplace_back(std::forward<T>(action));
  }

  void
  send(Message message, FaceId face)
  {
    m_actions.emplace_back(SendAction{std::move(message), face});
  }

  const std::vector<Action>&
  all() const noexcept
  {
    return m_actions;
  }

  auto
  begin() const noexcept
  {
    return m_actions.begin();
  }

  auto
  end() const noexcept
  {
    return m_actions.end();
  }

  bool
  empty() const noexcept
  {
    return m_actions.empty();
  }

  std::vector<SendAction>
  sends() const;

  /// All actions of type \p T, in order.
  template<typename T>
  std::vector<T>
  ofType() const
  {
    std::vector<T> out;
    for (const auto& a : m_actions) {
      if (const auto* t = std::get_if<T>(&a))
        out.push_back(*t);
    }
    return out;
  }

private:
  std::vector<Action> m_actions;
};

} // namespace icn::fw

#endif // ICN_FW_ACTIONS_HPP
