#include "icn/fw/actions.hpp"

namespace icn::fw {

std::string_view
toString(DeleteReason reason)
{
  switch (reason) {
    case DeleteReason::Satisfied:
      return "satisfied";
    case DeleteReason::Nacked:
      return "nacked";
    case DeleteReason::Expired:
      return "expired";
    case DeleteReason::NoData:
      return "no-data";
    case DeleteReason::Congestion:
      return "congestion";
    case DeleteReason::LinkFailure:
      return "link-failure";
  }
  return "?";
}

std::string_view
toString(DropReason reason)
{
  switch (reason) {
    case DropReason::Duplicate:
      return "duplicate";
    case DropReason::Loop:
      return "loop";
    case DropReason::NoRoute:
      return "no-route";
    case DropReason::NoData:
      return "no-data";
    case DropReason::Congestion:
      return "congestion";
    case DropReason::Unsolicited:
      return "unsolicited";
    case DropReason::NoPitEntry:
      return "no-pit-entry";
    case DropReason::InvalidSignature:
      return "invalid-signature";
    case DropReason::NacksDisabled:
      return "nacks-disabled";
  }
  return "?";
}

std::vector<SendAction>
StrategyActions::sends() const
{
  return ofType<SendAction>();
}

} // namespace icn::fw
