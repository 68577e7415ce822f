#ifndef ICN_TABLE_PIT_ENTRY_HPP
#define ICN_TABLE_PIT_ENTRY_HPP

#include "icn/core/message.hpp"
#include "icn/core/name.hpp"
#include "icn/core/types.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace icn {

/** \brief Per-nonce record of an NDN/CCN PIT entry.
 */
struct NdnPitTuple
{
  Nonce nonce;
  FaceId inFace;
  std::set<FaceId> outFaces;
  /// Time after which this tuple's Interest may be forwarded again; unset until first forwarded.
  SimTime retxDeadline = SimTime::min();

  friend bool operator==(const NdnPitTuple&, const NdnPitTuple&) = default;
};

/** \brief NDN/CCN PIT entry: one tuple per distinct nonce seen for the name.
 */
struct NdnPitEntry
{
  Name name;
  std::vector<NdnPitTuple> tuples;
  SimTime lifetimeDeadline{0};

  const Name&
  key() const noexcept
  {
    return name;
  }

  bool
  hasNonce(Nonce nonce) const
  {
    return std::any_of(tuples.begin(), tuples.end(),
                       [nonce] (const auto& t) { return t.nonce == nonce; });
  }

  bool
  isInFace(FaceId face) const
  {
    return std::any_of(tuples.begin(), tuples.end(),
                       [face] (const auto& t) { return t.inFace == face; });
  }

  bool
  isOutFace(FaceId face) const
  {
    return std::any_of(tuples.begin(), tuples.end(),
                       [face] (const auto& t) { return t.outFaces.count(face) > 0; });
  }

  /// Latest retransmission deadline among forwarded tuples; SimTime::min() if none was forwarded.
  SimTime
  retxDeadline() const
  {
    SimTime deadline = SimTime::min();
    for (const auto& t : tuples) {
      if (!t.outFaces.empty())
        deadline = std::max(deadline, t.retxDeadline);
    }
    return deadline;
  }

  /// Distinct in-faces in tuple order.
  std::vector<FaceId>
  inFaces() const
  {
    std::vector<FaceId> faces;
    for (const auto& t : tuples) {
      if (std::find(faces.begin(), faces.end(), t.inFace) == faces.end())
        faces.push_back(t.inFace);
    }
    return faces;
  }
};

/** \brief SIFAH PIT entry: a single hop-count record with incoming and outgoing neighbor sets.
 */
struct SifahPitEntry
{
  Name name;
  /// Hop count this router stated when it forwarded the Interest.
  HopCount outHopCount;
  std::set<FaceId> inSet;
  std::set<FaceId> outSet;
  SimTime lifetimeDeadline{0};

  const Name&
  key() const noexcept
  {
    return name;
  }
};

} // namespace icn

#endif // ICN_TABLE_PIT_ENTRY_HPP
