#ifndef ITG_PROFILE_HPP
#define ITG_PROFILE_HPP

// One-to-one profile for undirected interval temporal graphs with zero
// delays: a single time sweep over presence events maintaining connected
// components and, per component, the last time one can leave s and be
// inside the component at the current time.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>

#include "itg/core.hpp"

namespace itg {

// Called after each processed event with, for every vertex w (index w-1),
// the last-departure value stored for w's current component
// (kNegativeInfinity when s cannot reach it yet).
using LdtObserver = std::function<void(std::size_t event_index, const Event&,
                                       std::span<const Time> ldt_by_vertex)>;

// How the sweep keeps connected components. kOffline walks a segment tree
// over the event sequence with a rollback union-find: O(M log M log n) and
// cache friendly. kOnline drives DynamicConnectivity event by event. Both
// produce identical triples and observer values.
enum class SweepEngine { kOffline, kOnline };

// Triples exactly as emitted by the sweep, before compaction.
Profile raw_profile_st(const TemporalGraph& g, Vertex s, Vertex t,
                       const LdtObserver& observer = {},
                       SweepEngine engine = SweepEngine::kOffline);

// Minimal representation of the s-t profile. s == t yields the identity
// profile. Throws UnsupportedInputError for directed graphs or nonzero
// delays, InputError for vertices out of range.
Profile profile_st(const TemporalGraph& g, Vertex s, Vertex t,
                   SweepEngine engine = SweepEngine::kOffline);

struct Fastest {
  Time duration = 0;
  Time depart = 0;

  friend bool operator==(const Fastest&, const Fastest&) = default;
};

// Minimum of beta - alpha over the triples; ties go to the smallest alpha.
// Empty profile -> nullopt. Throws UsageError on the identity profile.
std::optional<Fastest> fastest_from_profile(const Profile& pr);

// A fastest temporal s-t path: the departure read off the profile, then an
// earliest-arrival search from that departure.
std::optional<TemporalPath> fastest_path(const TemporalGraph& g, Vertex s,
                                         Vertex t);

}  // namespace itg

#endif  // ITG_PROFILE_HPP
