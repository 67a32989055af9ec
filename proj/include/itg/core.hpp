#ifndef ITG_CORE_HPP
#define ITG_CORE_HPP

// Data model for interval temporal graphs: presences, event lists,
// temporal paths and piecewise-linear profile functions.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "itg/error.hpp"

namespace itg {

using Vertex = std::int32_t;  // 1-based
using Time = std::int64_t;
using Handle = std::int32_t;  // index of the presence record

// Every accepted time, delay and derived arrival lies in
// [-kTimeLimit, kTimeLimit]; sums of two such values cannot overflow.
inline constexpr Time kTimeLimit = Time{1} << 61;

// "Before everything". Never produced by parsing or generators since it
// lies outside [-kTimeLimit, kTimeLimit].
inline constexpr Time kNegativeInfinity = std::numeric_limits<Time>::min();

// One presence of an edge: traversable from tail to head at any time in
// [start, end], arriving delay later.
struct TemporalEdge {
  Vertex tail = 0;
  Vertex head = 0;
  Time start = 0;
  Time end = 0;
  Time delay = 0;
  Handle handle = 0;

  friend bool operator==(const TemporalEdge&, const TemporalEdge&) = default;
};

// Interval temporal graph on vertices 1..n. For undirected graphs every
// record stands for the symmetric pair of presences.
class TemporalGraph {
 public:
  TemporalGraph(Vertex vertex_count, bool directed);

  // Validates and appends a presence. The returned handle equals the
  // record index.
  Handle add_edge(Vertex tail, Vertex head, Time start, Time end,
                  Time delay = 0);

  Vertex vertex_count() const { return n_; }
  bool directed() const { return directed_; }
  const std::vector<TemporalEdge>& edges() const { return edges_; }
  const TemporalEdge& edge(Handle handle) const;

  std::size_t record_count() const { return edges_.size(); }
  // M: presences counting both directions of undirected records.
  std::size_t presence_count() const {
    return directed_ ? edges_.size() : 2 * edges_.size();
  }
  // m: distinct directed vertex pairs of the underlying graph.
  std::size_t underlying_edge_count() const;
  bool zero_delay() const;

  bool contains(Vertex v) const { return v >= 1 && v <= n_; }

  friend bool operator==(const TemporalGraph&,
                         const TemporalGraph&) = default;

 private:
  Vertex n_;
  bool directed_;
  std::vector<TemporalEdge> edges_;
};

enum class EventKind : std::uint8_t { kStart = 0, kEnd = 1 };

struct Event {
  Vertex u = 0;
  Vertex v = 0;
  Time time = 0;
  EventKind kind = EventKind::kStart;
  Handle handle = 0;

  friend bool operator==(const Event&, const Event&) = default;
};

using EventList = std::vector<Event>;

// One start and one end event per record, sorted by time with starts
// before ends at equal times; ties of the same kind keep record order.
EventList build_event_list(const TemporalGraph& g);

// Same list; position[2h] and position[2h + 1] receive the indices of the
// start and end events of record h.
EventList build_event_list(const TemporalGraph& g,
                           std::vector<std::uint32_t>& position);

// A traversal of presence `handle` from `from` to `to` at `time`.
struct PathStep {
  Handle handle = 0;
  Vertex from = 0;
  Vertex to = 0;
  Time time = 0;
  Time delay = 0;

  friend bool operator==(const PathStep&, const PathStep&) = default;
};

struct TemporalPath {
  std::vector<PathStep> steps;

  bool empty() const { return steps.empty(); }
  std::size_t length() const { return steps.size(); }
  Time departure() const;
  Time arrival() const;

  friend bool operator==(const TemporalPath&, const TemporalPath&) = default;
};

// True iff p is a temporal s-t path of g: every step uses an existing
// presence in an allowed direction, inside its window, steps chain in
// space and time, and no vertex repeats. Throws InputError when s, t or a
// step endpoint is not a vertex of g.
bool validate_path(const TemporalGraph& g, const TemporalPath& p, Vertex s,
                   Vertex t);

// arr - dep. Throws InputError on an empty path.
Time duration(const TemporalPath& p);

struct ProfileTriple {
  Time alpha = 0;
  Time beta = 0;
  int slope = 0;  // 0 or 1

  friend bool operator==(const ProfileTriple&,
                         const ProfileTriple&) = default;
};

enum class ProfileKind : std::uint8_t { kIdentity, kPolyline };

// Earliest-arrival function P(tau). Triple i describes P on
// (alpha_{i-1}, alpha_i] as beta_i + slope_i * (tau - alpha_i), with
// alpha_0 = -infinity. P is undefined (unreachable) past the last alpha.
struct Profile {
  ProfileKind kind = ProfileKind::kPolyline;
  std::vector<ProfileTriple> triples;

  static Profile identity() { return Profile{ProfileKind::kIdentity, {}}; }

  friend bool operator==(const Profile&, const Profile&) = default;
};

std::optional<Time> evaluate_profile(const Profile& pr, Time tau);

// Drops empty-domain triples and triples that the next triple extends
// collinearly. Values are unchanged everywhere.
Profile compact_profile(const Profile& raw);

// One step of compact_profile: appends x to an already compact sequence.
void append_compact(std::vector<ProfileTriple>& triples, const ProfileTriple& x);

}  // namespace itg

#endif  // ITG_CORE_HPP
