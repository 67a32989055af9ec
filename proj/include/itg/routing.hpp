#ifndef ITG_ROUTING_HPP
#define ITG_ROUTING_HPP

// Earliest-arrival (foremost) routing with arbitrary non-negative delays,
// plus exhaustive path enumeration for tiny instances.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "itg/core.hpp"
#include "itg/profile.hpp"

namespace itg {

// Presences of one directed underlying edge uv, answering "leaving u no
// earlier than tau, when is v reached first" in O(log k).
class EdgeTimetable {
 public:
  struct Presence {
    Time start = 0;
    Time end = 0;
    Time delay = 0;
    Handle handle = 0;
  };

  struct Hop {
    Time traversal = 0;  // time the presence is entered
    Time arrival = 0;
    Handle handle = 0;
    Time delay = 0;
  };

  explicit EdgeTimetable(std::vector<Presence> presences);

  // min over presences with end >= tau of max(tau, start) + delay.
  std::optional<Hop> earliest(Time tau) const;

  std::size_t size() const { return presences_.size(); }

 private:
  std::vector<Presence> presences_;  // sorted by start
  // Suffix minima of start + delay over presences_ (index of the argmin).
  std::vector<std::size_t> suffix_best_;
  // Elementary segments [breaks_[i], breaks_[i+1]) with the presence of
  // minimum delay covering the whole segment, or npos.
  std::vector<Time> breaks_;
  std::vector<std::size_t> covering_best_;
};

struct Predecessor {
  Vertex from = 0;
  Handle handle = -1;
  Time time = 0;
  Time delay = 0;
};

// Result of an earliest-arrival search from one source.
struct ArrivalTree {
  Vertex source = 0;
  Time depart = 0;
  std::vector<std::optional<Time>> arrival;  // index v - 1
  std::vector<Predecessor> predecessor;      // index v - 1

  std::optional<Time> arrival_at(Vertex v) const {
    return arrival[static_cast<std::size_t>(v - 1)];
  }
  // Temporal path from the source, or nullopt when v is unreachable.
  // The path to the source itself is empty.
  std::optional<TemporalPath> path_to(Vertex v) const;
};

// Per-vertex timetables, built once and reused across queries.
class TemporalRouter {
 public:
  explicit TemporalRouter(const TemporalGraph& g);

  // Temporal Dijkstra: minimum arrival time at every vertex over temporal
  // walks from s whose first traversal is at or after `depart`. When
  // `stop_at` is given the search ends once that vertex is settled.
  ArrivalTree earliest_arrival(Vertex s, Time depart,
                               std::optional<Vertex> stop_at = {}) const;

  Vertex vertex_count() const { return n_; }

 private:
  struct Arc {
    Vertex head;
    std::size_t timetable;
  };

  Vertex n_;
  std::vector<EdgeTimetable> timetables_;
  std::vector<std::size_t> first_arc_;  // CSR offsets, size n + 1
  std::vector<Arc> arcs_;
};

ArrivalTree earliest_arrival(const TemporalGraph& g, Vertex s, Time depart,
                             std::optional<Vertex> stop_at = {});

// min over c in candidates of arrival(t | depart c) - c. Exact whenever
// every optimal departure time is a candidate. Ties keep the earliest
// candidate in the given order.
std::optional<Fastest> fastest_by_departure_sweep(
    const TemporalGraph& g, Vertex s, Vertex t, std::span<const Time> candidates);

// All simple temporal s-t paths with at most max_len steps, each step taken
// at its earliest feasible time max(arrival so far, start).
std::vector<TemporalPath> enumerate_paths(const TemporalGraph& g, Vertex s,
                                          Vertex t, std::size_t max_len);

// Same presences and arrival, every step moved as late as possible. This is
// the minimum-duration timing of the presence sequence.
TemporalPath latest_departure_form(const TemporalGraph& g,
                                   const TemporalPath& p);

}  // namespace itg

#endif  // ITG_ROUTING_HPP
