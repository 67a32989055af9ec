#ifndef ITG_ORACLE_HPP
#define ITG_ORACLE_HPP

// Exact answers on the time-expanded graph: one node per (vertex, integer
// time), wait arcs (v, tau) -> (v, tau + 1) and traversal arcs
// (u, tau) -> (v, tau + delay) for every presence and tau in its window.
// Meant for desk-scale instances only.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "itg/core.hpp"

namespace itg {

// Maximum n * (time horizon) accepted by oracle_time_expanded.
inline constexpr std::int64_t kOracleCapacity = 10'000'000;

struct OracleResult {
  // Departures with a defined answer lie in [first_departure,
  // last_departure] (min start .. max end). Empty graph: no departures.
  Time first_departure = 0;
  Time last_departure = -1;
  std::vector<std::optional<Time>> arrival;  // index depart - first_departure

  std::optional<Time> fastest;         // minimum arr - dep
  std::optional<Time> fastest_depart;  // smallest departure achieving it
  std::optional<std::size_t> shortest; // minimum number of steps

  // Earliest arrival at t leaving s no earlier than `depart`.
  std::optional<Time> arrival_for(Time depart) const;
};

// Throws CapacityError when n * horizon exceeds kOracleCapacity and
// UsageError when s == t.
OracleResult oracle_time_expanded(const TemporalGraph& g, Vertex s, Vertex t);

}  // namespace itg

#endif  // ITG_ORACLE_HPP
