#include "itg/oracle.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <string>
#include <tuple>

namespace itg {

std::optional<Time> OracleResult::arrival_for(Time depart) const {
  if (arrival.empty() || depart > last_departure) return std::nullopt;
  if (depart < first_departure) return arrival.front();
  return arrival[static_cast<std::size_t>(depart - first_departure)];
}

// Layer-by-layer sweep over the time-expanded graph. For every vertex v at
// the current layer tau it keeps
//   latest[v]: the largest departure lambda such that (v, tau) is reachable
//              from (s, lambda)  (kNegativeInfinity when unreachable);
//   fewest[v]: the fewest traversal arcs on a path from (s, first layer).
// Waiting carries both values to the next layer unchanged.
OracleResult oracle_time_expanded(const TemporalGraph& g, Vertex s, Vertex t) {
  if (!g.contains(s) || !g.contains(t)) {
    throw InputError("source or target out of range");
  }
  if (s == t) throw UsageError("time-expanded oracle needs s != t");

  OracleResult result;
  if (g.edges().empty()) return result;

  struct Arc {
    Vertex tail;
    Vertex head;
    Time start;
    Time end;
    Time delay;
  };
  std::vector<Arc> arcs;
  for (const auto& e : g.edges()) {
    arcs.push_back({e.tail, e.head, e.start, e.end, e.delay});
    if (!g.directed()) arcs.push_back({e.head, e.tail, e.start, e.end, e.delay});
  }
  std::sort(arcs.begin(), arcs.end(),
            [](const Arc& a, const Arc& b) { return a.start < b.start; });

  Time lo = arcs.front().start;
  Time hi = lo;
  Time last_layer = lo;
  for (const auto& a : arcs) {
    hi = std::max(hi, a.end);
    last_layer = std::max(last_layer, a.end + a.delay);
  }
  const Time span = last_layer - lo + 1;
  if (span > kOracleCapacity / g.vertex_count()) {
    throw CapacityError("time-expanded graph too large: n=" +
                        std::to_string(g.vertex_count()) +
                        " horizon=" + std::to_string(span));
  }

  const auto n = static_cast<std::size_t>(g.vertex_count());
  constexpr std::size_t kFar = std::numeric_limits<std::size_t>::max();
  std::vector<Time> latest(n + 1, kNegativeInfinity);
  std::vector<std::size_t> fewest(n + 1, kFar);
  fewest[static_cast<std::size_t>(s)] = 0;

  // Arrivals of delayed traversals: (layer, head, latest, fewest).
  using Pending = std::tuple<Time, Vertex, Time, std::size_t>;
  std::priority_queue<Pending, std::vector<Pending>, std::greater<Pending>> pending;

  result.first_departure = lo;
  result.last_departure = hi;
  result.arrival.assign(static_cast<std::size_t>(hi - lo + 1), std::nullopt);

  std::vector<std::size_t> active;
  std::size_t next_arc = 0;
  std::vector<std::vector<Vertex>> adjacent(n + 1);
  std::vector<Vertex> touched;
  Time filled_upto = lo - 1;  // departures <= this already have an answer

  for (Time tau = lo; tau <= last_layer; ++tau) {
    latest[static_cast<std::size_t>(s)] = tau;

    while (next_arc < arcs.size() && arcs[next_arc].start == tau) {
      active.push_back(next_arc++);
    }
    std::erase_if(active, [&](std::size_t i) { return arcs[i].end < tau; });

    while (!pending.empty() && std::get<0>(pending.top()) == tau) {
      const auto [layer, v, l, f] = pending.top();
      pending.pop();
      const auto vi = static_cast<std::size_t>(v);
      latest[vi] = std::max(latest[vi], l);
      fewest[vi] = std::min(fewest[vi], f);
    }

    // Zero-delay traversals stay inside the layer: close over them.
    touched.clear();
    for (const std::size_t i : active) {
      const Arc& a = arcs[i];
      if (a.delay != 0) continue;
      if (adjacent[static_cast<std::size_t>(a.tail)].empty()) touched.push_back(a.tail);
      adjacent[static_cast<std::size_t>(a.tail)].push_back(a.head);
    }
    if (!touched.empty()) {
      using ByLatest = std::pair<Time, Vertex>;
      std::priority_queue<ByLatest> widest;
      using ByCount = std::pair<std::size_t, Vertex>;
      std::priority_queue<ByCount, std::vector<ByCount>, std::greater<ByCount>> nearest;
      for (const Vertex u : touched) {
        const auto ui = static_cast<std::size_t>(u);
        if (latest[ui] != kNegativeInfinity) widest.emplace(latest[ui], u);
        if (fewest[ui] != kFar) nearest.emplace(fewest[ui], u);
      }
      while (!widest.empty()) {
        const auto [l, u] = widest.top();
        widest.pop();
        if (l != latest[static_cast<std::size_t>(u)]) continue;
        for (const Vertex v : adjacent[static_cast<std::size_t>(u)]) {
          auto& lv = latest[static_cast<std::size_t>(v)];
          if (lv < l) {
            lv = l;
            widest.emplace(l, v);
          }
        }
      }
      while (!nearest.empty()) {
        const auto [f, u] = nearest.top();
        nearest.pop();
        if (f != fewest[static_cast<std::size_t>(u)]) continue;
        for (const Vertex v : adjacent[static_cast<std::size_t>(u)]) {
          auto& fv = fewest[static_cast<std::size_t>(v)];
          if (fv > f + 1) {
            fv = f + 1;
            nearest.emplace(fv, v);
          }
        }
      }
      for (const Vertex u : touched) adjacent[static_cast<std::size_t>(u)].clear();
    }

    for (const std::size_t i : active) {
      const Arc& a = arcs[i];
      if (a.delay == 0) continue;
      const auto ui = static_cast<std::size_t>(a.tail);
      if (latest[ui] == kNegativeInfinity) continue;
      pending.emplace(tau + a.delay, a.head, latest[ui], fewest[ui] + 1);
    }

    // Every departure in (filled_upto, latest[t]] first reaches t now.
    const Time reach = std::min(latest[static_cast<std::size_t>(t)], hi);
    for (Time d = filled_upto + 1; d <= reach; ++d) {
      result.arrival[static_cast<std::size_t>(d - lo)] = tau;
    }
    filled_upto = std::max(filled_upto, reach);
  }

  for (Time d = lo; d <= hi; ++d) {
    const auto& a = result.arrival[static_cast<std::size_t>(d - lo)];
    if (!a) continue;
    if (!result.fastest || *a - d < *result.fastest) {
      result.fastest = *a - d;
      result.fastest_depart = d;
    }
  }
  const std::size_t f = fewest[static_cast<std::size_t>(t)];
  if (f != kFar) result.shortest = f;
  return result;
}

}  // namespace itg
