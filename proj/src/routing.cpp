#include "itg/routing.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <set>
#include <string>
#include <utility>

namespace itg {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

}  // namespace

// ---------------------------------------------------------------------------
// EdgeTimetable

EdgeTimetable::EdgeTimetable(std::vector<Presence> presences)
    : presences_(std::move(presences)) {
  std::sort(presences_.begin(), presences_.end(),
            [](const Presence& a, const Presence& b) {
              if (a.start != b.start) return a.start < b.start;
              if (a.end != b.end) return a.end < b.end;
              if (a.delay != b.delay) return a.delay < b.delay;
              return a.handle < b.handle;
            });
  const std::size_t k = presences_.size();

  suffix_best_.assign(k + 1, kNone);
  for (std::size_t i = k; i-- > 0;) {
    const std::size_t next = suffix_best_[i + 1];
    const Time here = presences_[i].start + presences_[i].delay;
    suffix_best_[i] =
        (next == kNone || here <= presences_[next].start + presences_[next].delay)
            ? i
            : next;
  }

  for (const auto& p : presences_) {
    breaks_.push_back(p.start);
    breaks_.push_back(p.end + 1);
  }
  std::sort(breaks_.begin(), breaks_.end());
  breaks_.erase(std::unique(breaks_.begin(), breaks_.end()), breaks_.end());

  std::vector<std::size_t> by_end(k);
  for (std::size_t i = 0; i < k; ++i) by_end[i] = i;
  std::sort(by_end.begin(), by_end.end(), [&](std::size_t a, std::size_t b) {
    return presences_[a].end < presences_[b].end;
  });

  // Sweep the breakpoints keeping the covering presences ordered by delay.
  std::set<std::pair<Time, std::size_t>> active;
  std::size_t next_start = 0;
  std::size_t next_end = 0;
  covering_best_.reserve(breaks_.size());
  for (const Time b : breaks_) {
    while (next_start < k && presences_[next_start].start == b) {
      active.emplace(presences_[next_start].delay, next_start);
      ++next_start;
    }
    while (next_end < k && presences_[by_end[next_end]].end + 1 == b) {
      const std::size_t i = by_end[next_end];
      active.erase({presences_[i].delay, i});
      ++next_end;
    }
    covering_best_.push_back(active.empty() ? kNone : active.begin()->second);
  }
}

std::optional<EdgeTimetable::Hop> EdgeTimetable::earliest(Time tau) const {
  std::optional<Hop> best;

  const auto seg = std::upper_bound(breaks_.begin(), breaks_.end(), tau);
  if (seg != breaks_.begin()) {
    const std::size_t i =
        covering_best_[static_cast<std::size_t>(seg - breaks_.begin()) - 1];
    if (i != kNone) {
      const Presence& p = presences_[i];
      best = Hop{tau, tau + p.delay, p.handle, p.delay};
    }
  }

  const auto later = std::upper_bound(
      presences_.begin(), presences_.end(), tau,
      [](Time value, const Presence& p) { return value < p.start; });
  const std::size_t j =
      suffix_best_[static_cast<std::size_t>(later - presences_.begin())];
  if (j != kNone) {
    const Presence& p = presences_[j];
    if (!best || p.start + p.delay < best->arrival) {
      best = Hop{p.start, p.start + p.delay, p.handle, p.delay};
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Earliest arrival

std::optional<TemporalPath> ArrivalTree::path_to(Vertex v) const {
  if (v < 1 || static_cast<std::size_t>(v) > arrival.size()) {
    throw InputError("vertex " + std::to_string(v) + " out of range");
  }
  if (!arrival_at(v)) return std::nullopt;
  TemporalPath path;
  while (v != source) {
    const Predecessor& p = predecessor[static_cast<std::size_t>(v - 1)];
    path.steps.push_back(PathStep{p.handle, p.from, v, p.time, p.delay});
    v = p.from;
  }
  std::reverse(path.steps.begin(), path.steps.end());
  return path;
}

TemporalRouter::TemporalRouter(const TemporalGraph& g) : n_(g.vertex_count()) {
  struct Directed {
    Vertex tail;
    Vertex head;
    EdgeTimetable::Presence presence;
  };
  std::vector<Directed> all;
  all.reserve(g.presence_count());
  for (const auto& e : g.edges()) {
    all.push_back({e.tail, e.head, {e.start, e.end, e.delay, e.handle}});
    if (!g.directed()) {
      all.push_back({e.head, e.tail, {e.start, e.end, e.delay, e.handle}});
    }
  }
  std::stable_sort(all.begin(), all.end(),
                   [](const Directed& a, const Directed& b) {
                     if (a.tail != b.tail) return a.tail < b.tail;
                     return a.head < b.head;
                   });

  first_arc_.assign(static_cast<std::size_t>(n_) + 1, 0);
  for (std::size_t i = 0; i < all.size();) {
    std::size_t j = i;
    std::vector<EdgeTimetable::Presence> group;
    while (j < all.size() && all[j].tail == all[i].tail &&
           all[j].head == all[i].head) {
      group.push_back(all[j].presence);
      ++j;
    }
    arcs_.push_back(Arc{all[i].head, timetables_.size()});
    timetables_.emplace_back(std::move(group));
    ++first_arc_[static_cast<std::size_t>(all[i].tail)];
    i = j;
  }
  // first_arc_[v] counted arcs of vertex v; turn into offsets where arcs of
  // v occupy [first_arc_[v-1], first_arc_[v]).
  for (std::size_t v = 1; v < first_arc_.size(); ++v) {
    first_arc_[v] += first_arc_[v - 1];
  }
}

ArrivalTree TemporalRouter::earliest_arrival(Vertex s, Time depart,
                                             std::optional<Vertex> stop_at) const {
  if (s < 1 || s > n_) {
    throw InputError("source " + std::to_string(s) + " out of range");
  }
  if (depart < -kTimeLimit || depart > kTimeLimit) {
    throw InputError("departure time out of the supported range");
  }
  constexpr Time kUnreached = std::numeric_limits<Time>::max();
  const auto n = static_cast<std::size_t>(n_);
  std::vector<Time> dist(n, kUnreached);
  std::vector<char> settled(n, 0);
  ArrivalTree tree;
  tree.source = s;
  tree.depart = depart;
  tree.predecessor.assign(n, Predecessor{});

  using Item = std::pair<Time, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue;
  dist[static_cast<std::size_t>(s - 1)] = depart;
  queue.emplace(depart, s);
  while (!queue.empty()) {
    const auto [d, u] = queue.top();
    queue.pop();
    const auto ui = static_cast<std::size_t>(u - 1);
    if (settled[ui] || d != dist[ui]) continue;
    settled[ui] = 1;
    if (stop_at && *stop_at == u) break;
    for (std::size_t a = first_arc_[ui]; a < first_arc_[ui + 1]; ++a) {
      const Arc& arc = arcs_[a];
      const auto hop = timetables_[arc.timetable].earliest(d);
      if (!hop) continue;
      const auto vi = static_cast<std::size_t>(arc.head - 1);
      if (settled[vi] || hop->arrival >= dist[vi]) continue;
      dist[vi] = hop->arrival;
      tree.predecessor[vi] = Predecessor{u, hop->handle, hop->traversal, hop->delay};
      queue.emplace(hop->arrival, arc.head);
    }
  }

  tree.arrival.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (dist[i] != kUnreached && (settled[i] || !stop_at)) tree.arrival[i] = dist[i];
  }
  return tree;
}

ArrivalTree earliest_arrival(const TemporalGraph& g, Vertex s, Time depart,
                             std::optional<Vertex> stop_at) {
  return TemporalRouter(g).earliest_arrival(s, depart, stop_at);
}

std::optional<Fastest> fastest_by_departure_sweep(
    const TemporalGraph& g, Vertex s, Vertex t, std::span<const Time> candidates) {
  if (candidates.empty()) throw UsageError("empty candidate departure list");
  if (!g.contains(t)) throw InputError("target out of range");
  const TemporalRouter router(g);
  std::optional<Fastest> best;
  for (const Time c : candidates) {
    const auto arrival = router.earliest_arrival(s, c, t).arrival_at(t);
    if (!arrival) continue;
    const Time d = *arrival - c;
    if (!best || d < best->duration) best = Fastest{d, c};
  }
  return best;
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration

std::vector<TemporalPath> enumerate_paths(const TemporalGraph& g, Vertex s,
                                          Vertex t, std::size_t max_len) {
  if (!g.contains(s) || !g.contains(t)) {
    throw InputError("source or target out of range");
  }
  struct Out {
    Vertex to;
    const TemporalEdge* edge;
  };
  std::vector<std::vector<Out>> out(static_cast<std::size_t>(g.vertex_count()) + 1);
  for (const auto& e : g.edges()) {
    out[static_cast<std::size_t>(e.tail)].push_back({e.head, &e});
    if (!g.directed()) out[static_cast<std::size_t>(e.head)].push_back({e.tail, &e});
  }

  std::vector<TemporalPath> result;
  std::vector<char> on_path(out.size(), 0);
  TemporalPath current;
  std::function<void(Vertex, Time)> extend = [&](Vertex u, Time ready) {
    if (u == t && !current.empty()) {
      result.push_back(current);
      return;
    }
    if (current.length() == max_len) return;
    for (const Out& o : out[static_cast<std::size_t>(u)]) {
      if (on_path[static_cast<std::size_t>(o.to)]) continue;
      const Time at = std::max(ready, o.edge->start);
      if (at > o.edge->end) continue;
      on_path[static_cast<std::size_t>(o.to)] = 1;
      current.steps.push_back(PathStep{o.edge->handle, u, o.to, at, o.edge->delay});
      extend(o.to, at + o.edge->delay);
      current.steps.pop_back();
      on_path[static_cast<std::size_t>(o.to)] = 0;
    }
  };
  if (s != t) {
    on_path[static_cast<std::size_t>(s)] = 1;
    extend(s, kNegativeInfinity);
  }
  return result;
}

TemporalPath latest_departure_form(const TemporalGraph& g,
                                   const TemporalPath& p) {
  TemporalPath out = p;
  for (std::size_t i = out.steps.size(); i-- > 1;) {
    PathStep& step = out.steps[i - 1];
    const Time latest = out.steps[i].time - step.delay;
    step.time = std::min(g.edge(step.handle).end, latest);
  }
  return out;
}

}  // namespace itg
