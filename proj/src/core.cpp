#include "itg/core.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>
#include <string>
#include <unordered_set>
#include <utility>

namespace itg {

namespace {

bool in_time_range(Time x) { return x >= -kTimeLimit && x <= kTimeLimit; }

}  // namespace

TemporalGraph::TemporalGraph(Vertex vertex_count, bool directed)
    : n_(vertex_count), directed_(directed) {
  if (vertex_count < 1) {
    throw InputError("vertex count must be at least 1");
  }
}

Handle TemporalGraph::add_edge(Vertex tail, Vertex head, Time start, Time end,
                               Time delay) {
  if (!contains(tail) || !contains(head)) {
    throw InputError("endpoint out of range [1.." + std::to_string(n_) +
                     "]: " + std::to_string(tail) + " " +
                     std::to_string(head));
  }
  if (tail == head) {
    throw InputError("loop on vertex " + std::to_string(tail));
  }
  if (!in_time_range(start) || !in_time_range(end) ||
      !in_time_range(delay)) {
    throw InputError("time value out of the supported range");
  }
  if (start > end) {
    throw InputError("interval start " + std::to_string(start) +
                     " after end " + std::to_string(end));
  }
  if (delay < 0) {
    throw InputError("negative delay " + std::to_string(delay));
  }
  if (end + delay > kTimeLimit) {
    throw InputError("arrival time out of the supported range");
  }
  if (edges_.size() >= static_cast<std::size_t>(std::numeric_limits<Handle>::max())) {
    throw CapacityError("too many presence records");
  }
  const auto handle = static_cast<Handle>(edges_.size());
  edges_.push_back(TemporalEdge{tail, head, start, end, delay, handle});
  return handle;
}

const TemporalEdge& TemporalGraph::edge(Handle handle) const {
  if (handle < 0 || static_cast<std::size_t>(handle) >= edges_.size()) {
    throw InputError("unknown presence handle " + std::to_string(handle));
  }
  return edges_[static_cast<std::size_t>(handle)];
}

std::size_t TemporalGraph::underlying_edge_count() const {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(presence_count());
  for (const auto& e : edges_) {
    pairs.emplace_back(e.tail, e.head);
    if (!directed_) pairs.emplace_back(e.head, e.tail);
  }
  std::sort(pairs.begin(), pairs.end());
  return static_cast<std::size_t>(
      std::unique(pairs.begin(), pairs.end()) - pairs.begin());
}

bool TemporalGraph::zero_delay() const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const TemporalEdge& e) { return e.delay == 0; });
}

namespace {

// Stable LSD radix sort by time, 11 bits per pass, only as many passes as
// the time range needs.
void radix_sort_by_time(EventList& events, Time first, std::uint64_t range) {
  constexpr int kBits = 11;
  constexpr std::size_t kBuckets = std::size_t{1} << kBits;
  EventList buffer(events.size());
  for (int shift = 0; shift < 64 && (range >> shift) != 0; shift += kBits) {
    auto digit = [&](const Event& e) {
      return static_cast<std::size_t>(
          (static_cast<std::uint64_t>(e.time - first) >> shift) & (kBuckets - 1));
    };
    std::vector<std::size_t> offset(kBuckets + 1, 0);
    for (const Event& e : events) ++offset[digit(e) + 1];
    for (std::size_t b = 1; b <= kBuckets; ++b) offset[b] += offset[b - 1];
    for (const Event& e : events) buffer[offset[digit(e)]++] = e;
    events.swap(buffer);
  }
}

EventList build_events(const TemporalGraph& g,
                       std::vector<std::uint32_t>* position) {
  const auto& edges = g.edges();
  const std::size_t count = 2 * edges.size();
  if (position) position->resize(count);
  if (edges.empty()) return {};
  Time first = edges.front().start;
  Time last = edges.front().end;
  for (const auto& e : edges) {
    first = std::min(first, e.start);
    last = std::max(last, e.end);
  }
  const auto range = static_cast<std::uint64_t>(last - first);
  auto start_of = [](const TemporalEdge& e) {
    return Event{e.tail, e.head, e.start, EventKind::kStart, e.handle};
  };
  auto end_of = [](const TemporalEdge& e) {
    return Event{e.tail, e.head, e.end, EventKind::kEnd, e.handle};
  };

  // Dense time range: one counting pass placing events straight from the
  // records. Starts are placed before ends, so ties keep that order.
  if (count >= 1024 && range < count) {
    std::vector<std::uint32_t> offset(static_cast<std::size_t>(range) + 2, 0);
    auto slot = [&](Time x) { return static_cast<std::size_t>(x - first); };
    for (const auto& e : edges) {
      ++offset[slot(e.start) + 1];
      ++offset[slot(e.end) + 1];
    }
    for (std::size_t b = 1; b < offset.size(); ++b) offset[b] += offset[b - 1];
    EventList events(count);
    for (std::size_t h = 0; h < edges.size(); ++h) {
      const std::uint32_t i = offset[slot(edges[h].start)]++;
      events[i] = start_of(edges[h]);
      if (position) (*position)[2 * h] = i;
    }
    for (std::size_t h = 0; h < edges.size(); ++h) {
      const std::uint32_t i = offset[slot(edges[h].end)]++;
      events[i] = end_of(edges[h]);
      if (position) (*position)[2 * h + 1] = i;
    }
    return events;
  }

  EventList events;
  events.reserve(count);
  for (const auto& e : edges) events.push_back(start_of(e));
  for (const auto& e : edges) events.push_back(end_of(e));
  // All starts precede all ends, so a stable sort by time alone puts
  // starts first among equal times.
  if (count < 1024) {
    std::stable_sort(events.begin(), events.end(),
                     [](const Event& a, const Event& b) { return a.time < b.time; });
  } else {
    radix_sort_by_time(events, first, range);
  }
  if (position) {
    for (std::size_t i = 0; i < count; ++i) {
      const Event& e = events[i];
      (*position)[2 * static_cast<std::size_t>(e.handle) +
                  (e.kind == EventKind::kEnd ? 1 : 0)] =
          static_cast<std::uint32_t>(i);
    }
  }
  return events;
}

}  // namespace

EventList build_event_list(const TemporalGraph& g) {
  return build_events(g, nullptr);
}

EventList build_event_list(const TemporalGraph& g,
                           std::vector<std::uint32_t>& position) {
  return build_events(g, &position);
}

Time TemporalPath::departure() const {
  if (steps.empty()) throw InputError("empty temporal path");
  return steps.front().time;
}

Time TemporalPath::arrival() const {
  if (steps.empty()) throw InputError("empty temporal path");
  return steps.back().time + steps.back().delay;
}

bool validate_path(const TemporalGraph& g, const TemporalPath& p, Vertex s,
                   Vertex t) {
  if (!g.contains(s) || !g.contains(t)) {
    throw InputError("source or target out of range");
  }
  for (const auto& step : p.steps) {
    if (!g.contains(step.from) || !g.contains(step.to)) {
      throw InputError("path step endpoint out of range");
    }
  }
  if (p.steps.empty()) return false;
  if (p.steps.front().from != s || p.steps.back().to != t) return false;

  std::unordered_set<Vertex> visited{s};
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    const PathStep& step = p.steps[i];
    if (step.handle < 0 ||
        static_cast<std::size_t>(step.handle) >= g.record_count()) {
      return false;
    }
    const TemporalEdge& e = g.edge(step.handle);
    const bool forward = e.tail == step.from && e.head == step.to;
    const bool backward =
        !g.directed() && e.head == step.from && e.tail == step.to;
    if (!forward && !backward) return false;
    if (step.delay != e.delay) return false;
    if (step.time < e.start || step.time > e.end) return false;
    if (i > 0) {
      const PathStep& prev = p.steps[i - 1];
      if (prev.to != step.from) return false;
      if (prev.time + prev.delay > step.time) return false;
    }
    if (!visited.insert(step.to).second) return false;
  }
  return true;
}

Time duration(const TemporalPath& p) { return p.arrival() - p.departure(); }

std::optional<Time> evaluate_profile(const Profile& pr, Time tau) {
  if (pr.kind == ProfileKind::kIdentity) return tau;
  // First triple whose domain (alpha_{i-1}, alpha_i] contains tau.
  auto it = std::lower_bound(
      pr.triples.begin(), pr.triples.end(), tau,
      [](const ProfileTriple& x, Time value) { return x.alpha < value; });
  if (it == pr.triples.end()) return std::nullopt;
  return it->beta + it->slope * (tau - it->alpha);
}

void append_compact(std::vector<ProfileTriple>& triples, const ProfileTriple& x) {
  if (!triples.empty()) {
    ProfileTriple& last = triples.back();
    if (last.alpha == x.alpha) return;  // empty domain
    // x's line passes through last's breakpoint with the same slope:
    // x alone describes both pieces.
    if (last.slope == x.slope &&
        x.beta - last.beta == x.slope * (x.alpha - last.alpha)) {
      last = x;
      return;
    }
  }
  triples.push_back(x);
}

Profile compact_profile(const Profile& raw) {
  if (raw.kind == ProfileKind::kIdentity) return raw;
  Profile out;
  for (const auto& x : raw.triples) append_compact(out.triples, x);
  return out;
}

}  // namespace itg
