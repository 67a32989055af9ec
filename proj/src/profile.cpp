#include "itg/profile.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "itg/dynconn.hpp"
#include "itg/routing.hpp"

namespace itg {

namespace {

void check_profile_input(const TemporalGraph& g, Vertex s, Vertex t) {
  if (!g.contains(s) || !g.contains(t)) {
    throw InputError("source or target out of range [1.." +
                     std::to_string(g.vertex_count()) + "]");
  }
  if (g.directed()) {
    throw UnsupportedInputError(
        "profile sweep requires an undirected temporal graph");
  }
  if (!g.zero_delay()) {
    throw UnsupportedInputError(
        "profile sweep requires zero delays (nonzero delay present)");
  }
}

// Components kept by DynamicConnectivity; the last-departure table is
// indexed by representative.
class OnlineComponents {
 public:
  explicit OnlineComponents(Vertex n)
      : cc_(n), ldt_(static_cast<std::size_t>(n), kNegativeInfinity) {}

  Vertex root(Vertex v) const { return cc_.representative(v); }
  Time& value(Vertex root) { return ldt_[static_cast<std::size_t>(root - 1)]; }
  Time& ldt(Vertex v) { return value(root(v)); }
  void add(const Event& e, Vertex, Vertex) { cc_.insert(e.u, e.v, e.handle); }
  void remove(const Event& e) { cc_.erase(e.handle); }
  void finish_event() {}

 private:
  DynamicConnectivity cc_;
  std::vector<Time> ldt_;
};

// Union-find with rollback for the offline engine. Every edge is present
// on a contiguous range of events, so a depth-first walk over a segment
// tree on the event axis sees exactly the edges present before each event.
// Undoing a union gives the detached part the value of the whole: the
// component really was connected at the last event seen, so this is the
// split rule of the sweep. Redoing it takes the max of two equal values.
class RollbackComponents {
 public:
  explicit RollbackComponents(Vertex n)
      : link_(static_cast<std::size_t>(n), -1),
        ldt_(static_cast<std::size_t>(n), kNegativeInfinity),
        roots_((static_cast<std::size_t>(n) + 63) / 64, ~std::uint64_t{0}) {}

  std::int32_t root(Vertex v) const { return find(v - 1); }
  Time& value(std::int32_t root) { return ldt_[static_cast<std::size_t>(root)]; }
  Time& ldt(Vertex v) { return value(root(v)); }

  // Roots are 0-based indices. Unions only ever link roots, so the root of
  // a vertex is also the root of any root it had before.
  std::int32_t find(std::int32_t x) const {
    while (!is_root(static_cast<std::size_t>(x))) {
      x = link_[static_cast<std::size_t>(x)];
    }
    return x;
  }

  void unite_roots(std::int32_t a, std::int32_t b) {
    if (a == b) return;
    auto ra = static_cast<std::size_t>(a);
    auto rb = static_cast<std::size_t>(b);
    if (link_[ra] < link_[rb]) std::swap(ra, rb);  // ra has fewer vertices
    undo_.push_back({static_cast<std::int32_t>(ra), link_[ra]});
    link_[rb] += link_[ra];
    link_[ra] = static_cast<std::int32_t>(rb);
    roots_[ra / 64] &= ~(std::uint64_t{1} << (ra % 64));
    ldt_[rb] = std::max(ldt_[rb], ldt_[ra]);
  }

  // Hint that the entries of 0-based index x will be read soon.
  void prefetch(std::int32_t x) const {
    __builtin_prefetch(&link_[static_cast<std::size_t>(x)]);
    __builtin_prefetch(&ldt_[static_cast<std::size_t>(x)]);
  }

  std::size_t checkpoint() const { return undo_.size(); }

  void rollback(std::size_t mark) {
    while (undo_.size() > mark) {
      const auto [child, size] = undo_.back();
      undo_.pop_back();
      const auto c = static_cast<std::size_t>(child);
      const auto root = static_cast<std::size_t>(link_[c]);
      link_[root] -= size;
      link_[c] = size;
      ldt_[c] = ldt_[root];
      roots_[c / 64] |= std::uint64_t{1} << (c % 64);
    }
  }

  // Sweep interface. The edge of a start event is joined for the rest of
  // the event only; the tree walk adds it for the following events.
  void add(const Event&, std::int32_t ru, std::int32_t rv) {
    joined_ = checkpoint();
    unite_roots(ru, rv);
  }
  void remove(const Event&) {}
  void finish_event() {
    if (joined_) rollback(*joined_);
    joined_.reset();
  }

 private:
  struct Undo {
    std::int32_t child;
    std::int32_t size;  // as stored in link_ before the union
  };

  bool is_root(std::size_t x) const { return (roots_[x / 64] >> (x % 64)) & 1; }

  // Parent index, or minus the vertex count at a root.
  std::vector<std::int32_t> link_;
  std::vector<Time> ldt_;
  // One bit per vertex, set at roots. Small enough to stay in the first
  // level cache where link_ does not, and most finds stop at a root.
  std::vector<std::uint64_t> roots_;
  std::vector<Undo> undo_;
  std::optional<std::size_t> joined_;
};

// One event of the sweep against either component structure.
template <typename Components>
class Sweep {
 public:
  Sweep(Vertex n, Vertex s, Vertex t, const LdtObserver& observer,
        bool compact, Components& cc)
      : n_(n), s_(s), t_(t), observer_(observer), compact_(compact), cc_(cc) {}

  void process(std::size_t index, const Event& e) {
    // Roots are looked up once and reused until the components change.
    const Time tau = e.time;
    const auto rs = cc_.root(s_);
    cc_.value(rs) = tau;
    const auto rt = cc_.root(t_);
    const Time lambda_t = cc_.value(rt);
    const bool st_connected = rs == rt;
    if (e.kind == EventKind::kStart) {
      const auto ru = cc_.root(e.u);
      const auto rv = cc_.root(e.v);
      const Time lambda = std::max(cc_.value(ru), cc_.value(rv));
      cc_.add(e, ru, rv);
      const auto joined = cc_.root(e.u);
      cc_.value(joined) = lambda;
      if (joined == cc_.root(t_) && lambda > lambda_t) {
        emit({lambda, tau, 0});
      }
    } else {
      const Time lambda = cc_.ldt(e.u);
      cc_.remove(e);
      cc_.ldt(e.u) = lambda;
      cc_.ldt(e.v) = lambda;
    }
    if (st_connected) emit({tau, tau, 1});

    if (observer_) {
      by_vertex_.resize(static_cast<std::size_t>(n_));
      for (Vertex w = 1; w <= n_; ++w) {
        by_vertex_[static_cast<std::size_t>(w - 1)] = cc_.ldt(w);
      }
      observer_(index, e, by_vertex_);
    }
    cc_.finish_event();
  }

  Profile take() { return std::move(profile_); }

 private:
  void emit(const ProfileTriple& x) {
    if (compact_) {
      append_compact(profile_.triples, x);
    } else {
      profile_.triples.push_back(x);
    }
  }

  Vertex n_;
  Vertex s_;
  Vertex t_;
  const LdtObserver& observer_;
  bool compact_;
  Components& cc_;
  Profile profile_;
  std::vector<Time> by_vertex_;
};

Profile sweep_online(const TemporalGraph& g, const EventList& events, Vertex s,
                     Vertex t, const LdtObserver& observer, bool compact) {
  OnlineComponents cc(g.vertex_count());
  Sweep sweep(g.vertex_count(), s, t, observer, compact, cc);
  for (std::size_t i = 0; i < events.size(); ++i) sweep.process(i, events[i]);
  return sweep.take();
}

Profile sweep_offline(const TemporalGraph& g, Vertex s, Vertex t,
                      const LdtObserver& observer, bool compact) {
  std::vector<std::uint32_t> position;
  const EventList events = build_event_list(g, position);
  const auto count = static_cast<std::uint32_t>(events.size());
  if (count == 0) return {};

  // The edge of a record is present before events lo .. hi - 1: from just
  // after its start event up to and including its end event. Its ends are
  // held as 0-based component roots, refreshed at every node it reaches.
  struct Span {
    std::uint32_t lo;
    std::uint32_t hi;
    std::int32_t u;
    std::int32_t v;
  };
  std::vector<Span> stack;
  stack.reserve(g.record_count());
  for (const auto& e : g.edges()) {
    const auto h = 2 * static_cast<std::size_t>(e.handle);
    stack.push_back({position[h] + 1, position[h + 1] + 1, e.tail - 1, e.head - 1});
  }

  // Depth-first over halvings of the event range [lo, hi). A node gets on
  // top of `stack` the edges overlapping its range, joins those spanning
  // all of it and hands the rest to its halves. An edge whose ends are
  // already joined cannot change any component below, so it is dropped.
  constexpr std::uint32_t kLookahead = 8;
  RollbackComponents cc(g.vertex_count());
  Sweep sweep(g.vertex_count(), s, t, observer, compact, cc);
  auto visit = [&](auto&& self, std::size_t begin, std::uint32_t lo,
                   std::uint32_t hi) -> void {
    const std::size_t mark = cc.checkpoint();
    const std::size_t top = stack.size();
    if (hi - lo == 1) {
      for (std::size_t k = begin; k < top; ++k) {
        cc.unite_roots(cc.find(stack[k].u), cc.find(stack[k].v));
      }
      // Leaves are reached in event order, so the endpoints of a later
      // event are known in advance.
      if (lo + kLookahead < count) {
        cc.prefetch(events[lo + kLookahead].u - 1);
        cc.prefetch(events[lo + kLookahead].v - 1);
      }
      sweep.process(lo, events[lo]);
    } else {
      // One pass joins, prunes and passes the left half its edges; the
      // kept edges are compacted in place below `top`.
      const std::uint32_t mid = lo + (hi - lo) / 2;
      std::size_t kept = begin;
      for (std::size_t k = begin; k < top; ++k) {
        if (k + kLookahead < top) {
          cc.prefetch(stack[k + kLookahead].u);
          cc.prefetch(stack[k + kLookahead].v);
        }
        Span x = stack[k];
        x.u = cc.find(x.u);
        x.v = cc.find(x.v);
        if (x.lo <= lo && x.hi >= hi) {
          cc.unite_roots(x.u, x.v);
        } else if (x.u != x.v) {
          stack[kept++] = x;
          if (x.lo < mid) stack.push_back(x);
        }
      }
      self(self, top, lo, mid);
      stack.resize(kept);
      for (std::size_t k = begin; k < kept; ++k) {
        if (stack[k].hi > mid) stack.push_back(stack[k]);
      }
      self(self, kept, mid, hi);
    }
    stack.resize(begin);
    cc.rollback(mark);
  };
  visit(visit, 0, 0, count);
  return sweep.take();
}

Profile run_sweep(const TemporalGraph& g, Vertex s, Vertex t,
                  const LdtObserver& observer, SweepEngine engine, bool compact) {
  check_profile_input(g, s, t);
  if (s == t) return Profile::identity();
  if (engine == SweepEngine::kOnline) {
    return sweep_online(g, build_event_list(g), s, t, observer, compact);
  }
  return sweep_offline(g, s, t, observer, compact);
}

}  // namespace

Profile raw_profile_st(const TemporalGraph& g, Vertex s, Vertex t,
                       const LdtObserver& observer, SweepEngine engine) {
  return run_sweep(g, s, t, observer, engine, false);
}

Profile profile_st(const TemporalGraph& g, Vertex s, Vertex t,
                   SweepEngine engine) {
  // Compacting while emitting gives the same triples as compact_profile
  // on the raw output without holding one triple per event.
  return run_sweep(g, s, t, {}, engine, true);
}

std::optional<Fastest> fastest_from_profile(const Profile& pr) {
  if (pr.kind == ProfileKind::kIdentity) {
    throw UsageError("identity profile (s == t) has no fastest path");
  }
  std::optional<Fastest> best;
  for (const auto& x : pr.triples) {
    const Time d = x.beta - x.alpha;
    if (!best || d < best->duration) best = Fastest{d, x.alpha};
  }
  return best;
}

std::optional<TemporalPath> fastest_path(const TemporalGraph& g, Vertex s,
                                         Vertex t) {
  const auto best = fastest_from_profile(profile_st(g, s, t));
  if (!best) return std::nullopt;
  const ArrivalTree tree = earliest_arrival(g, s, best->depart, t);
  return tree.path_to(t);
}

}  // namespace itg
