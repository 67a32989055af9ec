#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "itg/oracle.hpp"
#include "itg/reductions.hpp"
#include "itg/routing.hpp"
#include "test_support.hpp"

namespace itg {
namespace {

TEST(EdgeTimetable, Basics) {
  EdgeTimetable tt({{3, 7, 2, 0}});
  ASSERT_TRUE(tt.earliest(0));
  EXPECT_EQ(tt.earliest(0)->arrival, 5);
  EXPECT_EQ(tt.earliest(0)->traversal, 3);
  EXPECT_EQ(tt.earliest(6)->arrival, 8);
  EXPECT_EQ(tt.earliest(8), std::nullopt);
  EXPECT_EQ(EdgeTimetable({}).earliest(0), std::nullopt);
}

TEST(EdgeTimetable, MatchesScanWithMixedDelays) {
  std::mt19937_64 rng(41);
  for (int round = 0; round < 300; ++round) {
    std::vector<EdgeTimetable::Presence> ps;
    const int k = static_cast<int>(rng() % 7);
    for (int i = 0; i < k; ++i) {
      Time a = static_cast<Time>(rng() % 20);
      Time b = static_cast<Time>(rng() % 20);
      if (a > b) std::swap(a, b);
      ps.push_back({a, b, static_cast<Time>(rng() % 6), i});
    }
    const EdgeTimetable tt(ps);
    for (Time tau = -2; tau <= 22; ++tau) {
      std::optional<Time> best;
      for (const auto& p : ps) {
        if (p.end < tau) continue;
        const Time arr = std::max(tau, p.start) + p.delay;
        if (!best || arr < *best) best = arr;
      }
      const auto hop = tt.earliest(tau);
      ASSERT_EQ(hop.has_value(), best.has_value()) << round << " " << tau;
      if (hop) {
        ASSERT_EQ(hop->arrival, *best) << round << " " << tau;
        const auto& p = ps[static_cast<std::size_t>(hop->handle)];
        EXPECT_EQ(hop->traversal, std::max(tau, p.start));
        EXPECT_LE(hop->traversal, p.end);
        EXPECT_EQ(hop->arrival, hop->traversal + p.delay);
      }
    }
  }
}

TEST(EarliestArrival, Examples) {
  TemporalGraph g(2, false);
  g.add_edge(1, 2, 3, 7, 2);
  EXPECT_EQ(earliest_arrival(g, 1, 0).arrival_at(2), 5);
  EXPECT_EQ(earliest_arrival(g, 1, 3).arrival_at(2), 5);
  EXPECT_EQ(earliest_arrival(g, 1, 8).arrival_at(2), std::nullopt);
  EXPECT_THROW(earliest_arrival(g, 3, 0), InputError);
}

TEST(EarliestArrival, TriangleGadgetDurationFour) {
  WeightedGraph k3;
  k3.n = 3;
  k3.add_edge(0, 1);
  k3.add_edge(1, 2);
  k3.add_edge(0, 2);
  const auto inst = gen_triangle_delay_one(k3);
  for (std::int32_t u = 0; u < 3; ++u) {
    const Time depart = u * inst.parameter;
    EXPECT_EQ(earliest_arrival(inst.graph, inst.source, depart).arrival_at(inst.target),
              depart + 4)
        << u;
  }
}

TEST(EarliestArrival, MatchesRelaxationAndYieldsValidPaths) {
  std::mt19937_64 rng(43);
  for (int round = 0; round < 200; ++round) {
    const bool directed = round % 3 == 0;
    const auto n = static_cast<Vertex>(2 + rng() % 9);
    const TemporalGraph g =
        gen_random_temporal(n, rng() % 30, 25, false, rng(), directed, 4);
    const Vertex s = 1 + static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n));
    const TemporalRouter router(g);
    std::vector<std::optional<Time>> previous;
    for (Time depart = -1; depart <= 27; ++depart) {
      const ArrivalTree tree = router.earliest_arrival(s, depart);
      const auto expected = testing::naive_arrivals(g, s, depart);
      for (Vertex v = 1; v <= n; ++v) {
        const auto i = static_cast<std::size_t>(v - 1);
        ASSERT_EQ(tree.arrival[i], expected[i]) << round << " " << depart << " " << v;
        // Later departures never arrive earlier.
        if (!previous.empty() && tree.arrival[i] && previous[i]) {
          ASSERT_GE(*tree.arrival[i], *previous[i]);
        }
        if (!previous.empty() && tree.arrival[i]) {
          ASSERT_TRUE(previous[i]);
        }
        if (v == s || !tree.arrival[i]) continue;
        const auto p = tree.path_to(v);
        ASSERT_TRUE(p);
        ASSERT_TRUE(validate_path(g, *p, s, v));
        EXPECT_GE(p->departure(), depart);
        EXPECT_EQ(p->arrival(), *tree.arrival[i]);
      }
      previous = tree.arrival;
    }
  }
}

TEST(EarliestArrival, StopAtSettlesTheTarget) {
  const TemporalGraph g = gen_random_temporal(30, 200, 50, false, 5);
  const ArrivalTree full = earliest_arrival(g, 1, 0);
  for (Vertex t = 2; t <= 30; ++t) {
    EXPECT_EQ(earliest_arrival(g, 1, 0, t).arrival_at(t), full.arrival_at(t));
  }
}

TEST(FastestSweep, Basics) {
  TemporalGraph g(3, false);
  g.add_edge(1, 2, 0, 0);
  g.add_edge(2, 3, 4, 4);
  g.add_edge(1, 2, 3, 3);
  const std::vector<Time> cands{0, 3};
  EXPECT_EQ(fastest_by_departure_sweep(g, 1, 3, cands), (Fastest{1, 3}));
  const std::vector<Time> late{5};
  EXPECT_EQ(fastest_by_departure_sweep(g, 1, 3, late), std::nullopt);
  EXPECT_THROW(fastest_by_departure_sweep(g, 1, 3, {}), UsageError);
}

TEST(Oracle, Examples) {
  TemporalGraph one(2, false);
  one.add_edge(1, 2, 0, 5);
  const auto a = oracle_time_expanded(one, 1, 2);
  EXPECT_EQ(a.fastest, 0);
  EXPECT_EQ(a.shortest, 1u);
  EXPECT_EQ(a.arrival_for(-3), 0);
  EXPECT_EQ(a.arrival_for(5), 5);
  EXPECT_EQ(a.arrival_for(6), std::nullopt);

  TemporalGraph two(3, false);
  two.add_edge(1, 2, 0, 2);
  two.add_edge(2, 3, 4, 6);
  const auto b = oracle_time_expanded(two, 1, 3);
  EXPECT_EQ(b.fastest, 2);
  EXPECT_EQ(b.fastest_depart, 2);
  EXPECT_EQ(b.shortest, 2u);

  EXPECT_THROW(oracle_time_expanded(one, 1, 1), UsageError);
  TemporalGraph wide(2, false);
  wide.add_edge(1, 2, 0, 100'000'000);
  EXPECT_THROW(oracle_time_expanded(wide, 1, 2), CapacityError);
  const auto empty = oracle_time_expanded(TemporalGraph(2, false), 1, 2);
  EXPECT_EQ(empty.arrival_for(0), std::nullopt);
  EXPECT_EQ(empty.fastest, std::nullopt);
  EXPECT_EQ(empty.shortest, std::nullopt);
}

TEST(Oracle, ShortestGadgetOnTriangle) {
  WeightedGraph k3;
  k3.n = 3;
  k3.add_edge(0, 1);
  k3.add_edge(1, 2);
  k3.add_edge(0, 2);
  const auto inst = gen_shortest_instance(k3);
  EXPECT_EQ(oracle_time_expanded(inst.graph, inst.source, inst.target).shortest, 7u);
}

// Minimum-step walk by layered relaxation: after k rounds, arr[v] is the
// earliest arrival using at most k steps.
std::optional<std::size_t> naive_shortest(const TemporalGraph& g, Vertex s, Vertex t) {
  std::optional<std::size_t> best;
  Time lo = 0;
  Time hi = -1;
  for (const auto& e : g.edges()) {
    lo = std::min(lo, e.start);
    hi = std::max(hi, e.end);
  }
  for (Time depart = lo; depart <= hi; ++depart) {
    std::vector<std::optional<Time>> arr(static_cast<std::size_t>(g.vertex_count()));
    arr[static_cast<std::size_t>(s - 1)] = depart;
    for (std::size_t k = 1; k <= static_cast<std::size_t>(g.vertex_count()); ++k) {
      auto next = arr;
      for (const auto& e : g.edges()) {
        auto step = [&](Vertex from, Vertex to) {
          const auto& a = arr[static_cast<std::size_t>(from - 1)];
          if (!a || *a > e.end) return;
          const Time r = std::max(*a, e.start) + e.delay;
          auto& b = next[static_cast<std::size_t>(to - 1)];
          if (!b || r < *b) b = r;
        };
        step(e.tail, e.head);
        if (!g.directed()) step(e.head, e.tail);
      }
      arr = std::move(next);
      if (arr[static_cast<std::size_t>(t - 1)]) {
        if (!best || k < *best) best = k;
        break;
      }
    }
  }
  return best;
}

TEST(Oracle, MatchesBruteForceOnRandomInstances) {
  std::mt19937_64 rng(47);
  for (int round = 0; round < 150; ++round) {
    const bool directed = round % 2 == 1;
    const auto n = static_cast<Vertex>(2 + rng() % 7);
    const TemporalGraph g =
        gen_random_temporal(n, rng() % 18, 20, round % 3 == 0, rng(), directed, 3);
    const Vertex s = 1;
    const Vertex t = 2;
    const auto r = oracle_time_expanded(g, s, t);
    std::optional<Time> fastest;
    for (Time depart = -1; depart <= 21; ++depart) {
      const auto expected = testing::naive_arrival(g, s, t, depart);
      ASSERT_EQ(r.arrival_for(depart), expected) << round << " " << depart;
    }
    // Fastest over exhaustive paths with their latest-departure timing.
    for (const auto& p : enumerate_paths(g, s, t, static_cast<std::size_t>(n))) {
      ASSERT_TRUE(validate_path(g, p, s, t));
      const TemporalPath late = latest_departure_form(g, p);
      ASSERT_TRUE(validate_path(g, late, s, t));
      ASSERT_EQ(late.arrival(), p.arrival());
      if (!fastest || duration(late) < *fastest) fastest = duration(late);
    }
    ASSERT_EQ(r.fastest, fastest) << round;
    ASSERT_EQ(r.shortest, naive_shortest(g, s, t)) << round;
  }
}

TEST(EnumeratePaths, Examples) {
  TemporalGraph one(2, false);
  one.add_edge(1, 2, 0, 5);
  EXPECT_EQ(enumerate_paths(one, 1, 2, 1).size(), 1u);

  TemporalGraph apart(3, false);
  apart.add_edge(1, 3, 0, 5);
  EXPECT_TRUE(enumerate_paths(apart, 1, 2, 3).empty());

  TemporalGraph two(3, false);
  two.add_edge(1, 2, 0, 2);
  two.add_edge(2, 3, 4, 6);
  const auto paths = enumerate_paths(two, 1, 3, 3);
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_EQ(paths[0].length(), 2u);
}

// Walk optima (oracle) equal path optima (enumeration): loops never help.
TEST(EnumeratePaths, PathsAchieveWalkOptima) {
  std::mt19937_64 rng(53);
  for (int round = 0; round < 200; ++round) {
    const auto n = static_cast<Vertex>(2 + rng() % 5);
    const TemporalGraph g =
        gen_random_temporal(n, rng() % 12, 15, round % 2 == 0, rng(), round % 4 == 1, 2);
    const auto paths = enumerate_paths(g, 1, 2, static_cast<std::size_t>(n));
    const auto r = oracle_time_expanded(g, 1, 2);
    for (Time depart = -1; depart <= 16; ++depart) {
      // Clip every window to [depart, end] so that enumerated paths leave
      // no earlier than depart.
      TemporalGraph clipped(n, g.directed());
      for (const auto& e : g.edges()) {
        if (e.end >= depart) {
          clipped.add_edge(e.tail, e.head, std::max(e.start, depart), e.end, e.delay);
        }
      }
      std::optional<Time> best;
      for (const auto& p : enumerate_paths(clipped, 1, 2, static_cast<std::size_t>(n))) {
        if (!best || p.arrival() < *best) best = p.arrival();
      }
      ASSERT_EQ(r.arrival_for(depart), best) << round << " " << depart;
    }
    std::optional<Time> fastest;
    std::optional<std::size_t> shortest;
    for (const auto& p : paths) {
      const Time d = duration(latest_departure_form(g, p));
      if (!fastest || d < *fastest) fastest = d;
      if (!shortest || p.length() < *shortest) shortest = p.length();
    }
    ASSERT_EQ(r.fastest, fastest) << round;
    ASSERT_EQ(r.shortest, shortest) << round;
  }
}

}  // namespace
}  // namespace itg
