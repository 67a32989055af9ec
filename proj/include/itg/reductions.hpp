#ifndef ITG_REDUCTIONS_HPP
#define ITG_REDUCTIONS_HPP

// Temporal graphs built from static graphs so that a fastest (or shortest)
// temporal path question answers a triangle question, brute-force triangle
// detectors to check them against, and seeded random generators.
//
// Static graphs use vertices 0..n-1 and store each edge once with u < v.
// Gadget numbering: s = 1, t = 2, then one contiguous block of n vertices
// per copy of V, copy j (1-based) holding vertex v at 3 + (j-1)*n + v.

#include <cstdint>
#include <vector>

#include "itg/core.hpp"

namespace itg {

struct WeightedEdge {
  std::int32_t u = 0;
  std::int32_t v = 0;
  std::int64_t weight = 0;

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

// Simple undirected loopless graph with integer edge weights. Unweighted
// uses ignore `weight`.
struct WeightedGraph {
  std::int32_t n = 0;
  std::vector<WeightedEdge> edges;

  void add_edge(std::int32_t u, std::int32_t v, std::int64_t weight = 0);

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;
};

// Throws InputError unless endpoints are in range, u != v and no pair
// repeats.
void validate(const WeightedGraph& g);

bool detect_triangle(const WeightedGraph& g);
bool detect_negative_triangle(const WeightedGraph& g);

struct ReductionInstance {
  TemporalGraph graph{1, false};
  Vertex source = 1;
  Vertex target = 2;
  // Start times of every presence leaving the source: sweeping earliest
  // arrival over these departures gives the exact fastest duration.
  std::vector<Time> candidates;
  // Construction constant: T for the negative-triangle gadget, N for the
  // triangle gadgets, the length threshold n + 4 for the shortest gadget.
  std::int64_t parameter = 0;
};

inline Vertex gadget_vertex(std::int32_t n, int copy, std::int32_t v) {
  return 3 + (copy - 1) * n + v;
}

// Undirected, delays T/2 + w and (T + w)/2. Weights are doubled first so
// both are integers; T = 2n * max |2w|. A temporal s-t path of duration
// < 2T exists iff g has a negative triangle. Throws InputError when times
// would leave the supported range.
ReductionInstance gen_negative_triangle_instance(const WeightedGraph& g);

// Undirected, all delays one, N = 10. The fastest s-t duration is 4 iff g
// has a triangle.
ReductionInstance gen_triangle_delay_one(const WeightedGraph& g);

// Same layers directed s -> V1 -> V2 -> V3 -> t with zero delays. The
// fastest s-t duration is 3 iff g has a triangle.
ReductionInstance gen_triangle_directed_zero(const WeightedGraph& g);

// Undirected, zero delays, copies V1..V4 and permanent presences [1, n].
// A temporal s-t path with at most n + 4 steps exists iff g has a
// triangle.
ReductionInstance gen_shortest_instance(const WeightedGraph& g);

// G(n, p) with weights uniform in [-max_abs_weight, max_abs_weight].
WeightedGraph gen_random_graph(std::int32_t n, double p, std::uint64_t seed,
                               std::int64_t max_abs_weight = 0);

// `records` presences with uniform endpoints u != v and interval
// [t1, t2] drawn as two sorted uniform times in [0, time_max]. Delays are
// zero or uniform in [0, max_delay].
TemporalGraph gen_random_temporal(Vertex n, std::size_t records, Time time_max,
                                  bool zero_delay, std::uint64_t seed,
                                  bool directed = false, Time max_delay = 3);

}  // namespace itg

#endif  // ITG_REDUCTIONS_HPP
