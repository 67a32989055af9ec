#include "itg/reductions.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>

namespace itg {

void WeightedGraph::add_edge(std::int32_t u, std::int32_t v,
                             std::int64_t weight) {
  if (u > v) std::swap(u, v);
  edges.push_back(WeightedEdge{u, v, weight});
}

void validate(const WeightedGraph& g) {
  if (g.n < 0) throw InputError("negative vertex count");
  std::set<std::pair<std::int32_t, std::int32_t>> seen;
  for (const auto& e : g.edges) {
    if (e.u < 0 || e.v < 0 || e.u >= g.n || e.v >= g.n) {
      throw InputError("static edge endpoint out of range [0.." +
                       std::to_string(g.n - 1) + "]");
    }
    if (e.u == e.v) throw InputError("static graph must be loopless");
    if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) {
      throw InputError("duplicate static edge " + std::to_string(e.u) + " " +
                       std::to_string(e.v));
    }
  }
}

namespace {

constexpr std::int64_t kNoEdge = std::numeric_limits<std::int64_t>::min();

// Dense weight matrix, kNoEdge where absent.
std::vector<std::int64_t> weight_matrix(const WeightedGraph& g) {
  const auto n = static_cast<std::size_t>(g.n);
  std::vector<std::int64_t> w(n * n, kNoEdge);
  for (const auto& e : g.edges) {
    w[static_cast<std::size_t>(e.u) * n + static_cast<std::size_t>(e.v)] = e.weight;
    w[static_cast<std::size_t>(e.v) * n + static_cast<std::size_t>(e.u)] = e.weight;
  }
  return w;
}

template <typename Accept>
bool any_triangle(const WeightedGraph& g, Accept accept) {
  validate(g);
  const auto n = static_cast<std::size_t>(g.n);
  const auto w = weight_matrix(g);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const std::int64_t ab = w[a * n + b];
      if (ab == kNoEdge) continue;
      for (std::size_t c = b + 1; c < n; ++c) {
        const std::int64_t bc = w[b * n + c];
        const std::int64_t ac = w[a * n + c];
        if (bc != kNoEdge && ac != kNoEdge && accept(ab, bc, ac)) return true;
      }
    }
  }
  return false;
}

// a * b, or nullopt when |a * b| would exceed kTimeLimit.
std::optional<std::int64_t> bounded_product(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) return std::nullopt;
  if (out > kTimeLimit || out < -kTimeLimit) return std::nullopt;
  return out;
}

std::vector<std::vector<std::int32_t>> neighbours(const WeightedGraph& g) {
  std::vector<std::vector<std::int32_t>> adj(static_cast<std::size_t>(g.n));
  for (const auto& e : g.edges) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

// Shared layered construction of the delay-one and directed zero-delay
// triangle gadgets.
ReductionInstance layered_triangle_gadget(const WeightedGraph& g, bool directed,
                                          Time delay) {
  validate(g);
  constexpr std::int64_t kSpacing = 10;
  const std::int32_t n = g.n;
  ReductionInstance out;
  out.graph = TemporalGraph(3 * n + 2, directed);
  out.parameter = kSpacing;
  const Time horizon = static_cast<Time>(n) * kSpacing + 3;
  // Both orientations of every edge, so a triangle can be entered from
  // any of its vertices.
  for (const auto& e : g.edges) {
    for (const auto& [u, v] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      out.graph.add_edge(gadget_vertex(n, 1, u), gadget_vertex(n, 2, v), 0, horizon, delay);
      out.graph.add_edge(gadget_vertex(n, 2, u), gadget_vertex(n, 3, v), 0, horizon, delay);
    }
  }
  for (std::int32_t v = 0; v < n; ++v) {
    const Time at = static_cast<Time>(v) * kSpacing;
    out.graph.add_edge(out.source, gadget_vertex(n, 1, v), at, at, delay);
    out.candidates.push_back(at);
  }
  const auto adj = neighbours(g);
  for (std::int32_t v = 0; v < n; ++v) {
    for (const std::int32_t u : adj[static_cast<std::size_t>(v)]) {
      const Time at = static_cast<Time>(u) * kSpacing + 3;
      out.graph.add_edge(gadget_vertex(n, 3, v), out.target, at, at, delay);
    }
  }
  return out;
}

}  // namespace

bool detect_triangle(const WeightedGraph& g) {
  return any_triangle(g, [](std::int64_t, std::int64_t, std::int64_t) { return true; });
}

bool detect_negative_triangle(const WeightedGraph& g) {
  return any_triangle(g, [](std::int64_t ab, std::int64_t bc, std::int64_t ac) {
    return ab + bc + ac < 0;
  });
}

ReductionInstance gen_negative_triangle_instance(const WeightedGraph& g) {
  validate(g);
  const std::int32_t n = g.n;
  const auto m = static_cast<std::int64_t>(g.edges.size());

  std::int64_t max_abs = 0;
  for (const auto& e : g.edges) {
    if (e.weight > kTimeLimit / 4 || e.weight < -kTimeLimit / 4) {
      throw InputError("edge weight too large for the gadget");
    }
    max_abs = std::max(max_abs, std::abs(2 * e.weight));
  }
  const auto period = bounded_product(2 * static_cast<std::int64_t>(n), max_abs);
  const auto horizon = period ? bounded_product(2 * m, *period) : std::nullopt;
  if (!period || !horizon || *horizon + *period > kTimeLimit) {
    throw InputError("negative-triangle gadget times exceed the 64-bit budget");
  }
  const Time big_t = *period;

  ReductionInstance out;
  out.graph = TemporalGraph(3 * n + 2, false);
  out.parameter = big_t;
  for (const auto& e : g.edges) {
    const std::int32_t u = std::min(e.u, e.v);
    const std::int32_t v = std::max(e.u, e.v);
    const Time delay = big_t / 2 + 2 * e.weight;
    out.graph.add_edge(gadget_vertex(n, 1, u), gadget_vertex(n, 2, v), 0, *horizon, delay);
    out.graph.add_edge(gadget_vertex(n, 2, u), gadget_vertex(n, 3, v), 0, *horizon, delay);
  }
  for (std::int64_t i = 0; i < m; ++i) {
    const auto& e = g.edges[static_cast<std::size_t>(i)];
    const std::int32_t u = std::min(e.u, e.v);
    const std::int32_t v = std::max(e.u, e.v);
    const Time delay = (big_t + 2 * e.weight) / 2;
    const Time from = 2 * i * big_t;
    out.graph.add_edge(out.source, gadget_vertex(n, 1, u), from, from, delay);
    out.graph.add_edge(gadget_vertex(n, 3, v), out.target, from, from + 2 * big_t, delay);
    out.candidates.push_back(from);
  }
  return out;
}

ReductionInstance gen_triangle_delay_one(const WeightedGraph& g) {
  return layered_triangle_gadget(g, false, 1);
}

ReductionInstance gen_triangle_directed_zero(const WeightedGraph& g) {
  return layered_triangle_gadget(g, true, 0);
}

ReductionInstance gen_shortest_instance(const WeightedGraph& g) {
  validate(g);
  const std::int32_t n = g.n;
  if (n < 1) throw InputError("shortest-path gadget needs at least one vertex");
  ReductionInstance out;
  out.graph = TemporalGraph(4 * n + 2, false);
  out.parameter = static_cast<std::int64_t>(n) + 4;
  out.candidates.push_back(1);
  const Time last = n;
  // Copy j holds v_i (1-based i) at gadget_vertex(n, j, i - 1).
  auto at = [n](int copy, std::int32_t i) { return gadget_vertex(n, copy, i - 1); };
  for (const int copy : {1, 4}) {
    for (std::int32_t i = 1; i < n; ++i) {
      out.graph.add_edge(at(copy, i), at(copy, i + 1), 1, last);
    }
  }
  out.graph.add_edge(out.source, at(1, n), 1, last);
  out.graph.add_edge(out.target, at(4, 1), 1, last);
  for (const auto& e : g.edges) {
    const std::int32_t i = std::min(e.u, e.v) + 1;
    const std::int32_t j = std::max(e.u, e.v) + 1;
    out.graph.add_edge(at(1, i), at(2, j), i, i);
    out.graph.add_edge(at(3, j), at(4, i), i, i);
    out.graph.add_edge(at(2, i), at(3, j), 1, last);
  }
  return out;
}

WeightedGraph gen_random_graph(std::int32_t n, double p, std::uint64_t seed,
                               std::int64_t max_abs_weight) {
  if (n < 0) throw InputError("negative vertex count");
  if (p < 0.0 || p > 1.0) throw InputError("edge probability outside [0, 1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::uniform_int_distribution<std::int64_t> weight(-max_abs_weight, max_abs_weight);
  WeightedGraph g;
  g.n = n;
  for (std::int32_t u = 0; u < n; ++u) {
    for (std::int32_t v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v, max_abs_weight > 0 ? weight(rng) : 0);
    }
  }
  return g;
}

TemporalGraph gen_random_temporal(Vertex n, std::size_t records, Time time_max,
                                  bool zero_delay, std::uint64_t seed,
                                  bool directed, Time max_delay) {
  if (n < 2) throw InputError("random temporal graph needs n >= 2");
  if (time_max < 0) throw InputError("time_max must be non-negative");
  if (max_delay < 0) throw InputError("max_delay must be non-negative");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Vertex> first(1, n);
  std::uniform_int_distribution<Vertex> second(1, n - 1);
  std::uniform_int_distribution<Time> when(0, time_max);
  std::uniform_int_distribution<Time> lag(0, max_delay);
  TemporalGraph g(n, directed);
  for (std::size_t i = 0; i < records; ++i) {
    const Vertex u = first(rng);
    Vertex v = second(rng);
    if (v >= u) ++v;
    Time a = when(rng);
    Time b = when(rng);
    if (a > b) std::swap(a, b);
    const Time delay = zero_delay ? 0 : lag(rng);
    g.add_edge(u, v, a, b, delay);
  }
  return g;
}

}  // namespace itg
