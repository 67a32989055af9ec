#include "itg/dynconn.hpp"

#include <bit>
#include <cassert>
#include <string>
#include <utility>

namespace itg {

DynamicConnectivity::DynamicConnectivity(Vertex n) : n_(n) {
  if (n < 1) throw InputError("dynamic connectivity needs n >= 1");
  levels_ = static_cast<std::int32_t>(std::bit_width(static_cast<std::uint32_t>(n)));
  const auto slots = static_cast<std::size_t>(levels_) * n_;
  nodes_.resize(static_cast<std::size_t>(n_));
  vertex_nodes_.assign(slots, kNil);
  for (std::int32_t v = 0; v < n_; ++v) {
    nodes_[v].vertex = v;
    vertex_nodes_[v] = v;
  }
  adjacency_.assign(slots, -1);
}

void DynamicConnectivity::check_vertex(Vertex u) const {
  if (u < 1 || u > n_) {
    throw InputError("vertex " + std::to_string(u) + " out of range [1.." +
                     std::to_string(n_) + "]");
  }
}

// ---------------------------------------------------------------------------
// Treap over Euler tour sequences

DynamicConnectivity::NodeId DynamicConnectivity::new_node(std::int32_t vertex,
                                                          EdgeId edge) {
  NodeId id;
  if (!free_nodes_.empty()) {
    id = free_nodes_.back();
    free_nodes_.pop_back();
  } else {
    id = static_cast<NodeId>(nodes_.size());
    nodes_.emplace_back();
  }
  Node& x = nodes_[id];
  x = Node{};
  x.vertex = vertex;
  x.edge = edge;
  return id;
}

void DynamicConnectivity::free_node(NodeId x) { free_nodes_.push_back(x); }

std::uint32_t DynamicConnectivity::priority(NodeId x) {
  auto h = static_cast<std::uint32_t>(x) * 0x9e3779b1u;
  h ^= h >> 15;
  h *= 0x85ebca6bu;
  h ^= h >> 13;
  return h;
}

DynamicConnectivity::NodeId DynamicConnectivity::ensure_vertex_node(
    std::int32_t level, std::int32_t v) {
  const auto slot = static_cast<std::size_t>(level) * n_ + v;
  if (vertex_nodes_[slot] == kNil) vertex_nodes_[slot] = new_node(v, -1);
  return vertex_nodes_[slot];
}

void DynamicConnectivity::pull(NodeId id) {
  Node& x = nodes_[id];
  x.size = 1;
  x.subtree_flags = x.flags;
  if (x.left != kNil) {
    x.size += nodes_[x.left].size;
    x.subtree_flags |= nodes_[x.left].subtree_flags;
  }
  if (x.right != kNil) {
    x.size += nodes_[x.right].size;
    x.subtree_flags |= nodes_[x.right].subtree_flags;
  }
}

void DynamicConnectivity::refresh_upwards(NodeId x) {
  while (x != kNil) {
    pull(x);
    x = nodes_[x].parent;
  }
}

DynamicConnectivity::NodeId DynamicConnectivity::merge(NodeId a, NodeId b) {
  if (a == kNil) return b;
  if (b == kNil) return a;
  if (priority(a) > priority(b)) {
    const NodeId r = merge(nodes_[a].right, b);
    nodes_[a].right = r;
    nodes_[r].parent = a;
    pull(a);
    nodes_[a].parent = kNil;
    return a;
  }
  const NodeId l = merge(a, nodes_[b].left);
  nodes_[b].left = l;
  nodes_[l].parent = b;
  pull(b);
  nodes_[b].parent = kNil;
  return b;
}

// Returns (first k nodes, rest), both with cleared parent pointers.
std::pair<DynamicConnectivity::NodeId, DynamicConnectivity::NodeId>
DynamicConnectivity::split(NodeId root, std::int32_t k) {
  if (root == kNil) return {kNil, kNil};
  const NodeId left = nodes_[root].left;
  const std::int32_t left_size = left == kNil ? 0 : nodes_[left].size;
  if (k <= left_size) {
    auto [l, r] = split(left, k);
    nodes_[root].left = r;
    if (r != kNil) nodes_[r].parent = root;
    pull(root);
    nodes_[root].parent = kNil;
    return {l, root};
  }
  auto [l, r] = split(nodes_[root].right, k - left_size - 1);
  nodes_[root].right = l;
  if (l != kNil) nodes_[l].parent = root;
  pull(root);
  nodes_[root].parent = kNil;
  return {root, r};
}

DynamicConnectivity::NodeId DynamicConnectivity::find_root(NodeId x) const {
  while (nodes_[x].parent != kNil) x = nodes_[x].parent;
  return x;
}

std::int32_t DynamicConnectivity::index_of(NodeId x) const {
  const NodeId l = nodes_[x].left;
  std::int32_t index = l == kNil ? 0 : nodes_[l].size;
  while (nodes_[x].parent != kNil) {
    const NodeId p = nodes_[x].parent;
    if (nodes_[p].right == x) {
      const NodeId pl = nodes_[p].left;
      index += (pl == kNil ? 0 : nodes_[pl].size) + 1;
    }
    x = p;
  }
  return index;
}

DynamicConnectivity::NodeId DynamicConnectivity::find_flagged(
    NodeId root, std::uint8_t flag) const {
  NodeId x = root;
  while (true) {
    const Node& node = nodes_[x];
    if (node.flags & flag) return x;
    if (node.left != kNil && (nodes_[node.left].subtree_flags & flag)) {
      x = node.left;
    } else {
      assert(node.right != kNil);
      x = node.right;
    }
  }
}

void DynamicConnectivity::set_flag(NodeId x, std::uint8_t flag, bool on) {
  const std::uint8_t before = nodes_[x].flags;
  nodes_[x].flags = on ? (before | flag) : (before & ~flag);
  if (nodes_[x].flags != before) refresh_upwards(x);
}

// ---------------------------------------------------------------------------
// Euler tour forests

DynamicConnectivity::NodeId DynamicConnectivity::reroot(std::int32_t level,
                                                        std::int32_t v) {
  const NodeId x = ensure_vertex_node(level, v);
  const NodeId root = find_root(x);
  const std::int32_t k = index_of(x);
  if (k == 0) return root;
  auto [before, from_v] = split(root, k);
  return merge(from_v, before);
}

void DynamicConnectivity::link(std::int32_t level, EdgeId e) {
  const std::int32_t u = edges_[e].end[0];
  const std::int32_t v = edges_[e].end[1];
  const NodeId tour_u = reroot(level, u);
  const NodeId tour_v = reroot(level, v);
  const NodeId uv = new_node(u, e);
  const NodeId vu = new_node(v, e);
  if (edges_[e].level == level) nodes_[uv].flags = kTreeFlag;
  pull(uv);
  auto& arcs = edges_[e].arcs;
  if (static_cast<std::int32_t>(arcs.size()) <= level) {
    arcs.resize(static_cast<std::size_t>(level) + 1, {kNil, kNil});
  }
  arcs[static_cast<std::size_t>(level)] = {uv, vu};
  merge(merge(merge(tour_u, uv), tour_v), vu);
}

void DynamicConnectivity::cut(std::int32_t level, EdgeId e) {
  auto [first, second] = edges_[e].arcs[static_cast<std::size_t>(level)];
  const NodeId root = find_root(first);
  std::int32_t lo = index_of(first);
  std::int32_t hi = index_of(second);
  if (lo > hi) std::swap(lo, hi);
  // tour = A arc B arc C; B becomes one tree, A C the other.
  auto [left, right] = split(root, hi);
  auto [arc_hi, c] = split(right, 1);
  auto [a, middle] = split(left, lo);
  auto [arc_lo, b] = split(middle, 1);
  (void)b;
  merge(a, c);
  free_node(arc_lo);
  free_node(arc_hi);
  edges_[e].arcs[static_cast<std::size_t>(level)] = {kNil, kNil};
}

// ---------------------------------------------------------------------------
// Non-tree edge lists

void DynamicConnectivity::attach_nontree(EdgeId e) {
  const std::int32_t level = edges_[e].level;
  for (int k = 0; k < 2; ++k) {
    const std::int32_t w = edges_[e].end[k];
    std::int32_t& head = adjacency_head(level, w);
    const EdgeId old = head;
    edges_[e].prev[k] = -1;
    edges_[e].next[k] = old;
    if (old != -1) {
      const int slot = edges_[old].end[0] == w ? 0 : 1;
      edges_[old].prev[slot] = e;
    }
    head = e;
    if (old == -1) set_flag(ensure_vertex_node(level, w), kNonTreeFlag, true);
  }
}

void DynamicConnectivity::detach_nontree(EdgeId e) {
  const std::int32_t level = edges_[e].level;
  for (int k = 0; k < 2; ++k) {
    const std::int32_t w = edges_[e].end[k];
    const EdgeId p = edges_[e].prev[k];
    const EdgeId nx = edges_[e].next[k];
    std::int32_t& head = adjacency_head(level, w);
    if (p != -1) {
      edges_[p].next[edges_[p].end[0] == w ? 0 : 1] = nx;
    } else {
      head = nx;
    }
    if (nx != -1) edges_[nx].prev[edges_[nx].end[0] == w ? 0 : 1] = p;
    if (head == -1) set_flag(vertex_node(level, w), kNonTreeFlag, false);
  }
}

// ---------------------------------------------------------------------------
// Public interface

DynamicConnectivity::EdgeId DynamicConnectivity::new_edge() {
  if (!free_edges_.empty()) {
    const EdgeId e = free_edges_.back();
    free_edges_.pop_back();
    return e;
  }
  edges_.emplace_back();
  return static_cast<EdgeId>(edges_.size() - 1);
}

void DynamicConnectivity::insert(Vertex u, Vertex v, Handle handle) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InputError("loop edge on vertex " + std::to_string(u));
  if (by_handle_.count(handle) != 0) {
    throw UsageError("edge handle " + std::to_string(handle) +
                     " is already present");
  }
  const EdgeId e = new_edge();
  Edge& edge = edges_[e];
  edge.end[0] = u - 1;
  edge.end[1] = v - 1;
  edge.level = 0;
  edge.tree = false;
  edge.arcs.clear();
  if (tree_root(0, u - 1) != tree_root(0, v - 1)) {
    edges_[e].tree = true;
    link(0, e);
  } else {
    attach_nontree(e);
  }
  by_handle_.emplace(handle, e);
}

void DynamicConnectivity::erase(Handle handle) {
  const auto it = by_handle_.find(handle);
  if (it == by_handle_.end()) {
    throw UsageError("unknown edge handle " + std::to_string(handle));
  }
  const EdgeId e = it->second;
  by_handle_.erase(it);
  if (!edges_[e].tree) {
    detach_nontree(e);
    free_edges_.push_back(e);
    return;
  }
  const std::int32_t u = edges_[e].end[0];
  const std::int32_t v = edges_[e].end[1];
  const std::int32_t top = edges_[e].level;
  for (std::int32_t level = 0; level <= top; ++level) cut(level, e);
  edges_[e].arcs.clear();
  edges_[e].tree = false;
  free_edges_.push_back(e);
  for (std::int32_t level = top; level >= 0; --level) {
    if (replace(level, u, v)) return;
  }
}

// Looks for a level-`level` non-tree edge reconnecting the trees of u and
// v in forest `level`, raising the levels of the edges of the smaller tree
// on the way. Returns true once a replacement has been linked.
bool DynamicConnectivity::replace(std::int32_t level, std::int32_t u,
                                  std::int32_t v) {
  const NodeId root_u = tree_root(level, u);
  const NodeId root_v = tree_root(level, v);
  // Tour length is 3k - 2 for a tree of k vertices.
  const NodeId small = nodes_[root_u].size <= nodes_[root_v].size
                           ? root_u
                           : root_v;

  // Cheap first try: a few non-tree edges of one vertex of the smaller tree,
  // checked without raising any level.
  if (nodes_[small].subtree_flags & kNonTreeFlag) {
    const std::int32_t w = nodes_[find_flagged(small, kNonTreeFlag)].vertex;
    EdgeId f = adjacency_head(level, w);
    for (int tries = 0; tries < kSampleEdges && f != -1; ++tries) {
      const int side = edges_[f].end[0] == w ? 0 : 1;
      if (tree_root(level, edges_[f].end[1 - side]) != small) {
        detach_nontree(f);
        edges_[f].tree = true;
        for (std::int32_t j = 0; j <= level; ++j) link(j, f);
        return true;
      }
      f = edges_[f].next[side];
    }
  }

  // Tree edges only need raising to make room for raised non-tree edges.
  if (!(nodes_[small].subtree_flags & kNonTreeFlag)) return false;

  while (nodes_[small].subtree_flags & kTreeFlag) {
    const NodeId x = find_flagged(small, kTreeFlag);
    const EdgeId f = nodes_[x].edge;
    set_flag(x, kTreeFlag, false);
    assert(level + 1 < levels_);
    edges_[f].level = level + 1;
    link(level + 1, f);
  }

  while (nodes_[small].subtree_flags & kNonTreeFlag) {
    const NodeId x = find_flagged(small, kNonTreeFlag);
    const std::int32_t w = nodes_[x].vertex;
    while (adjacency_head(level, w) != -1) {
      const EdgeId f = adjacency_head(level, w);
      const std::int32_t other =
          edges_[f].end[0] == w ? edges_[f].end[1] : edges_[f].end[0];
      detach_nontree(f);
      if (tree_root(level, other) != small) {
        edges_[f].tree = true;
        for (std::int32_t j = 0; j <= level; ++j) link(j, f);
        return true;
      }
      assert(level + 1 < levels_);
      edges_[f].level = level + 1;
      attach_nontree(f);
    }
  }
  return false;
}

Vertex DynamicConnectivity::representative(Vertex u) const {
  check_vertex(u);
  NodeId x = tree_root(0, u - 1);
  while (nodes_[x].left != kNil) x = nodes_[x].left;
  return nodes_[x].vertex + 1;
}

bool DynamicConnectivity::connected(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return tree_root(0, u - 1) == tree_root(0, v - 1);
}

}  // namespace itg
