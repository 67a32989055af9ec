#ifndef ITG_DYNCONN_HPP
#define ITG_DYNCONN_HPP

#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "itg/core.hpp"

namespace itg {

// Fully-dynamic connectivity on a multigraph over vertices 1..n
// (Holm, de Lichtenberg and Thorup). Each level i keeps a spanning forest
// of the tree edges whose level is at least i as Euler tours stored in
// treaps with parent pointers. Updates take O(log^2 n) amortized time.
//
// representative(u) is the first vertex of the Euler tour of u's level-0
// tree. It is a member of u's component and does not change while the
// edge set does not change.
class DynamicConnectivity {
 public:
  explicit DynamicConnectivity(Vertex n);

  // Adds edge uv identified by `handle`. Parallel edges are allowed.
  void insert(Vertex u, Vertex v, Handle handle);
  // Removes the edge identified by `handle`.
  void erase(Handle handle);

  Vertex representative(Vertex u) const;
  bool connected(Vertex u, Vertex v) const;

  Vertex vertex_count() const { return n_; }
  std::size_t edge_count() const { return by_handle_.size(); }
  bool contains(Handle handle) const { return by_handle_.count(handle) != 0; }

 private:
  using NodeId = std::int32_t;
  using EdgeId = std::int32_t;
  static constexpr NodeId kNil = -1;

  static constexpr std::uint8_t kTreeFlag = 1;     // arc of a level-i tree edge
  static constexpr std::uint8_t kNonTreeFlag = 2;  // vertex with level-i non-tree edges
  static constexpr int kSampleEdges = 8;

  // Vertex nodes have edge == -1; arc nodes store their tail in `vertex`.
  // Priorities are a hash of the node id.
  struct Node {
    NodeId left = kNil;
    NodeId right = kNil;
    NodeId parent = kNil;
    std::int32_t size = 1;  // nodes in subtree
    std::int32_t vertex = 0;
    EdgeId edge = -1;
    std::uint8_t flags = 0;
    std::uint8_t subtree_flags = 0;
  };

  struct Edge {
    std::int32_t end[2] = {0, 0};  // 0-based endpoints
    std::int32_t level = 0;
    bool tree = false;
    // Non-tree adjacency links, one pair per endpoint.
    EdgeId prev[2] = {-1, -1};
    EdgeId next[2] = {-1, -1};
    // Tree edges: arc nodes (end[0]->end[1], end[1]->end[0]) per level.
    std::vector<std::array<NodeId, 2>> arcs;
  };

  // Treap primitives.
  NodeId new_node(std::int32_t vertex, EdgeId edge);
  static std::uint32_t priority(NodeId x);
  void free_node(NodeId x);
  void pull(NodeId x);
  void refresh_upwards(NodeId x);
  NodeId merge(NodeId a, NodeId b);
  std::pair<NodeId, NodeId> split(NodeId root, std::int32_t k);
  NodeId find_root(NodeId x) const;
  std::int32_t index_of(NodeId x) const;
  NodeId find_flagged(NodeId root, std::uint8_t flag) const;
  void set_flag(NodeId x, std::uint8_t flag, bool on);

  // Euler tour forest of one level.
  // Vertex nodes above level 0 are created on first use; kNil stands for
  // a vertex alone in its level-`level` tree.
  NodeId vertex_node(std::int32_t level, std::int32_t v) const {
    return vertex_nodes_[static_cast<std::size_t>(level) * n_ + v];
  }
  NodeId ensure_vertex_node(std::int32_t level, std::int32_t v);
  NodeId tree_root(std::int32_t level, std::int32_t v) const {
    const NodeId x = vertex_node(level, v);
    return x == kNil ? kNil : find_root(x);
  }
  NodeId reroot(std::int32_t level, std::int32_t v);
  void link(std::int32_t level, EdgeId e);
  void cut(std::int32_t level, EdgeId e);

  // Non-tree adjacency lists.
  std::int32_t& adjacency_head(std::int32_t level, std::int32_t v) {
    return adjacency_[static_cast<std::size_t>(level) * n_ + v];
  }
  void attach_nontree(EdgeId e);
  void detach_nontree(EdgeId e);

  EdgeId new_edge();
  void check_vertex(Vertex u) const;
  bool replace(std::int32_t level, std::int32_t u, std::int32_t v);

  Vertex n_;
  std::int32_t levels_;
  std::vector<Node> nodes_;
  std::vector<NodeId> free_nodes_;
  std::vector<NodeId> vertex_nodes_;
  std::vector<Edge> edges_;
  std::vector<EdgeId> free_edges_;
  std::vector<std::int32_t> adjacency_;
  std::unordered_map<Handle, EdgeId> by_handle_;
};

}  // namespace itg

#endif  // ITG_DYNCONN_HPP
