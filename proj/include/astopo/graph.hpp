#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace astopo {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;
using Rng = std::mt19937_64;

// Prefix sums over per-node degrees. Supports appending nodes, point updates
// and sampling a node with probability proportional to its degree.
class DegreeTree {
 public:
  void push_back();
  void add(std::size_t index, std::int64_t delta);
  std::uint64_t total() const { return total_; }
  std::size_t size() const { return tree_.size(); }
  // Smallest index whose inclusive prefix sum exceeds `target`.
  // Requires target < total().
  std::size_t find(std::uint64_t target) const;

 private:
  std::uint64_t prefix(std::size_t count) const;

  std::vector<std::uint64_t> tree_;  // 1-based Fenwick layout shifted by one
  std::uint64_t total_ = 0;
};

// Undirected simple graph with dense node ids 0..n-1.
//
// Neighbor lists are unordered vectors so that removal is O(1) by swapping
// with the last entry; a hash index from each edge to its two list slots gives
// O(1) membership tests. A degree prefix tree backs degree-proportional
// sampling and a degree histogram backs clamped-weight bookkeeping.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t node_count);

  // Fully connected graph on m0 >= 2 nodes.
  static Graph complete(std::size_t m0);

  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_index_.size(); }
  std::uint64_t degree_sum() const { return degrees_.total(); }
  double mean_degree() const;

  std::size_t degree(NodeId node) const;
  std::span<const NodeId> neighbors(NodeId node) const;
  bool has_edge(NodeId a, NodeId b) const;

  NodeId add_node();
  // Returns false without mutating if a == b or the edge already exists.
  bool add_edge(NodeId a, NodeId b);
  // Returns false if the edge does not exist.
  bool remove_edge(NodeId a, NodeId b);

  // Uniformly chosen neighbor of `node`. Throws NoIncidentEdge on degree 0.
  NodeId random_incident_edge(NodeId node, Rng& rng) const;
  // Node drawn with probability degree / degree_sum. Requires an edge.
  NodeId sample_by_degree(Rng& rng) const;

  // Number of nodes whose degree is strictly below `k`.
  std::size_t count_degree_below(double k) const;
  std::size_t max_degree() const;
  std::size_t isolated_count() const { return count_degree_below(1.0); }

  // Edges as (lo, hi) pairs, sorted ascending.
  std::vector<Edge> edges() const;

  // Full scan of every structural invariant. Used by tests.
  bool check_invariants() const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  struct Slots {
    std::uint32_t in_lo;  // position of hi within adjacency_[lo]
    std::uint32_t in_hi;  // position of lo within adjacency_[hi]
  };

  static std::uint64_t key(NodeId a, NodeId b);
  void check_node(NodeId node) const;
  void detach(NodeId owner, std::uint32_t position);
  void bump_degree(NodeId node, int delta);

  std::vector<std::vector<NodeId>> adjacency_;
  std::unordered_map<std::uint64_t, Slots> edge_index_;
  DegreeTree degrees_;
  std::vector<std::size_t> degree_counts_;  // degree -> number of nodes
};

}  // namespace astopo
