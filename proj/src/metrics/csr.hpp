#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "astopo/graph.hpp"

namespace astopo::detail {

// Immutable compressed adjacency with sorted neighbor lists. Each adjacency
// entry carries the index of its edge in Graph::edges() order.
struct Csr {
  std::vector<std::size_t> offsets;
  std::vector<NodeId> targets;
  std::vector<std::uint32_t> edge_ids;
  std::vector<Edge> edges;

  explicit Csr(const Graph& g);

  std::size_t node_count() const { return offsets.size() - 1; }
  std::size_t degree(NodeId v) const { return offsets[v + 1] - offsets[v]; }
  std::span<const NodeId> neighbors(NodeId v) const {
    return {targets.data() + offsets[v], degree(v)};
  }
  std::span<const std::uint32_t> incident_edges(NodeId v) const {
    return {edge_ids.data() + offsets[v], degree(v)};
  }
};

}  // namespace astopo::detail
