#include "csr.hpp"

namespace astopo::detail {

Csr::Csr(const Graph& g) : edges(g.edges()) {
  const std::size_t n = g.node_count();
  offsets.assign(n + 1, 0);
  for (const auto& [a, b] : edges) {
    ++offsets[a + 1];
    ++offsets[b + 1];
  }
  for (std::size_t v = 0; v < n; ++v) offsets[v + 1] += offsets[v];

  // Edges arrive sorted by (lo, hi). Filling every node's smaller neighbors
  // first and its larger neighbors second leaves each list sorted.
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  targets.resize(2 * edges.size());
  edge_ids.resize(2 * edges.size());
  for (std::uint32_t e = 0; e < edges.size(); ++e) {
    const auto [lo, hi] = edges[e];
    targets[cursor[hi]] = lo;
    edge_ids[cursor[hi]++] = e;
  }
  for (std::uint32_t e = 0; e < edges.size(); ++e) {
    const auto [lo, hi] = edges[e];
    targets[cursor[lo]] = hi;
    edge_ids[cursor[lo]++] = e;
  }
}

}  // namespace astopo::detail
