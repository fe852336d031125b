#include <algorithm>
#include <numeric>
#include <vector>

#include "astopo/metrics.hpp"

namespace astopo {

std::vector<RichClubPoint> rich_club(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    return g.degree(a) > g.degree(b);
  });
  std::vector<std::size_t> rank(n);
  for (std::size_t r = 0; r < n; ++r) rank[order[r]] = r;

  // An edge joins the club once both ends are in it, i.e. at club size
  // max(rank) + 1.
  std::vector<std::size_t> joins(n + 1, 0);
  for (const auto& [a, b] : g.edges()) ++joins[std::max(rank[a], rank[b]) + 1];

  std::vector<RichClubPoint> curve;
  std::size_t inside = 0;
  for (std::size_t r = 1; r <= n; ++r) {
    inside += joins[r];
    if (r < 2) continue;
    const double possible = static_cast<double>(r) * static_cast<double>(r - 1) / 2.0;
    curve.push_back({r, static_cast<double>(r) / static_cast<double>(n),
                     static_cast<double>(inside) / possible});
  }
  return curve;
}

}  // namespace astopo
