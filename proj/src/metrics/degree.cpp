#include <algorithm>

#include "astopo/metrics.hpp"

namespace astopo {

DegreeHistogram degree_histogram(const Graph& g) {
  DegreeHistogram h;
  h.n = g.node_count();
  for (NodeId v = 0; v < g.node_count(); ++v) ++h.counts[g.degree(v)];
  return h;
}

std::vector<CcdfPoint> ccdf(const DegreeHistogram& h) {
  std::vector<CcdfPoint> out;
  if (h.n == 0) return out;
  std::size_t at_least = h.n;
  for (const auto& [degree, count] : h.counts) {
    if (count == 0) continue;
    out.push_back({degree, static_cast<double>(at_least) / static_cast<double>(h.n)});
    at_least -= count;
  }
  return out;
}

}  // namespace astopo
