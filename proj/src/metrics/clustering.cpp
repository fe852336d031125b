#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "astopo/metrics.hpp"
#include "csr.hpp"

namespace astopo {
namespace {

using detail::Csr;

ClusteringResult finish(const Csr& csr, const std::vector<std::uint64_t>& triangles) {
  const std::size_t n = csr.node_count();
  ClusteringResult out;
  out.per_node.assign(n, 0.0);
  std::map<std::size_t, std::pair<double, std::size_t>> sums;
  double total = 0.0;
  for (NodeId v = 0; v < n; ++v) {
    const std::size_t k = csr.degree(v);
    if (k >= 2) {
      const double pairs = static_cast<double>(k) * static_cast<double>(k - 1) / 2.0;
      out.per_node[v] = static_cast<double>(triangles[v]) / pairs;
    }
    auto& [sum, count] = sums[k];
    sum += out.per_node[v];
    ++count;
    total += out.per_node[v];
  }
  for (const auto& [k, entry] : sums) {
    out.by_degree[k] = entry.first / static_cast<double>(entry.second);
  }
  out.average = n == 0 ? 0.0 : total / static_cast<double>(n);
  return out;
}

}  // namespace

// Per-node triangle counts with the degree-ordered forward algorithm: each
// edge points from lower to higher (degree, id) rank, so every triangle is
// found exactly once from its lowest-ranked corner.
ClusteringResult local_clustering_by_degree(const Graph& g) {
  const Csr csr(g);
  const std::size_t n = csr.node_count();

  std::vector<NodeId> by_rank(n);
  std::iota(by_rank.begin(), by_rank.end(), NodeId{0});
  std::sort(by_rank.begin(), by_rank.end(), [&](NodeId a, NodeId b) {
    return std::pair(csr.degree(a), a) < std::pair(csr.degree(b), b);
  });
  std::vector<std::uint32_t> rank(n);
  for (std::uint32_t r = 0; r < n; ++r) rank[by_rank[r]] = r;

  std::vector<std::size_t> out_offsets(n + 1, 0);
  for (NodeId v = 0; v < n; ++v) {
    for (NodeId w : csr.neighbors(v)) {
      if (rank[v] < rank[w]) ++out_offsets[v + 1];
    }
  }
  for (std::size_t v = 0; v < n; ++v) out_offsets[v + 1] += out_offsets[v];
  std::vector<NodeId> out_targets(out_offsets[n]);
  for (NodeId v = 0; v < n; ++v) {
    std::size_t cursor = out_offsets[v];
    for (NodeId w : csr.neighbors(v)) {
      if (rank[v] < rank[w]) out_targets[cursor++] = w;
    }
  }

  std::vector<std::uint64_t> triangles(n, 0);
#pragma omp parallel
  {
    std::vector<std::int64_t> mark(n, -1);
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t u = 0; u < static_cast<std::int64_t>(n); ++u) {
      for (auto i = out_offsets[u]; i < out_offsets[u + 1]; ++i) mark[out_targets[i]] = u;
      for (auto i = out_offsets[u]; i < out_offsets[u + 1]; ++i) {
        const NodeId v = out_targets[i];
        for (auto j = out_offsets[v]; j < out_offsets[v + 1]; ++j) {
          const NodeId w = out_targets[j];
          if (mark[w] != u) continue;
#pragma omp atomic
          ++triangles[u];
#pragma omp atomic
          ++triangles[v];
#pragma omp atomic
          ++triangles[w];
        }
      }
    }
  }
  return finish(csr, triangles);
}

namespace serial {

ClusteringResult local_clustering_by_degree(const Graph& g) {
  const Csr csr(g);
  std::vector<std::uint64_t> triangles(csr.node_count(), 0);
  for (NodeId v = 0; v < csr.node_count(); ++v) {
    const auto nbrs = csr.neighbors(v);
    for (std::size_t a = 0; a < nbrs.size(); ++a) {
      const auto around_a = csr.neighbors(nbrs[a]);
      for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
        if (std::binary_search(around_a.begin(), around_a.end(), nbrs[b])) {
          ++triangles[v];
        }
      }
    }
  }
  return finish(csr, triangles);
}

}  // namespace serial
}  // namespace astopo
