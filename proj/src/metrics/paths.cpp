// All-pairs shortest-path metrics: distance distribution and Brandes
// betweenness. One BFS per source; the parallel drivers split sources across
// OpenMP threads and the serial drivers are the reference path.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "astopo/metrics.hpp"
#include "csr.hpp"

namespace astopo {
namespace {

using detail::Csr;

constexpr std::int32_t kUnseen = -1;

struct BfsWork {
  std::vector<std::int32_t> dist;
  std::vector<NodeId> order;

  explicit BfsWork(std::size_t n) : dist(n, kUnseen) { order.reserve(n); }

  // Fills `order` with every node reachable from `source` in BFS order.
  void run(const Csr& csr, NodeId source) {
    for (NodeId v : order) dist[v] = kUnseen;
    order.clear();
    dist[source] = 0;
    order.push_back(source);
    for (std::size_t head = 0; head < order.size(); ++head) {
      const NodeId v = order[head];
      for (NodeId w : csr.neighbors(v)) {
        if (dist[w] == kUnseen) {
          dist[w] = dist[v] + 1;
          order.push_back(w);
        }
      }
    }
  }
};

void tally_distances(const BfsWork& work, std::vector<std::uint64_t>& counts,
                     std::uint64_t& reached) {
  for (NodeId v : work.order) {
    const auto d = static_cast<std::size_t>(work.dist[v]);
    if (counts.size() <= d) counts.resize(d + 1, 0);
    ++counts[d];
  }
  reached += work.order.size();
}

DistanceDistribution finish_distances(std::size_t n, std::vector<std::uint64_t> counts,
                                      std::uint64_t reached) {
  DistanceDistribution out;
  out.n = n;
  out.counts = std::move(counts);
  out.unreachable_pairs = static_cast<std::uint64_t>(n) * n - reached;
  return out;
}

// Single-source dependency accumulation for unweighted graphs. Adds the
// source's contribution to every node and edge; both directions of each pair
// are visited over all sources, so totals are halved afterwards.
struct BrandesWork {
  BfsWork bfs;
  std::vector<double> sigma;
  std::vector<double> delta;

  explicit BrandesWork(std::size_t n) : bfs(n), sigma(n, 0.0), delta(n, 0.0) {}

  void accumulate(const Csr& csr, NodeId source, std::vector<double>& node,
                  std::vector<double>& edge) {
    bfs.run(csr, source);
    for (NodeId v : bfs.order) {
      sigma[v] = 0.0;
      delta[v] = 0.0;
    }
    sigma[source] = 1.0;
    for (NodeId v : bfs.order) {
      for (NodeId w : csr.neighbors(v)) {
        if (bfs.dist[w] == bfs.dist[v] + 1) sigma[w] += sigma[v];
      }
    }
    for (auto it = bfs.order.rbegin(); it != bfs.order.rend(); ++it) {
      const NodeId w = *it;
      const auto nbrs = csr.neighbors(w);
      const auto ids = csr.incident_edges(w);
      for (std::size_t i = 0; i < nbrs.size(); ++i) {
        const NodeId v = nbrs[i];
        if (bfs.dist[v] != bfs.dist[w] - 1) continue;
        const double credit = sigma[v] / sigma[w] * (1.0 + delta[w]);
        edge[ids[i]] += credit;
        delta[v] += credit;
      }
      if (w != source) node[w] += delta[w];
    }
  }
};

BetweennessResult finish_betweenness(const Csr& csr, std::vector<double> node,
                                     std::vector<double> edge) {
  const auto n = static_cast<double>(csr.node_count());
  for (double& x : node) x *= 0.5;
  for (double& x : edge) x *= 0.5;
  BetweennessResult out;
  out.node = std::move(node);
  out.edge = std::move(edge);
  out.edges = csr.edges;
  out.node_scale = (n - 1.0) * (n - 2.0) / 2.0;
  out.edge_scale = n * (n - 1.0) / 2.0;
  return out;
}

// Sources are split into a fixed number of contiguous blocks, each summed
// into its own buffer, and the buffers are combined in block order, so the
// floating-point result does not depend on the thread count.
constexpr std::size_t kBetweennessBlocks = 32;

}  // namespace

DistanceDistribution distance_distribution(const Graph& g) {
  const Csr csr(g);
  const std::size_t n = csr.node_count();
  std::vector<std::uint64_t> counts;
  std::uint64_t reached = 0;
#pragma omp parallel
  {
    BfsWork work(n);
    std::vector<std::uint64_t> local;
    std::uint64_t local_reached = 0;
#pragma omp for schedule(dynamic, 16) nowait
    for (std::int64_t s = 0; s < static_cast<std::int64_t>(n); ++s) {
      work.run(csr, static_cast<NodeId>(s));
      tally_distances(work, local, local_reached);
    }
#pragma omp critical
    {
      if (counts.size() < local.size()) counts.resize(local.size(), 0);
      for (std::size_t d = 0; d < local.size(); ++d) counts[d] += local[d];
      reached += local_reached;
    }
  }
  return finish_distances(n, std::move(counts), reached);
}

BetweennessResult betweenness(const Graph& g) {
  const Csr csr(g);
  const std::size_t n = csr.node_count();
  const std::size_t m = csr.edges.size();
  const std::size_t blocks = std::min(n, kBetweennessBlocks);
  std::vector<std::vector<double>> block_node(blocks);
  std::vector<std::vector<double>> block_edge(blocks);
#pragma omp parallel
  {
    BrandesWork work(n);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
      std::vector<double> node(n, 0.0);
      std::vector<double> edge(m, 0.0);
      const std::size_t first = n * b / blocks;
      const std::size_t last = n * (b + 1) / blocks;
      for (std::size_t s = first; s < last; ++s) {
        work.accumulate(csr, static_cast<NodeId>(s), node, edge);
      }
      block_node[b] = std::move(node);
      block_edge[b] = std::move(edge);
    }
  }
  std::vector<double> node(n, 0.0);
  std::vector<double> edge(m, 0.0);
  for (std::size_t b = 0; b < blocks; ++b) {
    for (std::size_t i = 0; i < n; ++i) node[i] += block_node[b][i];
    for (std::size_t i = 0; i < m; ++i) edge[i] += block_edge[b][i];
  }
  return finish_betweenness(csr, std::move(node), std::move(edge));
}

namespace serial {

DistanceDistribution distance_distribution(const Graph& g) {
  const Csr csr(g);
  const std::size_t n = csr.node_count();
  BfsWork work(n);
  std::vector<std::uint64_t> counts;
  std::uint64_t reached = 0;
  for (NodeId s = 0; s < n; ++s) {
    work.run(csr, s);
    tally_distances(work, counts, reached);
  }
  return finish_distances(n, std::move(counts), reached);
}

BetweennessResult betweenness(const Graph& g) {
  const Csr csr(g);
  const std::size_t n = csr.node_count();
  BrandesWork work(n);
  std::vector<double> node(n, 0.0);
  std::vector<double> edge(csr.edges.size(), 0.0);
  for (NodeId s = 0; s < n; ++s) work.accumulate(csr, s, node, edge);
  return finish_betweenness(csr, std::move(node), std::move(edge));
}

}  // namespace serial
}  // namespace astopo
