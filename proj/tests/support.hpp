#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "astopo/graph.hpp"
#include "astopo/theory.hpp"

namespace astopo::testing {

inline Graph from_edges(std::size_t n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

inline Graph path(std::size_t n) {
  Graph g(n);
  for (NodeId i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

// Center 0 with `leaves` leaves.
inline Graph star(std::size_t leaves) {
  Graph g(leaves + 1);
  for (NodeId i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

// Erdos-Renyi G(n, density).
inline Graph random_graph(std::size_t n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  Graph g(n);
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) {
      if (coin(rng)) g.add_edge(i, j);
    }
  }
  return g;
}

inline Graph relabeled(const Graph& g, const std::vector<NodeId>& perm) {
  Graph h(g.node_count());
  for (auto [a, b] : g.edges()) h.add_edge(perm[a], perm[b]);
  return h;
}

inline std::vector<NodeId> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<NodeId> perm(n);
  std::iota(perm.begin(), perm.end(), NodeId{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

// Pearson chi-square statistic against equal expected counts.
inline double chi_square_uniform(const std::vector<std::size_t>& observed) {
  const double total = std::accumulate(observed.begin(), observed.end(), 0.0);
  const double expected = total / static_cast<double>(observed.size());
  double stat = 0.0;
  for (auto o : observed) {
    const double d = static_cast<double>(o) - expected;
    stat += d * d / expected;
  }
  return stat;
}

// Upper 0.1% points of the chi-square distribution, indexed by degrees of freedom.
inline double chi_square_critical(std::size_t df) {
  static constexpr double kTable[] = {0.0, 10.828, 13.816, 16.266, 18.467, 20.515};
  return kTable[df];
}

// 100 (p, q, m) points inside the EBA scale-free regime, eps left at 0.
inline std::vector<theory::TheoryParams> theory_grid() {
  std::vector<theory::TheoryParams> out;
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      for (std::size_t m : {1u, 2u, 3u, 5u}) {
        const double p = 0.15 * i;
        const double mm = static_cast<double>(m);
        const double q_max = std::min(1.0 - p, (1.0 - p + mm) / (1.0 + 2.0 * mm));
        out.push_back({p, 0.2 * j * q_max, m, 0.0});
      }
    }
  }
  return out;
}

}  // namespace astopo::testing
