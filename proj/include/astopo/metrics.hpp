#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "astopo/graph.hpp"

namespace astopo {

struct DegreeHistogram {
  std::map<std::size_t, std::size_t> counts;  // degree -> node count
  std::size_t n = 0;
};

struct CcdfPoint {
  std::size_t degree;
  double fraction;  // fraction of nodes with degree >= `degree`
};

// Ordered-pair distance counts. Self pairs sit at distance 0.
struct DistanceDistribution {
  std::vector<std::uint64_t> counts;  // index = distance
  std::size_t n = 0;
  std::uint64_t unreachable_pairs = 0;

  // counts[d] / n^2
  double fraction(std::size_t d) const;
  // Mean over reachable ordered pairs at distance >= 1; nullopt if none.
  std::optional<double> average() const;
};

struct ClusteringResult {
  std::vector<double> per_node;
  std::map<std::size_t, double> by_degree;  // C(k)
  double average = 0.0;
};

struct BetweennessResult {
  std::vector<double> node;  // raw, each unordered pair counted once
  std::vector<Edge> edges;   // canonical sorted edge list
  std::vector<double> edge;  // raw, aligned with `edges`
  double node_scale = 0.0;   // (n-1)(n-2)/2
  double edge_scale = 0.0;   // n(n-1)/2

  double normalized_node(std::size_t i) const;
  double normalized_edge(std::size_t i) const;
  double average_normalized_node() const;
  double average_normalized_edge() const;
};

struct RichClubPoint {
  std::size_t rank;   // club size r
  double fraction;    // r / n
  double phi;         // links inside the club / (r(r-1)/2)
};

DegreeHistogram degree_histogram(const Graph& g);
std::vector<CcdfPoint> ccdf(const DegreeHistogram& h);
DistanceDistribution distance_distribution(const Graph& g);
ClusteringResult local_clustering_by_degree(const Graph& g);
BetweennessResult betweenness(const Graph& g);
std::vector<RichClubPoint> rich_club(const Graph& g);

// Serial reference kernels. Same contracts as the parallel versions above;
// kept for cross-checking and benchmarking.
namespace serial {
DistanceDistribution distance_distribution(const Graph& g);
ClusteringResult local_clustering_by_degree(const Graph& g);
BetweennessResult betweenness(const Graph& g);
}  // namespace serial

struct MetricsOptions {
  // All-pairs metrics (distances, betweenness) cost O(n * m). When unset they
  // run only up to `path_metrics_node_limit` nodes.
  std::optional<bool> path_metrics;
  std::size_t path_metrics_node_limit = 20000;
};

struct MetricsReport {
  std::size_t n = 0;
  std::size_t edge_count = 0;
  double avg_degree = 0.0;
  std::size_t max_degree = 0;
  std::optional<double> degree_exponent;
  std::optional<double> degree_fit_r;
  std::optional<double> avg_distance;
  std::optional<double> normalized_avg_node_betweenness;
  std::optional<double> normalized_avg_edge_betweenness;
  double avg_clustering = 0.0;
  std::optional<double> rich_club_exponent;

  friend bool operator==(const MetricsReport&, const MetricsReport&) = default;
};

// Every curve behind a report, kept so callers can emit plot data without
// recomputing.
struct MetricsBundle {
  MetricsReport report;
  DegreeHistogram histogram;
  std::vector<CcdfPoint> ccdf;
  std::optional<DistanceDistribution> distances;
  ClusteringResult clustering;
  std::optional<BetweennessResult> betweenness;
  std::vector<RichClubPoint> rich_club;
};

MetricsBundle analyze(const Graph& g, const MetricsOptions& options = {});
MetricsReport metrics_report(const Graph& g, const MetricsOptions& options = {});

}  // namespace astopo
