#include "astopo/error.hpp"
#include "astopo/metrics.hpp"
#include "astopo/powerlaw_fit.hpp"

namespace astopo {

double DistanceDistribution::fraction(std::size_t d) const {
  if (d >= counts.size() || n == 0) return 0.0;
  const double pairs = static_cast<double>(n) * static_cast<double>(n);
  return static_cast<double>(counts[d]) / pairs;
}

std::optional<double> DistanceDistribution::average() const {
  double weighted = 0.0;
  std::uint64_t pairs = 0;
  for (std::size_t d = 1; d < counts.size(); ++d) {
    weighted += static_cast<double>(d) * static_cast<double>(counts[d]);
    pairs += counts[d];
  }
  if (pairs == 0) return std::nullopt;
  return weighted / static_cast<double>(pairs);
}

double BetweennessResult::normalized_node(std::size_t i) const {
  return node_scale > 0.0 ? node[i] / node_scale : 0.0;
}

double BetweennessResult::normalized_edge(std::size_t i) const {
  return edge_scale > 0.0 ? edge[i] / edge_scale : 0.0;
}

double BetweennessResult::average_normalized_node() const {
  if (node.empty()) return 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < node.size(); ++i) sum += normalized_node(i);
  return sum / static_cast<double>(node.size());
}

double BetweennessResult::average_normalized_edge() const {
  if (edge.empty()) return 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < edge.size(); ++i) sum += normalized_edge(i);
  return sum / static_cast<double>(edge.size());
}

MetricsBundle analyze(const Graph& g, const MetricsOptions& options) {
  if (g.node_count() < 2) throw InvalidParameter("metrics need at least 2 nodes");
  MetricsBundle out;
  MetricsReport& r = out.report;
  r.n = g.node_count();
  r.edge_count = g.edge_count();
  r.avg_degree = 2.0 * static_cast<double>(r.edge_count) / static_cast<double>(r.n);
  r.max_degree = g.max_degree();

  out.histogram = degree_histogram(g);
  out.ccdf = ccdf(out.histogram);
  try {
    const FitResult fit = fit_degree_exponent(out.histogram);
    r.degree_exponent = fit.exponent;
    r.degree_fit_r = fit.correlation;
  } catch (const InsufficientData&) {
  }

  out.clustering = local_clustering_by_degree(g);
  r.avg_clustering = out.clustering.average;

  out.rich_club = rich_club(g);
  try {
    r.rich_club_exponent = fit_rich_club_exponent(out.rich_club).exponent;
  } catch (const InsufficientData&) {
  }

  const bool paths = options.path_metrics.value_or(
      g.node_count() <= options.path_metrics_node_limit);
  if (paths) {
    out.distances = distance_distribution(g);
    r.avg_distance = out.distances->average();
    out.betweenness = betweenness(g);
    r.normalized_avg_node_betweenness = out.betweenness->average_normalized_node();
    r.normalized_avg_edge_betweenness = out.betweenness->average_normalized_edge();
  }
  return out;
}

MetricsReport metrics_report(const Graph& g, const MetricsOptions& options) {
  return analyze(g, options).report;
}

}  // namespace astopo
