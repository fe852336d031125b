#include "astopo/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>

#include "astopo/error.hpp"
#include "astopo/theory.hpp"

namespace astopo {
namespace {

constexpr double kTable5MeanDegree = 8.0;
constexpr std::size_t kTable5Nodes = 10000;
constexpr std::size_t kSection61Nodes = 100000;

ReplicateResult run_one(const ModelParams& params, std::size_t n, std::uint64_t seed,
                        bool full_metrics) {
  Rng rng(seed);
  EvolutionTrace trace;
  const Graph g = evolve(params, n, rng, &trace);

  ReplicateResult r;
  r.seed = seed;
  r.n = g.node_count();
  r.edges = g.edge_count();
  r.avg_degree = g.mean_degree();
  r.max_degree = g.max_degree();
  r.max_clamped_fraction = trace.max_clamped_fraction;
  r.rewires_skipped = trace.rewires_skipped;
  r.isolated_repaired = trace.isolated_repaired;
  try {
    r.fit = fit_degree_exponent(degree_histogram(g));
  } catch (const InsufficientData&) {
  }
  if (full_metrics) r.report = metrics_report(g, {.path_metrics = true});
  return r;
}

std::vector<double> ranks(std::span<const double> v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return v[a] < v[b]; });
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
    const double avg = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) out[order[k]] = avg;
    i = j + 1;
  }
  return out;
}

std::string fixed(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string mean_sd(const std::vector<double>& values, int digits = 4) {
  if (values.empty()) return "NA";
  const Summary s = summarize(values);
  return fixed(s.mean, digits) + " +- " + fixed(s.stddev, digits);
}

template <class Get>
std::vector<double> collect(const ExperimentRow& row, Get get) {
  std::vector<double> out;
  for (const auto& run : row.runs) {
    if (const std::optional<double> v = get(run)) out.push_back(*v);
  }
  return out;
}

}  // namespace

std::vector<ReplicateResult> run_replicates(const ModelParams& params, std::size_t n,
                                            std::uint64_t base_seed,
                                            std::size_t replicates, bool full_metrics) {
  params.validate();
  std::vector<ReplicateResult> out(replicates);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(replicates); ++i) {
    out[i] = run_one(params, n, base_seed + static_cast<std::uint64_t>(i), full_metrics);
  }
  return out;
}

Summary summarize(std::span<const double> values) {
  Summary s;
  s.count = values.size();
  if (values.empty()) return s;
  s.mean = std::accumulate(values.begin(), values.end(), 0.0) /
           static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(ss / static_cast<double>(values.size() - 1));
  }
  return s;
}

double spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw InsufficientData("spearman needs two or more paired values");
  }
  const auto rx = ranks(x);
  const auto ry = ranks(y);
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    mx += rx[i];
    my += ry[i];
  }
  mx /= static_cast<double>(rx.size());
  my /= static_cast<double>(ry.size());
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

std::vector<ExperimentRow> table5_rows(std::size_t m) {
  struct Setting {
    double q;
    double eps;
  };
  constexpr Setting kSettings[] = {
      {0.525, -0.25}, {0.4, -0.17}, {0.0, -0.25}, {0.0, 0.0}, {0.2, 0.56}};
  std::vector<ExperimentRow> rows;
  int index = 1;
  for (const Setting& s : kSettings) {
    ExperimentRow row;
    row.label = "row" + std::to_string(index++);
    row.params.q = s.q;
    row.params.eps = s.eps;
    row.params.m = m;
    row.params.m0 = 5;
    row.params.p = theory::p_for_avg_degree(s.q, m, kTable5MeanDegree);
    row.n = kTable5Nodes;
    row.gamma_theory = theory::gamma_ours(s.q, s.eps);
    rows.push_back(row);
  }
  return rows;
}

ExperimentRow section61_row() {
  ExperimentRow row;
  row.label = "section61";
  row.params = {.p = 0.3652, .q = 0.525, .m = 1, .m0 = 5, .eps = -0.25};
  row.n = kSection61Nodes;
  row.gamma_theory = theory::gamma_ours(row.params.q, row.params.eps);
  return row;
}

ExperimentRow table6_row(std::size_t n) {
  ExperimentRow row;
  row.label = "table6";
  row.params = {.p = 0.462, .q = 0.4, .m = 1, .m0 = 5, .eps = -0.25};
  row.n = n;
  row.gamma_theory = theory::gamma_ours(row.params.q, row.params.eps);
  return row;
}

std::vector<std::string_view> experiment_names() {
  return {"table5", "section61", "table6"};
}

ExperimentReport run_experiment(std::string_view name, const ExperimentOptions& options) {
  ExperimentReport report;
  report.name = std::string(name);
  bool full = false;
  if (name == "table5") {
    report.rows = table5_rows(options.table5_m);
  } else if (name == "section61") {
    report.rows = {section61_row()};
  } else if (name == "table6") {
    report.rows = {table6_row()};
    full = true;
  } else {
    std::string valid;
    for (auto n : experiment_names()) valid += (valid.empty() ? "" : ", ") + std::string(n);
    throw InvalidParameter("unknown experiment '" + std::string(name) +
                           "' (valid: " + valid + ")");
  }
  for (auto& row : report.rows) {
    row.runs = run_replicates(row.params, row.n, options.base_seed, options.replicates, full);
  }
  return report;
}

std::string format_experiment(const ExperimentReport& report) {
  std::string out = "experiment = " + report.name + "\n";
  for (const auto& row : report.rows) {
    const auto& p = row.params;
    out += "\n[" + row.label + "]\n";
    out += "params = p " + fixed(p.p, 5) + ", q " + fixed(p.q, 3) + ", eps " + fixed(p.eps, 3) +
           ", m " + std::to_string(p.m) + ", m0 " + std::to_string(p.m0) + "\n";
    out += "nodes = " + std::to_string(row.n) + "\n";
    out += "replicates = " + std::to_string(row.runs.size()) + "\n";
    out += "gamma_theory = " + fixed(row.gamma_theory) + "\n";
    out += "gamma_fitted = " +
           mean_sd(collect(row, [](const ReplicateResult& r) -> std::optional<double> {
             return r.fit ? std::optional(r.fit->exponent) : std::nullopt;
           })) + "\n";
    out += "abs_r = " +
           mean_sd(collect(row, [](const ReplicateResult& r) -> std::optional<double> {
             return r.fit ? std::optional(std::fabs(r.fit->correlation)) : std::nullopt;
           })) + "\n";
    out += "edges = " + mean_sd(collect(row, [](const ReplicateResult& r) {
             return std::optional(static_cast<double>(r.edges));
           }), 1) + "\n";
    out += "avg_degree = " + mean_sd(collect(row, [](const ReplicateResult& r) {
             return std::optional(r.avg_degree);
           })) + "\n";
    out += "avg_degree_theory = " + fixed(theory::expected_avg_degree(p.p, p.q, p.m)) + "\n";
    out += "max_degree = " + mean_sd(collect(row, [](const ReplicateResult& r) {
             return std::optional(static_cast<double>(r.max_degree));
           }), 1) + "\n";
    if (row.runs.empty() || !row.runs.front().report) continue;
    const auto field = [&](auto get) {
      return mean_sd(collect(row, [&](const ReplicateResult& r) -> std::optional<double> {
        return r.report ? get(*r.report) : std::nullopt;
      }));
    };
    out += "avg_distance = " +
           field([](const MetricsReport& m) { return m.avg_distance; }) + "\n";
    out += "normalized_avg_node_betweenness = " +
           field([](const MetricsReport& m) { return m.normalized_avg_node_betweenness; }) + "\n";
    out += "normalized_avg_edge_betweenness = " +
           field([](const MetricsReport& m) { return m.normalized_avg_edge_betweenness; }) + "\n";
    out += "avg_clustering = " + field([](const MetricsReport& m) {
             return std::optional(m.avg_clustering);
           }) + "\n";
    out += "rich_club_exponent = " +
           field([](const MetricsReport& m) { return m.rich_club_exponent; }) + "\n";
  }
  return out;
}

std::string format_experiment_csv(const ExperimentReport& report) {
  std::string out =
      "row,seed,nodes,edges,avg_degree,max_degree,gamma,r,points_used,nodes_trimmed,"
      "max_clamped_fraction,rewires_skipped,isolated_repaired\n";
  for (const auto& row : report.rows) {
    for (const auto& r : row.runs) {
      out += row.label + "," + std::to_string(r.seed) + "," + std::to_string(r.n) + "," +
             std::to_string(r.edges) + "," + fixed(r.avg_degree, 6) + "," +
             std::to_string(r.max_degree) + ",";
      if (r.fit) {
        out += fixed(r.fit->exponent, 6) + "," + fixed(r.fit->correlation, 6) + "," +
               std::to_string(r.fit->points_used) + "," + std::to_string(r.fit->nodes_trimmed);
      } else {
        out += "NA,NA,NA,NA";
      }
      out += "," + fixed(r.max_clamped_fraction, 6) + "," + std::to_string(r.rewires_skipped) +
             "," + std::to_string(r.isolated_repaired) + "\n";
    }
  }
  return out;
}

}  // namespace astopo
