#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "astopo/evolve.hpp"
#include "astopo/metrics.hpp"
#include "astopo/powerlaw_fit.hpp"

namespace astopo {

inline constexpr std::size_t kDefaultReplicates = 20;

struct ReplicateResult {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t edges = 0;
  double avg_degree = 0.0;
  std::size_t max_degree = 0;
  std::optional<FitResult> fit;
  std::optional<MetricsReport> report;  // only with full metrics
  double max_clamped_fraction = 0.0;
  std::uint64_t rewires_skipped = 0;
  std::uint64_t isolated_repaired = 0;
};

// Evolves `replicates` graphs with seeds base_seed, base_seed + 1, ...
// Replicates run in parallel; results come back in seed order.
std::vector<ReplicateResult> run_replicates(const ModelParams& params, std::size_t n,
                                            std::uint64_t base_seed,
                                            std::size_t replicates,
                                            bool full_metrics = false);

struct Summary {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation; 0 for a single value
  std::size_t count = 0;
};

Summary summarize(std::span<const double> values);

// Spearman rank correlation (average ranks for ties).
double spearman(std::span<const double> x, std::span<const double> y);

struct ExperimentRow {
  std::string label;
  ModelParams params;
  std::size_t n = 0;
  double gamma_theory = 0.0;
  std::vector<ReplicateResult> runs;
};

struct ExperimentReport {
  std::string name;
  std::vector<ExperimentRow> rows;
};

struct ExperimentOptions {
  std::uint64_t base_seed = 1;
  std::size_t replicates = kDefaultReplicates;
  // Links per event for the table5 sweep; p is then derived per row so the
  // expected mean degree is 8.
  std::size_t table5_m = 1;
};

std::vector<std::string_view> experiment_names();

// Runs "table5", "section61" or "table6". Throws InvalidParameter for any
// other name, listing the valid ones.
ExperimentReport run_experiment(std::string_view name, const ExperimentOptions& options);

// Parameter rows behind each named experiment.
std::vector<ExperimentRow> table5_rows(std::size_t m = 1);
ExperimentRow section61_row();
ExperimentRow table6_row(std::size_t n = 419);

std::string format_experiment(const ExperimentReport& report);
// One line per replicate.
std::string format_experiment_csv(const ExperimentReport& report);

}  // namespace astopo
