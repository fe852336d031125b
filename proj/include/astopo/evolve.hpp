#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "astopo/graph.hpp"

namespace astopo {

enum class Model { kOurs, kBA, kEBA };

std::string_view to_string(Model model);
// Accepts "ours", "ba", "eba". Throws InvalidParameter otherwise.
Model parse_model(std::string_view name);

struct ModelParams {
  double p = 0.0;  // probability of a link-addition event
  double q = 0.0;  // probability of a rewiring event
  std::size_t m = 1;
  std::size_t m0 = 5;
  double eps = 0.0;  // attachment offset; ignored for BA and EBA
  Model model = Model::kOurs;

  // Copy with the mode's forced values applied (BA: p = q = eps = 0).
  ModelParams effective() const;
  // Throws InvalidParameter on any violated constraint.
  void validate() const;
};

// Fraction of clamped nodes above which a run is flagged; beyond it the
// continuum prediction is no longer expected to hold.
inline constexpr double kClampWarningFraction = 0.15;

struct TraceOptions {
  // Record degrees of every `node_stride`-th node at each checkpoint.
  std::size_t node_stride = 0;
  std::vector<std::uint64_t> checkpoints;  // event indices, ascending
};

struct DegreeSample {
  NodeId node;
  std::uint64_t birth_event;
  std::uint64_t event;
  std::size_t degree;
};

struct EvolutionTrace {
  std::uint64_t events = 0;
  std::uint64_t add_links_events = 0;
  std::uint64_t rewire_events = 0;
  std::uint64_t add_node_events = 0;

  std::uint64_t links_added = 0;
  std::uint64_t links_skipped = 0;
  std::uint64_t rewires_applied = 0;
  std::uint64_t rewires_skipped = 0;
  std::uint64_t node_links_added = 0;
  std::uint64_t node_links_missing = 0;
  std::uint64_t isolated_repaired = 0;

  // Largest fraction of nodes with negative attachment weight seen at any
  // attachment.
  double max_clamped_fraction = 0.0;
  bool clamp_warning = false;

  // Event index at which each node was created; 0 for the initial clique.
  std::vector<std::uint64_t> birth_event;
  std::vector<DegreeSample> samples;
};

// Unnormalized attachment weights max(0, k_i + eps * mean_degree).
// Throws NoAttachableNode if every weight is zero.
std::vector<double> attachment_weights(const Graph& g, double eps);

// Draws a node outside `forbidden` with probability proportional to its
// attachment weight. If every weight in the graph is zero the draw is uniform
// over the allowed nodes. Throws NoAttachableNode when nothing is eligible.
NodeId sample_preferential(const Graph& g, double eps,
                           const std::unordered_set<NodeId>& forbidden,
                           Rng& rng);

// Single events. Each returns the number of links actually placed (or the new
// node's id) and tallies skips into `trace` when given.
std::size_t step_add_links(Graph& g, const ModelParams& params, Rng& rng,
                           EvolutionTrace* trace = nullptr);
std::size_t step_rewire(Graph& g, const ModelParams& params, Rng& rng,
                        EvolutionTrace* trace = nullptr);
NodeId step_add_node(Graph& g, const ModelParams& params, Rng& rng,
                     EvolutionTrace* trace = nullptr);

// Grows a graph from the m0-clique until it has target_n nodes.
Graph evolve(const ModelParams& params, std::size_t target_n, Rng& rng,
             EvolutionTrace* trace = nullptr,
             const TraceOptions& options = {});

}  // namespace astopo
