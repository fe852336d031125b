#include "astopo/evolve.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <string>

#include "astopo/error.hpp"

namespace astopo {
namespace {

// Rejection attempts before falling back to an exact scan over all nodes.
constexpr int kMaxRejections = 64;

NodeId uniform_node(const Graph& g, Rng& rng) {
  std::uniform_int_distribution<NodeId> pick(
      0, static_cast<NodeId>(g.node_count() - 1));
  return pick(rng);
}

// Additive offset eps * mean_degree applied to every degree. EBA uses
// eps = 1 / mean_degree at every draw, so its offset is always 1.
double attachment_offset(const Graph& g, const ModelParams& params) {
  switch (params.model) {
    case Model::kEBA:
      return 1.0;
    case Model::kBA:
      return 0.0;
    case Model::kOurs:
      break;
  }
  return params.eps * g.mean_degree();
}

double weight(std::size_t degree, double offset) {
  return std::max(0.0, static_cast<double>(degree) + offset);
}

// Exact weighted draw over nodes not rejected by `forbidden`. Proposals come
// from a mixture of degree-proportional and uniform picks whose density is
// proportional to k + offset (offset >= 0), or from degree-proportional picks
// thinned by (k + offset) / k (offset < 0). Rejected proposals are retried; a
// bounded number of failures triggers a linear scan, which is itself exact, so
// the result has the exact conditional distribution either way.
template <class Forbidden>
std::optional<NodeId> draw(const Graph& g, double offset, Forbidden&& forbidden,
                           Rng& rng) {
  const std::size_t n = g.node_count();
  if (n == 0) return std::nullopt;
  const double degree_mass = static_cast<double>(g.degree_sum());
  const double uniform_mass = offset > 0.0 ? offset * static_cast<double>(n) : 0.0;
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  if (degree_mass + uniform_mass > 0.0) {
    for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
      NodeId candidate;
      if (unit(rng) * (degree_mass + uniform_mass) < degree_mass) {
        candidate = g.sample_by_degree(rng);
        if (offset < 0.0) {
          const auto k = static_cast<double>(g.degree(candidate));
          if (unit(rng) * k >= k + offset) continue;
        }
      } else {
        candidate = uniform_node(g, rng);
      }
      if (!forbidden(candidate)) return candidate;
    }
  }

  std::vector<NodeId> allowed;
  std::vector<double> cumulative;
  double total = 0.0;
  bool any_positive = false;
  for (NodeId v = 0; v < n; ++v) {
    const double w = weight(g.degree(v), offset);
    any_positive = any_positive || w > 0.0;
    if (forbidden(v)) continue;
    allowed.push_back(v);
    total += w;
    cumulative.push_back(total);
  }
  if (allowed.empty()) return std::nullopt;
  if (total > 0.0) {
    const double target = unit(rng) * total;
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), target);
    const auto index = std::min<std::size_t>(it - cumulative.begin(), allowed.size() - 1);
    return allowed[index];
  }
  if (any_positive) return std::nullopt;
  // Every weight in the graph is zero: the attachment rule degenerates to 0/0
  // and all nodes are treated alike.
  std::uniform_int_distribution<std::size_t> pick(0, allowed.size() - 1);
  return allowed[pick(rng)];
}

void note_clamping(const Graph& g, double offset, EvolutionTrace* trace) {
  if (trace == nullptr || offset >= 0.0 || g.node_count() == 0) return;
  const double fraction = static_cast<double>(g.count_degree_below(-offset)) /
                          static_cast<double>(g.node_count());
  trace->max_clamped_fraction = std::max(trace->max_clamped_fraction, fraction);
  if (fraction > kClampWarningFraction) trace->clamp_warning = true;
}

NodeId uniform_connected_node(const Graph& g, Rng& rng) {
  for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
    const NodeId v = uniform_node(g, rng);
    if (g.degree(v) > 0) return v;
  }
  std::vector<NodeId> connected;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (g.degree(v) > 0) connected.push_back(v);
  }
  std::uniform_int_distribution<std::size_t> pick(0, connected.size() - 1);
  return connected[pick(rng)];
}

void record_samples(const Graph& g, const TraceOptions& options,
                    EvolutionTrace& trace) {
  for (NodeId v = 0; v < g.node_count(); v += static_cast<NodeId>(options.node_stride)) {
    trace.samples.push_back({v, trace.birth_event[v], trace.events, g.degree(v)});
  }
}

}  // namespace

std::string_view to_string(Model model) {
  switch (model) {
    case Model::kOurs:
      return "ours";
    case Model::kBA:
      return "ba";
    case Model::kEBA:
      return "eba";
  }
  return "unknown";
}

Model parse_model(std::string_view name) {
  if (name == "ours") return Model::kOurs;
  if (name == "ba") return Model::kBA;
  if (name == "eba") return Model::kEBA;
  throw InvalidParameter("unknown model '" + std::string(name) +
                         "' (expected ours, ba or eba)");
}

ModelParams ModelParams::effective() const {
  ModelParams out = *this;
  if (model == Model::kBA) {
    out.p = 0.0;
    out.q = 0.0;
    out.eps = 0.0;
  }
  return out;
}

void ModelParams::validate() const {
  const ModelParams e = effective();
  if (!std::isfinite(e.p) || !std::isfinite(e.q) || !std::isfinite(e.eps)) {
    throw InvalidParameter("model parameters must be finite");
  }
  if (e.p < 0.0 || e.q < 0.0) {
    throw InvalidParameter("p and q must be non-negative");
  }
  if (e.p + e.q >= 1.0) {
    throw InvalidParameter("p + q must be below 1");
  }
  if (e.m < 1) throw InvalidParameter("m must be at least 1");
  if (e.m0 < 2) throw InvalidParameter("m0 must be at least 2");
  if (e.m >= e.m0) throw InvalidParameter("m must be smaller than m0");
}

std::vector<double> attachment_weights(const Graph& g, double eps) {
  if (g.node_count() == 0) throw InvalidParameter("graph has no nodes");
  const double offset = eps * g.mean_degree();
  std::vector<double> weights(g.node_count());
  bool any_positive = false;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    weights[v] = weight(g.degree(v), offset);
    any_positive = any_positive || weights[v] > 0.0;
  }
  if (!any_positive) throw NoAttachableNode("every attachment weight is zero");
  return weights;
}

NodeId sample_preferential(const Graph& g, double eps,
                           const std::unordered_set<NodeId>& forbidden,
                           Rng& rng) {
  const auto chosen =
      draw(g, eps * g.mean_degree(),
           [&](NodeId v) { return forbidden.contains(v); }, rng);
  if (!chosen) throw NoAttachableNode("no eligible node outside the forbidden set");
  return *chosen;
}

std::size_t step_add_links(Graph& g, const ModelParams& params, Rng& rng,
                           EvolutionTrace* trace) {
  std::size_t added = 0;
  for (std::size_t i = 0; i < params.m; ++i) {
    const NodeId start = uniform_node(g, rng);
    const double offset = attachment_offset(g, params);
    note_clamping(g, offset, trace);
    const auto target = draw(
        g, offset,
        [&](NodeId v) { return v == start || g.has_edge(start, v); }, rng);
    if (target) {
      g.add_edge(start, *target);
      ++added;
    } else if (trace != nullptr) {
      ++trace->links_skipped;
    }
  }
  if (trace != nullptr) trace->links_added += added;
  return added;
}

std::size_t step_rewire(Graph& g, const ModelParams& params, Rng& rng,
                        EvolutionTrace* trace) {
  std::size_t applied = 0;
  std::size_t skipped = 0;
  for (std::size_t r = 0; r < params.m; ++r) {
    if (g.edge_count() == 0) {
      ++skipped;
      continue;
    }
    const NodeId anchor = uniform_connected_node(g, rng);
    const NodeId old_end = g.random_incident_edge(anchor, rng);
    if (g.degree(old_end) == 1) {
      ++skipped;
      continue;
    }
    g.remove_edge(anchor, old_end);
    const double offset = attachment_offset(g, params);
    note_clamping(g, offset, trace);
    const auto target = draw(
        g, offset,
        [&](NodeId v) {
          return v == anchor || v == old_end || g.has_edge(anchor, v);
        },
        rng);
    if (target) {
      g.add_edge(anchor, *target);
      ++applied;
    } else {
      g.add_edge(anchor, old_end);
      ++skipped;
    }
  }
  if (trace != nullptr) {
    trace->rewires_applied += applied;
    trace->rewires_skipped += skipped;
  }
  return applied;
}

NodeId step_add_node(Graph& g, const ModelParams& params, Rng& rng,
                     EvolutionTrace* trace) {
  const NodeId fresh = g.add_node();
  std::size_t placed = 0;
  for (; placed < params.m; ++placed) {
    const double offset = attachment_offset(g, params);
    note_clamping(g, offset, trace);
    const auto target = draw(
        g, offset,
        [&](NodeId v) { return v == fresh || g.has_edge(fresh, v); }, rng);
    if (!target) break;
    g.add_edge(fresh, *target);
  }
  if (trace != nullptr) {
    trace->node_links_added += placed;
    trace->node_links_missing += params.m - placed;
  }
  return fresh;
}

Graph evolve(const ModelParams& params, std::size_t target_n, Rng& rng,
             EvolutionTrace* trace, const TraceOptions& options) {
  params.validate();
  const ModelParams run = params.effective();
  if (target_n < run.m0) {
    throw InvalidParameter("target node count " + std::to_string(target_n) +
                           " is below m0 = " + std::to_string(run.m0));
  }

  Graph g = Graph::complete(run.m0);
  EvolutionTrace local;
  EvolutionTrace& t = trace != nullptr ? *trace : local;
  t = EvolutionTrace{};
  t.birth_event.assign(run.m0, 0);
  t.birth_event.reserve(target_n);
  auto next_checkpoint = options.checkpoints.begin();
  const bool sampling = options.node_stride > 0;

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  while (g.node_count() < target_n) {
    ++t.events;
    const double u = unit(rng);
    if (u < run.p) {
      ++t.add_links_events;
      step_add_links(g, run, rng, &t);
    } else if (u < run.p + run.q) {
      ++t.rewire_events;
      step_rewire(g, run, rng, &t);
    } else {
      ++t.add_node_events;
      step_add_node(g, run, rng, &t);
      t.birth_event.push_back(t.events);
    }
#ifdef ASTOPO_CHECK_EVERY_EVENT
    assert(g.check_invariants());
#endif
    while (sampling && next_checkpoint != options.checkpoints.end() &&
           *next_checkpoint <= t.events) {
      record_samples(g, options, t);
      ++next_checkpoint;
    }
  }

  // Nodes can only be left isolated when every candidate was clamped to zero
  // weight during their attachment; give each one preferential link.
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (g.degree(v) > 0) continue;
    const auto target =
        draw(g, attachment_offset(g, run), [&](NodeId w) { return w == v; }, rng);
    if (target) {
      g.add_edge(v, *target);
      ++t.isolated_repaired;
    }
  }
  return g;
}

}  // namespace astopo
