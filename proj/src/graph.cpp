#include "astopo/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "astopo/error.hpp"

namespace astopo {

void DegreeTree::push_back() {
  const std::size_t i = tree_.size() + 1;
  const std::size_t low = i & (~i + 1);
  tree_.push_back(prefix(i - 1) - prefix(i - low));
}

void DegreeTree::add(std::size_t index, std::int64_t delta) {
  for (std::size_t i = index + 1; i <= tree_.size(); i += i & (~i + 1)) {
    tree_[i - 1] += static_cast<std::uint64_t>(delta);
  }
  total_ += static_cast<std::uint64_t>(delta);
}

std::uint64_t DegreeTree::prefix(std::size_t count) const {
  std::uint64_t sum = 0;
  for (std::size_t i = count; i > 0; i -= i & (~i + 1)) sum += tree_[i - 1];
  return sum;
}

std::size_t DegreeTree::find(std::uint64_t target) const {
  std::size_t pos = 0;
  for (std::size_t step = std::bit_floor(tree_.size()); step > 0; step >>= 1) {
    if (pos + step <= tree_.size() && tree_[pos + step - 1] <= target) {
      pos += step;
      target -= tree_[pos - 1];
    }
  }
  return pos;
}

Graph::Graph(std::size_t node_count) {
  for (std::size_t i = 0; i < node_count; ++i) add_node();
}

Graph Graph::complete(std::size_t m0) {
  if (m0 < 2) {
    throw InvalidParameter("complete graph needs at least 2 nodes, got " +
                           std::to_string(m0));
  }
  Graph g(m0);
  for (NodeId i = 0; i < m0; ++i) {
    for (NodeId j = i + 1; j < m0; ++j) g.add_edge(i, j);
  }
  return g;
}

double Graph::mean_degree() const {
  if (adjacency_.empty()) return 0.0;
  return static_cast<double>(degree_sum()) /
         static_cast<double>(adjacency_.size());
}

std::size_t Graph::degree(NodeId node) const {
  check_node(node);
  return adjacency_[node].size();
}

std::span<const NodeId> Graph::neighbors(NodeId node) const {
  check_node(node);
  return adjacency_[node];
}

bool Graph::has_edge(NodeId a, NodeId b) const {
  check_node(a);
  check_node(b);
  if (a == b) return false;
  return edge_index_.contains(key(a, b));
}

NodeId Graph::add_node() {
  const auto id = static_cast<NodeId>(adjacency_.size());
  adjacency_.emplace_back();
  degrees_.push_back();
  if (degree_counts_.empty()) degree_counts_.push_back(0);
  ++degree_counts_[0];
  return id;
}

bool Graph::add_edge(NodeId a, NodeId b) {
  check_node(a);
  check_node(b);
  if (a == b) return false;
  const NodeId lo = std::min(a, b);
  const NodeId hi = std::max(a, b);
  const Slots slots{static_cast<std::uint32_t>(adjacency_[lo].size()),
                    static_cast<std::uint32_t>(adjacency_[hi].size())};
  if (!edge_index_.try_emplace(key(lo, hi), slots).second) return false;
  adjacency_[lo].push_back(hi);
  adjacency_[hi].push_back(lo);
  bump_degree(lo, +1);
  bump_degree(hi, +1);
  return true;
}

bool Graph::remove_edge(NodeId a, NodeId b) {
  check_node(a);
  check_node(b);
  if (a == b) return false;
  const NodeId lo = std::min(a, b);
  const NodeId hi = std::max(a, b);
  const auto it = edge_index_.find(key(lo, hi));
  if (it == edge_index_.end()) return false;
  const Slots slots = it->second;
  edge_index_.erase(it);
  detach(lo, slots.in_lo);
  detach(hi, slots.in_hi);
  bump_degree(lo, -1);
  bump_degree(hi, -1);
  return true;
}

// Removes adjacency_[owner][position] by moving the last entry into its place
// and repointing that entry's slot in the edge index.
void Graph::detach(NodeId owner, std::uint32_t position) {
  auto& list = adjacency_[owner];
  const NodeId moved = list.back();
  list[position] = moved;
  list.pop_back();
  if (position == list.size()) return;
  auto& slots = edge_index_.at(key(owner, moved));
  if (owner < moved) {
    slots.in_lo = position;
  } else {
    slots.in_hi = position;
  }
}

void Graph::bump_degree(NodeId node, int delta) {
  const std::size_t after = adjacency_[node].size();
  const std::size_t before = delta > 0 ? after - 1 : after + 1;
  if (degree_counts_.size() <= after) degree_counts_.resize(after + 1, 0);
  --degree_counts_[before];
  ++degree_counts_[after];
  degrees_.add(node, delta);
}

NodeId Graph::random_incident_edge(NodeId node, Rng& rng) const {
  check_node(node);
  const auto& list = adjacency_[node];
  if (list.empty()) {
    throw NoIncidentEdge("node " + std::to_string(node) + " has no edges");
  }
  std::uniform_int_distribution<std::size_t> pick(0, list.size() - 1);
  return list[pick(rng)];
}

NodeId Graph::sample_by_degree(Rng& rng) const {
  if (degree_sum() == 0) throw NoIncidentEdge("graph has no edges");
  std::uniform_int_distribution<std::uint64_t> pick(0, degree_sum() - 1);
  return static_cast<NodeId>(degrees_.find(pick(rng)));
}

std::size_t Graph::count_degree_below(double k) const {
  std::size_t count = 0;
  for (std::size_t d = 0; d < degree_counts_.size(); ++d) {
    if (static_cast<double>(d) >= k) break;
    count += degree_counts_[d];
  }
  return count;
}

std::size_t Graph::max_degree() const {
  for (std::size_t d = degree_counts_.size(); d > 0; --d) {
    if (degree_counts_[d - 1] > 0) return d - 1;
  }
  return 0;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (NodeId i = 0; i < adjacency_.size(); ++i) {
    for (NodeId j : adjacency_[i]) {
      if (i < j) out.emplace_back(i, j);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Graph::check_invariants() const {
  std::uint64_t sum = 0;
  std::vector<std::size_t> counts(degree_counts_.size(), 0);
  for (NodeId i = 0; i < adjacency_.size(); ++i) {
    const auto& list = adjacency_[i];
    sum += list.size();
    if (list.size() >= counts.size()) return false;
    ++counts[list.size()];
    for (std::uint32_t pos = 0; pos < list.size(); ++pos) {
      const NodeId j = list[pos];
      if (j == i || j >= adjacency_.size()) return false;
      const auto it = edge_index_.find(key(i, j));
      if (it == edge_index_.end()) return false;
      const std::uint32_t expected = i < j ? it->second.in_lo : it->second.in_hi;
      if (expected != pos) return false;
      if (std::find(adjacency_[j].begin(), adjacency_[j].end(), i) ==
          adjacency_[j].end()) {
        return false;
      }
    }
  }
  return sum == degree_sum() && sum == 2 * edge_count() &&
         counts == degree_counts_ && degrees_.size() == adjacency_.size();
}

bool operator==(const Graph& a, const Graph& b) {
  return a.node_count() == b.node_count() && a.edges() == b.edges();
}

std::uint64_t Graph::key(NodeId a, NodeId b) {
  const NodeId lo = std::min(a, b);
  const NodeId hi = std::max(a, b);
  return (static_cast<std::uint64_t>(lo) << 32) | hi;
}

void Graph::check_node(NodeId node) const {
  if (node >= adjacency_.size()) {
    throw InvalidNode("node " + std::to_string(node) + " out of range (n=" +
                      std::to_string(adjacency_.size()) + ")");
  }
}

}  // namespace astopo
