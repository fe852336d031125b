#include <doctest.h>

#include <cmath>
#include <map>
#include <random>

#include "astopo/error.hpp"
#include "astopo/evolve.hpp"
#include "astopo/theory.hpp"
#include "support.hpp"

using namespace astopo;
using namespace astopo::testing;

namespace {

ModelParams ours(double p, double q, double eps, std::size_t m = 1, std::size_t m0 = 5) {
  return {.p = p, .q = q, .m = m, .m0 = m0, .eps = eps, .model = Model::kOurs};
}

// |observed - expected| within `sigmas` binomial standard deviations.
bool binomial_close(std::size_t hits, std::size_t trials, double prob, double sigmas = 4.5) {
  const double n = static_cast<double>(trials);
  const double sd = std::sqrt(n * prob * (1.0 - prob));
  return std::fabs(static_cast<double>(hits) - n * prob) <= sigmas * sd;
}

}  // namespace

TEST_CASE("model parameter validation") {
  CHECK_NOTHROW(ours(0.3652, 0.525, -0.25).validate());
  CHECK_THROWS_AS(ours(-0.1, 0.0, 0.0).validate(), InvalidParameter);
  CHECK_THROWS_AS(ours(0.5, 0.5, 0.0).validate(), InvalidParameter);
  CHECK_THROWS_AS(ours(0.0, 0.0, 0.0, 5, 5).validate(), InvalidParameter);
  CHECK_THROWS_AS(ours(0.0, 0.0, 0.0, 0, 5).validate(), InvalidParameter);
  CHECK_THROWS_AS(ours(NAN, 0.0, 0.0).validate(), InvalidParameter);

  ModelParams ba = ours(0.4, 0.4, 2.0);
  ba.model = Model::kBA;
  CHECK_NOTHROW(ba.validate());
  const ModelParams e = ba.effective();
  CHECK(e.p == 0.0);
  CHECK(e.q == 0.0);
  CHECK(e.eps == 0.0);

  CHECK(parse_model("eba") == Model::kEBA);
  CHECK(to_string(Model::kBA) == "ba");
  CHECK_THROWS_AS(parse_model("glp"), InvalidParameter);
}

TEST_CASE("attachment weights") {
  const auto k5 = attachment_weights(Graph::complete(5), -0.25);
  for (double w : k5) CHECK(w == doctest::Approx(3.0));

  // Star with three leaves: nodes 0 and 1 have degrees 3 and 1.
  const auto star_w = attachment_weights(star(3), 0.0);
  CHECK(star_w[0] == 3.0);
  CHECK(star_w[1] == 1.0);
  CHECK(star_w[1] / (star_w[0] + star_w[1]) == doctest::Approx(0.25));

  // Nodes 0, 1, 2 have degrees 6, 1, 1 and the mean degree is 8/3.
  const Graph g = from_edges(9, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6},
                                 {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 7}, {5, 8}});
  REQUIRE(g.mean_degree() == doctest::Approx(8.0 / 3.0));
  const auto w = attachment_weights(g, -1.0);
  CHECK(w[0] == doctest::Approx(10.0 / 3.0));
  CHECK(w[1] == 0.0);
  CHECK(w[2] == 0.0);

  CHECK_THROWS_AS(attachment_weights(Graph::complete(3), -1.0), NoAttachableNode);
}

TEST_CASE("clamped weights are never negative") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_graph(20, 0.2, rng);
    if (g.edge_count() == 0) continue;
    const double eps = -std::uniform_real_distribution<double>(0.0, 1.5)(rng);
    std::vector<double> w;
    try {
      w = attachment_weights(g, eps);
    } catch (const NoAttachableNode&) {
      continue;
    }
    for (NodeId v = 0; v < g.node_count(); ++v) {
      CHECK(w[v] >= 0.0);
      CHECK(w[v] == doctest::Approx(std::max(0.0, g.degree(v) + eps * g.mean_degree())));
    }
  }
}

TEST_CASE("sample_preferential frequencies") {
  Rng rng(17);
  const int draws = 100000;

  SUBCASE("degree ratio 3:1") {
    const Graph g = star(3);
    const std::unordered_set<NodeId> forbidden{2, 3};
    int center = 0;
    for (int i = 0; i < draws; ++i) {
      const NodeId v = sample_preferential(g, 0.0, forbidden, rng);
      REQUIRE((v == 0 || v == 1));
      center += v == 0;
    }
    CHECK(std::fabs(static_cast<double>(center) / draws - 0.75) <= 0.02);
  }

  SUBCASE("single eligible node") {
    const Graph g = Graph::complete(5);
    const std::unordered_set<NodeId> forbidden{0, 1, 3, 4};
    for (int i = 0; i < 1000; ++i) CHECK(sample_preferential(g, -0.25, forbidden, rng) == 2);
  }

  SUBCASE("all weights clamped to zero gives a uniform draw") {
    const Graph g = Graph::complete(3);
    std::vector<std::size_t> hits(3, 0);
    for (int i = 0; i < draws; ++i) ++hits[sample_preferential(g, -1.0, {}, rng)];
    for (auto h : hits) CHECK(std::fabs(static_cast<double>(h) / draws - 1.0 / 3.0) <= 0.02);
  }

  SUBCASE("negative offset thins low degrees") {
    // Degrees 6,1,1,4,4,4,2,1,1 with offset -8/3: weights 10/3 and 4/3 only.
    const Graph g = from_edges(9, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6},
                                   {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 7}, {5, 8}});
    const double total = 10.0 / 3.0 + 3 * 4.0 / 3.0;
    std::map<NodeId, std::size_t> hits;
    for (int i = 0; i < draws; ++i) ++hits[sample_preferential(g, -1.0, {}, rng)];
    CHECK(hits.size() == 4);
    CHECK(binomial_close(hits[0], draws, (10.0 / 3.0) / total));
    for (NodeId v : {3u, 4u, 5u}) CHECK(binomial_close(hits[v], draws, (4.0 / 3.0) / total));
  }

  SUBCASE("nothing eligible") {
    const Graph g = from_edges(3, {{0, 1}});
    CHECK_THROWS_AS(sample_preferential(g, 0.0, {0, 1}, rng), NoAttachableNode);
    CHECK_THROWS_AS(sample_preferential(g, 0.0, {0, 1, 2}, rng), NoAttachableNode);
  }
}

TEST_CASE("BA attachment frequency is k over the degree sum") {
  Rng rng(99);
  ModelParams ba;
  ba.model = Model::kBA;
  ba.m = 1;
  ba.m0 = 5;
  const Graph base = evolve(ba, 30, rng);
  const std::size_t trials = 100000;
  std::vector<std::size_t> hits(base.node_count(), 0);
  Graph g = base;
  for (std::size_t i = 0; i < trials; ++i) {
    const NodeId fresh = step_add_node(g, ba, rng);
    REQUIRE(g.degree(fresh) == 1);
    const NodeId target = g.neighbors(fresh)[0];
    ++hits[target];
    g.remove_edge(fresh, target);
  }
  // The fresh isolated nodes carry no weight, so the base degrees still apply.
  for (NodeId v = 0; v < base.node_count(); ++v) {
    const double prob = static_cast<double>(base.degree(v)) / base.degree_sum();
    CHECK(binomial_close(hits[v], trials, prob));
  }
}

TEST_CASE("EBA attaches with weight k + 1") {
  Rng rng(8);
  ModelParams eba;
  eba.model = Model::kEBA;
  eba.m = 1;
  eba.m0 = 2;
  const std::size_t trials = 100000;
  std::size_t center = 0;
  for (std::size_t i = 0; i < trials; ++i) {
    Graph g = star(3);
    const NodeId fresh = step_add_node(g, eba, rng);
    center += g.has_edge(fresh, 0);
  }
  // (3 + 1) / (4 + 3 * 2)
  CHECK(binomial_close(center, trials, 0.4));
}

TEST_CASE("step_add_links") {
  Rng rng(21);

  SUBCASE("saturated graph") {
    Graph g = Graph::complete(5);
    EvolutionTrace trace;
    CHECK(step_add_links(g, ours(0.5, 0.0, 0.0), rng, &trace) == 0);
    CHECK(g.edge_count() == 10);
    CHECK(trace.links_skipped == 1);
  }

  SUBCASE("path plus isolated node") {
    // Start 2: targets 0 and 1 at 1/2 each. Start 0 or 1: the only allowed
    // node is 2, whose weight is zero while others are positive, so skip.
    const int trials = 60000;
    int added = 0, to_zero = 0;
    for (int i = 0; i < trials; ++i) {
      Graph g = from_edges(3, {{0, 1}});
      if (step_add_links(g, ours(0.5, 0.0, 0.0), rng) == 1) {
        ++added;
        REQUIRE(g.degree(2) == 1);
        to_zero += g.has_edge(2, 0);
      }
    }
    CHECK(binomial_close(added, trials, 1.0 / 3.0));
    CHECK(binomial_close(to_zero, added, 0.5));
  }

  SUBCASE("edge accounting on a growing graph") {
    Graph g = Graph::complete(5);
    const ModelParams params = ours(0.5, 0.0, -0.2, 2);
    std::size_t placed = 0;
    std::size_t expected_edges = g.edge_count();
    for (int step = 0; step < 10000; ++step) {
      if (step % 2 == 0) {
        const NodeId v = step_add_node(g, params, rng);
        expected_edges += g.degree(v);
      } else {
        const std::size_t before = g.edge_count();
        const std::size_t added = step_add_links(g, params, rng);
        CHECK(g.edge_count() == before + added);
        placed += added;
        expected_edges += added;
      }
    }
    CHECK(placed > 0);
    CHECK(g.edge_count() == expected_edges);
    CHECK(g.check_invariants());
  }
}

TEST_CASE("step_rewire") {
  Rng rng(4);
  const ModelParams params = ours(0.0, 0.5, 0.0);

  SUBCASE("K2 is left alone") {
    Graph g = Graph::complete(2);
    EvolutionTrace trace;
    for (int i = 0; i < 100; ++i) CHECK(step_rewire(g, params, rng, &trace) == 0);
    CHECK(g == Graph::complete(2));
    CHECK(trace.rewires_skipped == 100);
  }

  SUBCASE("triangle has no target") {
    Graph g = Graph::complete(3);
    for (int i = 0; i < 100; ++i) CHECK(step_rewire(g, params, rng) == 0);
    CHECK(g == Graph::complete(3));
  }

  SUBCASE("edge count is conserved and no node loses its last edge") {
    for (int trial = 0; trial < 200; ++trial) {
      Graph g = random_graph(12, 0.3, rng);
      if (g.edge_count() == 0) continue;
      const std::size_t edges = g.edge_count();
      const std::size_t isolated = g.isolated_count();
      const ModelParams p = ours(0.0, 0.5, trial % 2 ? -0.3 : 0.4, 3, 5);
      step_rewire(g, p, rng);
      CHECK(g.edge_count() == edges);
      CHECK(g.isolated_count() <= isolated);
      CHECK(g.check_invariants());
    }
  }
}

TEST_CASE("step_add_node") {
  Rng rng(12);

  SUBCASE("uniform over a clique") {
    std::vector<std::size_t> hits(5, 0);
    for (int i = 0; i < 20000; ++i) {
      Graph g = Graph::complete(5);
      const NodeId v = step_add_node(g, ours(0.0, 0.0, 0.0), rng);
      CHECK(v == 5);
      ++hits[g.neighbors(v)[0]];
    }
    CHECK(chi_square_uniform(hits) < chi_square_critical(4));
  }

  SUBCASE("targets are distinct and bounded by m") {
    Graph g = Graph::complete(5);
    for (int i = 0; i < 2000; ++i) {
      const std::size_t n = g.node_count();
      const std::size_t e = g.edge_count();
      const NodeId v = step_add_node(g, ours(0.0, 0.0, -0.3, 2), rng);
      CHECK(g.node_count() == n + 1);
      CHECK(g.edge_count() <= e + 2);
      CHECK(g.edge_count() - e == g.degree(v));
    }
    CHECK(g.check_invariants());
  }

  SUBCASE("pool exhaustion places fewer links") {
    Graph g = Graph::complete(2);
    EvolutionTrace trace;
    const NodeId v = step_add_node(g, ours(0.0, 0.0, 0.0, 4, 5), rng, &trace);
    CHECK(g.degree(v) == 2);
    CHECK(trace.node_links_missing == 2);
  }
}

TEST_CASE("evolve rejects bad input") {
  Rng rng(1);
  CHECK_THROWS_AS(evolve(ours(0.0, 0.0, 0.0), 3, rng), InvalidParameter);
  CHECK_THROWS_AS(evolve(ours(0.6, 0.6, 0.0), 100, rng), InvalidParameter);
  CHECK_THROWS_AS(evolve(ours(0.0, 0.0, 0.0, 5, 5), 100, rng), InvalidParameter);
  const Graph g = evolve(ours(0.0, 0.0, 0.0), 5, rng);
  CHECK(g == Graph::complete(5));
}

TEST_CASE("evolve conservation laws") {
  const ModelParams settings[] = {
      ours(0.3652, 0.525, -0.25), ours(0.462, 0.4, -0.25), ours(0.2, 0.3, 0.5, 2, 4),
      ours(0.0, 0.0, -0.9, 3, 6),  ours(0.1, 0.6, -1.5, 1, 3)};
  std::uint64_t seed = 100;
  for (const ModelParams& params : settings) {
    Rng rng(seed++);
    EvolutionTrace trace;
    const Graph g = evolve(params, 800, rng, &trace);
    CAPTURE(params.eps);
    REQUIRE(g.check_invariants());
    CHECK(g.node_count() == 800);
    CHECK(trace.add_links_events + trace.rewire_events + trace.add_node_events == trace.events);
    CHECK(g.node_count() == params.m0 + trace.add_node_events);
    CHECK(g.edge_count() == params.m0 * (params.m0 - 1) / 2 + trace.links_added +
                                trace.node_links_added + trace.isolated_repaired);
    CHECK(trace.links_added + trace.links_skipped == trace.add_links_events * params.m);
    CHECK(trace.rewires_applied + trace.rewires_skipped == trace.rewire_events * params.m);
    CHECK(g.isolated_count() == 0);
    CHECK(trace.birth_event.size() == g.node_count());
  }
}

TEST_CASE("evolve is deterministic per seed") {
  const ModelParams params = ours(0.462, 0.4, -0.25);
  Rng a(77), b(77), c(78);
  const Graph ga = evolve(params, 2000, a);
  const Graph gb = evolve(params, 2000, b);
  const Graph gc = evolve(params, 2000, c);
  CHECK(ga.edges() == gb.edges());
  CHECK_FALSE(ga.edges() == gc.edges());
}

TEST_CASE("clamp bookkeeping") {
  Rng rng(5);
  EvolutionTrace positive;
  evolve(ours(0.2, 0.2, 0.3), 1000, rng, &positive);
  CHECK(positive.max_clamped_fraction == 0.0);
  CHECK_FALSE(positive.clamp_warning);

  EvolutionTrace negative;
  evolve(ours(0.462, 0.4, -0.25), 1000, rng, &negative);
  CHECK(negative.max_clamped_fraction > 0.0);
  CHECK(negative.max_clamped_fraction <= 1.0);
  CHECK(negative.clamp_warning == (negative.max_clamped_fraction > kClampWarningFraction));
}

TEST_CASE("simulated degrees follow the continuum trajectory") {
  // Mean degree of nodes born near event t_i, observed at the final event,
  // against (A + m + E)(t / t_i)^(1/B) - A - E.
  struct Case {
    ModelParams params;
    double tolerance;
  };
  const Case cases[] = {{{.p = 0, .q = 0, .m = 1, .m0 = 5, .eps = 0, .model = Model::kBA}, 0.1},
                        {ours(0.2, 0.2, 0.5, 2, 5), 0.15}};
  for (const Case& c : cases) {
    std::map<std::size_t, std::pair<double, int>> by_band;
    const std::size_t n = 20000;
    const theory::TheoryParams tp{c.params.p, c.params.q, c.params.m, c.params.eps};
    double mean_ratio = 0.0;
    int bands = 0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      Rng rng(seed);
      EvolutionTrace trace;
      const Graph g = evolve(c.params, n, rng, &trace);
      for (NodeId v = c.params.m0; v < g.node_count(); ++v) {
        const std::uint64_t born = trace.birth_event[v];
        const auto band = static_cast<std::size_t>(std::log2(static_cast<double>(born)));
        if (band < 6 || born * 16 > trace.events) continue;
        auto& [sum, count] = by_band[band];
        sum += static_cast<double>(g.degree(v)) /
               theory::degree_trajectory(static_cast<double>(trace.events),
                                         static_cast<double>(born), tp);
        ++count;
      }
    }
    for (const auto& [band, acc] : by_band) {
      mean_ratio += acc.first / acc.second;
      ++bands;
    }
    REQUIRE(bands > 0);
    CHECK(mean_ratio / bands == doctest::Approx(1.0).epsilon(c.tolerance));
  }
}
