#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "astopo/error.hpp"
#include "astopo/evolve.hpp"
#include "astopo/io.hpp"
#include "support.hpp"

using namespace astopo;
using namespace astopo::testing;
namespace fs = std::filesystem;

namespace {

std::string to_text(const Graph& g) {
  std::ostringstream out;
  io::write_edge_list(out, g);
  return out.str();
}

Graph from_text(const std::string& text, io::ReadOptions options = {}) {
  std::istringstream in(text);
  return io::read_edge_list(in, options);
}

std::size_t parse_error_line(const std::string& text) {
  try {
    from_text(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

std::vector<std::string> lines_of(const fs::path& path) {
  std::ifstream in(path);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("astopo_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("canonical edge list") {
  const Graph g = from_edges(4, {{2, 1}, {0, 3}, {1, 0}});
  CHECK(to_text(g) == "# nodes: 4\n# edges: 3\n0 1\n0 3\n1 2\n");

  Graph with_isolated = Graph::complete(3);
  with_isolated.add_node();
  const Graph back = from_text(to_text(with_isolated));
  CHECK(back.node_count() == 4);
  CHECK(back == with_isolated);
}

TEST_CASE("edge list round trips") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = evolve({.p = 0.3, .q = 0.3, .m = 2, .m0 = 4, .eps = -0.2}, 200, rng);
    const std::string text = to_text(g);
    const Graph back = from_text(text);
    CHECK(back == g);
    CHECK(to_text(back) == text);
  }
}

TEST_CASE("reader tolerates comments and spacing") {
  const Graph g = from_text("# a comment\n\n  0\t1  \n#another\n2 1\r\n");
  CHECK(g.node_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(1, 2));
}

TEST_CASE("reader rejects bad input with the line number") {
  CHECK(parse_error_line("0 1\n1 2\n3 3\n") == 3);
  CHECK(parse_error_line("0 1\n# c\n1 0\n") == 3);
  CHECK(parse_error_line("0 1\nx 2\n") == 2);
  CHECK(parse_error_line("0\n") == 1);
  CHECK(parse_error_line("0 -1\n") == 1);
  CHECK(parse_error_line("0 1 2\n") == 1);
  CHECK(parse_error_line("# nodes: 3\n0 1\n1 5\n") == 3);
  CHECK(parse_error_line("# nodes: x\n") == 1);

  try {
    from_text("0 1\n3 3\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("relabel maps sparse ids densely") {
  const Graph g = from_text("701 3356\n3356 174\n", {.relabel = true});
  CHECK(g.node_count() == 3);
  // 174 -> 0, 701 -> 1, 3356 -> 2
  CHECK(g.has_edge(1, 2));
  CHECK(g.has_edge(0, 2));
}

TEST_CASE("file reader reports the path") {
  const fs::path dir = scratch_dir("file_reader");
  io::write_text(dir / "bad.txt", "0 1\n2 2\n");
  try {
    io::read_edge_list(dir / "bad.txt");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("bad.txt:2") != std::string::npos);
  }
  CHECK_THROWS_AS(io::read_edge_list(dir / "missing.txt"), Error);
}

TEST_CASE("report formats round trip") {
  std::mt19937_64 rng(9);
  const Graph g = evolve({.p = 0.462, .q = 0.4, .m = 1, .m0 = 5, .eps = -0.25}, 419, rng);
  const MetricsReport r = metrics_report(g);
  CHECK(io::parse_report(io::format_report(r)) == r);

  MetricsReport partial = r;
  partial.avg_distance.reset();
  partial.rich_club_exponent.reset();
  const std::string text = io::format_report(partial);
  CHECK(text.find("avg_distance = NA") != std::string::npos);
  CHECK(io::parse_report(text) == partial);

  const std::string json = io::format_report(r, io::ReportFormat::kStructured);
  CHECK(json.front() == '{');
  CHECK(json.find("\"edges\"") != std::string::npos);
  CHECK(io::parse_report_format("structured") == io::ReportFormat::kStructured);
  CHECK_THROWS_AS(io::parse_report_format("xml"), InvalidParameter);
  CHECK_THROWS_AS(io::parse_report("bogus = 1\n"), ParseError);
}

TEST_CASE("curve files have headers and one row per point") {
  std::mt19937_64 rng(10);
  const Graph g = evolve({.p = 0.462, .q = 0.4, .m = 1, .m0 = 5, .eps = -0.25}, 300, rng);
  const MetricsBundle b = analyze(g);
  const fs::path dir = scratch_dir("curves");
  io::write_curves(dir, b);

  const auto check = [&](const std::string& name, const std::string& header, std::size_t rows) {
    const auto lines = lines_of(dir / (name + ".csv"));
    REQUIRE(!lines.empty());
    CHECK(lines.front() == header);
    CHECK(lines.size() == rows + 1);
  };
  check("degree_distribution", "degree,nodes,probability", b.histogram.counts.size());
  check("degree_ccdf", "degree,fraction_at_least", b.ccdf.size());
  check("distance_distribution", "distance_hops,ordered_pairs,fraction_of_n2",
        b.distances->counts.size());
  check("clustering_by_degree", "degree,clustering", b.clustering.by_degree.size());
  check("rich_club", "rank,rank_fraction,phi", b.rich_club.size());
  check("node_betweenness", "node,degree,betweenness,normalized_betweenness", g.node_count());

  const fs::path overlay = scratch_dir("overlay");
  io::write_overlaid_curves(overlay, {"a", "b"}, {b, b});
  const auto lines = lines_of(overlay / "rich_club.csv");
  CHECK(lines.front() == "graph,rank,rank_fraction,phi");
  CHECK(lines.size() == 2 * b.rich_club.size() + 1);
}

TEST_CASE("comparison table") {
  const auto k5 = metrics_report(Graph::complete(5));
  const auto s4 = metrics_report(star(4));
  const std::string table = io::format_comparison({"k5", "s4"}, {k5, s4});
  CHECK(table.find("k5") != std::string::npos);
  CHECK(table.find("avg_clustering") != std::string::npos);
}
