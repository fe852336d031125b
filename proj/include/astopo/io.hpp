#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "astopo/evolve.hpp"
#include "astopo/graph.hpp"
#include "astopo/metrics.hpp"

namespace astopo::io {

// Canonical edge list: "# nodes: N" and "# edges: M" header lines followed by
// one "i j" line per edge with i < j, sorted ascending.
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list(const std::filesystem::path& path, const Graph& g);

struct ReadOptions {
  // Map arbitrary non-negative ids onto 0..n-1 in ascending id order instead
  // of requiring dense ids.
  bool relabel = false;
};

// Accepts '#' comments, blank lines and any whitespace between the two ids.
// Throws ParseError (with the 1-based line) on malformed lines, self-loops,
// duplicate edges or ids beyond a declared node count.
Graph read_edge_list(std::istream& in, const ReadOptions& options = {});
Graph read_edge_list(const std::filesystem::path& path, const ReadOptions& options = {});

enum class ReportFormat { kText, kStructured };
ReportFormat parse_report_format(std::string_view name);

// "key = value" lines; absent values print as NA.
std::string format_report(const MetricsReport& report);
std::string format_report_json(const MetricsReport& report);
std::string format_report(const MetricsReport& report, ReportFormat format);
MetricsReport parse_report(std::string_view text);

std::string format_trace(const EvolutionTrace& trace);

// Side-by-side table, one column per report.
std::string format_comparison(const std::vector<std::string>& labels,
                              const std::vector<MetricsReport>& reports);

// Writes one CSV per curve (degree histogram, CCDF, distances, C(k),
// rich club, node betweenness) into `dir`.
void write_curves(const std::filesystem::path& dir, const MetricsBundle& bundle);

// Same curves with a leading "graph" column, one file per curve holding every
// input.
void write_overlaid_curves(const std::filesystem::path& dir,
                           const std::vector<std::string>& labels,
                           const std::vector<MetricsBundle>& bundles);

void write_text(const std::filesystem::path& path, std::string_view text);

}  // namespace astopo::io
