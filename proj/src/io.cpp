#include "astopo/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <system_error>

#include <json.hpp>

#include "astopo/error.hpp"

namespace astopo::io {
namespace {

std::string num(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return {buf, res.ptr};
}

std::string num(std::uint64_t value) { return std::to_string(value); }

std::string num(const std::optional<double>& value) {
  return value ? num(*value) : std::string("NA");
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_u64(std::string_view token, std::uint64_t& out) {
  if (token.empty()) return false;
  const auto res = std::from_chars(token.data(), token.data() + token.size(), out);
  return res.ec == std::errc{} && res.ptr == token.data() + token.size();
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  return out;
}

// Report fields in output order.
struct Field {
  const char* key;
  std::string (*get)(const MetricsReport&);
  void (*set)(MetricsReport&, std::optional<double>);
};

std::size_t as_count(std::optional<double> v) {
  return v ? static_cast<std::size_t>(*v) : 0;
}

const Field kFields[] = {
    {"nodes", [](const MetricsReport& r) { return num(std::uint64_t{r.n}); },
     [](MetricsReport& r, std::optional<double> v) { r.n = as_count(v); }},
    {"edges", [](const MetricsReport& r) { return num(std::uint64_t{r.edge_count}); },
     [](MetricsReport& r, std::optional<double> v) { r.edge_count = as_count(v); }},
    {"avg_degree", [](const MetricsReport& r) { return num(r.avg_degree); },
     [](MetricsReport& r, std::optional<double> v) { r.avg_degree = v.value_or(0.0); }},
    {"max_degree", [](const MetricsReport& r) { return num(std::uint64_t{r.max_degree}); },
     [](MetricsReport& r, std::optional<double> v) { r.max_degree = as_count(v); }},
    {"degree_exponent", [](const MetricsReport& r) { return num(r.degree_exponent); },
     [](MetricsReport& r, std::optional<double> v) { r.degree_exponent = v; }},
    {"degree_fit_r", [](const MetricsReport& r) { return num(r.degree_fit_r); },
     [](MetricsReport& r, std::optional<double> v) { r.degree_fit_r = v; }},
    {"avg_distance", [](const MetricsReport& r) { return num(r.avg_distance); },
     [](MetricsReport& r, std::optional<double> v) { r.avg_distance = v; }},
    {"normalized_avg_node_betweenness",
     [](const MetricsReport& r) { return num(r.normalized_avg_node_betweenness); },
     [](MetricsReport& r, std::optional<double> v) { r.normalized_avg_node_betweenness = v; }},
    {"normalized_avg_edge_betweenness",
     [](const MetricsReport& r) { return num(r.normalized_avg_edge_betweenness); },
     [](MetricsReport& r, std::optional<double> v) { r.normalized_avg_edge_betweenness = v; }},
    {"avg_clustering", [](const MetricsReport& r) { return num(r.avg_clustering); },
     [](MetricsReport& r, std::optional<double> v) { r.avg_clustering = v.value_or(0.0); }},
    {"rich_club_exponent", [](const MetricsReport& r) { return num(r.rich_club_exponent); },
     [](MetricsReport& r, std::optional<double> v) { r.rich_club_exponent = v; }},
};

struct Curve {
  std::string name;
  std::string header;
  std::vector<std::string> rows;
};

std::vector<Curve> curves(const MetricsBundle& b) {
  std::vector<Curve> out;

  Curve hist{"degree_distribution", "degree,nodes,probability", {}};
  for (const auto& [k, count] : b.histogram.counts) {
    hist.rows.push_back(num(std::uint64_t{k}) + "," + num(std::uint64_t{count}) + "," +
                        num(static_cast<double>(count) / static_cast<double>(b.histogram.n)));
  }
  out.push_back(std::move(hist));

  Curve cc{"degree_ccdf", "degree,fraction_at_least", {}};
  for (const auto& point : b.ccdf) {
    cc.rows.push_back(num(std::uint64_t{point.degree}) + "," + num(point.fraction));
  }
  out.push_back(std::move(cc));

  if (b.distances) {
    Curve dist{"distance_distribution", "distance_hops,ordered_pairs,fraction_of_n2", {}};
    for (std::size_t d = 0; d < b.distances->counts.size(); ++d) {
      dist.rows.push_back(num(std::uint64_t{d}) + "," + num(b.distances->counts[d]) + "," +
                          num(b.distances->fraction(d)));
    }
    out.push_back(std::move(dist));
  }

  Curve clus{"clustering_by_degree", "degree,clustering", {}};
  for (const auto& [k, c] : b.clustering.by_degree) {
    clus.rows.push_back(num(std::uint64_t{k}) + "," + num(c));
  }
  out.push_back(std::move(clus));

  Curve rc{"rich_club", "rank,rank_fraction,phi", {}};
  for (const auto& point : b.rich_club) {
    rc.rows.push_back(num(std::uint64_t{point.rank}) + "," + num(point.fraction) + "," +
                      num(point.phi));
  }
  out.push_back(std::move(rc));

  if (b.betweenness) {
    Curve bt{"node_betweenness", "node,degree,betweenness,normalized_betweenness", {}};
    std::vector<std::size_t> degree(b.betweenness->node.size(), 0);
    for (const auto& [x, y] : b.betweenness->edges) {
      ++degree[x];
      ++degree[y];
    }
    for (std::size_t v = 0; v < b.betweenness->node.size(); ++v) {
      bt.rows.push_back(num(std::uint64_t{v}) + "," + num(std::uint64_t{degree[v]}) + "," +
                        num(b.betweenness->node[v]) + "," +
                        num(b.betweenness->normalized_node(v)));
    }
    out.push_back(std::move(bt));
  }
  return out;
}

}  // namespace

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "# nodes: " << g.node_count() << '\n';
  out << "# edges: " << g.edge_count() << '\n';
  for (const auto& [a, b] : g.edges()) out << a << ' ' << b << '\n';
}

void write_edge_list(const std::filesystem::path& path, const Graph& g) {
  auto out = open_output(path);
  write_edge_list(out, g);
  if (!out) throw Error("failed writing " + path.string());
}

Graph read_edge_list(std::istream& in, const ReadOptions& options) {
  struct Entry {
    std::uint64_t a;
    std::uint64_t b;
    std::size_t line;
  };
  std::vector<Entry> entries;
  std::optional<std::uint64_t> declared;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string_view text = trim(line);
    if (text.empty()) continue;
    if (text.front() == '#') {
      const std::string_view body = trim(text.substr(1));
      constexpr std::string_view kNodes = "nodes:";
      if (body.starts_with(kNodes)) {
        std::uint64_t n = 0;
        if (!parse_u64(trim(body.substr(kNodes.size())), n)) {
          throw ParseError(number, "malformed node-count header");
        }
        declared = n;
      }
      continue;
    }
    const auto split = text.find_first_of(" \t");
    if (split == std::string_view::npos) {
      throw ParseError(number, "expected two node ids, got '" + std::string(text) + "'");
    }
    Entry e{0, 0, number};
    if (!parse_u64(text.substr(0, split), e.a) || !parse_u64(trim(text.substr(split)), e.b)) {
      throw ParseError(number, "expected two non-negative integers, got '" +
                                   std::string(text) + "'");
    }
    if (e.a == e.b) throw ParseError(number, "self-loop on node " + std::to_string(e.a));
    entries.push_back(e);
  }

  std::map<std::uint64_t, NodeId> ids;
  if (options.relabel) {
    for (const Entry& e : entries) {
      ids.emplace(e.a, 0);
      ids.emplace(e.b, 0);
    }
    NodeId next = 0;
    for (auto& [raw, id] : ids) id = next++;
  }
  std::uint64_t n = declared.value_or(0);
  if (options.relabel) {
    n = std::max<std::uint64_t>(n, ids.size());
  } else if (!declared) {
    for (const Entry& e : entries) n = std::max({n, e.a + 1, e.b + 1});
  }
  if (n > std::numeric_limits<NodeId>::max()) {
    throw ParseError(number, "node count " + std::to_string(n) + " is too large");
  }

  Graph g(static_cast<std::size_t>(n));
  for (const Entry& e : entries) {
    std::uint64_t a = e.a;
    std::uint64_t b = e.b;
    if (options.relabel) {
      a = ids.at(a);
      b = ids.at(b);
    }
    if (a >= n || b >= n) {
      throw ParseError(e.line, "node id beyond declared node count " + std::to_string(n));
    }
    if (!g.add_edge(static_cast<NodeId>(a), static_cast<NodeId>(b))) {
      throw ParseError(e.line, "duplicate edge " + std::to_string(e.a) + " " +
                                   std::to_string(e.b));
    }
  }
  return g;
}

Graph read_edge_list(const std::filesystem::path& path, const ReadOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  try {
    return read_edge_list(in, options);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.detail(), path.string());
  }
}

ReportFormat parse_report_format(std::string_view name) {
  if (name == "text") return ReportFormat::kText;
  if (name == "structured" || name == "json") return ReportFormat::kStructured;
  throw InvalidParameter("unknown report format '" + std::string(name) +
                         "' (expected text or structured)");
}

std::string format_report(const MetricsReport& report) {
  std::string out;
  for (const Field& f : kFields) {
    out += f.key;
    out += " = ";
    out += f.get(report);
    out += '\n';
  }
  return out;
}

std::string format_report_json(const MetricsReport& report) {
  nlohmann::ordered_json j;
  const auto opt = [](const std::optional<double>& v) -> nlohmann::json {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  };
  j["nodes"] = report.n;
  j["edges"] = report.edge_count;
  j["avg_degree"] = report.avg_degree;
  j["max_degree"] = report.max_degree;
  j["degree_exponent"] = opt(report.degree_exponent);
  j["degree_fit_r"] = opt(report.degree_fit_r);
  j["avg_distance"] = opt(report.avg_distance);
  j["normalized_avg_node_betweenness"] = opt(report.normalized_avg_node_betweenness);
  j["normalized_avg_edge_betweenness"] = opt(report.normalized_avg_edge_betweenness);
  j["avg_clustering"] = report.avg_clustering;
  j["rich_club_exponent"] = opt(report.rich_club_exponent);
  return j.dump(2) + "\n";
}

std::string format_report(const MetricsReport& report, ReportFormat format) {
  return format == ReportFormat::kText ? format_report(report) : format_report_json(report);
}

MetricsReport parse_report(std::string_view text) {
  MetricsReport report;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto end = text.find('\n');
    const std::string_view line = trim(text.substr(0, end));
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(number, "expected 'key = value'");
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    const auto field = std::find_if(std::begin(kFields), std::end(kFields),
                                    [&](const Field& f) { return key == f.key; });
    if (field == std::end(kFields)) {
      throw ParseError(number, "unknown key '" + std::string(key) + "'");
    }
    std::optional<double> parsed;
    if (value != "NA") {
      double v = 0.0;
      const auto res = std::from_chars(value.data(), value.data() + value.size(), v);
      if (res.ec != std::errc{} || res.ptr != value.data() + value.size()) {
        throw ParseError(number, "bad number '" + std::string(value) + "'");
      }
      parsed = v;
    }
    field->set(report, parsed);
  }
  return report;
}

std::string format_trace(const EvolutionTrace& t) {
  std::ostringstream out;
  out << "events = " << t.events << '\n'
      << "add_links_events = " << t.add_links_events << '\n'
      << "rewire_events = " << t.rewire_events << '\n'
      << "add_node_events = " << t.add_node_events << '\n'
      << "links_added = " << t.links_added << '\n'
      << "links_skipped = " << t.links_skipped << '\n'
      << "rewires_applied = " << t.rewires_applied << '\n'
      << "rewires_skipped = " << t.rewires_skipped << '\n'
      << "node_links_added = " << t.node_links_added << '\n'
      << "node_links_missing = " << t.node_links_missing << '\n'
      << "isolated_repaired = " << t.isolated_repaired << '\n'
      << "max_clamped_fraction = " << num(t.max_clamped_fraction) << '\n'
      << "clamp_warning = " << (t.clamp_warning ? "true" : "false") << '\n';
  return out.str();
}

std::string format_comparison(const std::vector<std::string>& labels,
                              const std::vector<MetricsReport>& reports) {
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"metric"});
  for (const auto& label : labels) cells.back().push_back(label);
  for (const Field& f : kFields) {
    cells.push_back({f.key});
    for (const auto& r : reports) cells.back().push_back(f.get(r));
  }
  std::vector<std::size_t> width(labels.size() + 1, 0);
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out += row[c];
      if (c + 1 < row.size()) out += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out += '\n';
  }
  return out;
}

void write_curves(const std::filesystem::path& dir, const MetricsBundle& bundle) {
  std::filesystem::create_directories(dir);
  for (const Curve& c : curves(bundle)) {
    std::string text = c.header + "\n";
    for (const auto& row : c.rows) text += row + "\n";
    write_text(dir / (c.name + ".csv"), text);
  }
}

void write_overlaid_curves(const std::filesystem::path& dir,
                           const std::vector<std::string>& labels,
                           const std::vector<MetricsBundle>& bundles) {
  std::filesystem::create_directories(dir);
  std::map<std::string, std::string> files;
  for (std::size_t i = 0; i < bundles.size(); ++i) {
    for (const Curve& c : curves(bundles[i])) {
      auto& text = files[c.name];
      if (text.empty()) text = "graph," + c.header + "\n";
      for (const auto& row : c.rows) text += labels[i] + "," + row + "\n";
    }
  }
  for (const auto& [name, text] : files) write_text(dir / (name + ".csv"), text);
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  auto out = open_output(path);
  out << text;
  if (!out) throw Error("failed writing " + path.string());
}

}  // namespace astopo::io
