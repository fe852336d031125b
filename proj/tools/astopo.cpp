// Command-line front end: generate, analyze, compare, theory, experiment.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "astopo/error.hpp"
#include "astopo/evolve.hpp"
#include "astopo/experiment.hpp"
#include "astopo/io.hpp"
#include "astopo/metrics.hpp"
#include "astopo/theory.hpp"

namespace fs = std::filesystem;
using namespace astopo;

namespace {

std::optional<bool> parse_path_metrics(const std::string& mode) {
  if (mode == "auto") return std::nullopt;
  if (mode == "on") return true;
  if (mode == "off") return false;
  throw InvalidParameter("--path-metrics must be auto, on or off");
}

std::string report_file(io::ReportFormat format) {
  return format == io::ReportFormat::kText ? "report.txt" : "report.json";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scale-free topology generator and AS-graph metrics toolkit"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Evolve a graph and report its metrics");
  std::string model = "ours";
  ModelParams params;
  std::size_t target_n = 0;
  std::uint64_t seed = 1;
  std::string out_dir;
  std::string format = "text";
  std::string path_mode = "auto";
  gen->add_option("--model", model, "ours, ba or eba")->capture_default_str();
  gen->add_option("--p", params.p, "link-addition probability")->capture_default_str();
  gen->add_option("--q", params.q, "rewiring probability")->capture_default_str();
  gen->add_option("--eps", params.eps, "attachment offset")->capture_default_str();
  gen->add_option("--m", params.m, "links per event")->capture_default_str();
  gen->add_option("--m0", params.m0, "initial clique size")->capture_default_str();
  gen->add_option("--n", target_n, "target node count")->required();
  gen->add_option("--seed", seed, "RNG seed")->capture_default_str();
  gen->add_option("--out", out_dir, "directory for edge list, report and curves");
  gen->add_option("--format", format, "text or structured")->capture_default_str();
  gen->add_option("--path-metrics", path_mode, "auto, on or off")->capture_default_str();

  // analyze
  auto* ana = app.add_subcommand("analyze", "Report metrics of an edge-list file");
  std::string input;
  bool relabel = false;
  ana->add_option("file", input, "edge list")->required();
  ana->add_option("--out", out_dir, "directory for report and curves");
  ana->add_option("--format", format, "text or structured")->capture_default_str();
  ana->add_option("--path-metrics", path_mode, "auto, on or off")->capture_default_str();
  ana->add_flag("--relabel", relabel, "map sparse node ids onto 0..n-1");

  // compare
  auto* cmp = app.add_subcommand("compare", "Side-by-side metrics of several edge lists");
  std::vector<std::string> inputs;
  cmp->add_option("files", inputs, "edge lists")->required()->expected(2, -1);
  cmp->add_option("--out", out_dir, "directory for overlaid curves");
  cmp->add_option("--path-metrics", path_mode, "auto, on or off")->capture_default_str();
  cmp->add_flag("--relabel", relabel, "map sparse node ids onto 0..n-1");

  // theory
  auto* th = app.add_subcommand("theory", "Continuum-theory predictions");
  theory::TheoryParams tp;
  th->add_option("--p", tp.p)->capture_default_str();
  th->add_option("--q", tp.q)->capture_default_str();
  th->add_option("--m", tp.m)->capture_default_str();
  th->add_option("--eps", tp.eps)->capture_default_str();

  // experiment
  auto* exp = app.add_subcommand("experiment", "Run a named replicated experiment");
  std::string name;
  ExperimentOptions exp_options;
  exp->add_option("name", name, "table5, section61 or table6")->required();
  exp->add_option("--seed", exp_options.base_seed, "base seed")->capture_default_str();
  exp->add_option("--replicates", exp_options.replicates)->capture_default_str();
  exp->add_option("--table5-m", exp_options.table5_m, "links per event for table5")
      ->capture_default_str();
  exp->add_option("--out", out_dir, "directory for per-replicate CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (gen->parsed()) {
      params.model = parse_model(model);
      const auto report_format = io::parse_report_format(format);
      MetricsOptions options{.path_metrics = parse_path_metrics(path_mode)};
      Rng rng(seed);
      EvolutionTrace trace;
      const Graph g = evolve(params, target_n, rng, &trace);
      const MetricsBundle bundle = analyze(g, options);
      const std::string text = io::format_report(bundle.report, report_format);
      if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        io::write_edge_list(fs::path(out_dir) / "edges.txt", g);
        io::write_text(fs::path(out_dir) / report_file(report_format), text);
        io::write_text(fs::path(out_dir) / "trace.txt", io::format_trace(trace));
        io::write_curves(out_dir, bundle);
      }
      if (trace.clamp_warning) {
        std::cerr << "warning: up to " << trace.max_clamped_fraction * 100.0
                  << "% of nodes had negative attachment weight (above "
                  << kClampWarningFraction * 100.0 << "%)\n";
      }
      std::cout << text;
    } else if (ana->parsed()) {
      const auto report_format = io::parse_report_format(format);
      MetricsOptions options{.path_metrics = parse_path_metrics(path_mode)};
      const Graph g = io::read_edge_list(input, {.relabel = relabel});
      const MetricsBundle bundle = analyze(g, options);
      const std::string text = io::format_report(bundle.report, report_format);
      if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        io::write_text(fs::path(out_dir) / report_file(report_format), text);
        io::write_curves(out_dir, bundle);
      }
      std::cout << text;
    } else if (cmp->parsed()) {
      MetricsOptions options{.path_metrics = parse_path_metrics(path_mode)};
      std::vector<std::string> labels;
      std::vector<MetricsBundle> bundles;
      std::vector<MetricsReport> reports;
      for (const auto& file : inputs) {
        labels.push_back(fs::path(file).stem().string());
        bundles.push_back(analyze(io::read_edge_list(file, {.relabel = relabel}), options));
        reports.push_back(bundles.back().report);
      }
      if (!out_dir.empty()) io::write_overlaid_curves(out_dir, labels, bundles);
      std::cout << io::format_comparison(labels, reports);
    } else if (th->parsed()) {
      tp.validate();
      std::cout << "gamma_ours = " << theory::gamma_ours(tp.q, tp.eps) << '\n'
                << "gamma_eba = " << theory::gamma_eba(tp.p, tp.q, tp.m) << '\n'
                << "expected_avg_degree = " << theory::expected_avg_degree(tp.p, tp.q, tp.m)
                << '\n'
                << "A = " << tp.a() << '\n'
                << "B = " << tp.b() << '\n'
                << "E = " << tp.e() << '\n';
    } else if (exp->parsed()) {
      const ExperimentReport report = run_experiment(name, exp_options);
      if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        io::write_text(fs::path(out_dir) / (name + "_replicates.csv"),
                       format_experiment_csv(report));
        io::write_text(fs::path(out_dir) / (name + ".txt"), format_experiment(report));
      }
      std::cout << format_experiment(report);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
