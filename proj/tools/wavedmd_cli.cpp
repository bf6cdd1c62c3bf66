// wavedmd: wave-equation clustering from per-node DMD spectra.
//
// Exit codes: 0 success, 1 usage or input error, 2 numerical failure,
// 3 disagreement with the spectral reference under --verify.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wavedmd/clustering.hpp"
#include "wavedmd/errors.hpp"
#include "wavedmd/harness.hpp"
#include "wavedmd/io.hpp"
#include "wavedmd/laplacian.hpp"
#include "wavedmd/parallel.hpp"

using namespace wavedmd;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitDisagreement = 3;

// Graphs above this size need --large for anything but the spectral method.
constexpr Index kLargeGraphNodes = 2000;

struct CommonOptions {
  std::string graph_file;
  std::string generator;
  bool one_based = false;
  double default_weight = 1.0;
  double c = kDefaultWaveSpeed;
  std::uint64_t seed = 0;
  int workers = 1;
  double rank_tol = 1e-10;
  bool large = false;
};

void add_common(CLI::App& cmd, CommonOptions& o) {
  auto* file = cmd.add_option("-g,--graph", o.graph_file, "Edge list: 'i j' or 'i j w' per line");
  auto* gen = cmd.add_option("--generator", o.generator,
                             "karate | line[:n=,weak=,strong_w=,weak_w=] | ring[:n=,w=] | "
                             "planted[:blocks=,size=,p_in=,p_out=,seed=,...] | random[:n=,p=,seed=]");
  file->excludes(gen);
  cmd.add_flag("--one-based", o.one_based, "Node ids in the edge list start at 1");
  cmd.add_option("--default-weight", o.default_weight, "Weight for two-column lines")->check(CLI::PositiveNumber);
  cmd.add_option("-c,--c", o.c, "Wave speed, 0 < c < sqrt(2)")->capture_default_str();
  cmd.add_option("--seed", o.seed, "Seed for u(0) and k-means")->capture_default_str();
  cmd.add_option("--workers", o.workers, "Worker threads (default: WAVEDMD_WORKERS or hardware)")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--rank-tol", o.rank_tol, "DMD singular value cut relative to sigma_max")->capture_default_str();
  cmd.add_flag("--large", o.large, "Allow DMD/FFT runs on graphs above " + std::to_string(kLargeGraphNodes) + " nodes");
}

ExperimentConfig base_config(const CommonOptions& o) {
  ExperimentConfig cfg;
  if (!o.graph_file.empty()) {
    cfg.source.file = o.graph_file;
    cfg.source.parse = {o.one_based, o.default_weight};
  } else if (!o.generator.empty()) {
    cfg.source.generator = parse_generator_spec(o.generator);
  } else {
    throw InputError("give a graph with --graph or --generator");
  }
  cfg.c = o.c;
  cfg.seed = o.seed;
  cfg.workers = o.workers;
  cfg.dmd.dmd.rank_tol = o.rank_tol;
  return cfg;
}

void check_size(const LoadedGraph& g, const CommonOptions& o, Method method) {
  if (method != Method::spectral && g.graph.num_nodes() > kLargeGraphNodes && !o.large) {
    throw InputError(std::to_string(g.graph.num_nodes()) + " nodes: pass --large for wave-based runs at this size");
  }
}

// "-" or empty writes to stdout.
void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

template <typename Writer>
std::string render(Writer&& write) {
  std::ostringstream out;
  write(out);
  return out.str();
}

AssignmentMethod parse_assignment(const std::string& text) {
  return text == "kmeans" ? AssignmentMethod::kmeans : AssignmentMethod::signs;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decentralized graph clustering with the wave equation and delay-embedded DMD"};
  app.set_config("--config", "", "TOML/INI file with option values");
  app.require_subcommand(1);

  CommonOptions common;
  common.workers = default_workers();

  // cluster
  auto* cluster = app.add_subcommand("cluster", "Cluster a graph and compare with the spectral reference");
  add_common(*cluster, common);
  Index t_max = 200;
  Index k_rows = 0;
  Index m_cols = 0;
  std::string method = "dmd";
  int k = 2;
  int max_k = 10;
  std::string assign = "signs";
  double threshold = kDefaultFftThreshold;
  Index oracle_limit = 10000;
  std::string out_csv;
  std::string json_path;
  bool verify = false;
  bool timings = false;
  cluster->add_option("-T,--tmax", t_max, "Samples per node")->capture_default_str();
  cluster->add_option("-K,--k-rows", k_rows, "Embedding rows (default min(2N, T/2))");
  cluster->add_option("-M,--m-cols", m_cols, "Embedding columns (default T - K)");
  cluster->add_option("--method", method, "dmd | fft | spectral")
      ->check(CLI::IsMember({"dmd", "fft", "spectral"}))
      ->capture_default_str();
  cluster->add_option("-k,--k", k, "Number of clusters, 0 = spectral-gap estimate")->capture_default_str();
  cluster->add_option("--max-k", max_k, "Upper bound for the estimate")->capture_default_str();
  cluster->add_option("--cluster-method", assign, "signs | kmeans")
      ->check(CLI::IsMember({"signs", "kmeans"}))
      ->capture_default_str();
  cluster->add_option("--threshold", threshold, "FFT magnitude threshold")->capture_default_str();
  cluster->add_option("--oracle-limit", oracle_limit, "Skip the spectral reference above this many nodes");
  cluster->add_option("-o,--out", out_csv, "Assignment CSV (node,label)");
  cluster->add_option("--json", json_path, "Report JSON ('-' for stdout)");
  cluster->add_flag("--verify", verify, "Exit 3 unless agreement with the spectral reference is 1");
  cluster->add_flag("--timings", timings, "Include runtimes in the JSON report");

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "Per-node frequencies and amplitudes as JSON lines");
  add_common(*spectrum, common);
  Index spec_tmax = 200;
  std::vector<Index> nodes;
  std::string spec_method = "dmd";
  bool adaptive = false;
  int adaptive_freqs = 2;
  Index adaptive_limit = 16384;
  std::string spec_out;
  spectrum->add_option("-T,--tmax", spec_tmax, "Samples per node (start value with --adaptive)")->capture_default_str();
  spectrum->add_option("-K,--k-rows", k_rows, "Embedding rows");
  spectrum->add_option("-M,--m-cols", m_cols, "Embedding columns");
  spectrum->add_option("--node", nodes, "Nodes to report (default all)");
  spectrum->add_option("--method", spec_method, "dmd | fft")->check(CLI::IsMember({"dmd", "fft"}));
  spectrum->add_option("--threshold", threshold, "FFT magnitude threshold");
  spectrum->add_flag("--adaptive", adaptive, "Double T_max until the lowest frequencies settle");
  spectrum->add_option("--freqs", adaptive_freqs, "Frequencies tracked by --adaptive")->capture_default_str();
  spectrum->add_option("--tmax-limit", adaptive_limit, "Upper bound for --adaptive")->capture_default_str();
  spectrum->add_option("-o,--out", spec_out, "Output file (default stdout)");

  // min-tmax
  auto* min_tmax = app.add_subcommand("min-tmax", "Smallest T_max that reproduces the spectral assignment");
  add_common(*min_tmax, common);
  std::string search_methods = "both";
  std::string grid_kind = "pow2";
  TmaxGrid grid;
  bool scan_full = false;
  int search_k = 2;
  std::string search_json;
  min_tmax->add_option("--method", search_methods, "dmd | fft | both")
      ->check(CLI::IsMember({"dmd", "fft", "both"}))
      ->capture_default_str();
  min_tmax->add_option("--grid", grid_kind, "pow2 | step")->check(CLI::IsMember({"pow2", "step"}))->capture_default_str();
  min_tmax->add_option("--grid-start", grid.start, "First grid point")->capture_default_str();
  min_tmax->add_option("--grid-step", grid.step, "Step for --grid step")->capture_default_str();
  min_tmax->add_option("--grid-max", grid.max, "Last grid point")->capture_default_str();
  min_tmax->add_option("-k,--k", search_k, "Number of clusters, 0 = spectral-gap estimate")->capture_default_str();
  min_tmax->add_option("--cluster-method", assign, "signs | kmeans")->check(CLI::IsMember({"signs", "kmeans"}));
  min_tmax->add_option("--threshold", threshold, "FFT magnitude threshold");
  min_tmax->add_flag("--scan-full", scan_full, "Scan the whole grid and report monotonicity violations");
  min_tmax->add_option("--json", search_json, "Report JSON (default stdout)");
  min_tmax->add_flag("--timings", timings, "Include runtimes in the JSON report");

  // error-sweep
  auto* sweep = app.add_subcommand("error-sweep", "Mean relative omega_2 error of DMD and FFT per T_max");
  add_common(*sweep, common);
  std::vector<Index> t_grid{64, 128, 256, 512, 1024};
  std::string sweep_csv;
  std::string sweep_gnuplot;
  sweep->add_option("--tgrid", t_grid, "Ascending T_max values")->delimiter(',')->capture_default_str();
  sweep->add_option("-K,--k-rows", k_rows, "Embedding rows");
  sweep->add_option("-M,--m-cols", m_cols, "Embedding columns");
  sweep->add_option("--threshold", threshold, "FFT magnitude threshold");
  sweep->add_option("--csv", sweep_csv, "CSV output (default stdout)");
  sweep->add_option("--gnuplot", sweep_gnuplot, "gnuplot data file, one block per method");

  // generate
  auto* generate = app.add_subcommand("generate", "Write a generated graph as an edge list");
  std::string gen_spec;
  std::string gen_out;
  std::string gen_labels;
  generate->add_option("--generator", gen_spec, "Generator spec, as for the other commands")->required();
  generate->add_option("-o,--out", gen_out, "Edge list file (default stdout)");
  generate->add_option("--labels", gen_labels, "Planted labels CSV (planted generator only)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*generate) {
      const LoadedGraph g = make_generated_graph(parse_generator_spec(gen_spec));
      emit(gen_out, serialize_edge_list(g.graph));
      if (!gen_labels.empty()) {
        if (!g.planted_labels) throw InputError("--labels needs the planted generator");
        ClusterAssignment a;
        a.labels = *g.planted_labels;
        emit(gen_labels, render([&](std::ostream& out) { write_assignment_csv(out, a); }));
      }
      return 0;
    }

    ExperimentConfig cfg = base_config(common);
    cfg.k_rows = k_rows;
    cfg.m_cols = m_cols;
    cfg.threshold = threshold;
    cfg.cluster_method = parse_assignment(assign);
    const LoadedGraph graph = load_graph(cfg.source);

    if (*cluster) {
      cfg.t_max = t_max;
      cfg.method = parse_method(method);
      cfg.k = k;
      cfg.max_k = max_k;
      cfg.oracle_limit = oracle_limit;
      cfg.validate();
      check_size(graph, common, cfg.method);
      const ClusterReport report = run_cluster(graph, cfg);
      if (!out_csv.empty()) emit(out_csv, render([&](std::ostream& o) { write_assignment_csv(o, report.assignment); }));
      if (!json_path.empty()) emit(json_path, report_json(report, timings));
      std::fprintf(stderr, "%s: %lld nodes, %s, k=%d%s, agreement %s\n", report.graph_name.c_str(),
                   static_cast<long long>(report.num_nodes), std::string(to_string(report.method)).c_str(), report.k,
                   report.k_estimated ? " (estimated)" : "",
                   report.agreement ? std::to_string(*report.agreement).c_str() : "n/a");
      if (!report.degraded_nodes.empty()) {
        std::fprintf(stderr, "%zu nodes degraded (missing modes)\n", report.degraded_nodes.size());
      }
      if (verify && !(report.agreement && *report.agreement == 1.0)) return kExitDisagreement;
      return 0;
    }

    if (*spectrum) {
      cfg.t_max = spec_tmax;
      cfg.validate();
      check_size(graph, common, parse_method(spec_method));
      const Laplacian lap = build_laplacian(graph.graph);
      for (Index i : nodes) {
        if (i < 0 || i >= lap.size()) throw InputError("node " + std::to_string(i) + " out of range");
      }
      if (nodes.empty()) {
        for (Index i = 0; i < lap.size(); ++i) nodes.push_back(i);
      }
      std::ostringstream out;
      if (spec_method == "dmd") {
        std::vector<LocalSpectrum> spectra;
        if (adaptive) {
          const AdaptiveResult r = adaptive_dmd(graph.graph, cfg, adaptive_freqs, spec_tmax, adaptive_limit);
          std::fprintf(stderr, "adaptive: T_max=%lld after %d rounds%s\n", static_cast<long long>(r.t_max), r.rounds,
                       r.converged ? "" : " (not converged)");
          spectra = r.spectra;
        } else {
          const EmbeddingShape shape = resolve_embedding(lap.size(), spec_tmax, k_rows, m_cols);
          WaveConfig w{cfg.c, spec_tmax, RandomInit{cfg.seed}, cfg.workers};
          spectra = dmd_spectra(propagate(lap, w), shape, cfg.c, cfg.dmd, cfg.workers);
        }
        for (Index i : nodes) out << spectrum_json(spectra[static_cast<std::size_t>(i)]) << '\n';
      } else {
        WaveConfig w{cfg.c, spec_tmax + 1, RandomInit{cfg.seed}, cfg.workers};
        const auto spectra = fft_spectra(propagate(lap, w), 1, spec_tmax, cfg.threshold, cfg.workers);
        for (Index i : nodes) out << spectrum_json(spectra[static_cast<std::size_t>(i)], cfg.c) << '\n';
      }
      emit(spec_out, out.str());
      return 0;
    }

    if (*min_tmax) {
      cfg.k = search_k;
      cfg.validate();
      grid.kind = grid_kind == "pow2" ? TmaxGrid::Kind::powers_of_two : TmaxGrid::Kind::arithmetic;
      ComparisonReport report;
      report.graph_name = graph.name;
      const auto start = std::chrono::steady_clock::now();
      for (Method m : {Method::dmd, Method::fft}) {
        if (search_methods != "both" && search_methods != to_string(m)) continue;
        check_size(graph, common, m);
        report.searches.push_back(run_min_tmax_search(graph, cfg, m, grid, scan_full));
        std::fprintf(stderr, "%s: minimum T_max %s\n", std::string(to_string(m)).c_str(),
                     report.searches.back().describe().c_str());
      }
      report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      emit(search_json, report_json(report, timings));
      return 0;
    }

    if (*sweep) {
      cfg.validate();
      check_size(graph, common, Method::dmd);
      const auto rows = run_error_sweep(graph, cfg, t_grid);
      emit(sweep_csv, render([&](std::ostream& o) { write_error_sweep_csv(o, rows); }));
      if (!sweep_gnuplot.empty()) emit(sweep_gnuplot, render([&](std::ostream& o) { write_error_sweep_gnuplot(o, rows); }));
      return 0;
    }
  } catch (const NumericalError& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return kExitNumerical;
  } catch (const ParseError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kExitUsage;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return 0;
}
