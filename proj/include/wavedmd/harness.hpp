#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wavedmd/assignment.hpp"
#include "wavedmd/dmd.hpp"
#include "wavedmd/fft.hpp"
#include "wavedmd/graph.hpp"
#include "wavedmd/spectral.hpp"
#include "wavedmd/wave.hpp"

namespace wavedmd {

enum class Method { dmd, fft, spectral };

std::string_view to_string(Method m);
Method parse_method(std::string_view text);

/// "kind" or "kind:key=value,key=value". Kinds: karate, line, ring, planted.
struct GeneratorSpec {
  std::string kind;
  std::map<std::string, std::string> params;
};

GeneratorSpec parse_generator_spec(std::string_view text);

/// Exactly one of `file` and `generator` is set.
struct GraphSource {
  std::optional<std::string> file;
  ParseOptions parse;
  std::optional<GeneratorSpec> generator;
};

struct LoadedGraph {
  Graph graph;
  std::string name;
  /// Ground-truth blocks when the generator plants them.
  std::optional<std::vector<int>> planted_labels;
};

LoadedGraph load_graph(const GraphSource& source);
LoadedGraph make_generated_graph(const GeneratorSpec& spec);

struct ExperimentConfig {
  GraphSource source;
  double c = kDefaultWaveSpeed;
  Index t_max = 200;
  Index k_rows = 0;  ///< 0: min(2N, t_max / 2)
  Index m_cols = 0;  ///< 0: t_max - k_rows
  Method method = Method::dmd;
  int k = 2;  ///< 0: spectral-gap estimate
  int max_k = 10;
  AssignmentMethod cluster_method = AssignmentMethod::signs;
  std::uint64_t seed = 0;
  double threshold = kDefaultFftThreshold;
  int workers = 1;
  /// The centralized reference is skipped above this many nodes.
  Index oracle_limit = 10000;
  LocalSpectrumOptions dmd;

  void validate() const;
};

struct EmbeddingShape {
  Index k_rows = 0;
  Index m_cols = 0;
};

EmbeddingShape resolve_embedding(Index n, Index t_max, Index k_rows = 0, Index m_cols = 0);

/// Per-node DMD spectra of the first `shape.k_rows + shape.m_cols` samples.
/// Nodes whose decomposition fails get an empty spectrum and are listed in
/// `failed`.
std::vector<LocalSpectrum> dmd_spectra(const TraceMatrix& trace, EmbeddingShape shape, double c,
                                       const LocalSpectrumOptions& opts, int workers,
                                       std::vector<Index>* failed = nullptr);

/// Per-node FFT spectra of samples [first, first + length).
std::vector<FftSpectrum> fft_spectra(const TraceMatrix& trace, Index first, Index length, double threshold,
                                     int workers);

/// Real parts of the first k-1 oscillatory amplitudes of every node, N x (k-1).
/// Missing modes read as 0 and the node is added to `short_nodes`.
Eigen::MatrixXd dmd_coefficient_rows(const std::vector<LocalSpectrum>& spectra, int k,
                                     std::vector<Index>* short_nodes = nullptr);
Eigen::MatrixXd fft_coefficient_rows(const std::vector<FftSpectrum>& spectra, int k,
                                     std::vector<Index>* short_nodes = nullptr);

/// Sign encoding or k-means on coefficient rows.
ClusterAssignment assign_from_rows(const Eigen::MatrixXd& rows, int k, AssignmentMethod method,
                                   AssignmentSource source, std::uint64_t seed);

struct ClusterReport {
  std::string graph_name;
  Index num_nodes = 0;
  Method method = Method::dmd;
  double c = kDefaultWaveSpeed;
  Index t_max = 0;
  EmbeddingShape embedding;
  int k = 2;
  bool k_estimated = false;
  ClusterAssignment assignment;
  std::optional<ClusterAssignment> reference;
  std::optional<double> agreement;
  std::optional<double> planted_agreement;
  /// Nodes whose spectrum was missing or too short for k clusters.
  std::vector<Index> degraded_nodes;
  double seconds = 0.0;
};

/// graph -> propagate -> per-node spectrum -> labels, plus the agreement with
/// the centralized spectral reference when the graph is small enough.
ClusterReport run_cluster(const ExperimentConfig& cfg);
ClusterReport run_cluster(const LoadedGraph& graph, const ExperimentConfig& cfg);

struct TmaxGrid {
  enum class Kind { powers_of_two, arithmetic };
  Kind kind = Kind::powers_of_two;
  Index start = 64;
  Index step = 100;
  Index max = 16384;

  std::vector<Index> points() const;
};

struct GridPoint {
  Index t_max = 0;
  double agreement = 0.0;
};

struct MinTmaxResult {
  Method method = Method::dmd;
  TmaxGrid grid;
  std::optional<Index> minimum;
  std::vector<GridPoint> scanned;
  /// Grid points after the first success where agreement drops below 1.
  std::vector<Index> monotonicity_violations;

  /// "50", or "> 16384" when nothing succeeds.
  std::string describe() const;
};

/// Ascending scan for the first grid point whose assignment agrees exactly
/// with the spectral reference. With scan_full the remainder of the grid is
/// evaluated too and drops are recorded as monotonicity violations.
MinTmaxResult run_min_tmax_search(const LoadedGraph& graph, const ExperimentConfig& cfg, Method method,
                                  const TmaxGrid& grid, bool scan_full = false);

struct ErrorSweepRow {
  Index t_max = 0;
  Method method = Method::dmd;
  double mean_rel_err = 0.0;  ///< NaN when no node produced an estimate
  Index nodes_used = 0;
  std::string note;
};

/// Mean over nodes of |omega2_hat - omega2| / omega2, omega2 taken from the
/// eigenvalues of the wave propagator.
std::vector<ErrorSweepRow> run_error_sweep(const LoadedGraph& graph, const ExperimentConfig& cfg,
                                           const std::vector<Index>& t_grid);

struct ComparisonReport {
  std::string graph_name;
  std::vector<MinTmaxResult> searches;
  std::vector<ErrorSweepRow> sweep;
  double seconds = 0.0;
};

struct AdaptiveResult {
  Index t_max = 0;
  int rounds = 0;
  bool converged = false;
  std::vector<LocalSpectrum> spectra;
};

/// Doubles t_max from t_start until the `num_freqs` lowest non-zero
/// frequencies move by less than tol at every node, or t_limit is reached.
AdaptiveResult adaptive_dmd(const Graph& g, const ExperimentConfig& cfg, int num_freqs, Index t_start,
                            Index t_limit, double tol = 1e-6);

// -- reports -----------------------------------------------------------------

/// Runtimes are left out unless asked for, so reports are reproducible byte for byte.
std::string report_json(const ClusterReport& report, bool include_timing = false);
std::string report_json(const MinTmaxResult& result);
std::string report_json(const ComparisonReport& report, bool include_timing = false);
void write_error_sweep_csv(std::ostream& out, const std::vector<ErrorSweepRow>& rows);
/// One whitespace-separated block per method, blocks separated by two blank
/// lines (gnuplot `index`).
void write_error_sweep_gnuplot(std::ostream& out, const std::vector<ErrorSweepRow>& rows);

}  // namespace wavedmd
