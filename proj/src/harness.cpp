#include "wavedmd/harness.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include <json.hpp>

#include "wavedmd/clustering.hpp"
#include "wavedmd/errors.hpp"
#include "wavedmd/laplacian.hpp"
#include "wavedmd/parallel.hpp"

namespace wavedmd {

using ojson = nlohmann::ordered_json;

std::string_view to_string(Method m) {
  switch (m) {
    case Method::dmd: return "dmd";
    case Method::fft: return "fft";
    case Method::spectral: return "spectral";
  }
  return "unknown";
}

Method parse_method(std::string_view text) {
  if (text == "dmd") return Method::dmd;
  if (text == "fft") return Method::fft;
  if (text == "spectral") return Method::spectral;
  throw InputError("unknown method '" + std::string(text) + "' (dmd, fft, spectral)");
}

// -- graph sources -------------------------------------------------------------

GeneratorSpec parse_generator_spec(std::string_view text) {
  GeneratorSpec spec;
  const auto colon = text.find(':');
  spec.kind = std::string(text.substr(0, colon));
  if (spec.kind.empty()) throw InputError("empty generator kind");
  if (colon == std::string_view::npos) return spec;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const auto item = rest.substr(0, comma);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw InputError("generator parameter '" + std::string(item) + "' is not key=value");
    }
    spec.params[std::string(item.substr(0, eq))] = std::string(item.substr(eq + 1));
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
  }
  return spec;
}

namespace {

class ParamReader {
 public:
  explicit ParamReader(const GeneratorSpec& spec) : spec_(spec), unused_(spec.params) {}

  template <typename T>
  T get(const std::string& key, T fallback) {
    const auto it = unused_.find(key);
    if (it == unused_.end()) return fallback;
    T value{};
    const auto& s = it->second;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      throw InputError("generator parameter " + key + "=" + s + " is not a number");
    }
    unused_.erase(it);
    return value;
  }

  void finish() const {
    if (!unused_.empty()) {
      throw InputError("unknown parameter '" + unused_.begin()->first + "' for generator " + spec_.kind);
    }
  }

 private:
  const GeneratorSpec& spec_;
  std::map<std::string, std::string> unused_;
};

}  // namespace

LoadedGraph make_generated_graph(const GeneratorSpec& spec) {
  ParamReader p(spec);
  LoadedGraph out{Graph{}, spec.kind, std::nullopt};
  if (spec.kind == "karate") {
    out.graph = karate_club();
  } else if (spec.kind == "line") {
    const auto n = p.get<Index>("n", 50);
    const auto weak = p.get<Index>("weak", 25);
    const double strong_w = p.get("strong_w", 5.0);
    const double weak_w = p.get("weak_w", 1.0);
    out.graph = generate_weak_line(n, weak, strong_w, weak_w);
  } else if (spec.kind == "ring") {
    const auto n = p.get<Index>("n", 8);
    out.graph = generate_ring(n, p.get("w", 1.0));
  } else if (spec.kind == "planted") {
    PlantedPartitionSpec s;
    s.blocks = p.get("blocks", s.blocks);
    s.block_size = p.get("size", s.block_size);
    s.p_in = p.get("p_in", s.p_in);
    s.p_out = p.get("p_out", s.p_out);
    s.w_in.lo = p.get("w_in_lo", s.w_in.lo);
    s.w_in.hi = p.get("w_in_hi", s.w_in.hi);
    s.w_out.lo = p.get("w_out_lo", s.w_out.lo);
    s.w_out.hi = p.get("w_out_hi", s.w_out.hi);
    s.seed = p.get("seed", s.seed);
    auto planted = generate_planted_partition(s);
    out.graph = std::move(planted.graph);
    out.planted_labels = std::move(planted.labels);
  } else if (spec.kind == "random") {
    const auto n = p.get<Index>("n", 10);
    const double prob = p.get("p", 0.3);
    const double lo = p.get("w_lo", 0.5);
    const double hi = p.get("w_hi", 2.0);
    const auto seed = p.get<std::uint64_t>("seed", 0);
    out.graph = generate_random_connected(n, prob, lo, hi, seed);
  } else {
    throw InputError("unknown generator '" + spec.kind + "' (karate, line, ring, planted, random)");
  }
  p.finish();
  return out;
}

LoadedGraph load_graph(const GraphSource& source) {
  if (source.file.has_value() == source.generator.has_value()) {
    throw InputError("exactly one of a graph file and a generator must be given");
  }
  if (source.generator) return make_generated_graph(*source.generator);
  return {load_edge_list(*source.file, source.parse), *source.file, std::nullopt};
}

// -- config --------------------------------------------------------------------

void ExperimentConfig::validate() const {
  if (source.file.has_value() == source.generator.has_value()) {
    throw InputError("exactly one of a graph file and a generator must be given");
  }
  if (!(c > 0.0 && c < std::sqrt(2.0))) throw InputError("wave speed must satisfy 0 < c < sqrt(2)");
  if (t_max < 2) throw InputError("t_max must be at least 2");
  if (k_rows < 0 || m_cols < 0) throw InputError("embedding dimensions must be non-negative");
  if (k < 0 || k == 1) throw InputError("k must be 0 (auto) or at least 2");
  if (max_k < 2) throw InputError("max_k must be at least 2");
  if (!(threshold > 0.0 && threshold < 1.0)) throw InputError("FFT threshold must lie in (0, 1)");
  if (workers < 1) throw InputError("worker count must be positive");
}

EmbeddingShape resolve_embedding(Index n, Index t_max, Index k_rows, Index m_cols) {
  EmbeddingShape s;
  s.k_rows = k_rows > 0 ? k_rows : std::min(2 * n, t_max / 2);
  s.m_cols = m_cols > 0 ? m_cols : t_max - s.k_rows;
  if (s.k_rows < 2 || s.m_cols < 2) throw InputError("embedding needs K > 1 and M > 1");
  if (s.k_rows + s.m_cols > t_max) {
    throw InputError("K + M = " + std::to_string(s.k_rows + s.m_cols) + " exceeds t_max = " + std::to_string(t_max));
  }
  return s;
}

// -- per-node stages -------------------------------------------------------------

std::vector<LocalSpectrum> dmd_spectra(const TraceMatrix& trace, EmbeddingShape shape, double c,
                                       const LocalSpectrumOptions& opts, int workers, std::vector<Index>* failed) {
  const Index n = trace.num_nodes();
  const Index length = shape.k_rows + shape.m_cols;
  if (length > trace.t_max()) throw InputError("trace shorter than K + M");
  std::vector<LocalSpectrum> out(static_cast<std::size_t>(n));
  std::vector<char> bad(static_cast<std::size_t>(n), 0);
  parallel_for(n, workers, [&](Index i) {
    const Eigen::VectorXd samples = trace.values.row(i).head(length).transpose();
    auto& slot = out[static_cast<std::size_t>(i)];
    try {
      slot = local_spectrum(samples, shape.k_rows, shape.m_cols, c, opts, i);
    } catch (const Error&) {
      slot = LocalSpectrum{};
      slot.node = i;
      slot.c = c;
      bad[static_cast<std::size_t>(i)] = 1;
    }
  });
  if (failed) {
    for (Index i = 0; i < n; ++i) {
      if (bad[static_cast<std::size_t>(i)]) failed->push_back(i);
    }
  }
  return out;
}

std::vector<FftSpectrum> fft_spectra(const TraceMatrix& trace, Index first, Index length, double threshold,
                                     int workers) {
  if (first < 0 || length < 1 || first + length > trace.t_max()) throw InputError("FFT window outside the trace");
  const Index n = trace.num_nodes();
  std::vector<FftSpectrum> out(static_cast<std::size_t>(n));
  parallel_for(n, workers, [&](Index i) {
    const Eigen::VectorXd samples = trace.values.row(i).segment(first, length).transpose();
    out[static_cast<std::size_t>(i)] =
        fft_local_spectrum(std::span<const double>(samples.data(), static_cast<std::size_t>(length)), threshold, i);
  });
  return out;
}

Eigen::MatrixXd dmd_coefficient_rows(const std::vector<LocalSpectrum>& spectra, int k, std::vector<Index>* short_nodes) {
  if (k < 2) throw InputError("need k >= 2");
  Eigen::MatrixXd rows = Eigen::MatrixXd::Zero(static_cast<Index>(spectra.size()), k - 1);
  for (std::size_t i = 0; i < spectra.size(); ++i) {
    const auto modes = spectra[i].oscillatory();
    const auto have = std::min<std::size_t>(modes.size(), static_cast<std::size_t>(k - 1));
    for (std::size_t j = 0; j < have; ++j) rows(static_cast<Index>(i), static_cast<Index>(j)) = modes[j].amplitude.real();
    if (have < static_cast<std::size_t>(k - 1) && short_nodes) short_nodes->push_back(static_cast<Index>(i));
  }
  return rows;
}

Eigen::MatrixXd fft_coefficient_rows(const std::vector<FftSpectrum>& spectra, int k, std::vector<Index>* short_nodes) {
  if (k < 2) throw InputError("need k >= 2");
  Eigen::MatrixXd rows = Eigen::MatrixXd::Zero(static_cast<Index>(spectra.size()), k - 1);
  for (std::size_t i = 0; i < spectra.size(); ++i) {
    // Mode j is the first bin of the j-th run of consecutive retained bins.
    Index col = 0;
    Index last = -2;
    for (const auto& bin : fft_oscillatory_bins(spectra[i])) {
      if (col == k - 1) break;
      if (bin.index != last + 1) rows(static_cast<Index>(i), col++) = bin.coefficient.real();
      last = bin.index;
    }
    if (col < k - 1 && short_nodes) short_nodes->push_back(static_cast<Index>(i));
  }
  return rows;
}

ClusterAssignment assign_from_rows(const Eigen::MatrixXd& rows, int k, AssignmentMethod method,
                                   AssignmentSource source, std::uint64_t seed) {
  if (method == AssignmentMethod::kmeans) return kmeans_assign(rows, k, seed, source);
  const int bits = bits_for_clusters(k);
  if (rows.cols() < bits) throw InputError("not enough coefficient columns for sign encoding");
  ClusterAssignment out;
  out.k = k;
  out.method = AssignmentMethod::signs;
  out.source = source;
  out.labels.resize(static_cast<std::size_t>(rows.rows()));
  std::vector<double> coeffs(static_cast<std::size_t>(bits) + 1, 0.0);
  for (Index i = 0; i < rows.rows(); ++i) {
    for (int b = 0; b < bits; ++b) coeffs[static_cast<std::size_t>(b) + 1] = rows(i, b);
    out.labels[static_cast<std::size_t>(i)] = sign_encode(coeffs, bits);
  }
  return out;
}

// -- pipeline --------------------------------------------------------------------

namespace {

struct Pipeline {
  const LoadedGraph& graph;
  const ExperimentConfig& cfg;
  Laplacian lap;
  std::optional<EigenSystem> es;

  Pipeline(const LoadedGraph& g, const ExperimentConfig& c) : graph(g), cfg(c), lap(build_laplacian(g.graph)) {}

  Index n() const { return lap.size(); }
  bool oracle_feasible() const { return n() <= cfg.oracle_limit; }

  const EigenSystem& eigen() {
    if (!es) es = eigendecompose(lap);
    return *es;
  }

  int resolve_k(bool* estimated) {
    if (estimated) *estimated = cfg.k == 0;
    if (cfg.k > 0) return cfg.k;
    return estimate_num_clusters(eigen().lambdas, cfg.max_k);
  }

  // One propagation serves every window up to `samples`.
  TraceMatrix propagate_to(Index samples) const {
    WaveConfig w;
    w.c = cfg.c;
    w.t_max = samples;
    w.init = RandomInit{cfg.seed};
    w.workers = cfg.workers;
    return propagate(lap, w);
  }

  ClusterAssignment reference(int k) { return spectral_cluster(eigen(), k, cfg.cluster_method, cfg.seed); }

  // Labels from the first t_max samples (DMD) or samples 1..t_max (FFT).
  ClusterAssignment assign(const TraceMatrix& trace, Method method, Index t_max, EmbeddingShape shape, int k,
                           std::vector<Index>& degraded) {
    switch (method) {
      case Method::spectral: return reference(k);
      case Method::dmd: {
        const auto spectra = dmd_spectra(trace, shape, cfg.c, cfg.dmd, cfg.workers, &degraded);
        const auto rows = dmd_coefficient_rows(spectra, k, &degraded);
        return assign_from_rows(rows, k, cfg.cluster_method, AssignmentSource::dmd, cfg.seed);
      }
      case Method::fft: {
        const auto spectra = fft_spectra(trace, 1, t_max, cfg.threshold, cfg.workers);
        const auto rows = fft_coefficient_rows(spectra, k, &degraded);
        return assign_from_rows(rows, k, cfg.cluster_method, AssignmentSource::fft, cfg.seed);
      }
    }
    throw InputError("unknown method");
  }
};

std::vector<Index> sorted_unique(std::vector<Index> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

ClusterReport run_cluster(const ExperimentConfig& cfg) {
  cfg.validate();
  return run_cluster(load_graph(cfg.source), cfg);
}

ClusterReport run_cluster(const LoadedGraph& graph, const ExperimentConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  Pipeline pipe(graph, cfg);
  ClusterReport r;
  r.graph_name = graph.name;
  r.num_nodes = pipe.n();
  r.method = cfg.method;
  r.c = cfg.c;
  r.t_max = cfg.t_max;
  r.k = pipe.resolve_k(&r.k_estimated);

  if (cfg.method == Method::dmd) r.embedding = resolve_embedding(pipe.n(), cfg.t_max, cfg.k_rows, cfg.m_cols);
  if (cfg.method != Method::spectral) {
    const TraceMatrix trace = pipe.propagate_to(cfg.t_max + 1);
    r.assignment = pipe.assign(trace, cfg.method, cfg.t_max, r.embedding, r.k, r.degraded_nodes);
  } else {
    r.assignment = pipe.reference(r.k);
  }
  r.degraded_nodes = sorted_unique(std::move(r.degraded_nodes));

  if (pipe.oracle_feasible()) {
    r.reference = cfg.method == Method::spectral ? r.assignment : pipe.reference(r.k);
    r.agreement = agreement(r.assignment, *r.reference);
  }
  if (graph.planted_labels) r.planted_agreement = agreement(r.assignment.labels, *graph.planted_labels);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

// -- minimum T_max search ----------------------------------------------------------

std::vector<Index> TmaxGrid::points() const {
  if (start < 2) throw InputError("grid must start at t_max >= 2");
  if (max < start) throw InputError("grid maximum below its start");
  if (kind == Kind::arithmetic && step < 1) throw InputError("grid step must be positive");
  std::vector<Index> out;
  for (Index t = start; t <= max; t = kind == Kind::powers_of_two ? 2 * t : t + step) out.push_back(t);
  return out;
}

std::string MinTmaxResult::describe() const {
  if (minimum) return std::to_string(*minimum);
  return "> " + std::to_string(grid.max);
}

MinTmaxResult run_min_tmax_search(const LoadedGraph& graph, const ExperimentConfig& cfg, Method method,
                                  const TmaxGrid& grid, bool scan_full) {
  if (method == Method::spectral) throw InputError("the spectral reference needs no T_max search");
  const auto points = grid.points();
  Pipeline pipe(graph, cfg);
  const int k = pipe.resolve_k(nullptr);
  const ClusterAssignment ref = pipe.reference(k);
  const TraceMatrix trace = pipe.propagate_to(points.back() + 1);

  MinTmaxResult out;
  out.method = method;
  out.grid = grid;
  for (Index t : points) {
    std::vector<Index> degraded;
    double agree = 0.0;
    try {
      const EmbeddingShape shape = method == Method::dmd ? resolve_embedding(pipe.n(), t) : EmbeddingShape{};
      agree = agreement(pipe.assign(trace, method, t, shape, k, degraded), ref);
    } catch (const InputError&) {
      agree = 0.0;  // window too short for this graph
    }
    out.scanned.push_back({t, agree});
    const bool success = agree == 1.0;
    if (!out.minimum) {
      if (success) {
        out.minimum = t;
        if (!scan_full) break;
      }
    } else if (!success) {
      out.monotonicity_violations.push_back(t);
    }
  }
  return out;
}

// -- frequency error sweep -----------------------------------------------------------

std::vector<ErrorSweepRow> run_error_sweep(const LoadedGraph& graph, const ExperimentConfig& cfg,
                                           const std::vector<Index>& t_grid) {
  if (t_grid.empty()) throw InputError("empty T_max grid");
  if (!std::is_sorted(t_grid.begin(), t_grid.end()) ||
      std::adjacent_find(t_grid.begin(), t_grid.end()) != t_grid.end()) {
    throw InputError("T_max grid must be strictly ascending");
  }
  Pipeline pipe(graph, cfg);
  const Eigen::VectorXd freqs = propagator_frequencies(build_propagator(pipe.lap, cfg.c));
  double omega2 = std::numeric_limits<double>::quiet_NaN();
  for (Index j = 0; j < freqs.size(); ++j) {
    if (freqs(j) > kZeroOmegaTol) {
      omega2 = freqs(j);
      break;
    }
  }
  if (!std::isfinite(omega2)) throw NumericalError("propagator has no oscillatory frequency");
  const TraceMatrix trace = pipe.propagate_to(t_grid.back() + 1);
  const Index n = pipe.n();

  auto summarize = [&](Index t, Method m, const std::vector<double>& est) {
    ErrorSweepRow row;
    row.t_max = t;
    row.method = m;
    double sum = 0.0;
    for (double w : est) {
      if (std::isnan(w)) continue;
      sum += std::abs(w - omega2) / omega2;
      ++row.nodes_used;
    }
    row.mean_rel_err = row.nodes_used > 0 ? sum / static_cast<double>(row.nodes_used)
                                          : std::numeric_limits<double>::quiet_NaN();
    if (row.nodes_used == 0) {
      row.note = "no node produced an estimate";
    } else if (row.nodes_used < n) {
      row.note = std::to_string(n - row.nodes_used) + " nodes without estimate";
    }
    return row;
  };

  std::vector<ErrorSweepRow> rows;
  for (Index t : t_grid) {
    std::vector<double> est(static_cast<std::size_t>(n), std::numeric_limits<double>::quiet_NaN());
    try {
      const auto shape = resolve_embedding(n, t, cfg.k_rows, cfg.m_cols);
      const auto spectra = dmd_spectra(trace, shape, cfg.c, cfg.dmd, cfg.workers);
      for (Index i = 0; i < n; ++i) {
        const auto osc = spectra[static_cast<std::size_t>(i)].oscillatory();
        if (!osc.empty()) est[static_cast<std::size_t>(i)] = osc.front().omega;
      }
      rows.push_back(summarize(t, Method::dmd, est));
    } catch (const InputError& e) {
      rows.push_back({t, Method::dmd, std::numeric_limits<double>::quiet_NaN(), 0, e.what()});
    }

    std::fill(est.begin(), est.end(), std::numeric_limits<double>::quiet_NaN());
    const auto fspectra = fft_spectra(trace, 1, t, cfg.threshold, cfg.workers);
    for (Index i = 0; i < n; ++i) {
      const auto bins = fft_oscillatory_bins(fspectra[static_cast<std::size_t>(i)]);
      if (!bins.empty()) est[static_cast<std::size_t>(i)] = bins.front().omega;
    }
    rows.push_back(summarize(t, Method::fft, est));
  }
  return rows;
}

// -- adaptive T_max ---------------------------------------------------------------

AdaptiveResult adaptive_dmd(const Graph& g, const ExperimentConfig& cfg, int num_freqs, Index t_start, Index t_limit,
                            double tol) {
  if (num_freqs < 1) throw InputError("need at least one frequency to track");
  if (t_start < 4 || t_limit < t_start) throw InputError("adaptive range must satisfy 4 <= t_start <= t_limit");
  const LoadedGraph loaded{g, "graph", std::nullopt};
  Pipeline pipe(loaded, cfg);
  const Index n = pipe.n();
  const TraceMatrix trace = pipe.propagate_to(t_limit);

  auto lowest = [&](const LocalSpectrum& s) {
    std::vector<double> w;
    for (const auto& m : s.oscillatory()) {
      if (static_cast<int>(w.size()) == num_freqs) break;
      w.push_back(m.omega);
    }
    return w;
  };

  AdaptiveResult out;
  std::vector<std::vector<double>> previous;
  for (Index t = t_start;; t = std::min(2 * t, t_limit)) {
    ++out.rounds;
    out.t_max = t;
    out.spectra = dmd_spectra(trace, resolve_embedding(n, t), cfg.c, cfg.dmd, cfg.workers);
    std::vector<std::vector<double>> current;
    for (const auto& s : out.spectra) current.push_back(lowest(s));
    if (!previous.empty()) {
      bool stable = true;
      for (Index i = 0; i < n && stable; ++i) {
        const auto& a = current[static_cast<std::size_t>(i)];
        const auto& b = previous[static_cast<std::size_t>(i)];
        if (static_cast<int>(a.size()) < num_freqs || a.size() != b.size()) {
          stable = false;
          break;
        }
        for (std::size_t j = 0; j < a.size(); ++j) stable = stable && std::abs(a[j] - b[j]) < tol;
      }
      if (stable) {
        out.converged = true;
        return out;
      }
    }
    if (t == t_limit) return out;
    previous = std::move(current);
  }
}

// -- reports -------------------------------------------------------------------------

namespace {

ojson nan_to_null(double x) { return std::isfinite(x) ? ojson(x) : ojson(nullptr); }

ojson min_tmax_json(const MinTmaxResult& r) {
  ojson j;
  j["method"] = to_string(r.method);
  j["grid"] = {{"kind", r.grid.kind == TmaxGrid::Kind::powers_of_two ? "powers_of_two" : "arithmetic"},
               {"start", r.grid.start},
               {"step", r.grid.step},
               {"max", r.grid.max}};
  j["minimum"] = r.minimum ? ojson(*r.minimum) : ojson(nullptr);
  j["result"] = r.describe();
  auto& scanned = j["scanned"] = ojson::array();
  for (const auto& p : r.scanned) scanned.push_back({{"t_max", p.t_max}, {"agreement", p.agreement}});
  j["monotonicity_violations"] = r.monotonicity_violations;
  return j;
}

ojson sweep_json(const std::vector<ErrorSweepRow>& rows) {
  ojson out = ojson::array();
  for (const auto& r : rows) {
    out.push_back({{"t_max", r.t_max},
                   {"method", to_string(r.method)},
                   {"mean_rel_err", nan_to_null(r.mean_rel_err)},
                   {"nodes_used", r.nodes_used},
                   {"note", r.note}});
  }
  return out;
}

}  // namespace

std::string report_json(const ClusterReport& r, bool include_timing) {
  ojson j;
  j["graph"] = r.graph_name;
  j["nodes"] = r.num_nodes;
  j["method"] = to_string(r.method);
  j["c"] = r.c;
  j["t_max"] = r.t_max;
  if (r.method == Method::dmd) j["embedding"] = {{"k_rows", r.embedding.k_rows}, {"m_cols", r.embedding.m_cols}};
  j["k"] = r.k;
  j["k_estimated"] = r.k_estimated;
  j["cluster_method"] = to_string(r.assignment.method);
  j["labels"] = r.assignment.labels;
  if (r.reference) j["reference_labels"] = r.reference->labels;
  j["agreement"] = r.agreement ? ojson(*r.agreement) : ojson(nullptr);
  if (r.planted_agreement) j["planted_agreement"] = *r.planted_agreement;
  j["degraded_nodes"] = r.degraded_nodes;
  if (r.reference) j["ambiguous_reference_nodes"] = r.reference->ambiguous_nodes;
  if (include_timing) j["seconds"] = r.seconds;
  return j.dump(2);
}

std::string report_json(const MinTmaxResult& result) { return min_tmax_json(result).dump(2); }

std::string report_json(const ComparisonReport& r, bool include_timing) {
  ojson j;
  j["graph"] = r.graph_name;
  auto& searches = j["searches"] = ojson::array();
  for (const auto& s : r.searches) searches.push_back(min_tmax_json(s));
  j["sweep"] = sweep_json(r.sweep);
  if (include_timing) j["seconds"] = r.seconds;
  return j.dump(2);
}

void write_error_sweep_csv(std::ostream& out, const std::vector<ErrorSweepRow>& rows) {
  char buf[32];
  out << "t_max,method,mean_rel_err,nodes_used,note\n";
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.17g", r.mean_rel_err);
    out << r.t_max << ',' << to_string(r.method) << ',' << (std::isnan(r.mean_rel_err) ? "NaN" : buf) << ','
        << r.nodes_used << ',' << r.note << '\n';
  }
}

void write_error_sweep_gnuplot(std::ostream& out, const std::vector<ErrorSweepRow>& rows) {
  char buf[32];
  bool first = true;
  for (Method m : {Method::dmd, Method::fft}) {
    if (!first) out << "\n\n";
    first = false;
    out << "# " << to_string(m) << "\n# t_max mean_rel_err\n";
    for (const auto& r : rows) {
      if (r.method != m) continue;
      std::snprintf(buf, sizeof buf, "%.10g", r.mean_rel_err);
      out << r.t_max << ' ' << (std::isnan(r.mean_rel_err) ? "NaN" : buf) << '\n';
    }
  }
}

}  // namespace wavedmd
