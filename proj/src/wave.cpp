#include "wavedmd/wave.hpp"

#include <algorithm>
#include <atomic>
#include <barrier>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <thread>

#include <Eigen/Eigenvalues>

#include "wavedmd/errors.hpp"
#include "wavedmd/random.hpp"

namespace wavedmd {

void WaveConfig::validate() const {
  if (!(c > 0.0 && c < std::numbers::sqrt2)) throw InputError("wave speed must satisfy 0 < c < sqrt(2)");
  if (t_max < 2) throw InputError("t_max must be at least 2");
}

Eigen::VectorXd random_initial_state(Index n, std::uint64_t seed) {
  Rng rng(seed);
  Eigen::VectorXd u(n);
  for (Index i = 0; i < n; ++i) u(i) = unit_uniform(rng);
  return u;
}

namespace {

Eigen::VectorXd initial_state(const WaveConfig& cfg, Index n) {
  if (const auto* r = std::get_if<RandomInit>(&cfg.init)) return random_initial_state(n, r->seed);
  const auto& u0 = std::get<Eigen::VectorXd>(cfg.init);
  if (u0.size() != n) throw InputError("initial state length does not match node count");
  return u0;
}

// Node i's view of round t: its own and its neighbors' values at t-1.
double update_node(const SparseRowMatrix& lap, Index i, const std::vector<double>& prev,
                   const std::vector<double>& prev2, double c, std::vector<NeighborValue>& scratch) {
  scratch.clear();
  for (SparseRowMatrix::InnerIterator it(lap, i); it; ++it) {
    scratch.push_back({it.value(), prev[static_cast<std::size_t>(it.col())]});
  }
  const auto ii = static_cast<std::size_t>(i);
  return step_local(prev[ii], prev2[ii], scratch, c);
}

}  // namespace

TraceMatrix propagate(const Laplacian& lap, const WaveConfig& cfg) {
  cfg.validate();
  const Index n = lap.size();
  const Eigen::VectorXd u0 = initial_state(cfg, n);

  TraceMatrix out;
  out.values.resize(n, cfg.t_max);
  out.values.col(0) = u0;

  std::vector<double> prev(u0.data(), u0.data() + n);
  std::vector<double> prev2 = prev;  // u(-1) = u(0)
  std::vector<double> next(static_cast<std::size_t>(n));
  const auto& entries = lap.sparse();
  bool overflow = false;

  const Index workers = std::clamp<Index>(cfg.workers, 1, n);
  if (workers == 1) {
    std::vector<NeighborValue> scratch;
    for (Index t = 1; t < cfg.t_max; ++t) {
      for (Index i = 0; i < n; ++i) next[static_cast<std::size_t>(i)] = update_node(entries, i, prev, prev2, cfg.c, scratch);
      std::swap(prev2, prev);
      std::swap(prev, next);
      out.values.col(t) = Eigen::Map<const Eigen::VectorXd>(prev.data(), n);
      if (!out.values.col(t).allFinite()) {
        overflow = true;
        break;
      }
    }
  } else {
    Index t = 1;
    auto end_of_round = [&]() noexcept {
      std::swap(prev2, prev);
      std::swap(prev, next);
      out.values.col(t) = Eigen::Map<const Eigen::VectorXd>(prev.data(), n);
      if (!out.values.col(t).allFinite()) overflow = true;
      ++t;
    };
    std::barrier sync(static_cast<std::ptrdiff_t>(workers), end_of_round);
    {
      std::vector<std::jthread> pool;
      for (Index w = 0; w < workers; ++w) {
        const Index begin = n * w / workers;
        const Index end = n * (w + 1) / workers;
        pool.emplace_back([&, begin, end] {
          std::vector<NeighborValue> scratch;
          for (Index round = 1; round < cfg.t_max; ++round) {
            for (Index i = begin; i < end; ++i) {
              next[static_cast<std::size_t>(i)] = update_node(entries, i, prev, prev2, cfg.c, scratch);
            }
            sync.arrive_and_wait();
            if (overflow) break;
          }
        });
      }
    }
  }
  if (overflow) throw NumericalError("wave propagation overflowed; check c and the Laplacian");
  return out;
}

TraceMatrix propagate(const Graph& g, const WaveConfig& cfg) { return propagate(build_laplacian(g), cfg); }

WavePropagator build_propagator(const Laplacian& lap, double c) {
  if (!(c > 0.0 && c < std::numbers::sqrt2)) throw InputError("wave speed must satisfy 0 < c < sqrt(2)");
  const Index n = lap.size();
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
  WavePropagator prop;
  prop.m.setZero(2 * n, 2 * n);
  prop.m.topLeftCorner(n, n) = 2.0 * id - c * c * lap.dense();
  prop.m.topRightCorner(n, n) = -id;
  prop.m.bottomLeftCorner(n, n) = id;
  return prop;
}

Eigen::VectorXcd WavePropagator::eigenvalues() const {
  Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
  if (es.info() != Eigen::Success) throw NumericalError("eigensolver failed on wave propagator");
  return es.eigenvalues();
}

TraceMatrix propagate_with_matrix(const WavePropagator& prop, const Eigen::VectorXd& u0, Index t_max) {
  const Index n = prop.num_nodes();
  if (u0.size() != n) throw InputError("initial state length does not match node count");
  TraceMatrix out;
  out.values.resize(n, t_max);
  Eigen::VectorXd z(2 * n);
  z << u0, u0;
  out.values.col(0) = u0;
  for (Index t = 1; t < t_max; ++t) {
    z = prop.m * z;
    out.values.col(t) = z.head(n);
  }
  return out;
}

std::pair<std::complex<double>, std::complex<double>> alpha_from_lambda(double lambda, double c) {
  if (!(lambda >= 0.0 && lambda <= 2.0)) throw InputError("Laplacian eigenvalue outside [0, 2]");
  if (!(c > 0.0 && c < std::numbers::sqrt2)) throw InputError("wave speed must satisfy 0 < c < sqrt(2)");
  const double centre = (2.0 - c * c * lambda) / 2.0;
  const std::complex<double> root = std::sqrt(std::complex<double>(c * c * lambda * lambda - 4.0 * lambda, 0.0));
  const std::complex<double> a1 = centre + 0.5 * c * root;
  const std::complex<double> a2 = centre - 0.5 * c * root;
  return a1.imag() >= a2.imag() ? std::pair{a1, a2} : std::pair{a2, a1};
}

double omega_from_lambda(double lambda, double c) {
  return std::acos(std::clamp(1.0 - 0.5 * c * c * lambda, -1.0, 1.0));
}

double lambda_from_omega(double omega, double c) { return (2.0 - 2.0 * std::cos(omega)) / (c * c); }

Eigen::VectorXd closed_form_trace(const Laplacian& lap, const Eigen::VectorXd& u0, double c, Index t) {
  if (!lap.is_symmetric()) throw InputError("closed-form trace needs a symmetric Laplacian (regular graph)");
  if (u0.size() != lap.size()) throw InputError("initial state length does not match node count");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(lap.dense());
  if (es.info() != Eigen::Success) throw NumericalError("eigensolver failed on Laplacian");

  Eigen::VectorXd u = Eigen::VectorXd::Zero(u0.size());
  const auto td = static_cast<double>(t);
  for (Index j = 0; j < lap.size(); ++j) {
    const double lambda = std::clamp(es.eigenvalues()(j), 0.0, 2.0);
    const double omega = omega_from_lambda(lambda, c);
    const std::complex<double> p(0.5, 0.5 * std::tan(omega / 2.0));
    const std::complex<double> phase = std::polar(1.0, td * omega);
    const double weight = (p * phase + std::conj(p) * std::conj(phase)).real();
    const auto v = es.eigenvectors().col(j);
    u += v.dot(u0) * weight * v;
  }
  return u;
}

Eigen::VectorXd propagator_frequencies(const WavePropagator& prop, double tol) {
  const Eigen::VectorXcd alpha = prop.eigenvalues();
  std::vector<double> omega(static_cast<std::size_t>(alpha.size()));
  for (Index j = 0; j < alpha.size(); ++j) omega[static_cast<std::size_t>(j)] = std::abs(std::arg(alpha(j)));
  std::sort(omega.begin(), omega.end());
  std::vector<double> distinct;
  for (double w : omega) {
    if (distinct.empty() || w - distinct.back() > tol) distinct.push_back(w);
  }
  return Eigen::Map<Eigen::VectorXd>(distinct.data(), static_cast<Index>(distinct.size()));
}

void write_trace_csv(std::ostream& out, const TraceMatrix& trace) {
  char buf[32];
  for (Index i = 0; i < trace.num_nodes(); ++i) {
    for (Index t = 0; t < trace.t_max(); ++t) {
      std::snprintf(buf, sizeof buf, "%.17g", trace.values(i, t));
      if (t > 0) out << ',';
      out << buf;
    }
    out << '\n';
  }
}

}  // namespace wavedmd
