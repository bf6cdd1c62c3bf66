#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <variant>

#include <Eigen/Core>

#include "wavedmd/graph.hpp"
#include "wavedmd/laplacian.hpp"

namespace wavedmd {

inline constexpr double kDefaultWaveSpeed = 1.0;

/// u_i(0) drawn uniformly from [0, 1) in node-index order with a 64-bit
/// Mersenne twister seeded by `seed`.
struct RandomInit {
  std::uint64_t seed = 0;
};

struct WaveConfig {
  double c = kDefaultWaveSpeed;
  Index t_max = 2;
  std::variant<RandomInit, Eigen::VectorXd> init = RandomInit{};
  int workers = 1;

  /// Throws InputError unless 0 < c < sqrt(2) and t_max >= 2.
  void validate() const;
};

Eigen::VectorXd random_initial_state(Index n, std::uint64_t seed);

/// Node traces: row i is [u_i(0), ..., u_i(t_max - 1)], with u(-1) = u(0).
struct TraceMatrix {
  Eigen::MatrixXd values;

  Index num_nodes() const noexcept { return values.rows(); }
  Index t_max() const noexcept { return values.cols(); }
  auto node(Index i) const { return values.row(i); }
};

/// One term of the local sum: L_ij and u_j(t-1). Node i itself is included.
struct NeighborValue {
  double coeff;
  double value;
};

/// u_i(t) = 2 u_i(t-1) - u_i(t-2) - c^2 sum_j L_ij u_j(t-1).
inline double step_local(double u_prev, double u_prev2, std::span<const NeighborValue> neighbors,
                         double c) {
  double coupling = 0.0;
  for (const auto& nv : neighbors) coupling += nv.coeff * nv.value;
  return 2.0 * u_prev - u_prev2 - c * c * coupling;
}

/// Synchronous rounds of step_local at every node. Each round reads only the
/// state of round t-1, so the output does not depend on cfg.workers.
/// Throws NumericalError if a non-finite value appears.
TraceMatrix propagate(const Laplacian& lap, const WaveConfig& cfg);
TraceMatrix propagate(const Graph& g, const WaveConfig& cfg);

/// Companion matrix of the recurrence: z(t) = M z(t-1), z(t) = [u(t); u(t-1)].
struct WavePropagator {
  Eigen::MatrixXd m;

  Index num_nodes() const noexcept { return m.rows() / 2; }
  Eigen::VectorXcd eigenvalues() const;
};

/// [[2I - c^2 L, -I], [I, 0]].
WavePropagator build_propagator(const Laplacian& lap, double c);

/// Reference trace from repeated multiplication by M, starting at z(0) = [u0; u0].
TraceMatrix propagate_with_matrix(const WavePropagator& prop, const Eigen::VectorXd& u0, Index t_max);

/// Roots of alpha^2 - (2 - c^2 lambda) alpha + 1 = 0, the eigenvalue pair of M
/// attached to Laplacian eigenvalue lambda. The first root has Im >= 0.
std::pair<std::complex<double>, std::complex<double>> alpha_from_lambda(double lambda, double c);

/// omega in [0, pi] with alpha = e^{+-i omega}.
double omega_from_lambda(double lambda, double c);

/// (2 - 2 cos omega) / c^2.
double lambda_from_omega(double omega, double c);

/// Modal expansion
///   u(t) = sum_j <u0, v_j> (p_j e^{i t w_j} + q_j e^{-i t w_j}) v_j,
///   p_j = (1 + i tan(w_j / 2)) / 2,  q_j = conj(p_j),
/// with orthonormal eigenvectors v_j. Requires a symmetric Laplacian (regular
/// graph); throws InputError otherwise.
Eigen::VectorXd closed_form_trace(const Laplacian& lap, const Eigen::VectorXd& u0, double c, Index t);

/// Distinct frequencies |arg alpha| of M, ascending, merged within `tol`.
Eigen::VectorXd propagator_frequencies(const WavePropagator& prop, double tol = 1e-9);

/// One row per node, T_max columns, 17 significant digits.
void write_trace_csv(std::ostream& out, const TraceMatrix& trace);

}  // namespace wavedmd
