#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <type_traits>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include "wavedmd/errors.hpp"
#include "wavedmd/graph.hpp"

namespace wavedmd {

// Delay-embedded exact DMD on a single scalar time series.
//
// A node only ever sees its own trace u(0), u(1), ...; stacking K consecutive
// samples per column gives the Hankel pair
//
//   X = [x(0) ... x(M-1)],  Y = [x(1) ... x(M)],  x(t) = [u(t) ... u(t+K-1)]^T.
//
// For u(t) = sum_j a_j e^{i w_j t} with K, M >= J the eigenvalues of Y X^+ are
// exactly e^{i w_j} and the coefficients a_j are recovered from x(0).

template <typename Scalar>
struct DelayEmbedding {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  Matrix x;
  Matrix y;

  Index k_rows() const noexcept { return x.rows(); }
  Index m_cols() const noexcept { return x.cols(); }
};

/// Requires k_rows > 1, m_cols > 1 and trace.size() >= k_rows + m_cols.
template <typename Derived>
DelayEmbedding<typename Derived::Scalar> delay_embed(const Eigen::MatrixBase<Derived>& trace,
                                                     Index k_rows, Index m_cols) {
  static_assert(Derived::IsVectorAtCompileTime, "delay_embed expects a vector");
  if (k_rows < 2 || m_cols < 2) throw InputError("delay embedding needs K > 1 and M > 1");
  if (trace.size() < k_rows + m_cols) {
    throw InputError("delay embedding needs " + std::to_string(k_rows + m_cols) +
                     " samples, trace has " + std::to_string(trace.size()));
  }
  DelayEmbedding<typename Derived::Scalar> emb;
  emb.x.resize(k_rows, m_cols);
  emb.y.resize(k_rows, m_cols);
  for (Index c = 0; c < m_cols; ++c) {
    for (Index r = 0; r < k_rows; ++r) {
      emb.x(r, c) = trace(r + c);
      emb.y(r, c) = trace(r + c + 1);
    }
  }
  return emb;
}

struct DmdOptions {
  /// Singular values below rank_tol * sigma_max are truncated.
  double rank_tol = 1e-10;
  /// Eigenvalues of smaller modulus are treated as the zero eigenvalues of A.
  double min_modulus = 0.5;
};

struct DmdResult {
  /// Sorted by decreasing real part; on ties the member with larger
  /// imaginary part comes first.
  Eigen::VectorXcd eigenvalues;
  /// K x J, unit 2-norm columns.
  Eigen::MatrixXcd modes;
  /// Solution of modes * amplitudes_hat = x(0); empty until solve_amplitudes.
  Eigen::VectorXcd amplitudes_hat;
  /// a_j = modes(0, j) * amplitudes_hat(j): coefficient of e^{i w_j t} in u(t).
  Eigen::VectorXcd amplitudes;
  Eigen::VectorXd singular_values;
  Index rank = 0;

  Index size() const noexcept { return eigenvalues.size(); }
};

namespace detail {

void sort_modes_by_real_part(Eigen::VectorXcd& eigenvalues, Eigen::MatrixXcd& modes);

inline Index truncation_rank(const Eigen::VectorXd& sigma, double rank_tol) {
  if (sigma.size() == 0 || !std::isfinite(sigma(0)) || sigma(0) <= 0.0) {
    throw NumericalError("delay embedding is numerically zero");
  }
  Index r = 0;
  while (r < sigma.size() && sigma(r) > rank_tol * sigma(0)) ++r;
  return r;
}

}  // namespace detail

/// Reduced SVD X = U S V*, A~ = U* Y V S^{-1}, eigenpairs (mu, w) of A~ and
/// modes phi = Y V S^{-1} w / mu normalized to unit length.
template <typename Scalar>
DmdResult exact_dmd(const DelayEmbedding<Scalar>& emb, const DmdOptions& opts = {}) {
  using Matrix = typename DelayEmbedding<Scalar>::Matrix;
  using Complex = std::complex<double>;

  Eigen::BDCSVD<Matrix> svd(emb.x, Eigen::ComputeThinU | Eigen::ComputeThinV);
  DmdResult out;
  out.singular_values = svd.singularValues();
  const Index r = detail::truncation_rank(out.singular_values, opts.rank_tol);
  out.rank = r;

  const Eigen::VectorXd inv_sigma = out.singular_values.head(r).cwiseInverse();
  const Matrix yv = emb.y * svd.matrixV().leftCols(r) * inv_sigma.asDiagonal();
  const Matrix reduced = svd.matrixU().leftCols(r).adjoint() * yv;

  Eigen::VectorXcd mu;
  Eigen::MatrixXcd w;
  if constexpr (std::is_same_v<Scalar, double>) {
    Eigen::EigenSolver<Eigen::MatrixXd> es(reduced);
    if (es.info() != Eigen::Success) throw NumericalError("eigensolver failed on reduced DMD operator");
    mu = es.eigenvalues();
    w = es.eigenvectors();
  } else {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(reduced.template cast<Complex>());
    if (es.info() != Eigen::Success) throw NumericalError("eigensolver failed on reduced DMD operator");
    mu = es.eigenvalues();
    w = es.eigenvectors();
  }

  std::vector<Index> kept;
  for (Index j = 0; j < mu.size(); ++j) {
    if (std::abs(mu(j)) >= opts.min_modulus) kept.push_back(j);
  }
  if (kept.empty()) throw NumericalError("no DMD eigenvalue above the modulus floor");

  const Eigen::MatrixXcd yvc = yv.template cast<Complex>();
  out.eigenvalues.resize(static_cast<Index>(kept.size()));
  out.modes.resize(emb.k_rows(), static_cast<Index>(kept.size()));
  for (Index c = 0; c < static_cast<Index>(kept.size()); ++c) {
    const Index j = kept[static_cast<std::size_t>(c)];
    out.eigenvalues(c) = mu(j);
    Eigen::VectorXcd phi = yvc * w.col(j) / mu(j);
    const double norm = phi.norm();
    if (!(norm > 0.0)) throw NumericalError("zero DMD mode");
    out.modes.col(c) = phi / norm;
  }
  detail::sort_modes_by_real_part(out.eigenvalues, out.modes);
  return out;
}

/// Least-squares solve of modes * a_hat = x0, then a_j = modes(0, j) a_hat_j.
/// Stores both in `result` and returns the rescaled amplitudes. Throws
/// NumericalError when the mode matrix is rank deficient.
template <typename Derived>
Eigen::VectorXcd solve_amplitudes(DmdResult& result, const Eigen::MatrixBase<Derived>& x0) {
  static_assert(Derived::IsVectorAtCompileTime, "x0 must be a vector");
  if (x0.size() != result.modes.rows()) throw InputError("x(0) length does not match mode length");
  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(result.modes);
  if (qr.rank() < result.modes.cols()) {
    throw NumericalError("DMD mode matrix is rank deficient (" + std::to_string(qr.rank()) + " < " +
                         std::to_string(result.modes.cols()) + ")");
  }
  const Eigen::VectorXcd rhs = x0.template cast<std::complex<double>>();
  result.amplitudes_hat = qr.solve(rhs);
  result.amplitudes = result.modes.row(0).transpose().cwiseProduct(result.amplitudes_hat);
  return result.amplitudes;
}

/// Embedding, exact DMD and amplitudes in one call.
template <typename Derived>
DmdResult dmd_from_trace(const Eigen::MatrixBase<Derived>& trace, Index k_rows, Index m_cols,
                         const DmdOptions& opts = {}) {
  const auto emb = delay_embed(trace, k_rows, m_cols);
  DmdResult result = exact_dmd(emb, opts);
  solve_amplitudes(result, emb.x.col(0));
  return result;
}

// -- per-node spectrum -------------------------------------------------------

inline constexpr double kZeroOmegaTol = 1e-6;

struct SpectralMode {
  double omega = 0.0;               ///< |arg mu| in [0, pi]
  double lambda = 0.0;              ///< (2 - 2 cos omega) / c^2
  std::complex<double> amplitude;   ///< a_j of the Im(mu) >= 0 member
  std::complex<double> eigenvalue;  ///< the DMD eigenvalue mu
};

struct LocalSpectrum {
  Index node = -1;
  double c = 1.0;
  Index rank = 0;
  /// Ascending omega.
  std::vector<SpectralMode> modes;

  /// Modes with omega > zero_tol, i.e. everything but the constant mode.
  std::vector<SpectralMode> oscillatory(double zero_tol = kZeroOmegaTol) const;
};

struct LocalSpectrumOptions {
  DmdOptions dmd;
  /// Eigenvalues with |mu_a - conj(mu_b)| below this are one real mode.
  double conjugate_tol = 1e-8;
};

/// delay_embed -> exact_dmd -> solve_amplitudes on a real trace, followed by
/// merging of conjugate pairs and conversion of every mu into (omega, lambda).
LocalSpectrum local_spectrum(const Eigen::VectorXd& trace, Index k_rows, Index m_cols, double c,
                             const LocalSpectrumOptions& opts = {}, Index node = -1);

/// Collapses conjugate pairs of an already solved DmdResult.
LocalSpectrum merge_conjugate_modes(const DmdResult& result, double c, double conjugate_tol,
                                    Index node = -1);

}  // namespace wavedmd
