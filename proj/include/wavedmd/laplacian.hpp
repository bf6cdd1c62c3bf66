#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "wavedmd/graph.hpp"

namespace wavedmd {

using SparseRowMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;

/// Row-normalized graph Laplacian L = I - D^{-1} W.
///
/// Rows are stored compressed, which is also the per-node view used by the
/// decentralized wave update: row i lists L_ii = 1 and L_ij = -W_ij / d_i for
/// each neighbor j. L is not symmetric unless the graph is regular; its
/// eigenvalues are nevertheless real because D^{1/2} L D^{-1/2} is.
class Laplacian {
 public:
  Laplacian(SparseRowMatrix entries, Eigen::VectorXd degrees)
      : entries_(std::move(entries)), degrees_(std::move(degrees)) {}

  Index size() const noexcept { return entries_.rows(); }
  const SparseRowMatrix& sparse() const noexcept { return entries_; }
  const Eigen::VectorXd& degrees() const noexcept { return degrees_; }

  Eigen::MatrixXd dense() const { return Eigen::MatrixXd(entries_); }

  /// D^{1/2} L D^{-1/2}, symmetric and similar to L.
  Eigen::MatrixXd symmetric_form() const;

  bool is_symmetric(double tol = 1e-12) const;

 private:
  SparseRowMatrix entries_;
  Eigen::VectorXd degrees_;
};

/// Throws InputError for isolated nodes or a disconnected graph.
Laplacian build_laplacian(const Graph& g);

}  // namespace wavedmd
