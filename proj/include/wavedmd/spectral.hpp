#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include <Eigen/Core>

#include "wavedmd/assignment.hpp"
#include "wavedmd/laplacian.hpp"

namespace wavedmd {

/// Eigenpairs of L sorted by ascending eigenvalue; column j of `vectors` is a
/// unit-norm right eigenvector of L.
struct EigenSystem {
  Eigen::VectorXd lambdas;
  Eigen::MatrixXd vectors;

  Index size() const noexcept { return lambdas.size(); }
};

/// Dense eigendecomposition through the symmetric form S = D^{1/2} L D^{-1/2}:
/// S y = lambda y gives L (D^{-1/2} y) = lambda (D^{-1/2} y).
EigenSystem eigendecompose(const Laplacian& lap);

/// Entries with |v_i| below this get the positive sign and are reported.
inline constexpr double kZeroEntryTol = 1e-12;

/// Centralized spectral clustering.
///  signs:  bit b of node i's label is set when v^(b+2)_i >= 0,
///          b = 0..ceil(log2 k)-1.
///  kmeans: k-means on the rows of [v^(2) ... v^(k)].
ClusterAssignment spectral_cluster(const EigenSystem& es, int k, AssignmentMethod method,
                                   std::uint64_t seed = 0);

/// argmax over j in [2, max_k] of (lambda_{j+1} - lambda_j) / max(lambda_j, 1e-12),
/// with 1-based j over the ascending eigenvalues.
int estimate_num_clusters(const Eigen::VectorXd& lambdas, int max_k);

void write_eigenvalues_csv(std::ostream& out, const EigenSystem& es);
/// Columns j in `which` (0-based), one row per node.
void write_eigenvectors_csv(std::ostream& out, const EigenSystem& es, const std::vector<Index>& which);

}  // namespace wavedmd
