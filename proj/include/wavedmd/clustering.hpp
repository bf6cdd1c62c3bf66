#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>

#include <Eigen/Core>

#include "wavedmd/assignment.hpp"

namespace wavedmd {

/// ceil(log2 k) for k >= 2.
int bits_for_clusters(int k);

/// Binary cluster number of one node. coeffs[0] is the constant mode and is
/// skipped; bit j-1 is set when coeffs[j] > 0, j = 1..bits.
/// Throws InputError when fewer than bits + 1 coefficients are given.
int sign_encode(std::span<const double> coeffs, int bits);

/// k-means on per-node coefficient rows (one row per node).
ClusterAssignment kmeans_assign(const Eigen::MatrixXd& rows, int k, std::uint64_t seed,
                                AssignmentSource source = AssignmentSource::dmd);

/// Fraction of nodes with equal labels under the best one-to-one relabeling
/// (maximum-weight matching on the confusion matrix).
double agreement(std::span<const int> a, std::span<const int> b);
double agreement(const ClusterAssignment& a, const ClusterAssignment& b);

/// "node,label" with a header line.
void write_assignment_csv(std::ostream& out, const ClusterAssignment& assignment);

}  // namespace wavedmd
