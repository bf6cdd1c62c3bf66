#include "wavedmd/spectral.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include <Eigen/Eigenvalues>

#include "wavedmd/clustering.hpp"
#include "wavedmd/errors.hpp"

namespace wavedmd {

EigenSystem eigendecompose(const Laplacian& lap) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(lap.symmetric_form());
  if (es.info() != Eigen::Success) throw NumericalError("eigensolver failed on Laplacian");
  EigenSystem out;
  out.lambdas = es.eigenvalues();
  out.vectors = lap.degrees().cwiseSqrt().cwiseInverse().asDiagonal() * es.eigenvectors();
  for (Index j = 0; j < out.vectors.cols(); ++j) {
    auto v = out.vectors.col(j);
    v.normalize();
    // Fix the sign: first entry that is clearly nonzero is positive.
    for (Index i = 0; i < v.size(); ++i) {
      if (std::abs(v(i)) > 1e-8) {
        if (v(i) < 0.0) v = -v;
        break;
      }
    }
  }
  return out;
}

ClusterAssignment spectral_cluster(const EigenSystem& es, int k, AssignmentMethod method, std::uint64_t seed) {
  if (k < 2) throw InputError("spectral clustering needs k >= 2");
  const Index n = es.size();
  if (method == AssignmentMethod::kmeans) {
    if (k > n) throw InputError("k exceeds the number of nodes");
    return kmeans_assign(es.vectors.middleCols(1, k - 1), k, seed, AssignmentSource::spectral);
  }
  const int bits = bits_for_clusters(k);
  if (bits + 1 > n) throw InputError("not enough eigenvectors for " + std::to_string(bits) + " sign bits");
  ClusterAssignment out;
  out.k = k;
  out.method = AssignmentMethod::signs;
  out.source = AssignmentSource::spectral;
  out.labels.assign(static_cast<std::size_t>(n), 0);
  for (Index i = 0; i < n; ++i) {
    int label = 0;
    bool ambiguous = false;
    for (int b = 0; b < bits; ++b) {
      const double v = es.vectors(i, b + 1);
      if (std::abs(v) < kZeroEntryTol) ambiguous = true;
      if (v >= 0.0 || std::abs(v) < kZeroEntryTol) label |= 1 << b;
    }
    out.labels[static_cast<std::size_t>(i)] = label;
    if (ambiguous) out.ambiguous_nodes.push_back(i);
  }
  return out;
}

int estimate_num_clusters(const Eigen::VectorXd& lambdas, int max_k) {
  if (max_k < 2) throw InputError("max_k must be at least 2");
  const auto n = static_cast<int>(lambdas.size());
  if (n < 3) throw InputError("need at least 3 eigenvalues to estimate k");
  const int last = std::min(max_k, n - 1);
  int best = 2;
  double best_gap = -1.0;
  for (int j = 2; j <= last; ++j) {
    const double lj = lambdas(j - 1);
    const double gap = (lambdas(j) - lj) / std::max(lj, 1e-12);
    if (gap > best_gap) {
      best_gap = gap;
      best = j;
    }
  }
  return best;
}

void write_eigenvalues_csv(std::ostream& out, const EigenSystem& es) {
  char buf[32];
  out << "index,lambda\n";
  for (Index j = 0; j < es.size(); ++j) {
    std::snprintf(buf, sizeof buf, "%.17g", es.lambdas(j));
    out << j << ',' << buf << '\n';
  }
}

void write_eigenvectors_csv(std::ostream& out, const EigenSystem& es, const std::vector<Index>& which) {
  for (Index j : which) {
    if (j < 0 || j >= es.size()) throw InputError("eigenvector index " + std::to_string(j) + " out of range");
  }
  char buf[32];
  out << "node";
  for (Index j : which) out << ",v" << j;
  out << '\n';
  for (Index i = 0; i < es.size(); ++i) {
    out << i;
    for (Index j : which) {
      std::snprintf(buf, sizeof buf, "%.17g", es.vectors(i, j));
      out << ',' << buf;
    }
    out << '\n';
  }
}

}  // namespace wavedmd
