#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

namespace wavedmd {

struct KMeansOptions {
  std::uint64_t seed = 0;
  int restarts = 100;  ///< capped at 100
  int max_iterations = 500;
  double relative_tol = 1e-10;
};

struct KMeansResult {
  std::vector<int> labels;
  Eigen::MatrixXd centers;  ///< k x d
  double inertia = 0.0;
};

/// Lloyd's algorithm from k-means++ seeds, best of `restarts` runs. Restart r
/// draws from its own generator seeded by (seed, r), so the result is a pure
/// function of the inputs. Labels are renumbered by first occurrence.
/// Throws InputError if k exceeds the number of distinct rows.
KMeansResult kmeans(const Eigen::MatrixXd& rows, int k, const KMeansOptions& opts = {});

}  // namespace wavedmd
