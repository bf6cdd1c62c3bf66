#include "wavedmd/kmeans.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "wavedmd/errors.hpp"
#include "wavedmd/random.hpp"

namespace wavedmd {

namespace {

using Index = Eigen::Index;

Index distinct_rows(const Eigen::MatrixXd& rows) {
  std::set<std::vector<double>> seen;
  for (Index i = 0; i < rows.rows(); ++i) {
    const Eigen::VectorXd r = rows.row(i).transpose();
    seen.emplace(r.data(), r.data() + r.size());
  }
  return static_cast<Index>(seen.size());
}

Rng restart_rng(std::uint64_t seed, int restart) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(restart)};
  return Rng(seq);
}

Eigen::MatrixXd plus_plus_seeds(const Eigen::MatrixXd& rows, int k, Rng& rng) {
  const Index n = rows.rows();
  Eigen::MatrixXd centers(k, rows.cols());
  centers.row(0) = rows.row(static_cast<Index>(rng() % static_cast<std::uint64_t>(n)));
  Eigen::VectorXd d2 = (rows.rowwise() - centers.row(0)).rowwise().squaredNorm();
  for (int c = 1; c < k; ++c) {
    const double total = d2.sum();
    double target = unit_uniform(rng) * total;
    Index pick = n - 1;
    for (Index i = 0; i < n; ++i) {
      if (d2(i) <= 0.0) continue;
      target -= d2(i);
      if (target < 0.0) {
        pick = i;
        break;
      }
    }
    // Guard against rounding landing on an already chosen point.
    if (d2(pick) <= 0.0) d2.maxCoeff(&pick);
    centers.row(c) = rows.row(pick);
    d2 = d2.cwiseMin((rows.rowwise() - centers.row(c)).rowwise().squaredNorm());
  }
  return centers;
}

double assign(const Eigen::MatrixXd& rows, const Eigen::MatrixXd& centers, std::vector<int>& labels,
              Eigen::VectorXd& dist) {
  double inertia = 0.0;
  for (Index i = 0; i < rows.rows(); ++i) {
    Index best = 0;
    dist(i) = (centers.rowwise() - rows.row(i)).rowwise().squaredNorm().minCoeff(&best);
    labels[static_cast<std::size_t>(i)] = static_cast<int>(best);
    inertia += dist(i);
  }
  return inertia;
}

KMeansResult lloyd(const Eigen::MatrixXd& rows, int k, Eigen::MatrixXd centers, const KMeansOptions& opts) {
  const Index n = rows.rows();
  KMeansResult out;
  out.labels.assign(static_cast<std::size_t>(n), 0);
  Eigen::VectorXd dist(n);
  double inertia = assign(rows, centers, out.labels, dist);
  for (int it = 0; it < opts.max_iterations; ++it) {
    Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(k, rows.cols());
    std::vector<Index> counts(static_cast<std::size_t>(k), 0);
    for (Index i = 0; i < n; ++i) {
      sums.row(out.labels[static_cast<std::size_t>(i)]) += rows.row(i);
      ++counts[static_cast<std::size_t>(out.labels[static_cast<std::size_t>(i)])];
    }
    for (int c = 0; c < k; ++c) {
      if (counts[static_cast<std::size_t>(c)] > 0) {
        centers.row(c) = sums.row(c) / static_cast<double>(counts[static_cast<std::size_t>(c)]);
      } else {
        Index far = 0;
        dist.maxCoeff(&far);
        centers.row(c) = rows.row(far);
        dist(far) = 0.0;
      }
    }
    const double next = assign(rows, centers, out.labels, dist);
    const bool converged = std::abs(inertia - next) <= opts.relative_tol * std::max(inertia, 1e-300);
    inertia = next;
    if (converged) break;
  }
  out.centers = std::move(centers);
  out.inertia = inertia;
  return out;
}

void renumber(KMeansResult& r) {
  std::vector<int> map(static_cast<std::size_t>(r.centers.rows()), -1);
  int next = 0;
  for (int& l : r.labels) {
    auto& m = map[static_cast<std::size_t>(l)];
    if (m < 0) m = next++;
    l = m;
  }
  Eigen::MatrixXd centers(r.centers.rows(), r.centers.cols());
  for (Index c = 0; c < r.centers.rows(); ++c) {
    const int m = map[static_cast<std::size_t>(c)];
    centers.row(m < 0 ? next++ : m) = r.centers.row(c);
  }
  r.centers = std::move(centers);
}

}  // namespace

KMeansResult kmeans(const Eigen::MatrixXd& rows, int k, const KMeansOptions& opts) {
  if (k < 1) throw InputError("k-means needs k >= 1");
  if (rows.rows() == 0 || rows.cols() == 0) throw InputError("k-means needs a non-empty data matrix");
  if (!rows.allFinite()) throw InputError("k-means input contains non-finite values");
  if (distinct_rows(rows) < k) throw InputError("k exceeds the number of distinct points");
  const int restarts = std::clamp(opts.restarts, 1, 100);

  KMeansResult best;
  best.inertia = std::numeric_limits<double>::infinity();
  for (int r = 0; r < restarts; ++r) {
    Rng rng = restart_rng(opts.seed, r);
    KMeansResult run = lloyd(rows, k, plus_plus_seeds(rows, k, rng), opts);
    if (run.inertia < best.inertia) best = std::move(run);
  }
  renumber(best);
  return best;
}

}  // namespace wavedmd
