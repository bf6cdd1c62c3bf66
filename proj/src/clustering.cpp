#include "wavedmd/clustering.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <ostream>

#include "wavedmd/errors.hpp"
#include "wavedmd/kmeans.hpp"

namespace wavedmd {

std::string_view to_string(AssignmentMethod m) { return m == AssignmentMethod::signs ? "signs" : "kmeans"; }

std::string_view to_string(AssignmentSource s) {
  switch (s) {
    case AssignmentSource::dmd: return "dmd";
    case AssignmentSource::fft: return "fft";
    case AssignmentSource::spectral: return "spectral";
  }
  return "unknown";
}

int bits_for_clusters(int k) {
  if (k < 1) throw InputError("number of clusters must be positive");
  int bits = 0;
  while ((1 << bits) < k) ++bits;
  return bits;
}

int sign_encode(std::span<const double> coeffs, int bits) {
  if (bits < 0 || bits > 30) throw InputError("bit count out of range");
  if (coeffs.size() < static_cast<std::size_t>(bits) + 1) {
    throw InputError("sign encoding needs " + std::to_string(bits + 1) + " coefficients, got " +
                     std::to_string(coeffs.size()));
  }
  int label = 0;
  for (int j = 1; j <= bits; ++j) {
    if (coeffs[static_cast<std::size_t>(j)] > 0.0) label |= 1 << (j - 1);
  }
  return label;
}

ClusterAssignment kmeans_assign(const Eigen::MatrixXd& rows, int k, std::uint64_t seed, AssignmentSource source) {
  KMeansOptions opts;
  opts.seed = seed;
  ClusterAssignment out;
  out.labels = kmeans(rows, k, opts).labels;
  out.k = k;
  out.method = AssignmentMethod::kmeans;
  out.source = source;
  return out;
}

namespace {

std::vector<int> compact(std::span<const int> labels, int& count) {
  std::map<int, int> ids;
  std::vector<int> out;
  out.reserve(labels.size());
  for (int l : labels) out.push_back(ids.emplace(l, static_cast<int>(ids.size())).first->second);
  count = static_cast<int>(ids.size());
  return out;
}

// Minimum-cost assignment on a square matrix (Jonker-Volgenant style
// potentials), returns the optimal cost.
double hungarian_min_cost(const std::vector<std::vector<double>>& cost) {
  const std::size_t n = cost.size();
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), minv(n + 1);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  std::vector<char> used(n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::fill(minv.begin(), minv.end(), inf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = p[j0];
      double delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  double total = 0.0;
  for (std::size_t j = 1; j <= n; ++j) total += cost[p[j] - 1][j - 1];
  return total;
}

}  // namespace

double agreement(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) throw InputError("assignments have different lengths");
  if (a.empty()) throw InputError("empty assignment");
  int na = 0;
  int nb = 0;
  const auto ca = compact(a, na);
  const auto cb = compact(b, nb);
  const auto n = static_cast<std::size_t>(std::max(na, nb));
  std::vector<std::vector<double>> cost(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < ca.size(); ++i) {
    cost[static_cast<std::size_t>(ca[i])][static_cast<std::size_t>(cb[i])] -= 1.0;
  }
  return -hungarian_min_cost(cost) / static_cast<double>(a.size());
}

double agreement(const ClusterAssignment& a, const ClusterAssignment& b) { return agreement(a.labels, b.labels); }

void write_assignment_csv(std::ostream& out, const ClusterAssignment& assignment) {
  out << "node,label\n";
  for (std::size_t i = 0; i < assignment.labels.size(); ++i) out << i << ',' << assignment.labels[i] << '\n';
}

}  // namespace wavedmd
