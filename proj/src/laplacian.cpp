#include "wavedmd/laplacian.hpp"

#include <string>
#include <vector>

#include "wavedmd/errors.hpp"

namespace wavedmd {

Laplacian build_laplacian(const Graph& g) {
  const Index n = g.num_nodes();
  if (n == 0) throw InputError("empty graph");
  const Eigen::VectorXd deg = g.weighted_degrees();
  for (Index i = 0; i < n; ++i) {
    if (!(deg(i) > 0.0)) throw InputError("node " + std::to_string(i) + " is isolated");
  }
  if (!g.is_connected()) throw InputError("graph is disconnected");

  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(static_cast<std::size_t>(n) + 2 * g.num_edges());
  for (Index i = 0; i < n; ++i) triplets.emplace_back(i, i, 1.0);
  for (const auto& e : g.edges()) {
    triplets.emplace_back(e.i, e.j, -e.w / deg(e.i));
    triplets.emplace_back(e.j, e.i, -e.w / deg(e.j));
  }
  SparseRowMatrix entries(n, n);
  entries.setFromTriplets(triplets.begin(), triplets.end());
  entries.makeCompressed();
  return Laplacian(std::move(entries), deg);
}

Eigen::MatrixXd Laplacian::symmetric_form() const {
  const Eigen::VectorXd s = degrees_.cwiseSqrt();
  return s.asDiagonal() * dense() * s.cwiseInverse().asDiagonal();
}

bool Laplacian::is_symmetric(double tol) const {
  const Eigen::MatrixXd l = dense();
  return (l - l.transpose()).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace wavedmd
