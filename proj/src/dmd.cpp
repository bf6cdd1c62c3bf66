#include "wavedmd/dmd.hpp"

#include <algorithm>
#include <numeric>

#include "wavedmd/wave.hpp"

namespace wavedmd {

namespace detail {

void sort_modes_by_real_part(Eigen::VectorXcd& eigenvalues, Eigen::MatrixXcd& modes) {
  std::vector<Index> order(static_cast<std::size_t>(eigenvalues.size()));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
    const auto& x = eigenvalues(a);
    const auto& y = eigenvalues(b);
    if (x.real() != y.real()) return x.real() > y.real();
    return x.imag() > y.imag();
  });
  Eigen::VectorXcd ev(eigenvalues.size());
  Eigen::MatrixXcd md(modes.rows(), modes.cols());
  for (Index c = 0; c < eigenvalues.size(); ++c) {
    const Index j = order[static_cast<std::size_t>(c)];
    ev(c) = eigenvalues(j);
    md.col(c) = modes.col(j);
  }
  eigenvalues = std::move(ev);
  modes = std::move(md);
}

}  // namespace detail

std::vector<SpectralMode> LocalSpectrum::oscillatory(double zero_tol) const {
  std::vector<SpectralMode> out;
  for (const auto& m : modes) {
    if (m.omega > zero_tol) out.push_back(m);
  }
  return out;
}

LocalSpectrum merge_conjugate_modes(const DmdResult& result, double c, double conjugate_tol, Index node) {
  if (result.amplitudes.size() != result.size()) throw InputError("DMD amplitudes have not been solved");
  LocalSpectrum out;
  out.node = node;
  out.c = c;
  out.rank = result.rank;

  const Index n = result.size();
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  for (Index j = 0; j < n; ++j) {
    if (used[static_cast<std::size_t>(j)]) continue;
    used[static_cast<std::size_t>(j)] = 1;
    Index keep = j;
    const auto mu = result.eigenvalues(j);
    if (std::abs(mu - std::conj(mu)) >= conjugate_tol) {
      for (Index k = j + 1; k < n; ++k) {
        if (!used[static_cast<std::size_t>(k)] && std::abs(mu - std::conj(result.eigenvalues(k))) < conjugate_tol) {
          used[static_cast<std::size_t>(k)] = 1;
          if (result.eigenvalues(k).imag() > mu.imag()) keep = k;
          break;
        }
      }
    }
    SpectralMode m;
    m.eigenvalue = result.eigenvalues(keep);
    m.amplitude = result.amplitudes(keep);
    m.omega = std::abs(std::arg(m.eigenvalue));
    m.lambda = lambda_from_omega(m.omega, c);
    out.modes.push_back(m);
  }
  std::stable_sort(out.modes.begin(), out.modes.end(),
                   [](const SpectralMode& a, const SpectralMode& b) { return a.omega < b.omega; });
  return out;
}

LocalSpectrum local_spectrum(const Eigen::VectorXd& trace, Index k_rows, Index m_cols, double c,
                             const LocalSpectrumOptions& opts, Index node) {
  const DmdResult result = dmd_from_trace(trace, k_rows, m_cols, opts.dmd);
  return merge_conjugate_modes(result, c, opts.conjugate_tol, node);
}

}  // namespace wavedmd
