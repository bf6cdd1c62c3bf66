#pragma once

#include <complex>
#include <numbers>
#include <span>
#include <utility>
#include <vector>

#include "wavedmd/errors.hpp"
#include "wavedmd/graph.hpp"

namespace wavedmd {

/// Smallest power of two >= n (n >= 1).
Index next_power_of_two(Index n);

/// In-place iterative radix-2 Cooley-Tukey transform,
/// X_k = sum_t x_t e^{-2 pi i k t / n}. The size must be a power of two.
template <typename Real>
void fft_radix2(std::vector<std::complex<Real>>& a) {
  const std::size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0) throw InputError("radix-2 transform needs a power-of-two length");
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const Real angle = -2 * std::numbers::pi_v<Real> / static_cast<Real>(len);
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        // Twiddles are evaluated directly; recurrences drift at n ~ 1e5.
        const std::complex<Real> w = std::polar(Real(1), angle * static_cast<Real>(k));
        const std::complex<Real> u = a[start + k];
        const std::complex<Real> v = a[start + k + len / 2] * w;
        a[start + k] = u + v;
        a[start + k + len / 2] = u - v;
      }
    }
  }
}

/// Zero-pads to the next power of two and transforms. Returns all bins.
std::vector<std::complex<double>> padded_dft(std::span<const double> trace);

/// Bins 0 and 1 carry the constant mode and its leakage.
inline constexpr Index kFftDcRegion = 2;
inline constexpr double kDefaultFftThreshold = 0.01;

struct FftBin {
  Index index = 0;
  double omega = 0.0;      ///< 2 pi index / padded_length
  double magnitude = 0.0;  ///< relative to the largest bin outside the DC region
  std::complex<double> coefficient;
};

struct FftSpectrum {
  Index node = -1;
  Index padded_length = 0;
  /// Non-negative frequencies, bins 0..padded_length/2.
  std::vector<FftBin> bins;
  /// Bin indices with magnitude >= threshold, ascending omega.
  std::vector<Index> retained;
};

/// Per-node frequency extraction of the FFT baseline: zero-padding to a power
/// of two, no window, magnitudes scaled so the largest bin outside the DC
/// region is 1, then thresholded.
FftSpectrum fft_local_spectrum(std::span<const double> trace, double threshold = kDefaultFftThreshold,
                               Index node = -1);

/// Smallest retained bin outside the DC region; its frequency is the estimate
/// of omega_2 and its coefficient carries the node's eigenvector sign.
/// Throws NumericalError when no oscillatory bin is retained.
const FftBin& fft_mode2_bin(const FftSpectrum& spectrum);
double fft_omega2_estimate(const FftSpectrum& spectrum);

/// Retained bins outside the DC region, ascending omega.
std::vector<FftBin> fft_oscillatory_bins(const FftSpectrum& spectrum);

}  // namespace wavedmd
