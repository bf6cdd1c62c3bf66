#include "wavedmd/fft.hpp"

#include <algorithm>

namespace wavedmd {

Index next_power_of_two(Index n) {
  if (n < 1) throw InputError("next_power_of_two needs n >= 1");
  Index p = 1;
  while (p < n) p <<= 1;
  return p;
}

std::vector<std::complex<double>> padded_dft(std::span<const double> trace) {
  if (trace.empty()) throw InputError("cannot transform an empty trace");
  std::vector<std::complex<double>> a(static_cast<std::size_t>(next_power_of_two(static_cast<Index>(trace.size()))));
  std::copy(trace.begin(), trace.end(), a.begin());
  fft_radix2(a);
  return a;
}

FftSpectrum fft_local_spectrum(std::span<const double> trace, double threshold, Index node) {
  if (!(threshold > 0.0 && threshold < 1.0)) throw InputError("FFT threshold must lie in (0, 1)");
  const auto coeffs = padded_dft(trace);
  const auto p = static_cast<Index>(coeffs.size());
  if (p < 2 * kFftDcRegion) throw InputError("trace too short for an FFT spectrum");

  FftSpectrum out;
  out.node = node;
  out.padded_length = p;
  double peak = 0.0;
  for (Index k = kFftDcRegion; k <= p / 2; ++k) peak = std::max(peak, std::abs(coeffs[static_cast<std::size_t>(k)]));
  const double scale = peak > 0.0 ? 1.0 / peak : 0.0;

  out.bins.reserve(static_cast<std::size_t>(p / 2 + 1));
  for (Index k = 0; k <= p / 2; ++k) {
    const auto& x = coeffs[static_cast<std::size_t>(k)];
    FftBin bin;
    bin.index = k;
    bin.omega = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(p);
    bin.magnitude = std::abs(x) * scale;
    bin.coefficient = x;
    if (peak > 0.0 && bin.magnitude >= threshold) out.retained.push_back(k);
    out.bins.push_back(bin);
  }
  return out;
}

std::vector<FftBin> fft_oscillatory_bins(const FftSpectrum& spectrum) {
  std::vector<FftBin> out;
  for (Index k : spectrum.retained) {
    if (k >= kFftDcRegion) out.push_back(spectrum.bins[static_cast<std::size_t>(k)]);
  }
  return out;
}

const FftBin& fft_mode2_bin(const FftSpectrum& spectrum) {
  for (Index k : spectrum.retained) {
    if (k >= kFftDcRegion) return spectrum.bins[static_cast<std::size_t>(k)];
  }
  throw NumericalError("no oscillatory FFT bin above threshold");
}

double fft_omega2_estimate(const FftSpectrum& spectrum) { return fft_mode2_bin(spectrum).omega; }

}  // namespace wavedmd
