#include <doctest.h>

#include <numbers>

#include "wavedmd/fft.hpp"
#include "wavedmd/random.hpp"

using namespace wavedmd;

namespace {

std::vector<double> tone(double omega, Index length) {
  std::vector<double> x(static_cast<std::size_t>(length));
  for (Index t = 0; t < length; ++t) x[static_cast<std::size_t>(t)] = std::cos(omega * static_cast<double>(t));
  return x;
}

}  // namespace

TEST_CASE("next power of two") {
  CHECK(next_power_of_two(1) == 1);
  CHECK(next_power_of_two(2) == 2);
  CHECK(next_power_of_two(3) == 4);
  CHECK(next_power_of_two(1000) == 1024);
  CHECK(next_power_of_two(1024) == 1024);
  CHECK_THROWS_AS(next_power_of_two(0), InputError);
}

TEST_CASE("radix-2 transform matches the direct DFT") {
  Rng rng(5);
  std::vector<std::complex<double>> x(64);
  for (auto& v : x) v = {uniform_in(rng, -1, 1), uniform_in(rng, -1, 1)};
  auto y = x;
  fft_radix2(y);
  for (std::size_t k = 0; k < x.size(); ++k) {
    std::complex<double> direct = 0.0;
    for (std::size_t t = 0; t < x.size(); ++t) {
      direct += x[t] * std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(k * t) / 64.0);
    }
    CHECK(std::abs(direct - y[k]) < 1e-12);
  }
  std::vector<std::complex<double>> bad(6);
  CHECK_THROWS_AS(fft_radix2(bad), InputError);
}

TEST_CASE("Parseval with zero padding") {
  Rng rng(8);
  for (Index length : {5, 64, 100, 1000}) {
    std::vector<double> x(static_cast<std::size_t>(length));
    for (auto& v : x) v = uniform_in(rng, -1, 1);
    const auto y = padded_dft(x);
    double energy_t = 0.0;
    double energy_f = 0.0;
    for (double v : x) energy_t += v * v;
    for (const auto& v : y) energy_f += std::norm(v);
    CHECK(std::abs(energy_f - static_cast<double>(y.size()) * energy_t) < 1e-9 * energy_f);
  }
}

TEST_CASE("on-grid tone retains exactly one bin") {
  const auto x = tone(2.0 * std::numbers::pi * 8.0 / 64.0, 64);
  const FftSpectrum s = fft_local_spectrum(x, 0.01);
  CHECK(s.padded_length == 64);
  CHECK(s.bins.size() == 33);
  REQUIRE(s.retained == std::vector<Index>{8});
  CHECK(fft_omega2_estimate(s) == std::numbers::pi / 4.0);
  CHECK(s.bins[8].magnitude == 1.0);
}

TEST_CASE("off-grid tone leaks into several bins near omega") {
  const FftSpectrum s = fft_local_spectrum(tone(1.0, 64), 0.01);
  const auto bins = fft_oscillatory_bins(s);
  CHECK(bins.size() > 2);
  double peak = 0.0;
  double where = 0.0;
  for (const auto& b : bins) {
    if (b.magnitude > peak) {
      peak = b.magnitude;
      where = b.omega;
    }
  }
  CHECK(std::abs(where - 1.0) <= std::numbers::pi / 64.0);
}

TEST_CASE("estimates lie on the frequency grid") {
  const FftSpectrum s = fft_local_spectrum(tone(0.37, 100), 0.01);
  const double w = fft_omega2_estimate(s);
  const double k = w * static_cast<double>(s.padded_length) / (2.0 * std::numbers::pi);
  CHECK(k == doctest::Approx(std::round(k)).epsilon(1e-12));
}

TEST_CASE("DC region does not set the scale") {
  std::vector<double> x = tone(2.0 * std::numbers::pi * 8.0 / 64.0, 64);
  for (auto& v : x) v = 100.0 + 0.1 * v;
  const FftSpectrum s = fft_local_spectrum(x, 0.01);
  CHECK(s.bins[8].magnitude == doctest::Approx(1.0));
  CHECK(s.bins[0].magnitude > 1.0);
  CHECK(fft_mode2_bin(s).index == 8);
}

TEST_CASE("constant trace has no oscillatory bin") {
  const FftSpectrum s = fft_local_spectrum(std::vector<double>(32, 1.0), 0.01);
  CHECK(fft_oscillatory_bins(s).empty());
  CHECK_THROWS_AS(fft_mode2_bin(s), NumericalError);
}
