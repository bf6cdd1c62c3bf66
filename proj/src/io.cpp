#include "wavedmd/io.hpp"

#include <json.hpp>

#include "wavedmd/wave.hpp"

namespace wavedmd {

std::string spectrum_json(const LocalSpectrum& spectrum) {
  nlohmann::ordered_json j;
  j["node"] = spectrum.node;
  j["method"] = "dmd";
  j["rank"] = spectrum.rank;
  auto& modes = j["modes"] = nlohmann::ordered_json::array();
  for (const auto& m : spectrum.modes) {
    modes.push_back({{"omega", m.omega}, {"lambda", m.lambda}, {"re_a", m.amplitude.real()},
                     {"im_a", m.amplitude.imag()}});
  }
  return j.dump();
}

std::string spectrum_json(const FftSpectrum& spectrum, double c) {
  nlohmann::ordered_json j;
  j["node"] = spectrum.node;
  j["method"] = "fft";
  j["padded_length"] = spectrum.padded_length;
  auto& modes = j["modes"] = nlohmann::ordered_json::array();
  for (Index k : spectrum.retained) {
    const auto& b = spectrum.bins[static_cast<std::size_t>(k)];
    modes.push_back({{"omega", b.omega}, {"lambda", lambda_from_omega(b.omega, c)},
                     {"re_a", b.coefficient.real()}, {"im_a", b.coefficient.imag()}});
  }
  return j.dump();
}

}  // namespace wavedmd
