#pragma once

#include <string>

#include "wavedmd/dmd.hpp"
#include "wavedmd/fft.hpp"

namespace wavedmd {

/// {"node", "method": "dmd", "modes": [{"omega", "lambda", "re_a", "im_a"}, ...]}
std::string spectrum_json(const LocalSpectrum& spectrum);

/// Same shape with "method": "fft"; one entry per retained bin, lambda from
/// the bin frequency at wave speed c.
std::string spectrum_json(const FftSpectrum& spectrum, double c);

}  // namespace wavedmd
