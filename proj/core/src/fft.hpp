#pragma once

#include <complex>
#include <vector>

namespace mdphase::detail {

// In-place DFT with FFTW conventions: forward multiplies by e^{-2pi i km/n},
// backward by e^{+2pi i km/n} and divides by n, so forward then backward is
// the identity up to rounding. Thread-safe: plans are cached per thread and
// the global FFTW planner is mutex-guarded.
void fft_forward(std::vector<std::complex<double>>& a);
void fft_backward(std::vector<std::complex<double>>& a);

} // namespace mdphase::detail
