// fft.hpp — real-input FFT helpers on top of FFTW3
#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace nwt::fft {

// Forward DFT of a real sequence: X_k = sum_n x_n e^{-i 2 pi k n / N},
// k = 0..floor(N/2). Safe to call concurrently (planning is serialized).
std::vector<std::complex<double>> rfft(const std::vector<double>& x);

// Inverse of rfft with 1/N normalization; n is the real output length and must
// satisfy spectrum.size() == n/2 + 1.
std::vector<double> irfft(const std::vector<std::complex<double>>& spectrum, std::size_t n);

} // namespace nwt::fft
