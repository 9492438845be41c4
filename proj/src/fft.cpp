// fft.cpp — FFTW3 wrappers; plan creation/destruction guarded by a global mutex
#include "nwt/fft.hpp"

#include <fftw3.h>

#include <mutex>

#include "nwt/errors.hpp"

namespace nwt::fft {

namespace {
std::mutex& plan_mutex() {
    static std::mutex m;
    return m;
}
} // namespace

std::vector<std::complex<double>> rfft(const std::vector<double>& x) {
    const std::size_t n = x.size();
    require(n >= 2, Errc::invalid_argument, "rfft: need at least 2 samples");

    double* in = fftw_alloc_real(n);
    fftw_complex* out = fftw_alloc_complex(n / 2 + 1);
    std::copy(x.begin(), x.end(), in);

    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(plan_mutex());
        plan = fftw_plan_dft_r2c_1d(static_cast<int>(n), in, out, FFTW_ESTIMATE);
    }
    fftw_execute(plan);

    std::vector<std::complex<double>> result(n / 2 + 1);
    for (std::size_t k = 0; k < result.size(); ++k) {
        result[k] = {out[k][0], out[k][1]};
    }

    {
        std::lock_guard<std::mutex> lock(plan_mutex());
        fftw_destroy_plan(plan);
    }
    fftw_free(in);
    fftw_free(out);
    return result;
}

std::vector<double> irfft(const std::vector<std::complex<double>>& spectrum, std::size_t n) {
    require(n >= 2, Errc::invalid_argument, "irfft: need output length >= 2");
    require(spectrum.size() == n / 2 + 1, Errc::invalid_argument,
            "irfft: spectrum size must equal n/2 + 1");

    fftw_complex* in = fftw_alloc_complex(spectrum.size());
    double* out = fftw_alloc_real(n);
    for (std::size_t k = 0; k < spectrum.size(); ++k) {
        in[k][0] = spectrum[k].real();
        in[k][1] = spectrum[k].imag();
    }

    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(plan_mutex());
        plan = fftw_plan_dft_c2r_1d(static_cast<int>(n), in, out, FFTW_ESTIMATE);
    }
    fftw_execute(plan);

    std::vector<double> result(n);
    const double scale = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) result[i] = out[i] * scale;

    {
        std::lock_guard<std::mutex> lock(plan_mutex());
        fftw_destroy_plan(plan);
    }
    fftw_free(in);
    fftw_free(out);
    return result;
}

} // namespace nwt::fft
