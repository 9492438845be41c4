// noise_dephasing.hpp — noise PSD models, the single-echo filter function,
// mean-squared-phase integrals, coherence decay and 1/e echo times.
//
// PSD conventions follow how such quantities are usually quoted: white levels
// and tabulated (instrument) spectra are one-sided; the 1/f amplitude A is the
// coefficient of the double-sided A/|f| form. psd_eval returns the as-quoted
// sum; the dephasing integral folds the 1/f component onto positive
// frequencies, i.e. it integrates S_W + 2A/f + S_tab(f).
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nwt/errors.hpp"

namespace nwt::noise {

// Tabulated one-sided PSD, log-log interpolated between points.
struct PsdTable {
    std::vector<double> freq_hz; // strictly increasing, > 0
    std::vector<double> value;   // units^2/Hz, >= 0
    bool extrapolate{false};     // power-law continuation of the edge segments

    void validate() const;
    double eval(double f_hz) const; // throws out_of_table unless extrapolate
};

struct NoisePsdModel {
    double white{0.0};      // S_W, units^2/Hz
    double one_over_f{0.0}; // A, units^2 (S = A/|f|)
    std::optional<PsdTable> table;
    std::string unit{"unit"}; // declared control unit (phi0, volt, tesla)

    void validate() const;
    bool is_zero() const;
};

double psd_eval(const NoisePsdModel& psd, double f_hz);
double dephasing_psd(const NoisePsdModel& psd, double f_hz); // one-sided equivalent

// Single-echo filter weight W(f) = tan^2(pi f t/2) sin^2(pi f t)/(pi f)^2,
// evaluated through the identical singularity-free form 4 sin^4(pi f t/2)/(pi f)^2.
double echo_filter_function(double f_hz, double t_s);

struct EchoWindow {
    double t_s{0.0};      // evolution time
    double f_min_hz{0.0}; // integration band; f_max is typically f01
    double f_max_hz{0.0};

    void validate() const;
};

// <phi^2(t)> = (2 pi D)^2 int S(f) W(f) df over the window. Composite
// per-period Gauss panels in u = f t; beyond a fixed period budget the
// oscillation is averaged analytically with an integration-by-parts
// correction, and smooth tails are handled adaptively (relative tolerance
// 1e-6; throws quadrature_not_converged when refinement stalls).
double mean_square_phase(const NoisePsdModel& psd, double d_hz_per_unit, const EchoWindow& window);

// exp(-msp/2), Gaussian-noise coherence factor
double coherence_decay(double mean_square_phase_rad2);

struct EchoTimeResult {
    double t_1e_s{0.0};
    bool exceeds_horizon{false}; // <phi^2(t_max)> < 2: no decay within the horizon
};

// Root of <phi^2(t)> = 2 by bracketing + bisection on the monotone integral.
EchoTimeResult echo_time_1e(const NoisePsdModel& psd, double d_hz_per_unit, double f01_hz,
                            double t_max_s = 100.0);

} // namespace nwt::noise
