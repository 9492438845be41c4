// device_models.cpp — device spectra, sensitivities, dressed states, T1 channels
#include "nwt/device_models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "nwt/parallel.hpp"

namespace nwt::device {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double series_depth(const core::FourierPotential& p) {
    double d = 0.0;
    for (std::size_t k = 1; k < p.cos_coeff.size(); ++k) {
        d += std::abs(p.cos_coeff[k]);
        if (k < p.sin_coeff.size()) d += std::abs(p.sin_coeff[k]);
    }
    return d;
}
} // namespace

void SplitJunctionDevice::validate() const {
    require(ec_hz > 0.0, Errc::invalid_argument, "SplitJunctionDevice: E_C must be > 0");
    require(!channels_a.empty() && !channels_b.empty(), Errc::invalid_argument,
            "SplitJunctionDevice: both junctions need at least one channel");
    for (const auto& ch : channels_a) ch.validate();
    for (const auto& ch : channels_b) ch.validate();
    basis.validate();
}

void GatemonDevice::validate() const {
    require(ec_hz > 0.0, Errc::invalid_argument, "GatemonDevice: E_C must be > 0");
    require(!channels.empty(), Errc::invalid_argument, "GatemonDevice: needs at least one channel");
    for (const auto& ch : channels) ch.validate();
    basis.validate();
}

void FieldModel::validate() const {
    require(delta0_hz > 0.0, Errc::invalid_argument, "FieldModel: Delta(0) must be > 0");
    require(bc_t > 0.0, Errc::invalid_argument, "FieldModel: B_c must be > 0");
}

void ResonatorCoupling::validate() const {
    require(f_bare_hz > 0.0, Errc::invalid_argument, "ResonatorCoupling: f_bare must be > 0");
    require(g_hz > 0.0, Errc::invalid_argument, "ResonatorCoupling: g must be > 0");
}

void RelaxationModel::validate() const {
    require(kappa_hz >= 0.0, Errc::invalid_argument, "RelaxationModel: kappa must be >= 0");
    require(q_d > 0.0, Errc::invalid_argument, "RelaxationModel: Q_d must be > 0");
}

double gap_vs_field(double b_t, const FieldModel& fm) {
    fm.validate();
    require(b_t >= 0.0, Errc::invalid_argument, "gap_vs_field: B must be >= 0");
    require(b_t <= fm.bc_t, Errc::field_above_critical,
            "gap_vs_field: B exceeds the critical field");
    const double x = b_t / fm.bc_t;
    return fm.delta0_hz * std::sqrt(std::max(0.0, 1.0 - x * x));
}

namespace {

core::FourierPotential split_junction_potential(const core::PeriodicPotential& a,
                                                const core::PeriodicPotential& b,
                                                double flux_phi0) {
    return core::FourierPotential::shifted_sum(a, b, kTwoPi * flux_phi0);
}

core::ChargeBasisConfig basis_with_ng(const core::ChargeBasisConfig& basis, double ng) {
    core::ChargeBasisConfig cfg = basis;
    cfg.ng = ng;
    return cfg;
}

} // namespace

core::TransitionSet split_junction_point(const SplitJunctionDevice& dev, double flux_phi0) {
    dev.validate();
    const auto series_a = core::channels_to_series(dev.channels_a, dev.series_order);
    const auto series_b = core::channels_to_series(dev.channels_b, dev.series_order);
    const auto pot = split_junction_potential(series_a, series_b, flux_phi0);
    return core::converged_transitions(dev.ec_hz, pot, basis_with_ng(dev.basis, dev.ng));
}

std::vector<core::TransitionSet> split_junction_spectrum(const SplitJunctionDevice& dev,
                                                         std::span<const double> flux_phi0,
                                                         int threads) {
    dev.validate();
    if (flux_phi0.empty()) return {};
    const auto series_a = core::channels_to_series(dev.channels_a, dev.series_order);
    const auto series_b = core::channels_to_series(dev.channels_b, dev.series_order);
    const auto cfg = basis_with_ng(dev.basis, dev.ng);

    // calibrate the cutoff once, at the deepest potential of the sweep
    std::size_t deepest = 0;
    double depth = -1.0;
    for (std::size_t i = 0; i < flux_phi0.size(); ++i) {
        const double d = series_depth(split_junction_potential(series_a, series_b, flux_phi0[i]));
        if (d > depth) {
            depth = d;
            deepest = i;
        }
    }
    core::ChargeBasisConfig fixed = cfg;
    fixed.n_cut = core::converged_cutoff(
        dev.ec_hz, split_junction_potential(series_a, series_b, flux_phi0[deepest]), cfg);

    std::vector<core::TransitionSet> out(flux_phi0.size());
    par::for_each_index(flux_phi0.size(), threads, [&](std::size_t i) {
        const auto pot = split_junction_potential(series_a, series_b, flux_phi0[i]);
        out[i] = core::transitions_at_cutoff(dev.ec_hz, pot, fixed);
    });
    return out;
}

namespace {

GatemonDevice scaled_gatemon(const GatemonDevice& dev, const FieldModel& fm, double b_t) {
    const double factor = gap_vs_field(b_t, fm) / fm.delta0_hz;
    GatemonDevice scaled = dev;
    for (auto& ch : scaled.channels) ch.gap_hz *= factor;
    return scaled;
}

} // namespace

core::TransitionSet gatemon_point(const GatemonDevice& dev) {
    dev.validate();
    const auto series = core::channels_to_series(dev.channels, dev.series_order);
    return core::converged_transitions(dev.ec_hz, core::FourierPotential::from_even(series),
                                       basis_with_ng(dev.basis, dev.ng));
}

core::TransitionSet gatemon_point_at_field(const GatemonDevice& dev, const FieldModel& fm,
                                           double b_t) {
    return gatemon_point(scaled_gatemon(dev, fm, b_t));
}

std::vector<core::TransitionSet> gatemon_spectrum_vs_field(const GatemonDevice& dev,
                                                           const FieldModel& fm,
                                                           std::span<const double> b_t,
                                                           int threads) {
    dev.validate();
    fm.validate();
    if (b_t.empty()) return {};
    for (const double b : b_t) {
        require(b >= 0.0 && b <= fm.bc_t, Errc::field_above_critical,
                "gatemon_spectrum_vs_field: sweep point outside [0, B_c]");
    }

    // deepest potential at the smallest field
    const double b_min = *std::min_element(b_t.begin(), b_t.end());
    const auto deepest = scaled_gatemon(dev, fm, b_min);
    const auto cal_series = core::channels_to_series(deepest.channels, dev.series_order);
    core::ChargeBasisConfig fixed = basis_with_ng(dev.basis, dev.ng);
    fixed.n_cut = core::converged_cutoff(dev.ec_hz, core::FourierPotential::from_even(cal_series),
                                         fixed);

    std::vector<core::TransitionSet> out(b_t.size());
    par::for_each_index(b_t.size(), threads, [&](std::size_t i) {
        const auto scaled = scaled_gatemon(dev, fm, b_t[i]);
        const auto series = core::channels_to_series(scaled.channels, dev.series_order);
        out[i] = core::transitions_at_cutoff(dev.ec_hz, core::FourierPotential::from_even(series),
                                             fixed);
    });
    return out;
}

void GateCurve::validate(std::size_t n_channels) const {
    require(vg_v.size() >= 2, Errc::invalid_argument, "GateCurve: need at least two points");
    require(vg_v.size() == transmissions.size(), Errc::invalid_argument,
            "GateCurve: vg/transmission size mismatch");
    for (std::size_t i = 1; i < vg_v.size(); ++i) {
        require(vg_v[i] > vg_v[i - 1], Errc::invalid_argument,
                "GateCurve: gate voltages must be strictly increasing");
    }
    for (const auto& row : transmissions) {
        require(row.size() == n_channels, Errc::invalid_argument,
                "GateCurve: transmission row size mismatch");
        for (double t : row) {
            require(t >= 0.0 && t <= 1.0, Errc::invalid_argument,
                    "GateCurve: transmissions must be in [0, 1]");
        }
    }
}

std::vector<double> GateCurve::at(double vg) const {
    require(vg >= vg_v.front() && vg <= vg_v.back(), Errc::out_of_table,
            "GateCurve: gate voltage outside the tabulated range");
    const auto it = std::upper_bound(vg_v.begin(), vg_v.end(), vg);
    const std::size_t hi = std::min<std::size_t>(vg_v.size() - 1,
                                                 static_cast<std::size_t>(it - vg_v.begin()));
    const std::size_t lo = hi == 0 ? 0 : hi - 1;
    if (hi == lo) return transmissions[lo];
    const double w = (vg - vg_v[lo]) / (vg_v[hi] - vg_v[lo]);
    std::vector<double> out(transmissions[lo].size());
    for (std::size_t c = 0; c < out.size(); ++c) {
        out[c] = (1.0 - w) * transmissions[lo][c] + w * transmissions[hi][c];
    }
    return out;
}

double control_sensitivity(const std::function<double(double)>& f01_of_control, double point,
                           const SensitivityOptions& opts) {
    require(opts.initial_step > 0.0, Errc::invalid_argument,
            "control_sensitivity: initial step must be > 0");

    const double f_center = f01_of_control(point);
    // derivatives smaller than this are reported as converged-to-zero
    const double abs_floor = opts.rtol * std::abs(f_center) / opts.initial_step;

    auto central = [&](double h) {
        return (f01_of_control(point + h) - f01_of_control(point - h)) / (2.0 * h);
    };

    double h = opts.initial_step;
    double d_h = central(h);
    double best = std::numeric_limits<double>::quiet_NaN();
    double best_delta = std::numeric_limits<double>::infinity();
    int growing = 0;

    for (int iter = 0; iter < opts.max_halvings; ++iter) {
        const double d_h2 = central(0.5 * h);
        const double richardson = (4.0 * d_h2 - d_h) / 3.0;
        const double delta = std::abs(d_h2 - d_h);
        if (delta <= opts.rtol * std::abs(richardson) + abs_floor) {
            return richardson;
        }
        if (delta < best_delta) {
            best_delta = delta;
            best = richardson;
            growing = 0;
        } else if (++growing >= 2) {
            // rounding noise dominates; the best estimate so far is as good as it gets
            return best;
        }
        h *= 0.5;
        d_h = d_h2;
        require(h > 1e-12 * opts.initial_step, Errc::step_underflow,
                "control_sensitivity: adaptive step collapsed");
    }
    fail(Errc::step_underflow, "control_sensitivity: no convergence before step underflow");
}

namespace {

SensitivityOptions default_opts(double natural_scale) {
    SensitivityOptions o{};
    o.initial_step = 1e-3 * natural_scale;
    return o;
}

} // namespace

double flux_sensitivity(const SplitJunctionDevice& dev, double flux_phi0) {
    dev.validate();
    const auto series_a = core::channels_to_series(dev.channels_a, dev.series_order);
    const auto series_b = core::channels_to_series(dev.channels_b, dev.series_order);
    const auto cfg = basis_with_ng(dev.basis, dev.ng);
    core::ChargeBasisConfig fixed = cfg;
    fixed.n_cut =
        core::converged_cutoff(dev.ec_hz, split_junction_potential(series_a, series_b, flux_phi0),
                               cfg);
    return control_sensitivity(
        [&](double flux) {
            const auto pot = split_junction_potential(series_a, series_b, flux);
            return core::transitions_at_cutoff(dev.ec_hz, pot, fixed).f01_hz;
        },
        flux_phi0, default_opts(1.0));
}

double field_sensitivity(const GatemonDevice& dev, const FieldModel& fm, double b_t) {
    dev.validate();
    fm.validate();
    const auto cal = core::channels_to_series(scaled_gatemon(dev, fm, b_t).channels,
                                              dev.series_order);
    core::ChargeBasisConfig fixed = basis_with_ng(dev.basis, dev.ng);
    fixed.n_cut = core::converged_cutoff(dev.ec_hz, core::FourierPotential::from_even(cal), fixed);
    auto opts = default_opts(1e-3); // tesla scale: fields are a few tens of mT
    opts.initial_step = std::min(opts.initial_step, 0.25 * (fm.bc_t - b_t) + 1e-12);
    return control_sensitivity(
        [&](double b) {
            const auto series = core::channels_to_series(scaled_gatemon(dev, fm, b).channels,
                                                         dev.series_order);
            return core::transitions_at_cutoff(dev.ec_hz, core::FourierPotential::from_even(series),
                                               fixed)
                .f01_hz;
        },
        b_t, opts);
}

double gate_sensitivity(const GatemonDevice& dev, const GateCurve& curve, double vg_v) {
    dev.validate();
    curve.validate(dev.channels.size());
    core::ChargeBasisConfig fixed = basis_with_ng(dev.basis, dev.ng);
    {
        GatemonDevice at_point = dev;
        const auto ts = curve.at(vg_v);
        for (std::size_t c = 0; c < ts.size(); ++c) at_point.channels[c].transmission = ts[c];
        const auto series = core::channels_to_series(at_point.channels, dev.series_order);
        fixed.n_cut =
            core::converged_cutoff(dev.ec_hz, core::FourierPotential::from_even(series), fixed);
    }
    return control_sensitivity(
        [&](double vg) {
            GatemonDevice d = dev;
            const auto ts = curve.at(vg);
            for (std::size_t c = 0; c < ts.size(); ++c) d.channels[c].transmission = ts[c];
            const auto series = core::channels_to_series(d.channels, dev.series_order);
            return core::transitions_at_cutoff(dev.ec_hz, core::FourierPotential::from_even(series),
                                               fixed)
                .f01_hz;
        },
        vg_v, default_opts(1.0));
}

DressedPair dressed_frequencies(double f_qubit_bare_hz, const ResonatorCoupling& rc) {
    rc.validate();
    const double mean = 0.5 * (f_qubit_bare_hz + rc.f_bare_hz);
    const double detuning = f_qubit_bare_hz - rc.f_bare_hz;
    const double split = std::sqrt(detuning * detuning + 4.0 * rc.g_hz * rc.g_hz);
    const double upper = mean + 0.5 * split;
    const double lower = mean - 0.5 * split;
    // the resonator-like branch is the one that tends to f_bare at large detuning
    if (detuning >= 0.0) return {lower, upper};
    return {upper, lower};
}

double infer_f01_from_fr(double f_r_measured_hz, const ResonatorCoupling& rc) {
    rc.validate();
    const double shift = f_r_measured_hz - rc.f_bare_hz;
    require(std::abs(shift) > 1e-12 * rc.f_bare_hz, Errc::no_information,
            "infer_f01_from_fr: resonator shift carries no dispersive information");
    require(std::abs(shift) < rc.g_hz, Errc::branch_ambiguity,
            "infer_f01_from_fr: shift exceeds g; not a resonator-like branch");
    const double f_qubit_bare = f_r_measured_hz - rc.g_hz * rc.g_hz / shift;
    // the dressed pair sums to f_qubit_bare + f_bare
    return f_qubit_bare + rc.f_bare_hz - f_r_measured_hz;
}

double t1_purcell_s(double f01_hz, const ResonatorCoupling& rc, double kappa_hz) {
    rc.validate();
    require(kappa_hz >= 0.0, Errc::invalid_argument, "t1_purcell: kappa must be >= 0");
    const double detuning = f01_hz - rc.f_bare_hz;
    require(std::abs(detuning) >= kappa_hz, Errc::on_resonance,
            "t1_purcell: dispersive model invalid within kappa of the resonator");
    if (kappa_hz == 0.0) return std::numeric_limits<double>::infinity();
    const double rate = kTwoPi * kappa_hz * rc.g_hz * rc.g_hz / (detuning * detuning);
    return 1.0 / rate;
}

double t1_total_s(double f01_hz, const RelaxationModel& rm, const ResonatorCoupling& rc) {
    rm.validate();
    const double purcell_rate = 1.0 / t1_purcell_s(f01_hz, rc, rm.kappa_hz);
    const double dielectric_rate = kTwoPi * f01_hz / rm.q_d;
    return 1.0 / (purcell_rate + dielectric_rate);
}

} // namespace nwt::device
