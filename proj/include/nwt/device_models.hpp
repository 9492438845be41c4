// device_models.hpp — concrete devices composed from the charge-basis engine:
// flux-tunable split junction, gate/field-tunable gatemon, dressed resonator
// coupling and T1 relaxation channels.
#pragma once

#include <functional>
#include <span>
#include <vector>

#include "nwt/qubit_core.hpp"

namespace nwt::device {

// Split junction: V_A(delta) + V_B(2 pi Phi/Phi0 - delta), flux in Phi0 units.
struct SplitJunctionDevice {
    double ec_hz{3.0e8};
    std::vector<core::JunctionChannel> channels_a;
    std::vector<core::JunctionChannel> channels_b;
    double ng{0.0};
    int series_order{core::kDefaultSeriesOrder};
    core::ChargeBasisConfig basis{};

    void validate() const;
};

// Single-junction device; gate voltage enters only through the channel
// transmissions (see GateCurve).
struct GatemonDevice {
    double ec_hz{3.0e8};
    std::vector<core::JunctionChannel> channels;
    double ng{0.0};
    int series_order{core::kDefaultSeriesOrder};
    core::ChargeBasisConfig basis{};

    void validate() const;
};

// Induced gap closing in parallel field: Delta(B) = Delta(0) sqrt(1 - (B/B_c)^2).
struct FieldModel {
    double delta0_hz{4.3e10};
    double bc_t{0.0839};

    void validate() const;
};

double gap_vs_field(double b_t, const FieldModel& fm); // throws field_above_critical

struct ResonatorCoupling {
    double f_bare_hz{6.732e9};
    double g_hz{6.08e7};

    void validate() const;
};

// kappa is a stated model assumption (single-mode dispersive Purcell); Q_d a
// phenomenological dielectric quality factor.
struct RelaxationModel {
    double kappa_hz{1.0e6};
    double q_d{4.6e5};

    void validate() const;
};

core::TransitionSet split_junction_point(const SplitJunctionDevice& dev, double flux_phi0);

// Sweep evaluation; points are independent and dispatched through the parallel
// kernel driver (threads == 1 is the serial reference path). The basis cutoff
// is calibrated once at the deepest-potential point and reused.
std::vector<core::TransitionSet> split_junction_spectrum(const SplitJunctionDevice& dev,
                                                         std::span<const double> flux_phi0,
                                                         int threads = 1);

core::TransitionSet gatemon_point(const GatemonDevice& dev);
core::TransitionSet gatemon_point_at_field(const GatemonDevice& dev, const FieldModel& fm,
                                           double b_t);
std::vector<core::TransitionSet> gatemon_spectrum_vs_field(const GatemonDevice& dev,
                                                           const FieldModel& fm,
                                                           std::span<const double> b_t,
                                                           int threads = 1);

// User-supplied lookup V_G -> per-channel transmissions (piecewise linear); the
// tuning is not modeled physically.
struct GateCurve {
    std::vector<double> vg_v;                        // strictly increasing
    std::vector<std::vector<double>> transmissions;  // per point, one entry per channel

    void validate(std::size_t n_channels) const;
    std::vector<double> at(double vg) const; // throws out_of_table beyond range
};

// Adaptive central difference of f01_of_control with one Richardson step.
// initial_step defaults to 1e-3 of the control's natural scale.
struct SensitivityOptions {
    double initial_step;
    double rtol{1e-7};
    int max_halvings{20};
};

double control_sensitivity(const std::function<double(double)>& f01_of_control, double point,
                           const SensitivityOptions& opts); // throws step_underflow

double flux_sensitivity(const SplitJunctionDevice& dev, double flux_phi0);
double field_sensitivity(const GatemonDevice& dev, const FieldModel& fm, double b_t);
double gate_sensitivity(const GatemonDevice& dev, const GateCurve& curve, double vg_v);

// Two-level dressed branches; f_resonator is the branch adiabatically connected
// to f_bare at large detuning.
struct DressedPair {
    double f_resonator_hz;
    double f_qubit_hz;
};

DressedPair dressed_frequencies(double f_qubit_bare_hz, const ResonatorCoupling& rc);

// Inverts the resonator-branch relation; returns the dressed qubit frequency.
// Throws no_information when f_R == f_bare within tolerance, branch_ambiguity
// when |f_R - f_bare| >= g.
double infer_f01_from_fr(double f_r_measured_hz, const ResonatorCoupling& rc);

// Single-mode dispersive Purcell limit, T1 = (f01 - f_bare)^2 / (2 pi kappa g^2).
// Throws on_resonance when |f01 - f_bare| < kappa.
double t1_purcell_s(double f01_hz, const ResonatorCoupling& rc, double kappa_hz);

// 1/T1 = 1/T1_P + 2 pi f01 / Q_d
double t1_total_s(double f01_hz, const RelaxationModel& rm, const ResonatorCoupling& rc);

} // namespace nwt::device
