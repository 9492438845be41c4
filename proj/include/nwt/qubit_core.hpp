// qubit_core.hpp — charge-basis Cooper-pair-box engine with periodic junction potentials
//
// All energies are stored as frequencies (E/h, in Hz); flux is measured in units
// of the flux quantum and enters as a phase shift 2*pi*flux.
#pragma once

#include <Eigen/Dense>

#include <functional>
#include <vector>

#include "nwt/errors.hpp"

namespace nwt::core {

// One Andreev conduction channel: induced gap Delta/h (Hz) and transmission.
struct JunctionChannel {
    double gap_hz{0.0};
    double transmission{0.0};

    void validate() const;
};

// Ground-branch channel energy V(phi) = -Delta sqrt(1 - T sin^2(phi/2)), in Hz.
// Even in phi; evaluated on the principal branch and extended 2pi-periodically
// through its cosine series.
double abs_channel_energy(double phase, const JunctionChannel& channel);

inline constexpr int kDefaultSeriesOrder = 16;

// Even 2pi-periodic potential as a cosine series V(phi) = sum_k c_k cos(k phi).
struct PeriodicPotential {
    std::vector<double> coeff;        // c_0..c_K, Hz
    double reconstruction_error{0.0}; // max |V - series| on a dense grid, Hz

    int order() const { return static_cast<int>(coeff.size()) - 1; }
    double eval(double phi) const;
};

// Cosine coefficients by quadrature of V(phi)cos(k phi) on a uniform grid.
// Throws non_periodic_input if |V(-pi) - V(pi)| exceeds tolerance.
PeriodicPotential potential_to_series(const std::function<double(double)>& potential, int order = kDefaultSeriesOrder);

// Series of a sum of ABS channels sharing one junction phase.
PeriodicPotential channels_to_series(const std::vector<JunctionChannel>& channels, int order = kDefaultSeriesOrder);

// General 2pi-periodic potential with cosine and sine parts. Arises when an even
// junction potential is evaluated at a shifted argument, as in a flux-biased
// split junction V_A(phi) + V_B(phase_shift - phi).
struct FourierPotential {
    std::vector<double> cos_coeff; // c_0..c_K
    std::vector<double> sin_coeff; // s_0..s_K, s_0 unused

    static FourierPotential from_even(const PeriodicPotential& p);
    static FourierPotential shifted_sum(const PeriodicPotential& a,
                                        const PeriodicPotential& b,
                                        double phase_shift);

    int order() const { return static_cast<int>(cos_coeff.size()) - 1; }
    double eval(double phi) const;
    // max_k |s_k|, zero for even potentials
    double odd_weight() const;
};

// Charge basis n in [-n_cut, n_cut] with offset charge ng (Cooper pairs).
struct ChargeBasisConfig {
    int n_cut{30};
    double ng{0.0};
    double rtol{1e-9};    // convergence target for transition frequencies
    int max_doublings{4}; // n_cut doublings tried before cutoff_too_small

    int dimension() const { return 2 * n_cut + 1; }
    void validate() const;
};

// H = 4 E_C (n - ng)^2 + sum_k c_k cos(k phi); cos(k phi) fills the +/-k
// off-diagonals with weight c_k/2. Hermitian by construction.
Eigen::MatrixXd build_hamiltonian(double ec_hz, const PeriodicPotential& potential,
                                  const ChargeBasisConfig& cfg);

// General form including sine terms: complex Hermitian.
Eigen::MatrixXcd build_hamiltonian(double ec_hz, const FourierPotential& potential,
                                   const ChargeBasisConfig& cfg);

struct TransitionSet {
    double f01_hz{0.0};
    double f12_hz{0.0};
    double f02_half_hz{0.0}; // (f01 + f12)/2 by construction
};

std::vector<double> lowest_eigenvalues(const Eigen::MatrixXd& h, int k);
std::vector<double> lowest_eigenvalues(const Eigen::MatrixXcd& h, int k);

TransitionSet transitions(const Eigen::MatrixXd& h, int k_levels = 3);
TransitionSet transitions(const Eigen::MatrixXcd& h, int k_levels = 3);

// Transitions at exactly cfg.n_cut (no convergence check); picks the real or
// complex builder depending on the sine content.
TransitionSet transitions_at_cutoff(double ec_hz, const FourierPotential& potential,
                                    const ChargeBasisConfig& cfg);

// Smallest n_cut >= cfg.n_cut (by repeated doubling) whose f01/f12 agree with
// the doubled basis to cfg.rtol. Throws cutoff_too_small when the doubling
// budget is exhausted.
int converged_cutoff(double ec_hz, const FourierPotential& potential, const ChargeBasisConfig& cfg);

// Diagonalize at a converged cutoff.
TransitionSet converged_transitions(double ec_hz, const FourierPotential& potential,
                                    const ChargeBasisConfig& cfg);
TransitionSet converged_transitions(double ec_hz, const PeriodicPotential& potential,
                                    const ChargeBasisConfig& cfg);

// |f01(ng = 1/2) - f01(ng = 0)| (or any level pair) at a converged cutoff.
double charge_dispersion(double ec_hz, const PeriodicPotential& potential,
                         const ChargeBasisConfig& cfg, int lower = 0, int upper = 1);

} // namespace nwt::core
