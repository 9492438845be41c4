// qubit_core.cpp — potentials, charge-basis Hamiltonians, eigensolves
#include "nwt/qubit_core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace nwt::core {

namespace {
constexpr double kPi = std::numbers::pi;
}

void JunctionChannel::validate() const {
    require(gap_hz >= 0.0, Errc::invalid_argument, "JunctionChannel: gap must be >= 0");
    require(transmission >= 0.0 && transmission <= 1.0, Errc::invalid_argument,
            "JunctionChannel: transmission must be in [0, 1]");
}

double abs_channel_energy(double phase, const JunctionChannel& channel) {
    const double s = std::sin(0.5 * phase);
    const double arg = 1.0 - channel.transmission * s * s;
    return -channel.gap_hz * std::sqrt(arg > 0.0 ? arg : 0.0);
}

double PeriodicPotential::eval(double phi) const {
    double v = 0.0;
    for (std::size_t k = 0; k < coeff.size(); ++k) {
        v += coeff[k] * std::cos(static_cast<double>(k) * phi);
    }
    return v;
}

PeriodicPotential potential_to_series(const std::function<double(double)>& potential, int order) {
    require(order >= 1, Errc::invalid_argument, "potential_to_series: order must be >= 1");

    const int m = std::max(2048, 32 * (order + 1));
    std::vector<double> values(m);
    double scale = 0.0;
    for (int j = 0; j < m; ++j) {
        const double phi = -kPi + 2.0 * kPi * j / m;
        values[j] = potential(phi);
        scale = std::max(scale, std::abs(values[j]));
    }

    const double jump = std::abs(potential(-kPi) - potential(kPi));
    require(jump <= 1e-9 * std::max(scale, 1.0), Errc::non_periodic_input,
            "potential_to_series: potential is not 2pi-periodic");

    PeriodicPotential series;
    series.coeff.assign(order + 1, 0.0);
    for (int k = 0; k <= order; ++k) {
        double acc = 0.0;
        for (int j = 0; j < m; ++j) {
            const double phi = -kPi + 2.0 * kPi * j / m;
            acc += values[j] * std::cos(k * phi);
        }
        series.coeff[k] = (k == 0 ? 1.0 : 2.0) * acc / m;
    }

    // truncation residual on a grid offset from the quadrature nodes
    double err = 0.0;
    const int probe = 1001;
    for (int j = 0; j < probe; ++j) {
        const double phi = -kPi + 2.0 * kPi * (j + 0.37) / probe;
        err = std::max(err, std::abs(potential(phi) - series.eval(phi)));
    }
    series.reconstruction_error = err;
    return series;
}

PeriodicPotential channels_to_series(const std::vector<JunctionChannel>& channels, int order) {
    for (const auto& ch : channels) ch.validate();
    return potential_to_series(
        [&](double phi) {
            double v = 0.0;
            for (const auto& ch : channels) v += abs_channel_energy(phi, ch);
            return v;
        },
        order);
}

FourierPotential FourierPotential::from_even(const PeriodicPotential& p) {
    FourierPotential f;
    f.cos_coeff = p.coeff;
    f.sin_coeff.assign(p.coeff.size(), 0.0);
    return f;
}

FourierPotential FourierPotential::shifted_sum(const PeriodicPotential& a,
                                               const PeriodicPotential& b,
                                               double phase_shift) {
    const std::size_t n = std::max(a.coeff.size(), b.coeff.size());
    FourierPotential f;
    f.cos_coeff.assign(n, 0.0);
    f.sin_coeff.assign(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        const double ak = k < a.coeff.size() ? a.coeff[k] : 0.0;
        const double bk = k < b.coeff.size() ? b.coeff[k] : 0.0;
        // cos(k(shift - phi)) = cos(k shift) cos(k phi) + sin(k shift) sin(k phi)
        f.cos_coeff[k] = ak + bk * std::cos(k * phase_shift);
        f.sin_coeff[k] = bk * std::sin(k * phase_shift);
    }
    return f;
}

double FourierPotential::eval(double phi) const {
    double v = 0.0;
    for (std::size_t k = 0; k < cos_coeff.size(); ++k) {
        v += cos_coeff[k] * std::cos(k * phi);
        if (k > 0 && k < sin_coeff.size()) v += sin_coeff[k] * std::sin(k * phi);
    }
    return v;
}

double FourierPotential::odd_weight() const {
    double w = 0.0;
    for (std::size_t k = 1; k < sin_coeff.size(); ++k) w = std::max(w, std::abs(sin_coeff[k]));
    return w;
}

void ChargeBasisConfig::validate() const {
    require(n_cut >= 1, Errc::invalid_argument, "ChargeBasisConfig: n_cut must be >= 1");
    require(rtol > 0.0, Errc::invalid_argument, "ChargeBasisConfig: rtol must be > 0");
}

Eigen::MatrixXd build_hamiltonian(double ec_hz, const PeriodicPotential& potential,
                                  const ChargeBasisConfig& cfg) {
    require(ec_hz > 0.0, Errc::invalid_argument, "build_hamiltonian: E_C must be > 0");
    cfg.validate();

    const int dim = cfg.dimension();
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    const double c0 = potential.coeff.empty() ? 0.0 : potential.coeff[0];
    for (int i = 0; i < dim; ++i) {
        const double n = static_cast<double>(i - cfg.n_cut) - cfg.ng;
        h(i, i) = 4.0 * ec_hz * n * n + c0;
    }
    for (int k = 1; k < static_cast<int>(potential.coeff.size()); ++k) {
        const double half = 0.5 * potential.coeff[k];
        if (half == 0.0 || k >= dim) continue;
        for (int i = 0; i + k < dim; ++i) {
            h(i + k, i) += half;
            h(i, i + k) += half;
        }
    }
    return h;
}

Eigen::MatrixXcd build_hamiltonian(double ec_hz, const FourierPotential& potential,
                                   const ChargeBasisConfig& cfg) {
    require(ec_hz > 0.0, Errc::invalid_argument, "build_hamiltonian: E_C must be > 0");
    cfg.validate();

    const int dim = cfg.dimension();
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
    const double c0 = potential.cos_coeff.empty() ? 0.0 : potential.cos_coeff[0];
    for (int i = 0; i < dim; ++i) {
        const double n = static_cast<double>(i - cfg.n_cut) - cfg.ng;
        h(i, i) = 4.0 * ec_hz * n * n + c0;
    }
    // with e^{ik phi}|n> = |n+k>:  <n+k|cos|n> = 1/2,  <n+k|sin|n> = -i/2
    for (int k = 1; k < static_cast<int>(potential.cos_coeff.size()); ++k) {
        const double ck = 0.5 * potential.cos_coeff[k];
        const double sk = k < static_cast<int>(potential.sin_coeff.size())
                              ? 0.5 * potential.sin_coeff[k]
                              : 0.0;
        if ((ck == 0.0 && sk == 0.0) || k >= dim) continue;
        const std::complex<double> lower(ck, -sk); // (n+k, n)
        for (int i = 0; i + k < dim; ++i) {
            h(i + k, i) += lower;
            h(i, i + k) += std::conj(lower);
        }
    }
    return h;
}

namespace {

template <class Matrix>
std::vector<double> lowest_eigenvalues_impl(const Matrix& h, int k) {
    require(k >= 1 && k <= h.rows(), Errc::invalid_argument,
            "lowest_eigenvalues: bad level count");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
    require(solver.info() == Eigen::Success, Errc::invalid_argument,
            "lowest_eigenvalues: eigensolver failed");
    std::vector<double> out(k);
    for (int i = 0; i < k; ++i) out[i] = solver.eigenvalues()(i);
    return out;
}

template <class Matrix>
TransitionSet transitions_impl(const Matrix& h, int k_levels) {
    require(k_levels >= 3, Errc::invalid_argument, "transitions: k_levels must be >= 3");
    const auto e = lowest_eigenvalues_impl(h, k_levels);
    TransitionSet t;
    t.f01_hz = e[1] - e[0];
    t.f12_hz = e[2] - e[1];
    t.f02_half_hz = 0.5 * (t.f01_hz + t.f12_hz);
    return t;
}

} // namespace

std::vector<double> lowest_eigenvalues(const Eigen::MatrixXd& h, int k) {
    return lowest_eigenvalues_impl(h, k);
}
std::vector<double> lowest_eigenvalues(const Eigen::MatrixXcd& h, int k) {
    return lowest_eigenvalues_impl(h, k);
}
TransitionSet transitions(const Eigen::MatrixXd& h, int k_levels) {
    return transitions_impl(h, k_levels);
}
TransitionSet transitions(const Eigen::MatrixXcd& h, int k_levels) {
    return transitions_impl(h, k_levels);
}

namespace {

TransitionSet solve_at_cutoff(double ec_hz, const FourierPotential& potential,
                              const ChargeBasisConfig& cfg, int n_cut) {
    ChargeBasisConfig local = cfg;
    local.n_cut = n_cut;
    if (potential.odd_weight() == 0.0) {
        PeriodicPotential even;
        even.coeff = potential.cos_coeff;
        return transitions(build_hamiltonian(ec_hz, even, local));
    }
    return transitions(build_hamiltonian(ec_hz, potential, local));
}

bool close_rel(double a, double b, double rtol) {
    return std::abs(a - b) <= rtol * std::max({std::abs(a), std::abs(b), 1.0});
}

} // namespace

TransitionSet transitions_at_cutoff(double ec_hz, const FourierPotential& potential,
                                    const ChargeBasisConfig& cfg) {
    return solve_at_cutoff(ec_hz, potential, cfg, cfg.n_cut);
}

int converged_cutoff(double ec_hz, const FourierPotential& potential,
                     const ChargeBasisConfig& cfg) {
    cfg.validate();
    int n = cfg.n_cut;
    TransitionSet at_n = solve_at_cutoff(ec_hz, potential, cfg, n);
    for (int d = 0; d <= cfg.max_doublings; ++d) {
        const TransitionSet at_2n = solve_at_cutoff(ec_hz, potential, cfg, 2 * n);
        if (close_rel(at_n.f01_hz, at_2n.f01_hz, cfg.rtol) &&
            close_rel(at_n.f12_hz, at_2n.f12_hz, cfg.rtol)) {
            return n;
        }
        n *= 2;
        at_n = at_2n;
    }
    fail(Errc::cutoff_too_small,
         "converged_cutoff: spectrum not converged at n_cut = " + std::to_string(n));
}

TransitionSet converged_transitions(double ec_hz, const FourierPotential& potential,
                                    const ChargeBasisConfig& cfg) {
    const int n = converged_cutoff(ec_hz, potential, cfg);
    return solve_at_cutoff(ec_hz, potential, cfg, n);
}

TransitionSet converged_transitions(double ec_hz, const PeriodicPotential& potential,
                                    const ChargeBasisConfig& cfg) {
    return converged_transitions(ec_hz, FourierPotential::from_even(potential), cfg);
}

double charge_dispersion(double ec_hz, const PeriodicPotential& potential,
                         const ChargeBasisConfig& cfg, int lower, int upper) {
    require(lower >= 0 && upper > lower, Errc::invalid_argument,
            "charge_dispersion: bad level pair");
    const auto f = FourierPotential::from_even(potential);

    ChargeBasisConfig at_zero = cfg;
    at_zero.ng = 0.0;
    ChargeBasisConfig at_half = cfg;
    at_half.ng = 0.5;
    const int n = std::max(converged_cutoff(ec_hz, f, at_zero),
                           converged_cutoff(ec_hz, f, at_half));
    at_zero.n_cut = n;
    at_half.n_cut = n;

    const int k = upper + 1;
    const auto e0 = lowest_eigenvalues(build_hamiltonian(ec_hz, potential, at_zero),
                                       std::max(k, 3));
    const auto eh = lowest_eigenvalues(build_hamiltonian(ec_hz, potential, at_half),
                                       std::max(k, 3));
    return std::abs((eh[upper] - eh[lower]) - (e0[upper] - e0[lower]));
}

} // namespace nwt::core
