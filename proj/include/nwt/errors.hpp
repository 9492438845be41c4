// errors.hpp — typed error conditions shared across the library
#pragma once

#include <stdexcept>
#include <string>

namespace nwt {

enum class Errc {
    invalid_argument,
    non_periodic_input,
    cutoff_too_small,
    field_above_critical,
    step_underflow,
    quadrature_not_converged,
    out_of_table,
    trace_too_short,
    fit_diverged,
    ill_conditioned,
    knee_out_of_band,
    no_information,
    branch_ambiguity,
    on_resonance,
    no_bracket,
    io_error,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
    throw Error(code, what);
}

inline void require(bool cond, Errc code, const std::string& what) {
    if (!cond) fail(code, what);
}

} // namespace nwt
