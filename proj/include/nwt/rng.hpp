// rng.hpp — master-seed splitting into independent per-stream generators
//
// Monte Carlo workloads draw one generator per trace, derived from the master
// seed and the trace index with SplitMix64. Stream seeds are a pure function of
// (master, stream), so parallel trace generation stays reproducible.
#pragma once

#include <cstdint>
#include <random>

namespace nwt::rng {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

inline std::uint64_t stream_seed(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t s = master ^ (0xD1B54A32D192ED03ull * (stream + 1));
    return splitmix64(s);
}

inline std::mt19937_64 make_stream(std::uint64_t master, std::uint64_t stream) {
    return std::mt19937_64(stream_seed(master, stream));
}

} // namespace nwt::rng
