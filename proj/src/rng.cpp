#include "qinfo/rng.hpp"

namespace qinfo {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

RngStream::RngStream(std::uint64_t seed)
    : seed_(seed), engine_(splitmix64(seed)) {}

RngStream RngStream::split(std::uint64_t index) const {
    return RngStream(splitmix64(seed_ ^ splitmix64(index + 1)));
}

double RngStream::uniform01() {
    // 53 random bits -> [0, 1).
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

}  // namespace qinfo
