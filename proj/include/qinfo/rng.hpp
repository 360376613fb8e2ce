#pragma once

#include <cstdint>
#include <random>

namespace qinfo {

// Seedable, splittable pseudo-random stream. Child streams are derived by
// mixing (seed, index) through splitmix64, so results are independent of
// execution order across trials.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed);

    RngStream split(std::uint64_t index) const;

    // Uniform on [0, 1).
    double uniform01();

    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace qinfo
