#pragma once

#include <cstdint>

namespace qinfo {

struct SweepStatistics {
    std::size_t n_members = 0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    double spread = 1.0;
    double mean_i_q = 0.0;
    double mean_k_q = 0.0;
    double std_i_q = 0.0;
    double std_k_q = 0.0;
    // Expected I_Q excess over a1^4 + a2^4 for uniform phases: 2 a1^2 a2^2 / n.
    double theoretical_mean_excess = 0.0;
};

// Per trial: draw n phases uniformly on [0, 2*pi*spread), build the ensemble
// state, record I_Q and K_Q; aggregate mean and sample std over trials.
// spread = 0 degenerates to the all-equal-phase (coherent) case.
SweepStatistics decoherence_sweep(double a1_sq, std::size_t n_members,
                                  std::size_t trials, std::uint64_t seed,
                                  double spread = 1.0);

}  // namespace qinfo
