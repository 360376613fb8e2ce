#include "qinfo/sweep.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "qinfo/errors.hpp"
#include "qinfo/info_measures.hpp"
#include "qinfo/rng.hpp"
#include "qinfo/states.hpp"

namespace qinfo {

namespace {

// Welford's online mean/variance; exact zero spread for identical samples.
struct Accumulator {
    std::size_t count = 0;
    double mean_value = 0.0;
    double m2 = 0.0;

    void add(double x) {
        ++count;
        const double delta = x - mean_value;
        mean_value += delta / static_cast<double>(count);
        m2 += delta * (x - mean_value);
    }

    double mean(std::size_t) const { return mean_value; }

    double sample_std(std::size_t n) const {
        if (n < 2) return 0.0;
        return std::sqrt(m2 / static_cast<double>(n - 1));
    }
};

}  // namespace

SweepStatistics decoherence_sweep(double a1_sq, std::size_t n_members,
                                  std::size_t trials, std::uint64_t seed,
                                  double spread) {
    if (a1_sq < 0.0 || a1_sq > 1.0) {
        throw BadParameter("a1_sq must lie in [0, 1]");
    }
    if (n_members < 1) throw BadParameter("n_members must be at least 1");
    if (trials < 1) throw BadParameter("trials must be at least 1");
    if (spread < 0.0 || spread > 1.0) {
        throw BadParameter("spread must lie in [0, 1]");
    }

    const double a1 = std::sqrt(a1_sq);
    const double a2 = std::sqrt(1.0 - a1_sq);
    const RngStream master(seed);

    Accumulator acc_i, acc_k;
    std::vector<double> phases(n_members);
    for (std::size_t trial = 0; trial < trials; ++trial) {
        // Each trial owns an independent child stream, so results do not
        // depend on execution order.
        RngStream rng = master.split(trial);
        for (double& phi : phases) {
            phi = spread * 2.0 * std::numbers::pi * rng.uniform01();
        }
        const DensityMatrix rho = ensemble_density(EnsembleSpec(a1, a2, phases));
        acc_i.add(quantum_information(rho));
        acc_k.add(surplus_knowledge(rho));
    }

    SweepStatistics stats;
    stats.n_members = n_members;
    stats.trials = trials;
    stats.seed = seed;
    stats.spread = spread;
    stats.mean_i_q = acc_i.mean(trials);
    stats.mean_k_q = acc_k.mean(trials);
    stats.std_i_q = acc_i.sample_std(trials);
    stats.std_k_q = acc_k.sample_std(trials);
    stats.theoretical_mean_excess =
        2.0 * a1_sq * (1.0 - a1_sq) / static_cast<double>(n_members);
    return stats;
}

}  // namespace qinfo
