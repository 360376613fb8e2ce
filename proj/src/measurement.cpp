#include "qinfo/measurement.hpp"

#include <cmath>

#include "qinfo/states.hpp"

namespace qinfo {

InterferometerScenario::InterferometerScenario(PureState photon_in, double alpha_sq_in,
                                               double beta_sq_in, bool eraser_in)
    : photon(std::move(photon_in)),
      alpha_sq(alpha_sq_in),
      beta_sq(beta_sq_in),
      eraser(eraser_in) {
    if (photon.dim() != 2) {
        throw DimensionMismatch("interferometer photon must be a qubit");
    }
    if (alpha_sq < 0.0 || beta_sq < 0.0) {
        throw NegativeProbability("way probabilities must be nonnegative");
    }
    if (std::abs(alpha_sq + beta_sq - 1.0) > 1e-10) {
        throw NotNormalized("way probabilities must sum to 1");
    }
}

ReductionMap interferometer_reduction_map() {
    // Excluding way 0 excludes photon amplitude 1 and vice versa.
    return ReductionMap{{{1}, {0}}};
}

bool check_apparatus(const DensityMatrix& rho_m) {
    // Diagonality is the requirement; a pure basis state is a degenerate but
    // admissible apparatus, so this cannot go through classify (where the
    // pure check takes precedence).
    for (std::size_t i = 0; i < rho_m.dim(); ++i) {
        for (std::size_t j = 0; j < rho_m.dim(); ++j) {
            if (i != j && std::abs(rho_m(i, j)) > 1e-9) return false;
        }
    }
    return true;
}

InterferometerBefore interferometer_before(const InterferometerScenario& s) {
    const DensityMatrix rho_m = diagonal_mixture({s.alpha_sq, s.beta_sq});
    const DensityMatrix rho_s = pure_density(s.photon);
    // Apparatus factor major, as the block-diagonal compound is written.
    DensityMatrix compound = kron(rho_m, rho_s);
    const double app_purity = s.alpha_sq * s.alpha_sq + s.beta_sq * s.beta_sq;
    const double a1a2_sq = std::norm(s.photon[0]) * std::norm(s.photon[1]);
    return InterferometerBefore{std::move(compound), 2.0 * app_purity,
                                4.0 * app_purity * a1a2_sq};
}

std::size_t sample_outcome(const std::vector<double>& probabilities, RngStream& rng) {
    const double u = rng.uniform01();
    double acc = 0.0;
    for (std::size_t j = 0; j + 1 < probabilities.size(); ++j) {
        acc += probabilities[j];
        if (u < acc) return j;
    }
    return probabilities.empty() ? 0 : probabilities.size() - 1;
}

PureState apply_reduction(const PureState& psi_s, const ReductionMap& map,
                          const std::vector<std::size_t>& excluded_apparatus_outcomes) {
    std::vector<cplx> amps(psi_s.amplitudes());
    for (std::size_t outcome : excluded_apparatus_outcomes) {
        if (outcome >= map.excluded_system_indices.size()) {
            throw OutOfRange("excluded outcome has no entry in the reduction map");
        }
        for (std::size_t idx : map.excluded_system_indices[outcome]) {
            if (idx >= amps.size()) {
                throw OutOfRange("reduction map names an invalid system index");
            }
            amps[idx] = cplx{0.0, 0.0};
        }
    }
    double remaining = 0.0;
    for (const cplx& a : amps) remaining += std::norm(a);
    if (remaining < 1e-24) {
        throw AllAmplitudesExcluded(
            "reduction excluded every amplitude; no true measurement");
    }
    const double scale = 1.0 / std::sqrt(remaining);
    for (cplx& a : amps) a *= scale;
    return PureState(std::move(amps));
}

MeasurementRecord measure_which_way(const InterferometerScenario& s, RngStream& rng) {
    const InterferometerBefore before = interferometer_before(s);
    const std::size_t outcome = sample_outcome({s.alpha_sq, s.beta_sq}, rng);
    const std::size_t excluded_way = 1 - outcome;

    std::vector<double> apparatus_probs(2, 0.0);
    apparatus_probs[outcome] = 1.0;
    const DensityMatrix collapsed_apparatus = diagonal_mixture(apparatus_probs);

    DensityMatrix post = s.eraser
        ? kron(collapsed_apparatus, pure_density(s.photon))
        : kron(collapsed_apparatus,
               pure_density(apply_reduction(s.photon, interferometer_reduction_map(),
                                            {excluded_way})));

    MeasurementRecord record{
        outcome,
        before.compound,
        std::move(post),
        make_report(before.compound),
        InformationReport{},
        !s.eraser,
    };
    record.post_report = make_report(record.post_state);
    return record;
}

bool is_measurement_complete(const MeasurementRecord& record) {
    return record.post_report.k_q < 1.0;
}

}  // namespace qinfo
