#pragma once

#include <cstddef>
#include <vector>

#include "qinfo/density_matrix.hpp"
#include "qinfo/info_measures.hpp"
#include "qinfo/pure_state.hpp"
#include "qinfo/rng.hpp"

namespace qinfo {

// Photon through a two-way apparatus with way probabilities (alpha_sq,
// beta_sq). eraser = true skips the reduction postulate after the readout.
struct InterferometerScenario {
    InterferometerScenario(PureState photon, double alpha_sq, double beta_sq,
                           bool eraser = false);

    PureState photon;
    double alpha_sq;
    double beta_sq;
    bool eraser;
};

// For each excluded apparatus outcome j, the system amplitude indices that
// must be excluded with it (reduction postulate).
struct ReductionMap {
    std::vector<std::vector<std::size_t>> excluded_system_indices;
};

// The interferometer pairing as printed in the worked example: excluding
// way j excludes the opposite photon amplitude (beta = 0 forces a1 = 0).
ReductionMap interferometer_reduction_map();

struct MeasurementRecord {
    std::size_t outcome_index = 0;
    DensityMatrix pre_state;
    DensityMatrix post_state;
    InformationReport pre_report;
    InformationReport post_report;
    bool assumption2_satisfied = false;
};

// An apparatus must admit an ignorance interpretation: diagonal only.
bool check_apparatus(const DensityMatrix& rho_m);

struct InterferometerBefore {
    DensityMatrix compound;  // block-diagonal, apparatus factor major
    double i_q_i;            // 2 (alpha^4 + beta^4)
    double k_q_i;            // 4 (alpha^4 + beta^4) |a1 a2|^2
};

InterferometerBefore interferometer_before(const InterferometerScenario& s);

// Draws an index with the given probabilities; deterministic per stream.
std::size_t sample_outcome(const std::vector<double>& probabilities, RngStream& rng);

// Zeroes the system amplitudes mapped from the excluded apparatus outcomes
// and renormalizes. Throws AllAmplitudesExcluded when nothing survives.
PureState apply_reduction(const PureState& psi_s, const ReductionMap& map,
                          const std::vector<std::size_t>& excluded_apparatus_outcomes);

MeasurementRecord measure_which_way(const InterferometerScenario& s, RngStream& rng);

// Completion criterion: post-measurement surplus knowledge below 1 bit.
bool is_measurement_complete(const MeasurementRecord& record);

}  // namespace qinfo
