#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qinfo/measurement.hpp"
#include "qinfo/states.hpp"
#include "test_support.hpp"

using namespace qinfo;
using namespace qinfo::testing;

TEST_CASE("check_apparatus accepts diagonal states only") {
    CHECK(check_apparatus(diagonal_mixture({0.36, 0.64})));
    CHECK(check_apparatus(diagonal_mixture({1.0, 0.0})));  // degenerate but diagonal
    std::mt19937_64 rng(3);
    CHECK_FALSE(check_apparatus(pure_density(random_pure(2, rng))));
}

TEST_CASE("interferometer_before at balanced ways") {
    const InterferometerScenario s(real_qubit(0.5), 0.5, 0.5);
    const InterferometerBefore before = interferometer_before(s);
    CHECK(before.i_q_i == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(before.k_q_i == doctest::Approx(0.5).epsilon(1e-12));
    // K^I equals the photon's own surplus knowledge here.
    CHECK(before.k_q_i ==
          doctest::Approx(surplus_knowledge(pure_density(s.photon))).epsilon(1e-12));
}

TEST_CASE("interferometer_before with a useless apparatus") {
    std::mt19937_64 rng(5);
    const PureState photon = random_pure(2, rng);
    const InterferometerScenario s(photon, 1.0, 0.0);
    const InterferometerBefore before = interferometer_before(s);
    CHECK(before.i_q_i == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(before.k_q_i ==
          doctest::Approx(4.0 * std::norm(photon[0]) * std::norm(photon[1]))
              .epsilon(1e-12));
}

TEST_CASE("interferometer_before matches the brute-force compound computation") {
    const InterferometerScenario s(real_qubit(0.8), 0.5, 0.5);
    const InterferometerBefore before = interferometer_before(s);
    CHECK(before.k_q_i == doctest::Approx(0.32).epsilon(1e-12));
    CHECK(before.k_q_i ==
          doctest::Approx(brute_force_surplus(before.compound)).epsilon(1e-12));
    CHECK(before.i_q_i ==
          doctest::Approx(quantum_information(before.compound)).epsilon(1e-12));
}

TEST_CASE("sample_outcome follows the diagonal probabilities") {
    RngStream certain(1);
    for (int i = 0; i < 100; ++i) CHECK(sample_outcome({1.0, 0.0}, certain) == 0);

    const int draws = 100000;
    RngStream fair(42);
    int zeros = 0;
    for (int i = 0; i < draws; ++i) {
        if (sample_outcome({0.5, 0.5}, fair) == 0) ++zeros;
    }
    CHECK(std::abs(zeros / static_cast<double>(draws) - 0.5) < 0.01);

    RngStream biased(43);
    zeros = 0;
    for (int i = 0; i < draws; ++i) {
        if (sample_outcome({0.8, 0.2}, biased) == 0) ++zeros;
    }
    CHECK(std::abs(zeros / static_cast<double>(draws) - 0.8) < 0.01);
}

TEST_CASE("sampling is deterministic per seed and independent across splits") {
    RngStream a(123);
    RngStream b(123);
    for (int i = 0; i < 1000; ++i) {
        CHECK(sample_outcome({0.3, 0.7}, a) == sample_outcome({0.3, 0.7}, b));
    }
    RngStream master(9);
    RngStream c1 = master.split(0);
    RngStream c1_again = master.split(0);
    CHECK(c1.uniform01() == c1_again.uniform01());
    RngStream c2 = master.split(1);
    CHECK(c1.uniform01() != c2.uniform01());
}

TEST_CASE("apply_reduction zeroes mapped indices and renormalizes") {
    std::mt19937_64 rng(7);
    const PureState psi = random_pure(2, rng);
    const ReductionMap map = interferometer_reduction_map();

    // Exclude nothing: identity.
    const PureState same = apply_reduction(psi, map, {});
    for (std::size_t i = 0; i < 2; ++i) CHECK(std::abs(same[i] - psi[i]) < 1e-15);

    // Way 1 excluded maps to amplitude 0 excluded: post state is (0, 1).
    const PureState reduced = apply_reduction(real_qubit(0.5), map, {1});
    CHECK(std::abs(reduced[0]) == 0.0);
    CHECK(std::abs(reduced[1] - cplx{1.0, 0.0}) < 1e-12);

    // Uniform 3-level state, exclude index 2: remaining mass renormalized.
    const double third = 1.0 / std::sqrt(3.0);
    const PureState triple({cplx{third, 0.0}, cplx{third, 0.0}, cplx{third, 0.0}});
    const ReductionMap map3{{{}, {}, {2}}};
    const PureState cut = apply_reduction(triple, map3, {2});
    CHECK(std::abs(cut[0] - cplx{1.0 / std::sqrt(2.0), 0.0}) < 1e-12);
    CHECK(std::abs(cut[1] - cplx{1.0 / std::sqrt(2.0), 0.0}) < 1e-12);
    CHECK(std::abs(cut[2]) == 0.0);

    // Excluding every amplitude is no true measurement.
    const ReductionMap all{{{0, 1}}};
    CHECK_THROWS_AS(apply_reduction(real_qubit(0.5), all, {0}), AllAmplitudesExcluded);
}

TEST_CASE("apply_reduction output is always unit norm") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const PureState psi = random_pure(4, rng);
        const ReductionMap map{{{0}, {3}}};
        const PureState out = apply_reduction(psi, map, {0, 1});
        double norm_sq = 0.0;
        for (const cplx& a : out.amplitudes()) norm_sq += std::norm(a);
        CHECK(norm_sq == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("which-way measurement completes with zero surplus") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const InterferometerScenario s(real_qubit(0.5), 0.5, 0.5, false);
        RngStream rng(seed);
        const MeasurementRecord record = measure_which_way(s, rng);
        CHECK(record.post_report.i_q == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(record.post_report.k_q == 0.0);
        CHECK(record.assumption2_satisfied);
        CHECK(is_measurement_complete(record));
        CHECK(classify(record.post_state) == StateType::Type1Pure);
        // Surplus was handed to the classical regime.
        CHECK(record.post_report.k_q <= record.pre_report.k_q);
    }
}

TEST_CASE("eraser leaves the photon surplus intact") {
    const InterferometerScenario s(real_qubit(0.5), 0.5, 0.5, true);
    RngStream rng(1);
    const MeasurementRecord record = measure_which_way(s, rng);
    CHECK(record.post_report.k_q == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_FALSE(record.assumption2_satisfied);
    CHECK_FALSE(is_measurement_complete(record));  // strict threshold at 1
}

TEST_CASE("photon already in an eigenstate has nothing to reduce") {
    // The printed pairing collapses the photon to the way opposite the
    // observed outcome, so the consistent draw for (0, 1) is way 0.
    const InterferometerScenario s(PureState({cplx{0.0, 0.0}, cplx{1.0, 0.0}}),
                                   1.0, 0.0, false);
    RngStream rng(2);
    const MeasurementRecord record = measure_which_way(s, rng);
    CHECK(record.outcome_index == 0);
    CHECK(record.post_report.k_q == 0.0);
    CHECK(std::abs(record.post_state(1, 1) - cplx{1.0, 0.0}) < 1e-12);
}

TEST_CASE("pre-measurement GHZ report is not complete") {
    MeasurementRecord record{
        0,
        ghz(3),
        ghz(3),
        make_report(ghz(3)),
        make_report(ghz(3)),
        false,
    };
    CHECK_FALSE(is_measurement_complete(record));
}

TEST_CASE("identical seeds give identical measurement sequences") {
    const InterferometerScenario s(real_qubit(0.3), 0.4, 0.6, false);
    RngStream a(77);
    RngStream b(77);
    for (int i = 0; i < 50; ++i) {
        CHECK(measure_which_way(s, a).outcome_index ==
              measure_which_way(s, b).outcome_index);
    }
}

TEST_CASE("scenario validation") {
    CHECK_THROWS_AS(InterferometerScenario(real_qubit(0.5), 0.7, 0.7), NotNormalized);
    CHECK_THROWS_AS(InterferometerScenario(real_qubit(0.5), -0.1, 1.1),
                    NegativeProbability);
}
