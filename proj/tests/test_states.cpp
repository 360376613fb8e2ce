#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qinfo/info_measures.hpp"
#include "qinfo/states.hpp"
#include "test_support.hpp"

using namespace qinfo;
using namespace qinfo::testing;

TEST_CASE("pure_density builds the outer product") {
    const DensityMatrix basis = pure_density(PureState({cplx{1.0, 0.0}, cplx{0.0, 0.0}}));
    CHECK(basis(0, 0).real() == doctest::Approx(1.0));
    CHECK(std::abs(basis(0, 1)) == 0.0);

    const DensityMatrix uniform = pure_density(real_qubit(0.5));
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            CHECK(uniform(i, j).real() == doctest::Approx(0.5).epsilon(1e-12));
        }
    }

    std::mt19937_64 rng(3);
    const PureState psi = random_pure(2, rng);
    const DensityMatrix rho = pure_density(psi);
    CHECK(std::abs(rho(0, 1) - psi[0] * std::conj(psi[1])) < 1e-15);
    CHECK(classify(rho) == StateType::Type1Pure);

    CHECK_THROWS_AS(PureState({cplx{0.5, 0.0}, cplx{0.5, 0.0}}), NotNormalized);
    CHECK_THROWS_AS(PureState({cplx{0.0, 0.0}, cplx{0.0, 0.0}}), ZeroVector);
}

TEST_CASE("pure_density output is idempotent") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const ComplexMatrix m = pure_density(random_pure(2 + trial % 7, rng)).matrix();
        CHECK((m * m).max_abs_diff(m) < 1e-10);
    }
}

TEST_CASE("diagonal_mixture examples") {
    CHECK(diagonal_mixture({1.0}).dim() == 1);
    const DensityMatrix apparatus = diagonal_mixture({0.36, 0.64});
    CHECK(classify(apparatus) == StateType::Type2Diagonal);
    CHECK(quantum_information(diagonal_mixture({0.5, 0.5})) ==
          doctest::Approx(0.5).epsilon(1e-12));
    CHECK_THROWS_AS(diagonal_mixture({0.5, 0.6}), NotNormalized);
    CHECK_THROWS_AS(diagonal_mixture({1.5, -0.5}), NegativeProbability);
}

TEST_CASE("rebasis_x examples") {
    const DensityMatrix mixed = diagonal_mixture({0.5, 0.5});
    CHECK(rebasis_x(mixed).matrix().max_abs_diff(mixed.matrix()) < 1e-15);

    // An x eigenstate becomes diagonal; K_Q drops to zero.
    const DensityMatrix plus = rebasis_x(pure_density(real_qubit(0.5)));
    CHECK(plus(0, 0).real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(surplus_knowledge(plus) < 1e-12);

    // A z eigenstate gains maximal qubit surplus in the x basis.
    const DensityMatrix z0 = rebasis_x(pure_density(PureState({cplx{1.0, 0.0}, cplx{0.0, 0.0}})));
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            CHECK(z0(i, j).real() == doctest::Approx(0.5).epsilon(1e-12));
        }
    }
    CHECK(surplus_knowledge(z0) == doctest::Approx(0.5).epsilon(1e-12));

    CHECK_THROWS_AS(rebasis_x(diagonal_mixture({0.5, 0.25, 0.25})), DimensionMismatch);
}

TEST_CASE("epr_singlet matches the printed matrix and measures") {
    const DensityMatrix rho = epr_singlet();
    CHECK(rho.dim() == 4);
    CHECK(rho(1, 1).real() == doctest::Approx(0.5));
    CHECK(rho(2, 2).real() == doctest::Approx(0.5));
    CHECK(rho(1, 2).real() == doctest::Approx(-0.5));
    CHECK(rho(2, 1).real() == doctest::Approx(-0.5));
    CHECK(std::abs(rho(0, 0)) == 0.0);
    CHECK(std::abs(rho(3, 3)) == 0.0);
    CHECK(quantum_information(rho) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(surplus_knowledge(rho) == doctest::Approx(1.0).epsilon(1e-12));
    // Deterministic constructor.
    CHECK(epr_singlet().matrix().max_abs_diff(rho.matrix()) == 0.0);
}

TEST_CASE("ghz corner structure and measures") {
    const DensityMatrix three = ghz(3);
    CHECK(quantum_information(three) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(surplus_knowledge(three) == doctest::Approx(1.5).epsilon(1e-12));

    const DensityMatrix two = ghz(2);
    CHECK(quantum_information(two) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(surplus_knowledge(two) == doctest::Approx(brute_force_surplus(two)).epsilon(1e-12));
    CHECK(surplus_knowledge(two) == doctest::Approx(1.0).epsilon(1e-12));

    for (std::size_t n = 2; n <= 6; ++n) {
        CHECK(classify(ghz(n)) == StateType::Type1Pure);
        // Eq. (6) split: I~ = n/2 and K = n/2 sum to I = n.
        const InformationReport r = make_report(ghz(n));
        CHECK(r.i_tilde == doctest::Approx(n / 2.0).epsilon(1e-12));
        CHECK(r.k_q == doctest::Approx(n / 2.0).epsilon(1e-12));
    }
    CHECK_THROWS_AS(ghz(1), OutOfRange);
    CHECK_THROWS_AS(ghz(7), OutOfRange);
}

TEST_CASE("ensemble_density reproduces the phase-averaged matrix") {
    const double a1 = std::sqrt(0.8);
    const double a2 = std::sqrt(0.2);

    // All phases equal: indistinguishable from a single photon.
    const DensityMatrix coherent = ensemble_density(EnsembleSpec(a1, a2, {0.3, 0.3, 0.3}));
    const DensityMatrix single = pure_density(
        PureState({cplx{a1, 0.0}, std::polar(a2, -0.3)}));
    CHECK(coherent.matrix().max_abs_diff(single.matrix()) < 1e-12);
    CHECK(quantum_information(coherent) == doctest::Approx(1.0).epsilon(1e-12));

    // Two photons, phases (0, phi).
    const double phi = 1.234;
    const DensityMatrix pair = ensemble_density(EnsembleSpec(a1, a2, {0.0, phi}));
    const cplx expected_off = a1 * a2 * (1.0 + std::polar(1.0, phi)) / 2.0;
    CHECK(std::abs(pair(0, 1) - expected_off) < 1e-15);

    // Opposite phases at equal weights: fully decohered.
    const double s = std::sqrt(0.5);
    const DensityMatrix opposite =
        ensemble_density(EnsembleSpec(s, s, {0.0, std::numbers::pi}));
    CHECK(std::abs(opposite(0, 1)) < 1e-15);
    CHECK(surplus_knowledge(opposite) < 1e-15);

    CHECK_THROWS_AS(EnsembleSpec(0.9, 0.1, {0.0}), NotNormalized);
    CHECK_THROWS_AS(EnsembleSpec(a1, a2, {}), EmptyPhaseList);
}

TEST_CASE("single-member ensemble equals a phased pure state") {
    const double a1 = std::sqrt(0.6);
    const double a2 = std::sqrt(0.4);
    const double phi = 0.77;
    const DensityMatrix ensemble = ensemble_density(EnsembleSpec(a1, a2, {phi}));
    const DensityMatrix pure = pure_density(
        PureState({cplx{a1, 0.0}, std::polar(a2, -phi)}));
    CHECK(ensemble.matrix().max_abs_diff(pure.matrix()) < 1e-12);
}

TEST_CASE("product closed forms from the two-photon analysis") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const PureState a = random_pure(2, rng);
        const PureState b = random_pure(2, rng);
        const double a1_sq = std::norm(a[0]);
        const double a2_sq = std::norm(a[1]);
        const double b1_sq = std::norm(b[0]);
        const double b2_sq = std::norm(b[1]);
        const double closed =
            4.0 * ((a1_sq * b1_sq + a2_sq * b2_sq) * (a1_sq * b2_sq + a2_sq * b1_sq) +
                   2.0 * a1_sq * a2_sq * b1_sq * b2_sq);
        const double k = surplus_knowledge(product(pure_density(a), pure_density(b)));
        CHECK(k == doctest::Approx(closed).epsilon(1e-11));
        CHECK(k <= 1.5 + 1e-12);
    }

    // Second photon in an eigenstate: K reduces to 4 |a1 a2|^2.
    std::mt19937_64 rng2(11);
    const PureState a = random_pure(2, rng2);
    const PureState basis = PureState({cplx{1.0, 0.0}, cplx{0.0, 0.0}});
    const double k = surplus_knowledge(product(pure_density(a), pure_density(basis)));
    CHECK(k == doctest::Approx(4.0 * std::norm(a[0]) * std::norm(a[1])).epsilon(1e-12));

    // All amplitudes 1/sqrt2: attains max_surplus(2) = 1.5.
    const DensityMatrix both = product(pure_density(real_qubit(0.5)),
                                       pure_density(real_qubit(0.5)));
    CHECK(surplus_knowledge(both) == doctest::Approx(1.5).epsilon(1e-12));
}
