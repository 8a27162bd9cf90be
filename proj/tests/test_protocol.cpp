#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qwcf/protocol.hpp"

#include <cmath>

using namespace qwcf;

TEST_CASE("fair receiver split in the lossless protocol") {
    CHECK(fair_y(0.25) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(fair_y(0.0) == doctest::Approx(0.5));
    CHECK(fair_y(0.5) == doctest::Approx(0.0));
    // The balanced point is the fixed point y = x.
    const double x = 1.0 - 1.0 / std::sqrt(2.0);
    CHECK(fair_y(x) == doctest::Approx(x).epsilon(1e-15));
    CHECK_THROWS_AS(fair_y(0.6), XOutOfFairRange);
    CHECK_THROWS_AS(fair_y(-0.1), XOutOfFairRange);
}

TEST_CASE("abort-free verification split") {
    for (double x : {0.1, 0.25, 0.4}) {
        const double y = fair_y(x);
        CHECK(no_abort_z(x, y) == doctest::Approx(2.0 * x).epsilon(1e-14));
    }
    CHECK_THROWS_AS(no_abort_z(0.0, 0.0), DegenerateDenominator);
}

TEST_CASE("lossless fair family wins half-half without aborting") {
    for (double x : {0.1, 0.25, 0.45}) {
        const double y = fair_y(x);
        const ProtocolParams params{x, y, no_abort_z(x, y)};
        const OutcomeDistribution d = honest_closed_form(params, {});
        CHECK(d.p_alice_wins == doctest::Approx(0.5).epsilon(1e-14));
        CHECK(d.p_bob_wins == doctest::Approx(0.5).epsilon(1e-14));
        CHECK(std::abs(d.p_abort) < 1e-14);
    }
}

TEST_CASE("lossy closed form at a pinned point") {
    const ProtocolParams params{0.3, 0.2, 0.4};
    const LossBudget losses{0.9, 0.8, 0.85, 1.0, 0.75, 0.0};
    const OutcomeDistribution d = honest_closed_form(params, losses);
    CHECK(d.p_alice_wins == doctest::Approx(0.22476326025307897).epsilon(1e-14));
    CHECK(d.p_bob_wins == doctest::Approx(0.378).epsilon(1e-14));
    CHECK(d.p_abort == doctest::Approx(0.39723673974692109).epsilon(1e-13));
    // The sender's detector never appears in the honest outcome.
    LossBudget other = losses;
    other.eta_d_a = 0.3;
    CHECK(honest_alice_wins(params, other) == d.p_alice_wins);
    CHECK(honest_bob_wins(params, other) == d.p_bob_wins);
}

TEST_CASE("simulated protocol reproduces the closed form") {
    auto basis = make_basis(3, 2);
    const std::vector<LossBudget> budgets{
        {},
        {0.9, 0.8, 0.85, 1.0, 0.75, 0.0},
        {0.7, 0.95, 0.6, 0.4, 0.5, 0.0},
    };
    for (const LossBudget& losses : budgets) {
        for (double x : {0.2, 0.5}) {
            for (double y : {0.3, 0.7}) {
                const ProtocolParams params{x, y, 0.45};
                const OutcomeDistribution want = honest_closed_form(params, losses);
                const OutcomeDistribution got =
                    honest_simulated(params, losses, basis);
                CHECK(got.p_alice_wins
                      == doctest::Approx(want.p_alice_wins).epsilon(1e-12));
                CHECK(got.p_bob_wins
                      == doctest::Approx(want.p_bob_wins).epsilon(1e-12));
                CHECK(got.p_abort == doctest::Approx(want.p_abort).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("simulated protocol validates its basis") {
    CHECK_THROWS_AS(
        honest_simulated({0.3, 0.3, 0.3}, {}, make_basis(2, 2)),
        WrongModeCount);
    CHECK_THROWS_AS(
        honest_simulated({0.3, 0.3, 0.3}, {}, make_basis(3, 0)),
        TruncationTooSmall);
}

TEST_CASE("threshold measurement splits and renormalizes") {
    auto basis = make_basis(2, 1);
    Vector psi = Vector::Zero(basis->dimension());
    psi[basis->index_of({1, 0})] = 1.0 / std::sqrt(2.0);
    psi[basis->index_of({0, 1})] = 1.0 / std::sqrt(2.0);
    QuantumState state = QuantumState::pure(basis, psi);

    const DetectorModel det{DetectorKind::Threshold, 0.8, 0.02};
    const ThresholdBranches b = measure_threshold(state, 1, det);
    CHECK(b.p_no_click == doctest::Approx(0.588).epsilon(1e-13));
    CHECK(b.p_click == doctest::Approx(0.412).epsilon(1e-13));
    CHECK(b.p_no_click + b.p_click == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(b.no_click.trace() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(b.click.trace() == doctest::Approx(1.0).epsilon(1e-12));
    b.no_click.check_invariants();
    b.click.check_invariants();

    // With an ideal detector the click branch is exactly the component that
    // carried the photon in the measured mode.
    const DetectorModel ideal{DetectorKind::Threshold, 1.0, 0.0};
    const ThresholdBranches sharp = measure_threshold(state, 1, ideal);
    CHECK(sharp.p_click == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(sharp.click.matrix()(basis->index_of({0, 1}), basis->index_of({0, 1}))
              .real()
          == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("dark counts only feed the click branch") {
    auto basis = make_basis(1, 1);
    QuantumState vacuum = prepare_fock(basis, {0});
    const DetectorModel noisy{DetectorKind::Threshold, 1.0, 0.05};
    const ThresholdBranches b = measure_threshold(vacuum, 0, noisy);
    CHECK(b.p_no_click == doctest::Approx(0.95).epsilon(1e-14));
    CHECK(b.p_click == doctest::Approx(0.05).epsilon(1e-14));
    // Both branches are still the vacuum.
    CHECK(b.click.matrix()(0, 0).real() == doctest::Approx(1.0).epsilon(1e-13));
}
