#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qwcf/adversary.hpp"

#include <cmath>

using namespace qwcf;

TEST_CASE("receiver cheating bound") {
    CHECK(bob_cheat({0.25, 0.3, 0.5}, {}) == doctest::Approx(0.75));
    LossBudget losses{};
    losses.eta_f_a = 0.8;
    losses.eta_d_a = 0.5;
    CHECK(bob_cheat({0.25, 0.3, 0.5}, losses)
          == doctest::Approx(1.0 - 0.25 * 0.4).epsilon(1e-15));
}

TEST_CASE("sender cheating bound, lossless") {
    CHECK(alice_cheat_lossless({0.0, 0.3, 0.5}) == doctest::Approx(0.65));
    // Product of the two optimal cheating probabilities is 1/2 on the fair
    // abort-free family.
    for (double x : {0.1, 0.25, 0.4}) {
        const double y = 1.0 - 1.0 / (2.0 * (1.0 - x));
        const ProtocolParams params{x, y, 2.0 * x};
        CHECK(alice_cheat_lossless(params) * bob_cheat(params, {})
              == doctest::Approx(0.5).epsilon(1e-14));
    }
}

namespace {

LossBudget receiver_losses(double eta_f_b, double eta_d_b) {
    LossBudget losses{};
    losses.eta_f_b = eta_f_b;
    losses.eta_d_b = eta_d_b;
    return losses;
}

} // namespace

TEST_CASE("sender cheating bound with losses: frozen oracle values") {
    // Each value was frozen from an independent exhaustive scan of
    // max_l r^l - s^l (r = 1 - eta_d (1 - y eta_f)(1 - z), s = 1 - eta_d).
    struct Case {
        double y, z, ef, ed, probability;
        int l_one;
    };
    const Case cases[] = {
        {1.0 / 3.0, 0.5, 0.98, 0.95, 0.63016666666666665, 1},
        {0.1, 0.1, 0.9, 0.5, 0.09869025, 2},
        {0.05, 0.05, 0.8, 0.3, 0.040290015744, 3},
        {0.45, 0.7, 1.0, 0.75, 0.7053140625, 2},
        {0.25, 0.3, 0.9, 0.95, 0.434625, 1},
        {0.2, 0.15, 0.85, 0.4, 0.15523684, 2},
    };
    for (const Case& c : cases) {
        const LossyCheatResult got = alice_cheat_lossy(
            {0.0, c.y, c.z}, receiver_losses(c.ef, c.ed));
        CHECK(got.probability == doctest::Approx(c.probability).epsilon(1e-12));
        CHECK(got.l_one == c.l_one);
    }
}

TEST_CASE("sender cheating bound edge cases") {
    // Perfect detector: s = 0, a single photon is optimal.
    const LossyCheatResult ideal =
        alice_cheat_lossy({0.0, 0.3, 0.5}, receiver_losses(0.9, 1.0));
    CHECK(ideal.l_one == 1);
    CHECK(ideal.probability
          == doctest::Approx(1.0 - (1.0 - 0.27) * 0.5).epsilon(1e-15));

    // Dead detector.
    CHECK_THROWS_AS(
        alice_cheat_lossy({0.0, 0.3, 0.5}, receiver_losses(0.9, 0.0)),
        DegenerateEfficiency);

    // y = z = 0 removes every pathway to the favorable outcome: r = s.
    const LossyCheatResult blocked =
        alice_cheat_lossy({0.0, 0.0, 0.0}, receiver_losses(1.0, 0.6));
    CHECK(blocked.probability == 0.0);
    CHECK(blocked.l_one == 1);

    // z = 1 with an imperfect detector: arbitrarily many photons keep
    // helping, the supremum is not attained.
    CHECK_THROWS_AS(
        alice_cheat_lossy({0.0, 0.3, 1.0}, receiver_losses(1.0, 0.6)), Error);
}

TEST_CASE("analytic attack state") {
    // Lossless single-photon case: sqrt(z/b)|10> + sqrt(y(1-z)/b)|01>.
    const ProtocolParams params{0.0, 0.3, 0.5};
    auto basis = make_basis(2, 3);
    const QuantumState state = alice_optimal_state(params, {}, basis);
    const double b = 1.0 - (1.0 - 0.3) * (1.0 - 0.5);
    const int i10 = basis->index_of({1, 0});
    const int i01 = basis->index_of({0, 1});
    CHECK(state.matrix()(i10, i10).real()
          == doctest::Approx(0.5 / b).epsilon(1e-13));
    CHECK(state.matrix()(i01, i01).real()
          == doctest::Approx(0.3 * 0.5 / b).epsilon(1e-13));
    CHECK(state.trace() == doctest::Approx(1.0).epsilon(1e-13));

    // Lossy case concentrates l_one photons.
    const LossBudget losses = receiver_losses(0.9, 0.5);
    const LossyCheatResult lossy = alice_cheat_lossy({0.0, 0.1, 0.1}, losses);
    REQUIRE(lossy.l_one == 2);
    const QuantumState attack =
        alice_optimal_state({0.0, 0.1, 0.1}, losses, basis);
    double weight_on_grade = 0.0;
    for (int i = 0; i < basis->dimension(); ++i) {
        const auto& occ = basis->occupation(i);
        if (occ[0] + occ[1] == lossy.l_one)
            weight_on_grade += attack.matrix()(i, i).real();
    }
    CHECK(weight_on_grade == doctest::Approx(1.0).epsilon(1e-13));

    CHECK_THROWS_AS(alice_optimal_state(params, {}, make_basis(3, 3)),
                    WrongModeCount);
}

TEST_CASE("brute-force verification measurement agrees with the closed form") {
    const struct {
        double y, z, ef, ed;
    } cases[] = {
        {0.1, 0.1, 0.9, 0.5},
        {0.05, 0.05, 0.8, 0.3},
        {1.0 / 3.0, 0.5, 0.98, 0.95},
    };
    for (const auto& c : cases) {
        const ProtocolParams params{0.0, c.y, c.z};
        const LossBudget losses = receiver_losses(c.ef, c.ed);
        const LossyCheatResult closed = alice_cheat_lossy(params, losses);
        auto basis = make_basis(2, closed.l_one + 2);
        const BruteforceResult brute =
            alice_cheat_bruteforce(params, losses, basis);
        CHECK(std::abs(brute.probability - closed.probability) < 1e-9);
        const QuantumState analytic = alice_optimal_state(params, losses, basis);
        const double fidelity =
            (analytic.matrix() * brute.state.matrix()).trace().real();
        CHECK(fidelity > 1.0 - 1e-8);
    }
}

TEST_CASE("brute force needs headroom above l_one") {
    const ProtocolParams params{0.0, 0.05, 0.05};
    const LossBudget losses = receiver_losses(0.8, 0.3);
    REQUIRE(alice_cheat_lossy(params, losses).l_one == 3);
    CHECK_THROWS_AS(
        alice_cheat_bruteforce(params, losses, make_basis(2, 4)),
        TruncationTooSmall);
}

TEST_CASE("cheat report bundles both bounds") {
    const ProtocolParams params{0.25, 1.0 / 3.0, 0.5};
    auto basis = make_basis(2, 3);
    const CheatReport report = cheat_report(params, {}, basis);
    CHECK(report.p_d_alice == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(report.p_d_bob == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(report.l_one == 1);
    CHECK(report.alice_optimal_state.trace() == doctest::Approx(1.0));
}

TEST_CASE("many-photon flooding forces the receiver to lose") {
    const double y = 1.0 / 3.0, eta = 0.95;
    // n = 1 reduces to the single-photon click probability.
    CHECK(classical_lose_limit(y, eta, 1)
          == doctest::Approx((1.0 - y) * eta).epsilon(1e-14));
    // Strictly increasing while the increment is representable; the tail
    // saturates at 1.0 once the miss probability drops below one ulp.
    double previous = 0.0;
    for (int n = 1; n <= 30; ++n) {
        const double p = classical_lose_limit(y, eta, n);
        CHECK(p > previous);
        previous = p;
    }
    for (int n = 31; n <= 60; ++n) {
        const double p = classical_lose_limit(y, eta, n);
        CHECK(p >= previous);
        previous = p;
    }
    CHECK(classical_lose_limit(y, eta, 40) > 1.0 - 1e-6);
    CHECK_THROWS_AS(classical_lose_limit(y, 0.0, 3), Error);
    CHECK_THROWS_AS(classical_lose_limit(y, eta, 0), Error);
}

TEST_CASE("flooding limit matches the photonic simulation") {
    const double y = 1.0 / 3.0, eta = 0.95;
    for (int n = 1; n <= 6; ++n) {
        auto basis = make_basis(2, n);
        QuantumState split = apply_beamsplitter(prepare_fock(basis, {n, 0}),
                                                {y, 0, 1});
        const DetectorModel det{DetectorKind::Threshold, eta, 0.0};
        const double p_click = outcome_probability(
            split, {ModeOutcome::unmeasured(), ModeOutcome::click(det)});
        CHECK(p_click
              == doctest::Approx(classical_lose_limit(y, eta, n)).epsilon(1e-11));
    }
}

TEST_CASE("strong-flip bias formula") {
    // A perfect balanced weak flip yields bias 1/4.
    CHECK(scf_bias(0.5, 0.0) == doctest::Approx(0.25).epsilon(1e-15));
    // Larger excess shifts the max to the first arm.
    CHECK(scf_bias(0.5, 0.2) == doctest::Approx(0.35).epsilon(1e-15));
    CHECK_THROWS_AS(scf_bias(1.5, 0.6), Error);
}

TEST_CASE("strong-flip operating point") {
    const ScfResult r = scf_solve();
    CHECK(r.x == doctest::Approx(0.378289382060437).epsilon(1e-9));
    CHECK(r.y == doctest::Approx(0.3124001394918381).epsilon(1e-9));
    CHECK(r.z == doctest::Approx(0.6607537845754967).epsilon(1e-9));
    CHECK(r.p == doctest::Approx(0.5725118658283133).epsilon(1e-9));
    CHECK(r.epsilon == doctest::Approx(0.19422248376787643).epsilon(1e-9));
    CHECK(r.bias == doctest::Approx(0.3108553089697816).epsilon(1e-9));
    // Both parties' strong-flip cheating arms balance at the root.
    const double arm_heads = 0.5 - (r.p - r.epsilon) / 2.0;
    const double arm_tails = 1.0 / (2.0 - (r.p + r.epsilon)) - 0.5;
    CHECK(arm_heads == doctest::Approx(arm_tails).epsilon(1e-9));
}
