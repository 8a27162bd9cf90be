#include "qwcf/protocol.hpp"

#include <cmath>

namespace qwcf {

double fair_y(double x) {
    if (!(x >= 0.0 && x <= 0.5))
        throw XOutOfFairRange("x = " + std::to_string(x) +
                              " outside [0, 1/2]; fair y would leave [0,1]");
    return 1.0 - 1.0 / (2.0 * (1.0 - x));
}

double no_abort_z(double x, double y) {
    const double denom = 1.0 - (1.0 - x) * (1.0 - y);
    if (denom <= 0.0)
        throw DegenerateDenominator("1-(1-x)(1-y) vanishes at x = " +
                                    std::to_string(x) + ", y = " +
                                    std::to_string(y));
    return x / denom;
}

double honest_alice_wins(const ProtocolParams& p, const LossBudget& l) {
    const double amp = std::sqrt(p.x * p.z * l.eta_f_a) +
                       std::sqrt((1.0 - p.x) * p.y * (1.0 - p.z) * l.eta_f_b);
    return l.eta_t * l.eta_d_b * amp * amp;
}

double honest_bob_wins(const ProtocolParams& p, const LossBudget& l) {
    return l.eta_t * l.eta_d_b * (1.0 - p.x) * (1.0 - p.y);
}

OutcomeDistribution honest_closed_form(const ProtocolParams& p, const LossBudget& l) {
    OutcomeDistribution out;
    out.p_alice_wins = honest_alice_wins(p, l);
    out.p_bob_wins = honest_bob_wins(p, l);
    out.p_abort = 1.0 - out.p_alice_wins - out.p_bob_wins;
    return out;
}

ThresholdBranches measure_threshold(const QuantumState& state, int mode,
                                    const DetectorModel& det) {
    // Detector efficiency acts as a loss in front of an ideal threshold
    // detector; the measured mode is consumed either way, so conditioning on
    // the post-loss state is exact for everything the other modes see.
    const QuantumState sigma = apply_loss(state, mode, det.efficiency);
    const FockBasis& basis = sigma.basis();
    const int d = basis.dimension();

    Eigen::VectorXd vac_mask(d);
    for (int s = 0; s < d; ++s)
        vac_mask(s) = basis.occupation(s)[mode] == 0 ? 1.0 : 0.0;
    const Matrix p0 = vac_mask.cast<Complex>().asDiagonal();

    const Matrix& rho = sigma.matrix();
    const Matrix rho00 = p0 * rho * p0;
    const double prob0 = rho00.trace().real();

    const double p_nc = (1.0 - det.dark_count) * prob0;
    const double p_c = rho.trace().real() - p_nc;

    // No-click branch: vacuum component of the measured mode survives.
    // Click branch: everything else, plus the dark-count share of the vacuum
    // component (a dark count fires without consuming any state).
    Matrix m_nc = rho00;
    Matrix m_c = rho - p0 * rho - rho * p0 + rho00 + det.dark_count * rho00;

    auto branch_state = [&](Matrix m, double p) {
        if (p > 0.0) m /= p;
        else m.setZero();
        return QuantumState(sigma.basis_ptr(), std::move(m));
    };

    ThresholdBranches out{p_nc, p_c,
                          branch_state(std::move(m_nc), prob0),
                          branch_state(std::move(m_c), p_c)};
    return out;
}

OutcomeDistribution honest_simulated(const ProtocolParams& p, const LossBudget& l,
                                     const BasisPtr& basis) {
    if (basis->mode_count() != 3)
        throw WrongModeCount("honest protocol runs on 3 modes, basis has " +
                             std::to_string(basis->mode_count()));
    if (basis->max_total_photons() < 1)
        throw TruncationTooSmall("honest protocol needs at least one photon");

    const DetectorModel det_a{DetectorKind::Threshold, l.eta_d_a, l.p_dc};
    const DetectorModel det_b{DetectorKind::Threshold, l.eta_d_b, l.p_dc};

    // Photon enters on mode 0; BS(x) keeps amplitude sqrt(x) there and sends
    // the rest down the channel (mode 1) to the receiver, who splits it onto
    // his detector arm (mode 2).
    QuantumState rho = prepare_fock(basis, {1, 0, 0});
    rho = apply_beamsplitter(rho, {p.x, 0, 1});
    rho = apply_loss(rho, 0, l.eta_f_a);
    rho = apply_loss(rho, 1, l.eta_t);
    rho = apply_beamsplitter(rho, {p.y, 1, 2});

    ThresholdBranches c = measure_threshold(rho, 2, det_b);

    double p_alice = 0.0;
    double p_bob = 0.0;

    if (c.p_no_click > 0.0) {
        // Outcome 0: the kept mode is sent over and verified against the
        // stored mode; a click on the first verification arm with silence on
        // the second declares the sender the winner.
        QuantumState s0 = apply_loss(c.no_click, 1, l.eta_f_b);
        s0 = apply_loss(s0, 0, l.eta_t);
        s0 = apply_beamsplitter(s0, {p.z, 0, 1});
        const double pass = outcome_probability(
            s0, {ModeOutcome::click(det_b), ModeOutcome::no_click(det_b),
                 ModeOutcome::unmeasured()});
        p_alice = c.p_no_click * pass;
    }

    if (c.p_click > 0.0) {
        // Outcome 1: the sender verifies the claim on her own detector; the
        // receiver wins if it stays silent.
        QuantumState s1 = apply_loss(c.click, 1, l.eta_f_b);
        const double silent = outcome_probability(
            s1, {ModeOutcome::no_click(det_a), ModeOutcome::unmeasured(),
                 ModeOutcome::unmeasured()});
        p_bob = c.p_click * silent;
    }

    return {p_alice, p_bob, 1.0 - p_alice - p_bob};
}

} // namespace qwcf
