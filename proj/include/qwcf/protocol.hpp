#pragma once

#include "qwcf/fock.hpp"

namespace qwcf {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct XOutOfFairRange      : Error { using Error::Error; };
struct DegenerateDenominator : Error { using Error::Error; };

// ---------------------------------------------------------------------------
// Types
// ---------------------------------------------------------------------------

// Beam-splitter reflectivities of the protocol: x splits the photon between
// the party keeping it and the channel, y is the receiving party's split,
// z the verification split.
struct ProtocolParams {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

// Transmission/efficiency budget. eta_t: channel; eta_f_a / eta_f_b: the two
// parties' fiber delay lines; eta_d_a / eta_d_b: detector efficiencies;
// p_dc: detector dark-count probability (threshold detectors only).
struct LossBudget {
    double eta_t   = 1.0;
    double eta_f_a = 1.0;
    double eta_f_b = 1.0;
    double eta_d_a = 1.0;
    double eta_d_b = 1.0;
    double p_dc    = 0.0;
};

struct OutcomeDistribution {
    double p_alice_wins = 0.0;
    double p_bob_wins   = 0.0;
    double p_abort      = 0.0;
};

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

// y making the honest lossless flip fair: y = 1 - 1/(2(1-x)), for x in [0, 1/2].
double fair_y(double x);

// z making the honest lossless protocol abort-free: z = x / (1 - (1-x)(1-y)).
// With y = fair_y(x) this equals 2x.
double no_abort_z(double x, double y);

// Closed-form honest outcome probabilities with losses:
//   p_alice = eta_t * eta_d_b * (sqrt(x z eta_f_a) + sqrt((1-x) y (1-z) eta_f_b))^2
//   p_bob   = eta_t * eta_d_b * (1-x)(1-y)
//   p_abort = 1 - p_alice - p_bob
double honest_alice_wins(const ProtocolParams& params, const LossBudget& losses);
double honest_bob_wins(const ProtocolParams& params, const LossBudget& losses);
OutcomeDistribution honest_closed_form(const ProtocolParams& params,
                                       const LossBudget& losses);

// The same protocol executed step by step on the Fock engine (3 modes):
// split with BS(x), send through the channel, receiver splits with BS(y) and
// threshold-measures their arm; on no-click the sender's kept mode is
// forwarded and verified against the stored mode on BS(z); on click the
// sender checks her own detector. Branching is exact POVM conditioning on
// renormalized post-measurement states, no sampling. Must reproduce
// honest_closed_form to 1e-10 (with zero dark counts).
OutcomeDistribution honest_simulated(const ProtocolParams& params,
                                     const LossBudget& losses,
                                     const BasisPtr& basis);

// Threshold-measurement conditioning: detector loss applied to the mode,
// then the state is split into the no-click and click branches.
struct ThresholdBranches {
    double p_no_click = 0.0;
    double p_click    = 0.0;
    QuantumState no_click;
    QuantumState click;
};

ThresholdBranches measure_threshold(const QuantumState& state, int mode,
                                    const DetectorModel& det);

} // namespace qwcf
