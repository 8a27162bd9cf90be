#pragma once

#include "qwcf/protocol.hpp"

namespace qwcf {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct DegenerateEfficiency  : Error { using Error::Error; };
struct NoRootInUnitInterval  : Error { using Error::Error; };

// ---------------------------------------------------------------------------
// Types
// ---------------------------------------------------------------------------

struct CheatReport {
    double p_d_alice = 0.0;           // optimal dishonest-sender win probability
    double p_d_bob = 0.0;             // optimal dishonest-receiver win probability
    int l_one = 1;                    // photon number of the optimal attack state
    QuantumState alice_optimal_state; // 2-mode attack state
};

// Derived strong-coin-flip construction: operating point, honest win
// probability p, excess epsilon, and the resulting bias.
struct ScfResult {
    double x = 0.0, y = 0.0, z = 0.0;
    double p = 0.0;
    double epsilon = 0.0;
    double bias = 0.0;
};

struct LossyCheatResult {
    double probability = 0.0;
    int l_one = 1;
};

struct BruteforceResult {
    double probability = 0.0;
    QuantumState state; // 2-mode eigenvector as a pure state
};

// ---------------------------------------------------------------------------
// Dishonest-party bounds
// ---------------------------------------------------------------------------

// Receiver's optimal cheating probability: 1 - x * eta_f_a * eta_d_a
// (declare the favorable outcome and rely on the sender's verification arm
// missing the photon). Lossless case reduces to 1 - x.
double bob_cheat(const ProtocolParams& params, const LossBudget& losses);

// Sender's optimal cheating probability, no losses: 1 - (1-y)(1-z).
double alice_cheat_lossless(const ProtocolParams& params);

// Sender's optimal cheating probability with receiver-side losses
// (delay-line transmission eta_f_b, detector efficiency eta_d_b):
//   max_{l >= 1} r^l - s^l,  r = 1 - eta_d (1 - y eta_f)(1 - z),  s = 1 - eta_d,
// attained at photon number l_one. l_one comes from the stationary-point
// formula lambda_1 = ln(ln s / ln r) / (ln r - ln s) (floor/ceil compared),
// cross-checked by exhaustive scan; the scan wins on disagreement.
LossyCheatResult alice_cheat_lossy(const ProtocolParams& params,
                                   const LossBudget& losses);

// The optimal attack state on 2 modes: (1 x R(pi)) H(a) |0, l_one> with
// a = y (1-z) eta_f / (y eta_f + z - y z eta_f). Reduces to
// sqrt(z/b)|10> + sqrt(y(1-z)/b)|01>, b = 1-(1-y)(1-z), when lossless.
QuantumState alice_optimal_state(const ProtocolParams& params,
                                 const LossBudget& losses, BasisPtr basis);

// Independent check of alice_cheat_lossy: build the verification measurement
// as a matrix and take its largest eigenvalue over all 2-mode inputs.
//
// The verification interferometer folds the delay-line transmission into the
// receiver's splitting ratio (y -> y * eta_f_b): a photon surviving the delay
// is equivalent to one transmitted by a slightly weaker splitter, and the
// folded circuit is the one whose best input the closed form describes. The
// measurement is then M = U^T Pi U with U = BS(z on modes 0,1) BS(y*eta_f on
// modes 1,2) and Pi = click(0) x no-click(1) x no-click(2) at efficiency
// eta_d_b, restricted to inputs with mode 2 in vacuum.
//
// `basis` is the 2-mode basis of the returned state; its cap N must be at
// least l_one + 2 so the analytic optimum sits strictly inside the search
// space.
BruteforceResult alice_cheat_bruteforce(const ProtocolParams& params,
                                        const LossBudget& losses,
                                        BasisPtr basis);

// Convenience bundle: both cheating bounds plus the optimal attack state.
CheatReport cheat_report(const ProtocolParams& params, const LossBudget& losses,
                         BasisPtr basis);

// Probability that a dishonest sender forces the "receiver loses" outcome by
// flooding the splitter with an n-photon state against a threshold detector
// of efficiency eta: 1 - [y + (1-eta)(1-y)]^n. Approaches 1 as n grows.
double classical_lose_limit(double y, double eta, int n);

// ---------------------------------------------------------------------------
// Strong coin flipping built on top of the weak flip
// ---------------------------------------------------------------------------

// Bias of the derived SCF protocol from a WCF with honest win probability p
// and cheating excess epsilon: max(1/2 - (p-eps)/2, 1/(2-(p+eps)) - 1/2).
double scf_bias(double p, double epsilon);

// Solve the three-equation operating point
//   x = y^2 / ((1-y)(1-2y)),  z = y / (1-y)^2,  1 - x/2 = 1/(2 - y - z + yz)
// by bisection in y, then fill p, epsilon, and the bias.
ScfResult scf_solve();

} // namespace qwcf
