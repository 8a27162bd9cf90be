#pragma once

#include "qwcf/adversary.hpp"

#include <optional>
#include <vector>

namespace qwcf {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct NoFairParameter    : Error { using Error::Error; };
struct YOutOfUnitInterval : Error { using Error::Error; };
struct XOutOfUnitInterval : Error { using Error::Error; };
struct NoConvergence      : Error { using Error::Error; };

// ---------------------------------------------------------------------------
// Types
// ---------------------------------------------------------------------------

// Distance-to-efficiency model: fiber attenuation plus the fiber length
// equivalent of the optical switching time.
struct LinkModel {
    double distance_km = 0.0;
    double attenuation_db_per_km = 0.2;
    double switch_time_ns = 500.0;
    double group_velocity_km_per_s = 2.0e5;
};

struct SolveResult {
    double x = 0.0, y = 0.0, z = 0.0;
    double p_h = 0.0;            // honest win probability of either party (fair)
    double p_ab = 0.0;           // honest abort probability
    double p_d_quantum = 0.0;    // common cheating probability (balanced)
    double p_d_classical = 0.0;  // best classical bound 1 - sqrt(p_ab)
    int l_one = 1;
    bool advantage = false;      // p_d_quantum < p_d_classical
    bool converged = false;
    int iterations = 0;
    // Reduced one-inequality advantage test vs the full three-inequality
    // classical-feasibility system; true when they agree.
    bool classical_tests_agree = true;
};

struct SweepRow {
    double d_km = 0.0;
    std::optional<SolveResult> result;
    std::string error; // empty when result holds
};

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

// eta_t = 10^(-attenuation d / 10); both delay lines get eta_s eta_t^2 where
// eta_s covers the switching-time fiber length (the stored photon sits in
// fiber while the other one crosses the distance twice). Detector
// efficiencies and dark counts pass through from configuration.
LossBudget link_budget(const LinkModel& link, double eta_d_a = 1.0,
                       double eta_d_b = 1.0, double p_dc = 0.0);

// y making the lossy honest protocol fair at the given (x, z): the positive
// root Y of (1-x)[(1-z) eta_f_b + 1] Y^2 + 2 sqrt(x z (1-x)(1-z) eta_f_a
// eta_f_b) Y + x z eta_f_a - (1-x) = 0, squared. Throws NoFairParameter when
// the discriminant or the root goes negative (no fair setting exists); the
// returned value always passes the residual check
// |p_alice_wins - p_bob_wins| <= 1e-12 under honest_closed_form.
double fairness_y(double x, double z, const LossBudget& losses);

// x equalizing the two cheating probabilities: bob_cheat(x) equals
// alice_cheat_lossy(y, z), i.e. x = (1 - alice_cheat_lossy) / (eta_f_a eta_d_a).
double balance_x(double y, double z, const LossBudget& losses);

// Fixed-point iteration x -> balance_x(fairness_y(x, z), z) from
// x0 = 1 - 1/sqrt(2), damping by 1/2 on non-contracting steps; converged when
// the applied step falls to 1e-12, at most 10000 iterations.
SolveResult solve_fair_balanced(double z, const LossBudget& losses);

// One solve per distance; rows where the solver fails carry the error text
// instead of fabricated numbers. detector_eff is used for both parties'
// detectors. Distances must be non-empty and strictly ascending.
std::vector<SweepRow> sweep(const std::vector<double>& d_values_km, double z,
                            double detector_eff, const LinkModel& base = {});

} // namespace qwcf
