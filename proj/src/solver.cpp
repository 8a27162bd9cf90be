#include "qwcf/solver.hpp"

#include "qwcf/protocol.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace qwcf {

LossBudget link_budget(const LinkModel& link, double eta_d_a, double eta_d_b,
                       double p_dc) {
    if (link.distance_km < 0.0)
        throw Error("link distance must be nonnegative");
    if (link.attenuation_db_per_km < 0.0)
        throw Error("attenuation must be nonnegative");
    if (link.switch_time_ns < 0.0 || link.group_velocity_km_per_s <= 0.0)
        throw Error("switch time must be nonnegative and group velocity positive");

    const double eta_t =
        std::pow(10.0, -link.attenuation_db_per_km * link.distance_km / 10.0);
    const double switch_km =
        link.switch_time_ns * 1e-9 * link.group_velocity_km_per_s;
    const double eta_s =
        std::pow(10.0, -link.attenuation_db_per_km * switch_km / 10.0);
    const double eta_f = eta_s * eta_t * eta_t;

    LossBudget out;
    out.eta_t = eta_t;
    out.eta_f_a = eta_f;
    out.eta_f_b = eta_f;
    out.eta_d_a = eta_d_a;
    out.eta_d_b = eta_d_b;
    out.p_dc = p_dc;
    return out;
}

double fairness_y(double x, double z, const LossBudget& losses) {
    if (!(x > 0.0 && x < 1.0))
        throw Error("fairness_y: x must lie strictly inside (0, 1)");
    if (!(z >= 0.0 && z <= 1.0))
        throw Error("fairness_y: z must lie in [0, 1]");

    const double efa = losses.eta_f_a;
    const double efb = losses.eta_f_b;
    const double c = (1.0 - z) * efb + 1.0;

    // Signed positive root of the fairness quadratic. Squaring the equation
    // loses the sign of the numerator, so it is checked explicitly: a
    // negative numerator means no y in [0, 1] equalizes the win
    // probabilities.
    const double disc = (1.0 - x) * c - x * z * efa;
    if (disc < 0.0)
        throw NoFairParameter("fairness_y: discriminant negative, no real root");
    const double num =
        std::sqrt(disc) - std::sqrt(x * z * (1.0 - z) * efa * efb);
    if (num < 0.0)
        throw NoFairParameter("fairness_y: no nonnegative root, protocol cannot be made fair here");
    const double big_y = num / (std::sqrt(1.0 - x) * c);
    const double y = big_y * big_y;
    if (y > 1.0)
        throw YOutOfUnitInterval("fairness_y: root exceeds 1");

    ProtocolParams params{x, y, z};
    const OutcomeDistribution dist = honest_closed_form(params, losses);
    if (std::abs(dist.p_alice_wins - dist.p_bob_wins) > 1e-12)
        throw NoFairParameter("fairness_y: candidate root fails the fairness residual check");
    return y;
}

double balance_x(double y, double z, const LossBudget& losses) {
    const double denom = losses.eta_f_a * losses.eta_d_a;
    if (denom <= 0.0)
        throw DegenerateEfficiency("balance_x: eta_f_a * eta_d_a must be positive");

    ProtocolParams params{0.0, y, z};
    const LossyCheatResult alice = alice_cheat_lossy(params, losses);
    const double x = (1.0 - alice.probability) / denom;
    if (!(x >= 0.0 && x <= 1.0)) {
        std::ostringstream msg;
        msg << "balance_x: x = " << x << " falls outside [0, 1]";
        throw XOutOfUnitInterval(msg.str());
    }
    return x;
}

SolveResult solve_fair_balanced(double z, const LossBudget& losses) {
    double x = 1.0 - 1.0 / std::sqrt(2.0);
    double previous_step = std::numeric_limits<double>::infinity();
    constexpr int kMaxIterations = 10000;
    constexpr double kTol = 1e-12;

    bool converged = false;
    int iterations = 0;
    for (int it = 1; it <= kMaxIterations; ++it) {
        const double y = fairness_y(x, z, losses);
        const double x_next = balance_x(y, z, losses);
        double step = x_next - x;
        // Plain fixed-point iteration can oscillate near eta_d ~ 1; halve the
        // step whenever it stops contracting.
        if (std::abs(step) >= previous_step)
            step *= 0.5;
        x += step;
        previous_step = std::abs(step);
        if (previous_step <= kTol) {
            converged = true;
            iterations = it;
            break;
        }
    }
    if (!converged)
        throw NoConvergence("solve_fair_balanced: fixed point did not converge");

    const double y = fairness_y(x, z, losses);
    ProtocolParams params{x, y, z};
    const OutcomeDistribution honest = honest_closed_form(params, losses);
    const LossyCheatResult alice = alice_cheat_lossy(params, losses);
    const double p_d_bob = bob_cheat(params, losses);

    SolveResult r;
    r.x = x;
    r.y = y;
    r.z = z;
    r.p_h = honest.p_alice_wins;
    r.p_ab = honest.p_abort;
    r.p_d_quantum = std::max(alice.probability, p_d_bob);
    r.p_d_classical = 1.0 - std::sqrt(std::max(0.0, honest.p_abort));
    r.l_one = alice.l_one;
    r.advantage = r.p_d_quantum < r.p_d_classical;
    r.converged = true;
    r.iterations = iterations;

    // A classical protocol with the same honest outcomes can match the
    // quantum cheating probabilities exactly when all three feasibility
    // inequalities hold; the reduced test folds them into one via
    // p_d_classical. Record whether the two agree.
    const bool feasible_full =
        honest.p_alice_wins <= alice.probability &&
        honest.p_bob_wins <= p_d_bob &&
        honest.p_abort >= (1.0 - alice.probability) * (1.0 - p_d_bob);
    const bool feasible_reduced =
        honest.p_abort >= (1.0 - r.p_d_quantum) * (1.0 - r.p_d_quantum);
    r.classical_tests_agree = feasible_full == feasible_reduced;
    return r;
}

std::vector<SweepRow> sweep(const std::vector<double>& d_values_km, double z,
                            double detector_eff, const LinkModel& base) {
    if (d_values_km.empty())
        throw Error("sweep: distance list must be non-empty");
    for (std::size_t i = 1; i < d_values_km.size(); ++i)
        if (!(d_values_km[i] > d_values_km[i - 1]))
            throw Error("sweep: distances must be strictly ascending");

    std::vector<SweepRow> rows;
    rows.reserve(d_values_km.size());
    for (double d : d_values_km) {
        LinkModel link = base;
        link.distance_km = d;
        SweepRow row;
        row.d_km = d;
        try {
            const LossBudget losses =
                link_budget(link, detector_eff, detector_eff);
            row.result = solve_fair_balanced(z, losses);
        } catch (const Error& e) {
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace qwcf
