#include "qwcf/checks.hpp"

#include "qwcf/adversary.hpp"
#include "qwcf/config.hpp"
#include "qwcf/fock.hpp"
#include "qwcf/protocol.hpp"
#include "qwcf/report.hpp"
#include "qwcf/solver.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

namespace qwcf {
namespace {

std::string dev_detail(double worst, double tol) {
    std::ostringstream s;
    s << "worst deviation " << worst << " (tolerance " << tol << ")";
    return s.str();
}

Matrix random_density(const FockBasis& basis, std::mt19937& rng) {
    std::normal_distribution<double> g;
    const int d = basis.dimension();
    Matrix a(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            a(i, j) = Complex(g(rng), g(rng));
    Matrix rho = a * a.adjoint();
    rho /= rho.trace();
    return rho;
}

Vector random_pure(const FockBasis& basis, std::mt19937& rng) {
    std::normal_distribution<double> g;
    Vector v(basis.dimension());
    for (int i = 0; i < basis.dimension(); ++i)
        v[i] = Complex(g(rng), g(rng));
    v.normalize();
    return v;
}

double total_photons(const QuantumState& state) {
    double n = 0.0;
    for (int i = 0; i < state.basis().dimension(); ++i) {
        int tot = 0;
        for (int occ : state.basis().occupation(i)) tot += occ;
        n += state.matrix()(i, i).real() * tot;
    }
    return n;
}

// Reduce a 2-mode density matrix over its second mode.
Matrix trace_out_mode1(const FockBasis& two, const FockBasis& one,
                       const Matrix& rho) {
    Matrix out = Matrix::Zero(one.dimension(), one.dimension());
    for (int i = 0; i < two.dimension(); ++i) {
        for (int j = 0; j < two.dimension(); ++j) {
            const auto& oi = two.occupation(i);
            const auto& oj = two.occupation(j);
            if (oi[1] != oj[1]) continue;
            out(one.index_of({oi[0]}), one.index_of({oj[0]})) += rho(i, j);
        }
    }
    return out;
}

class Runner {
public:
    template <typename Body>
    void run(const std::string& name, Body&& body) {
        CheckResult r;
        r.name = name;
        try {
            auto [pass, detail] = body();
            r.pass = pass;
            r.detail = std::move(detail);
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        results.push_back(std::move(r));
    }

    std::vector<CheckResult> results;
};

using Verdict = std::pair<bool, std::string>;

// --------------------------------------------------------------------------
// Fock engine invariants
// --------------------------------------------------------------------------

Verdict check_kraus_completeness() {
    constexpr double tol = 1e-12;
    auto basis = make_basis(2, 4);
    const int d = basis->dimension();
    const Matrix id = Matrix::Identity(d, d);
    double worst = 0.0;
    for (double eta : {0.0, 0.3, 0.77, 1.0}) {
        for (int mode : {0, 1}) {
            Matrix sum = Matrix::Zero(d, d);
            for (const Matrix& k : loss_kraus(*basis, mode, eta))
                sum += k.adjoint() * k;
            worst = std::max(worst, (sum - id).cwiseAbs().maxCoeff());
        }
    }
    return {worst <= tol, dev_detail(worst, tol)};
}

Verdict check_povm_completeness(std::mt19937& rng) {
    constexpr double tol = 1e-12;
    auto basis = make_basis(2, 4);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        QuantumState state(basis, random_density(*basis, rng));
        for (double eta : {0.6, 1.0}) {
            for (double pdc : {0.0, 0.02}) {
                const DetectorModel det{DetectorKind::Threshold, eta, pdc};
                double sum = 0.0;
                for (auto a : {ModeOutcome::no_click(det), ModeOutcome::click(det)})
                    for (auto b : {ModeOutcome::no_click(det), ModeOutcome::click(det)})
                        sum += outcome_probability(state, {a, b});
                worst = std::max(worst, std::abs(sum - 1.0));
            }
            // Number-resolving detectors: outcomes 0..cap partition unity for
            // any efficiency (lost photons count as lower outcomes).
            const DetectorModel nr{DetectorKind::NumberResolving, eta, 0.0};
            double sum = 0.0;
            for (int k0 = 0; k0 <= 4; ++k0)
                for (int k1 = 0; k1 <= 4; ++k1)
                    sum += outcome_probability(
                        state, {ModeOutcome::exact_count(k0, nr),
                                ModeOutcome::exact_count(k1, nr)});
            worst = std::max(worst, std::abs(sum - 1.0));
        }
    }
    return {worst <= tol, dev_detail(worst, tol)};
}

Verdict check_photon_conservation(std::mt19937& rng) {
    constexpr double tol = 1e-12;
    auto basis = make_basis(3, 3);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> pick_mode(0, 2);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        QuantumState state = QuantumState::pure(basis, random_pure(*basis, rng));
        const double before = total_photons(state);
        for (int op = 0; op < 6; ++op) {
            if (unit(rng) < 0.5) {
                int k = pick_mode(rng), l = pick_mode(rng);
                if (k == l) l = (l + 1) % 3;
                state = apply_beamsplitter(state, {unit(rng), k, l});
            } else {
                state = apply_phase(state, pick_mode(rng), unit(rng) * 6.28);
            }
        }
        worst = std::max(worst, std::abs(total_photons(state) - before));
        worst = std::max(worst, std::abs(state.trace() - 1.0));
    }
    return {worst <= tol, dev_detail(worst, tol)};
}

Verdict check_loss_commutes_with_bs(std::mt19937& rng) {
    constexpr double tol = 1e-10;
    auto basis = make_basis(2, 4);
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        QuantumState state(basis, random_density(*basis, rng));
        for (double eta : {0.3, 0.8}) {
            for (double r : {0.5, 0.23}) {
                const BeamSplitterSpec bs{r, 0, 1};
                QuantumState a = apply_beamsplitter(
                    apply_loss(apply_loss(state, 0, eta), 1, eta), bs);
                QuantumState b = apply_loss(
                    apply_loss(apply_beamsplitter(state, bs), 0, eta), 1, eta);
                worst = std::max(
                    worst, (a.matrix() - b.matrix()).cwiseAbs().maxCoeff());
            }
        }
    }
    return {worst <= tol, dev_detail(worst, tol)};
}

Verdict check_loss_as_beamsplitter(std::mt19937& rng) {
    constexpr double tol = 1e-10;
    auto one = make_basis(1, 4);
    auto two = make_basis(2, 4);
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const Matrix tau = random_density(*one, rng);
        // Embed tau (x) |0> into the two-mode space.
        Matrix rho2 = Matrix::Zero(two->dimension(), two->dimension());
        for (int i = 0; i < one->dimension(); ++i)
            for (int j = 0; j < one->dimension(); ++j)
                rho2(two->index_of({one->occupation(i)[0], 0}),
                     two->index_of({one->occupation(j)[0], 0})) = tau(i, j);
        for (double eta : {0.35, 0.9}) {
            QuantumState mixed = apply_beamsplitter(QuantumState(two, rho2),
                                                    {eta, 0, 1});
            const Matrix reduced = trace_out_mode1(*two, *one, mixed.matrix());
            const Matrix lossy =
                apply_loss(QuantumState(one, tau), 0, eta).matrix();
            worst = std::max(worst, (reduced - lossy).cwiseAbs().maxCoeff());
        }
    }
    return {worst <= tol, dev_detail(worst, tol)};
}

Verdict check_threshold_vs_number_resolving(std::mt19937& rng) {
    constexpr double tol = 1e-12;
    auto basis = make_basis(2, 4);
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        QuantumState state(basis, random_density(*basis, rng));
        for (double eta : {0.55, 1.0}) {
            const DetectorModel th{DetectorKind::Threshold, eta, 0.0};
            const DetectorModel nr{DetectorKind::NumberResolving, eta, 0.0};
            const double p_none =
                outcome_probability(state, {ModeOutcome::no_click(th),
                                            ModeOutcome::unmeasured()});
            const double p_zero =
                outcome_probability(state, {ModeOutcome::exact_count(0, nr),
                                            ModeOutcome::unmeasured()});
            worst = std::max(worst, std::abs(p_none - p_zero));
            const double p_click =
                outcome_probability(state, {ModeOutcome::click(th),
                                            ModeOutcome::unmeasured()});
            double p_some = 0.0;
            for (int k = 1; k <= 4; ++k)
                p_some += outcome_probability(
                    state, {ModeOutcome::exact_count(k, nr),
                            ModeOutcome::unmeasured()});
            worst = std::max(worst, std::abs(p_click - p_some));
        }
    }
    return {worst <= tol, dev_detail(worst, tol)};
}

Verdict check_two_photon_split() {
    constexpr double tol = 1e-12;
    auto basis = make_basis(2, 2);
    QuantumState state = apply_beamsplitter(prepare_fock(basis, {2, 0}),
                                            {0.5, 0, 1});
    const DetectorModel ideal{DetectorKind::NumberResolving, 1.0, 0.0};
    const std::array<std::pair<std::array<int, 2>, double>, 3> expected{{
        {{2, 0}, 0.25},
        {{1, 1}, 0.5},
        {{0, 2}, 0.25},
    }};
    double worst = 0.0;
    for (const auto& [occ, want] : expected) {
        const double got = outcome_probability(
            state, {ModeOutcome::exact_count(occ[0], ideal),
                    ModeOutcome::exact_count(occ[1], ideal)});
        worst = std::max(worst, std::abs(got - want));
    }
    return {worst <= tol, dev_detail(worst, tol)};
}

// --------------------------------------------------------------------------
// Honest-protocol invariants
// --------------------------------------------------------------------------

Verdict check_lossless_fair_family() {
    constexpr double tol = 1e-12;
    const LossBudget lossless{};
    double worst = 0.0;
    for (double x : {0.1, 0.25, 1.0 - 1.0 / std::sqrt(2.0), 0.4}) {
        const double y = fair_y(x);
        const double z = no_abort_z(x, y);
        const OutcomeDistribution d =
            honest_closed_form(ProtocolParams{x, y, z}, lossless);
        worst = std::max(worst, std::abs(d.p_alice_wins - 0.5));
        worst = std::max(worst, std::abs(d.p_bob_wins - 0.5));
        worst = std::max(worst, std::abs(d.p_abort));
        worst = std::max(worst, std::abs(z - 2.0 * x));
    }
    return {worst <= tol, dev_detail(worst, tol)};
}

Verdict check_simulator_matches_closed_form() {
    constexpr double tol = 1e-10;
    auto basis = make_basis(3, 2);
    const std::array<LossBudget, 3> budgets{{
        {},
        {0.9, 0.85, 0.8, 0.7, 0.75, 0.0},
        {0.7, 0.95, 0.6, 1.0, 0.5, 0.0},
    }};
    double worst = 0.0;
    for (double x : {0.15, 0.5, 0.85})
        for (double y : {0.15, 0.5, 0.85})
            for (double z : {0.15, 0.5, 0.85})
                for (const LossBudget& losses : budgets) {
                    const ProtocolParams params{x, y, z};
                    const OutcomeDistribution want =
                        honest_closed_form(params, losses);
                    const OutcomeDistribution got =
                        honest_simulated(params, losses, basis);
                    worst = std::max(worst,
                                     std::abs(got.p_alice_wins - want.p_alice_wins));
                    worst = std::max(worst,
                                     std::abs(got.p_bob_wins - want.p_bob_wins));
                    worst = std::max(worst, std::abs(got.p_abort - want.p_abort));
                }
    return {worst <= tol, dev_detail(worst, tol)};
}

Verdict check_honest_ignores_sender_detector() {
    constexpr double tol = 1e-12;
    auto basis = make_basis(3, 2);
    const ProtocolParams params{0.3, 0.25, 0.45};
    LossBudget losses{0.9, 0.85, 0.8, 1.0, 0.75, 0.0};
    losses.eta_d_a = 1.0;
    const OutcomeDistribution ref = honest_simulated(params, losses, basis);
    double worst = 0.0;
    for (double eta : {0.2, 0.6}) {
        losses.eta_d_a = eta;
        const OutcomeDistribution got = honest_simulated(params, losses, basis);
        const OutcomeDistribution closed = honest_closed_form(params, losses);
        worst = std::max(worst, std::abs(got.p_alice_wins - ref.p_alice_wins));
        worst = std::max(worst, std::abs(got.p_bob_wins - ref.p_bob_wins));
        worst = std::max(worst, std::abs(got.p_abort - ref.p_abort));
        worst = std::max(worst, std::abs(closed.p_alice_wins - ref.p_alice_wins));
    }
    return {worst <= tol, dev_detail(worst, tol)};
}

Verdict check_abort_monotone_in_efficiency() {
    constexpr double slack = 1e-15;
    const ProtocolParams params{0.3, 0.25, 0.45};
    double worst = 0.0; // most negative allowed step
    for (int which = 0; which < 4; ++which) {
        double previous = 1.0;
        for (double eta : {0.2, 0.5, 0.8, 1.0}) {
            LossBudget losses{0.9, 0.9, 0.9, 0.9, 0.9, 0.0};
            switch (which) {
            case 0: losses.eta_t = eta; break;
            case 1: losses.eta_f_a = eta; break;
            case 2: losses.eta_f_b = eta; break;
            case 3: losses.eta_d_b = eta; break;
            }
            const double p_ab = honest_closed_form(params, losses).p_abort;
            worst = std::max(worst, p_ab - previous);
            previous = p_ab;
        }
    }
    return {worst <= slack, dev_detail(worst, slack)};
}

// --------------------------------------------------------------------------
// Adversary invariants
// --------------------------------------------------------------------------

Verdict check_cheat_product_law() {
    constexpr double tol = 1e-12;
    const LossBudget lossless{};
    double worst = 0.0;
    for (double x : {0.05, 0.15, 0.25, 0.35, 0.45}) {
        const double y = fair_y(x);
        const double z = no_abort_z(x, y);
        const ProtocolParams params{x, y, z};
        const double product =
            alice_cheat_lossless(params) * bob_cheat(params, lossless);
        worst = std::max(worst, std::abs(product - 0.5));
    }
    return {worst <= tol, dev_detail(worst, tol)};
}

Verdict check_loss_never_helps_sender() {
    constexpr double slack = 1e-12;
    double worst = 0.0; // most positive excess of lossy over lossless
    for (double y : {0.1, 0.3})
        for (double z : {0.2, 0.5})
            for (double ef : {0.8, 0.95})
                for (double ed : {0.5, 0.9}) {
                    const ProtocolParams params{0.0, y, z};
                    LossBudget losses{};
                    losses.eta_f_b = ef;
                    losses.eta_d_b = ed;
                    const double lossy =
                        alice_cheat_lossy(params, losses).probability;
                    worst = std::max(
                        worst, lossy - alice_cheat_lossless(params));
                }
    return {worst <= slack, dev_detail(worst, slack)};
}

Verdict check_oracle_matches_closed_form() {
    constexpr double tol_p = 1e-9;
    constexpr double tol_f = 1e-8;
    double worst_p = 0.0;
    double worst_f = 0.0;
    for (double y : {0.1, 1.0 / 3.0})
        for (double z : {0.1, 0.5})
            for (double ef : {0.9, 1.0})
                for (double ed : {0.5, 0.95}) {
                    const ProtocolParams params{0.0, y, z};
                    LossBudget losses{};
                    losses.eta_f_b = ef;
                    losses.eta_d_b = ed;
                    const LossyCheatResult closed =
                        alice_cheat_lossy(params, losses);
                    auto basis = make_basis(2, closed.l_one + 2);
                    const BruteforceResult brute =
                        alice_cheat_bruteforce(params, losses, basis);
                    worst_p = std::max(
                        worst_p, std::abs(brute.probability - closed.probability));
                    const QuantumState analytic =
                        alice_optimal_state(params, losses, basis);
                    const double fidelity =
                        (analytic.matrix() * brute.state.matrix())
                            .trace()
                            .real();
                    worst_f = std::max(worst_f, 1.0 - fidelity);
                }
    std::ostringstream detail;
    detail << "worst probability deviation " << worst_p << " (tolerance "
           << tol_p << "), worst fidelity deficit " << worst_f
           << " (tolerance " << tol_f << ")";
    return {worst_p <= tol_p && worst_f <= tol_f, detail.str()};
}

Verdict check_oracle_truncation_stable() {
    constexpr double tol = 1e-10;
    const ProtocolParams params{0.0, 0.1, 0.1};
    LossBudget losses{};
    losses.eta_f_b = 0.9;
    losses.eta_d_b = 0.5;
    const LossyCheatResult closed = alice_cheat_lossy(params, losses);
    double worst = 0.0;
    double previous = -1.0;
    for (int extra : {2, 3, 4}) {
        auto basis = make_basis(2, closed.l_one + extra);
        const BruteforceResult brute =
            alice_cheat_bruteforce(params, losses, basis);
        if (previous >= 0.0)
            worst = std::max(worst, std::abs(brute.probability - previous));
        previous = brute.probability;
        // The verification measurement annihilates the vacuum, so the optimal
        // input never has a vacuum component.
        const int vac = basis->index_of({0, 0});
        worst = std::max(worst, std::abs(brute.state.matrix()(vac, vac)));
    }
    return {worst <= tol, dev_detail(worst, tol)};
}

Verdict check_l_one_formula_vs_scan() {
    double worst = 0.0;
    for (double y : {0.05, 0.1, 0.25, 1.0 / 3.0, 0.45})
        for (double z : {0.05, 0.15, 0.5, 0.7})
            for (double ef : {0.8, 0.9, 1.0})
                for (double ed : {0.3, 0.5, 0.95, 1.0}) {
                    const ProtocolParams params{0.0, y, z};
                    LossBudget losses{};
                    losses.eta_f_b = ef;
                    losses.eta_d_b = ed;
                    const LossyCheatResult got = alice_cheat_lossy(params, losses);
                    const double r =
                        1.0 - ed * (1.0 - y * ef) * (1.0 - z);
                    const double s = 1.0 - ed;
                    double best = 0.0;
                    int best_l = 1;
                    for (int l = 1; l <= 300; ++l) {
                        const double v = std::pow(r, l) - std::pow(s, l);
                        if (v > best) {
                            best = v;
                            best_l = l;
                        }
                    }
                    worst = std::max(worst, std::abs(got.probability - best));
                    if (got.l_one != best_l)
                        worst = std::max(worst, 1.0);
                }
    return {worst <= 1e-12, dev_detail(worst, 1e-12)};
}

Verdict check_scf_residuals() {
    const ScfResult r = scf_solve();
    double worst_ratio = 0.0;
    const auto ratio = [&](double deviation, double tol) {
        worst_ratio = std::max(worst_ratio, std::abs(deviation) / tol);
    };
    ratio(r.x - r.y * r.y / ((1.0 - r.y) * (1.0 - 2.0 * r.y)), 1e-12);
    ratio(r.z - r.y / ((1.0 - r.y) * (1.0 - r.y)), 1e-12);
    ratio(1.0 - r.x / 2.0 - 1.0 / (2.0 - r.y - r.z + r.y * r.z), 1e-10);
    ratio(r.p - (1.0 - (1.0 - r.x) * (1.0 - r.y)), 1e-12);
    const double p_d_alice = 1.0 - (1.0 - r.y) * (1.0 - r.z);
    const double p_d_bob = 1.0 - r.x;
    ratio(p_d_alice - (r.p + r.epsilon), 1e-9);
    ratio(p_d_bob - (1.0 - r.p + r.epsilon), 1e-9);
    ratio(r.bias - scf_bias(r.p, r.epsilon), 1e-15);
    std::ostringstream detail;
    detail << "worst residual at " << worst_ratio << " of its tolerance";
    return {worst_ratio <= 1.0, detail.str()};
}

// --------------------------------------------------------------------------
// Solver invariants
// --------------------------------------------------------------------------

Verdict check_solver_self_consistency() {
    constexpr double tol = 1e-10;
    double worst = 0.0;
    bool flags_ok = true;
    for (double d : {0.0, 0.5}) {
        LinkModel link;
        link.distance_km = d;
        const LossBudget losses = link_budget(link, 0.95, 0.95);
        const SolveResult r = solve_fair_balanced(0.57, losses);
        const ProtocolParams params{r.x, r.y, r.z};
        const OutcomeDistribution honest = honest_closed_form(params, losses);
        worst = std::max(worst,
                         std::abs(honest.p_alice_wins - honest.p_bob_wins));
        worst = std::max(worst,
                         std::abs(alice_cheat_lossy(params, losses).probability -
                                  bob_cheat(params, losses)));
        worst = std::max(
            worst, std::abs(r.p_d_classical -
                            (1.0 - std::sqrt(std::max(0.0, r.p_ab)))));
        flags_ok = flags_ok && r.converged && r.classical_tests_agree;
    }
    std::ostringstream detail;
    detail << dev_detail(worst, tol)
           << (flags_ok ? "" : "; converged/classical flags wrong");
    return {worst <= tol && flags_ok, detail.str()};
}

Verdict check_sweep_rows_and_monotone_y() {
    std::vector<double> distances{0.0, 0.5, 1.0, 2.0, 3.0, 5.5, 8.0};
    const std::vector<SweepRow> rows = sweep(distances, 0.57, 0.95);
    if (rows.size() != distances.size())
        return {false, "row count mismatch"};
    bool shape_ok = true;
    int solved = 0, failed = 0;
    double prev_y = 1.0;
    double worst = 0.0;
    for (const SweepRow& row : rows) {
        const bool has_result = row.result.has_value();
        const bool has_error = !row.error.empty();
        shape_ok = shape_ok && (has_result != has_error);
        if (has_result) {
            ++solved;
            worst = std::max(worst, row.result->y - prev_y);
            prev_y = row.result->y;
        } else {
            ++failed;
        }
    }
    std::ostringstream detail;
    detail << solved << " rows solved, " << failed
           << " carry errors; y increase worst " << worst;
    const bool pass = shape_ok && solved >= 4 && failed >= 1 && worst <= 1e-12;
    return {pass, detail.str()};
}

// --------------------------------------------------------------------------
// Serialization invariants
// --------------------------------------------------------------------------

Verdict check_serialization_deterministic() {
    const std::vector<double> distances{0.0, 0.25};
    const auto rows1 = sweep(distances, 0.57, 0.95);
    const auto rows2 = sweep(distances, 0.57, 0.95);
    if (sweep_to_csv(rows1) != sweep_to_csv(rows2))
        return {false, "CSV output differs between identical runs"};
    if (sweep_to_json(rows1) != sweep_to_json(rows2))
        return {false, "JSON output differs between identical runs"};
    const std::string csv = sweep_to_csv(rows1);
    if (csv.rfind(kSweepCsvHeader, 0) != 0)
        return {false, "CSV header mismatch"};

    RunConfig config;
    config.y = 0.25;
    config.z = 0.57;
    config.losses.eta_t = 0.9;
    config.distances_km = {0.0, 1.0, 2.5};
    config.format = "csv";
    config.oracle = true;
    const std::string s1 = serialize_config(config);
    const std::string s2 = serialize_config(parse_config(s1));
    if (s1 != s2)
        return {false, "config does not round-trip"};

    bool rejected = false;
    try {
        parse_config("{\"bogus\": 1}");
    } catch (const ConfigError&) {
        rejected = true;
    }
    if (!rejected)
        return {false, "unknown config key was accepted"};
    return {true, "byte-identical outputs; config round-trips"};
}

} // namespace

std::vector<CheckResult> run_all_checks(unsigned seed) {
    std::mt19937 rng(seed);
    Runner runner;

    runner.run("kraus-completeness", [] { return check_kraus_completeness(); });
    runner.run("povm-completeness",
               [&] { return check_povm_completeness(rng); });
    runner.run("photon-number-conservation",
               [&] { return check_photon_conservation(rng); });
    runner.run("loss-commutes-with-beamsplitter",
               [&] { return check_loss_commutes_with_bs(rng); });
    runner.run("loss-is-beamsplitter-to-environment",
               [&] { return check_loss_as_beamsplitter(rng); });
    runner.run("threshold-vs-number-resolving",
               [&] { return check_threshold_vs_number_resolving(rng); });
    runner.run("two-photon-splitting", [] { return check_two_photon_split(); });
    runner.run("lossless-fair-family",
               [] { return check_lossless_fair_family(); });
    runner.run("simulator-matches-closed-form",
               [] { return check_simulator_matches_closed_form(); });
    runner.run("honest-ignores-sender-detector",
               [] { return check_honest_ignores_sender_detector(); });
    runner.run("abort-monotone-in-efficiency",
               [] { return check_abort_monotone_in_efficiency(); });
    runner.run("cheat-product-law", [] { return check_cheat_product_law(); });
    runner.run("loss-never-helps-sender",
               [] { return check_loss_never_helps_sender(); });
    runner.run("oracle-matches-closed-form",
               [] { return check_oracle_matches_closed_form(); });
    runner.run("oracle-truncation-stable",
               [] { return check_oracle_truncation_stable(); });
    runner.run("photon-count-formula-vs-scan",
               [] { return check_l_one_formula_vs_scan(); });
    runner.run("scf-operating-point-residuals",
               [] { return check_scf_residuals(); });
    runner.run("solver-self-consistency",
               [] { return check_solver_self_consistency(); });
    runner.run("sweep-rows-and-monotone-y",
               [] { return check_sweep_rows_and_monotone_y(); });
    runner.run("serialization-deterministic",
               [] { return check_serialization_deterministic(); });

    return runner.results;
}

} // namespace qwcf
