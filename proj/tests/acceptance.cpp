// Acceptance gate: nine release criteria, one verdict line each.
// Exits 0 only if every criterion holds at its stated tolerance.

#include "qwcf/adversary.hpp"
#include "qwcf/fock.hpp"
#include "qwcf/protocol.hpp"
#include "qwcf/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

using namespace qwcf;

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

// Collects the first failure inside one criterion; later checks still run so
// a broken build fails loudly everywhere it is broken.
struct Criterion {
    bool ok = true;
    std::string why;

    void require(bool cond, const std::string& msg) {
        if (ok && !cond) {
            ok = false;
            why = msg;
        }
    }
    void near(double got, double want, double tol, const std::string& what) {
        if (!(std::abs(got - want) <= tol))
            require(false, what + ": got " + fmt(got) + ", want " + fmt(want) +
                               " +/- " + fmt(tol));
    }
};

Matrix random_density(std::mt19937& rng, int dim) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix g(dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c)
            g(r, c) = Complex(gauss(rng), gauss(rng));
    Matrix rho = g * g.adjoint();
    return rho / rho.trace().real();
}

LossBudget lossless() { return LossBudget{}; }

// --- 1: the balanced lossless operating point ------------------------------

bool balanced_lossless_point(Criterion& c) {
    const double x = 1.0 - 1.0 / std::sqrt(2.0);
    const double y = fair_y(x);
    const double z = no_abort_z(x, y);
    const ProtocolParams p{x, y, z};

    c.near(y, x, 1e-15, "fair family fixed point");
    const OutcomeDistribution h = honest_closed_form(p, lossless());
    c.near(h.p_alice_wins, 0.5, 1e-12, "honest first-party win");
    c.near(h.p_bob_wins, 0.5, 1e-12, "honest second-party win");
    c.near(h.p_abort, 0.0, 1e-12, "honest abort");

    const double pda = alice_cheat_lossless(p);
    const double pdb = bob_cheat(p, lossless());
    const double root_half = 1.0 / std::sqrt(2.0);
    c.near(pda, root_half, 1e-12, "sender cheating probability");
    c.near(pdb, root_half, 1e-12, "receiver cheating probability");

    const double eps = std::max(pda, pdb) - 0.5;
    c.near(eps, 0.2071067811865476, 1e-12, "weak-flip bias");
    return c.ok;
}

// --- 2: product law on the fair abort-free family --------------------------

bool product_law(Criterion& c) {
    for (int i = 1; i <= 9; ++i) {
        const double x = 0.05 * i;
        const double y = fair_y(x);
        const double z = no_abort_z(x, y);
        const ProtocolParams p{x, y, z};
        const double prod = alice_cheat_lossless(p) * bob_cheat(p, lossless());
        c.near(prod, 0.5, 1e-12, "product at x = " + fmt(x));
    }
    return c.ok;
}

// --- 3: derived strong-flip operating point ---------------------------------

bool strong_flip_point(Criterion& c) {
    const ScfResult s = scf_solve();
    c.near(s.x, 0.38, 0.01, "strong-flip x");
    c.near(s.y, 0.31, 0.01, "strong-flip y");
    c.near(s.z, 0.66, 0.01, "strong-flip z");
    c.near(s.bias, 0.31, 0.005, "strong-flip bias");
    return c.ok;
}

// --- 4: sender-attack oracle equals the closed form -------------------------

bool oracle_equivalence(Criterion& c) {
    const double ys[] = {0.05, 0.1, 1.0 / 3.0, 0.45};
    const double zs[] = {0.05, 0.15, 0.5, 0.7};
    const double fibers[] = {0.8, 0.9, 1.0};
    const double detectors[] = {0.3, 0.5, 0.95};

    double worst_dev = 0.0;
    double worst_fid = 1.0;
    for (double y : ys)
        for (double z : zs)
            for (double ef : fibers)
                for (double ed : detectors) {
                    ProtocolParams p{0.3, y, z};
                    LossBudget l;
                    l.eta_f_b = ef;
                    l.eta_d_b = ed;
                    const LossyCheatResult closed = alice_cheat_lossy(p, l);
                    auto basis = make_basis(2, closed.l_one + 2);
                    const BruteforceResult brute =
                        alice_cheat_bruteforce(p, l, basis);
                    worst_dev = std::max(
                        worst_dev, std::abs(brute.probability - closed.probability));
                    const QuantumState analytic = alice_optimal_state(p, l, basis);
                    const double fid =
                        (analytic.matrix() * brute.state.matrix()).trace().real();
                    worst_fid = std::min(worst_fid, fid);
                }
    c.require(worst_dev <= 1e-9,
              "oracle deviation " + fmt(worst_dev) + " exceeds 1e-9");
    c.require(worst_fid >= 1.0 - 1e-8,
              "attack-state fidelity " + fmt(worst_fid) + " below 1 - 1e-8");
    return c.ok;
}

// --- 5: full simulator reproduces the closed forms --------------------------

bool simulator_fidelity(Criterion& c) {
    auto basis = make_basis(3, 2);
    const double grid[] = {0.1, 0.3, 0.5, 0.7, 0.9};

    auto compare = [&](const ProtocolParams& p, const LossBudget& l) {
        const OutcomeDistribution want = honest_closed_form(p, l);
        const OutcomeDistribution got = honest_simulated(p, l, basis);
        const double dev = std::max({std::abs(got.p_alice_wins - want.p_alice_wins),
                                     std::abs(got.p_bob_wins - want.p_bob_wins),
                                     std::abs(got.p_abort - want.p_abort)});
        c.require(dev <= 1e-10, "simulator deviation " + fmt(dev) + " at x = " +
                                    fmt(p.x) + ", y = " + fmt(p.y) + ", z = " +
                                    fmt(p.z));
    };

    for (double x : grid)
        for (double y : grid)
            for (double z : grid)
                compare(ProtocolParams{x, y, z}, lossless());

    const ProtocolParams p{0.3, 0.4, 0.6};
    const double knob[] = {0.7, 0.85, 1.0};
    for (double et : knob)
        for (double fa : knob)
            for (double fb : knob) {
                LossBudget l;
                l.eta_t = et;
                l.eta_f_a = fa;
                l.eta_f_b = fb;
                l.eta_d_a = 0.9;
                l.eta_d_b = 0.8;
                compare(p, l);
            }
    for (double da : knob)
        for (double db : knob) {
            LossBudget l;
            l.eta_t = 0.9;
            l.eta_f_a = 0.95;
            l.eta_f_b = 0.85;
            l.eta_d_a = da;
            l.eta_d_b = db;
            compare(p, l);
        }
    return c.ok;
}

// --- 6: loss-channel lemmas --------------------------------------------------

// Loss as a beamsplitter into a traced-out vacuum ancilla.
bool lemma_loss_dilation(Criterion& c, std::mt19937& rng) {
    const int cap = 4;
    auto sys = make_basis(1, cap);
    auto pair = make_basis(2, cap);
    std::uniform_real_distribution<double> unif(0.05, 1.0);

    for (int trial = 0; trial < 100; ++trial) {
        const Matrix rho = random_density(rng, sys->dimension());
        const double eta = unif(rng);

        Matrix embedded = Matrix::Zero(pair->dimension(), pair->dimension());
        for (int r = 0; r < sys->dimension(); ++r)
            for (int s = 0; s < sys->dimension(); ++s)
                embedded(pair->index_of({sys->occupation(r)[0], 0}),
                         pair->index_of({sys->occupation(s)[0], 0})) = rho(r, s);

        const QuantumState joint(pair, embedded);
        const QuantumState mixed =
            apply_beamsplitter(joint, BeamSplitterSpec{eta, 0, 1});

        Matrix reduced = Matrix::Zero(sys->dimension(), sys->dimension());
        for (int n = 0; n <= cap; ++n)
            for (int m = 0; m <= cap; ++m)
                for (int k = 0; k <= cap - std::max(n, m); ++k)
                    reduced(sys->index_of({n}), sys->index_of({m})) +=
                        mixed.matrix()(pair->index_of({n, k}),
                                       pair->index_of({m, k}));

        const QuantumState direct =
            apply_loss(QuantumState(sys, rho), 0, eta);
        const double dev =
            (reduced - direct.matrix()).cwiseAbs().maxCoeff();
        c.require(dev <= 1e-10, "dilation trial " + std::to_string(trial) +
                                    ": deviation " + fmt(dev));
    }
    return c.ok;
}

// Equal loss on both arms commutes with any beamsplitter.
bool lemma_loss_commutation(Criterion& c, std::mt19937& rng) {
    auto basis = make_basis(2, 3);
    std::uniform_real_distribution<double> unif(0.05, 0.95);

    for (int trial = 0; trial < 100; ++trial) {
        const QuantumState rho(basis, random_density(rng, basis->dimension()));
        const double eta = unif(rng);
        const BeamSplitterSpec bs{unif(rng), 0, 1};

        const QuantumState loss_first = apply_beamsplitter(
            apply_loss(apply_loss(rho, 0, eta), 1, eta), bs);
        const QuantumState loss_last = apply_loss(
            apply_loss(apply_beamsplitter(rho, bs), 0, eta), 1, eta);
        const double dev = (loss_first.matrix() - loss_last.matrix())
                               .cwiseAbs()
                               .maxCoeff();
        c.require(dev <= 1e-10, "commutation trial " + std::to_string(trial) +
                                    ": deviation " + fmt(dev));
    }
    return c.ok;
}

bool loss_lemmas(Criterion& c) {
    std::mt19937 rng(777u);
    lemma_loss_dilation(c, rng);
    lemma_loss_commutation(c, rng);
    return c.ok;
}

// --- 7: quantum-advantage window over distance -------------------------------

bool advantage_window(Criterion& c) {
    // First family: advantage at zero distance, lost somewhere inside
    // [0.05 km, 5 km].
    {
        LinkModel link;
        const SolveResult at_zero =
            solve_fair_balanced(0.57, link_budget(link, 0.95, 0.95));
        c.require(at_zero.converged && at_zero.advantage,
                  "no advantage at zero distance");

        std::vector<double> ds;
        for (double d = 0.05; d <= 5.0 + 1e-9; d += 0.05) ds.push_back(d);
        const auto rows = sweep(ds, 0.57, 0.95);
        c.require(rows.front().result && rows.front().result->advantage,
                  "advantage already lost at 0.05 km");
        bool crossed = false;
        for (const auto& row : rows)
            if (row.result && !row.result->advantage) crossed = true;
        c.require(crossed, "no crossover found up to 5 km");
    }

    // Second family: honest abort stays within [0.10, 0.20] everywhere the
    // advantage persists.
    {
        std::vector<double> ds;
        for (double d = 0.0; d <= 0.40 + 1e-9; d += 0.02) ds.push_back(d);
        const auto rows = sweep(ds, 0.63, 0.90);
        int in_window = 0;
        for (const auto& row : rows) {
            if (!row.result || !row.result->advantage) continue;
            ++in_window;
            const double ab = row.result->p_ab;
            c.require(ab >= 0.10 && ab <= 0.20,
                      "abort " + fmt(ab) + " at " + fmt(row.d_km) +
                          " km leaves [0.10, 0.20]");
        }
        c.require(in_window >= 3, "advantage window unexpectedly small");
        c.require(rows.front().result && rows.front().result->advantage,
                  "second family loses advantage at zero distance");
    }
    return c.ok;
}

// --- 8: classical bound consistent on every solved point ---------------------

bool classical_bound_consistency(Criterion& c) {
    std::vector<double> ds;
    for (double d = 0.0; d <= 4.0 + 1e-9; d += 0.1) ds.push_back(d);

    int checked = 0;
    for (const auto& [z, ed] :
         std::vector<std::pair<double, double>>{{0.57, 0.95}, {0.63, 0.90}}) {
        for (const auto& row : sweep(ds, z, ed)) {
            if (!row.result) continue;
            ++checked;
            const SolveResult& r = *row.result;
            c.near(r.p_d_classical, 1.0 - std::sqrt(r.p_ab), 1e-12,
                   "classical bound at " + fmt(row.d_km) + " km, z = " + fmt(z));
            c.require(r.classical_tests_agree,
                      "reduced and full classical tests disagree at " +
                          fmt(row.d_km) + " km, z = " + fmt(z));
        }
    }
    c.require(checked >= 50, "too few solved points: " + std::to_string(checked));
    return c.ok;
}

// --- 9: multi-round classical lose limit --------------------------------------

bool classical_lose_limit_checks(Criterion& c) {
    const double y = 1.0 / 3.0;
    const double eta = 0.95;

    double prev = classical_lose_limit(y, eta, 1);
    c.near(prev, (1.0 - y) * eta, 1e-15, "single-round value");
    // The increment shrinks like q^n; past n ~ 37 it falls below one ulp of
    // 1.0, so strictness is only checkable while it is representable.
    for (int n = 2; n <= 60; ++n) {
        const double cur = classical_lose_limit(y, eta, n);
        if (n <= 30)
            c.require(cur > prev, "not strictly increasing at n = " +
                                      std::to_string(n));
        else
            c.require(cur >= prev, "decreasing at n = " + std::to_string(n));
        prev = cur;
    }
    c.require(classical_lose_limit(y, eta, 40) > 1.0 - 1e-6,
              "limit does not saturate by n = 40");

    auto basis = make_basis(2, 6);
    const DetectorModel det{DetectorKind::Threshold, eta, 0.0};
    for (int n = 1; n <= 6; ++n) {
        QuantumState in = prepare_fock(basis, {n, 0});
        QuantumState split = apply_beamsplitter(in, BeamSplitterSpec{y, 0, 1});
        const double p = outcome_probability(
            split, {ModeOutcome::unmeasured(), ModeOutcome::click(det)});
        c.near(p, classical_lose_limit(y, eta, n), 1e-10,
               "threshold-click cross-check at n = " + std::to_string(n));
    }
    return c.ok;
}

struct Entry {
    const char* name;
    bool (*run)(Criterion&);
};

} // namespace

int main() {
    const Entry entries[] = {
        {"balanced lossless operating point", balanced_lossless_point},
        {"cheating-probability product law", product_law},
        {"derived strong-flip operating point", strong_flip_point},
        {"sender-attack oracle equivalence", oracle_equivalence},
        {"simulator matches closed forms", simulator_fidelity},
        {"loss-channel lemmas", loss_lemmas},
        {"quantum-advantage window", advantage_window},
        {"classical-bound consistency", classical_bound_consistency},
        {"multi-round classical lose limit", classical_lose_limit_checks},
    };

    int failures = 0;
    int index = 0;
    for (const Entry& e : entries) {
        ++index;
        Criterion c;
        bool ok;
        try {
            ok = e.run(c);
        } catch (const std::exception& ex) {
            ok = false;
            c.why = std::string("exception: ") + ex.what();
        }
        if (ok) {
            std::printf("[PASS] criterion %d: %s\n", index, e.name);
        } else {
            ++failures;
            std::printf("[FAIL] criterion %d: %s\n", index, e.name);
            if (!c.why.empty()) std::printf("       %s\n", c.why.c_str());
        }
    }
    if (failures) {
        std::printf("%d of 9 criteria failed\n", failures);
        return 1;
    }
    std::printf("all 9 criteria passed\n");
    return 0;
}
