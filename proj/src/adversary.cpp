#include "qwcf/adversary.hpp"

#include <cmath>
#include <numbers>

namespace qwcf {

double bob_cheat(const ProtocolParams& p, const LossBudget& l) {
    return 1.0 - p.x * l.eta_f_a * l.eta_d_a;
}

double alice_cheat_lossless(const ProtocolParams& p) {
    return 1.0 - (1.0 - p.y) * (1.0 - p.z);
}

LossyCheatResult alice_cheat_lossy(const ProtocolParams& p, const LossBudget& l) {
    const double eta_f = l.eta_f_b;
    const double eta_d = l.eta_d_b;
    if (eta_d <= 0.0)
        throw DegenerateEfficiency("detector efficiency must be positive");

    const double r = 1.0 - eta_d * (1.0 - p.y * eta_f) * (1.0 - p.z);
    const double s = 1.0 - eta_d;

    if (s == 0.0) {
        // Perfect detectors: r^l - 0 is maximal at l = 1 (and constant 1 in
        // the degenerate corner r = 1).
        return {r, 1};
    }
    if (r >= 1.0)
        throw Error("optimal attack photon number diverges: "
                    "(1 - y*eta_f)(1 - z) = 0 with imperfect detectors");
    if (r <= s) return {0.0, 1}; // no attack path: value is 0 for every l

    const auto value = [&](int l) {
        return std::pow(r, l) - std::pow(s, l);
    };

    // Stationary point of r^lambda - s^lambda; both logs are negative, so the
    // ratio inside the outer log is positive.
    const double lr = std::log(r);
    const double ls = std::log(s);
    const double lambda1 = std::log(ls / lr) / (lr - ls);

    int l_formula = 1;
    {
        const int lo = std::max(1, static_cast<int>(std::floor(lambda1)));
        const int hi = std::max(1, static_cast<int>(std::ceil(lambda1)));
        // Ties go to the smaller photon number.
        l_formula = (value(hi) > value(lo)) ? hi : lo;
    }

    // Exhaustive scan; authoritative if the formula ever disagrees.
    const int l_max = std::max(200, static_cast<int>(std::ceil(3.0 * lambda1)));
    int l_best = 1;
    double best = value(1);
    for (int l = 2; l <= l_max; ++l) {
        const double v = value(l);
        if (v > best) {
            best = v;
            l_best = l;
        }
    }
    (void)l_formula; // cross-checked in tests; the scan result is returned
    return {best, l_best};
}

QuantumState alice_optimal_state(const ProtocolParams& p, const LossBudget& l,
                                 BasisPtr basis) {
    if (basis->mode_count() != 2)
        throw WrongModeCount("attack states live on 2 modes");
    const auto lossy = alice_cheat_lossy(p, l);
    if (basis->max_total_photons() < lossy.l_one)
        throw TruncationTooSmall("basis cap " +
                                 std::to_string(basis->max_total_photons()) +
                                 " below optimal photon number " +
                                 std::to_string(lossy.l_one));

    const double eta_f = l.eta_f_b;
    const double denom = p.y * eta_f + p.z - p.y * p.z * eta_f;
    const double a = denom > 0.0 ? p.y * (1.0 - p.z) * eta_f / denom : 0.0;

    QuantumState state = prepare_fock(basis, {0, lossy.l_one});
    state = apply_beamsplitter(state, {a, 0, 1});
    state = apply_phase(state, 1, std::numbers::pi);
    return state;
}

BruteforceResult alice_cheat_bruteforce(const ProtocolParams& p,
                                        const LossBudget& l, BasisPtr basis) {
    if (basis->mode_count() != 2)
        throw WrongModeCount("attack states live on 2 modes");
    const auto lossy = alice_cheat_lossy(p, l);
    const int cap = basis->max_total_photons();
    if (cap < lossy.l_one + 2)
        throw TruncationTooSmall("basis cap " + std::to_string(cap) +
                                 " below l_one + 2 = " +
                                 std::to_string(lossy.l_one + 2));

    // Verification interferometer with the delay-line transmission folded
    // into the splitting ratio (see header).
    const FockBasis work(3, cap);
    const Matrix u = beamsplitter_unitary(work, {p.z, 0, 1}) *
                     beamsplitter_unitary(work, {p.y * l.eta_f_b, 1, 2});

    const DetectorModel det{DetectorKind::Threshold, l.eta_d_b, 0.0};
    const Eigen::VectorXd nc0 = povm_no_click_diagonal(work, 0, det);
    const Eigen::VectorXd nc1 = povm_no_click_diagonal(work, 1, det);
    const Eigen::VectorXd nc2 = povm_no_click_diagonal(work, 2, det);
    const Eigen::VectorXd pi =
        (Eigen::VectorXd::Ones(work.dimension()) - nc0).cwiseProduct(nc1).cwiseProduct(nc2);

    const Matrix m = u.adjoint() * pi.cast<Complex>().asDiagonal() * u;

    // Attack inputs occupy the first two modes; the third starts in vacuum.
    const int dim2 = basis->dimension();
    std::vector<int> embed(dim2);
    std::vector<int> occ3(3);
    for (int i = 0; i < dim2; ++i) {
        const auto& occ = basis->occupation(i);
        occ3 = {occ[0], occ[1], 0};
        embed[i] = work.index_of(occ3);
    }
    Matrix msub(dim2, dim2);
    for (int i = 0; i < dim2; ++i)
        for (int j = 0; j < dim2; ++j) msub(i, j) = m(embed[i], embed[j]);

    Eigen::SelfAdjointEigenSolver<Matrix> es(msub);
    const int top = dim2 - 1;
    Vector vec = es.eigenvectors().col(top);

    // Fix the global phase: largest-magnitude amplitude real and positive.
    int imax = 0;
    for (int i = 1; i < dim2; ++i)
        if (std::abs(vec(i)) > std::abs(vec(imax))) imax = i;
    if (std::abs(vec(imax)) > 0.0) vec *= std::abs(vec(imax)) / vec(imax);

    return {es.eigenvalues()(top), QuantumState::pure(std::move(basis), vec)};
}

CheatReport cheat_report(const ProtocolParams& p, const LossBudget& l,
                         BasisPtr basis) {
    const auto lossy = alice_cheat_lossy(p, l);
    return {lossy.probability, bob_cheat(p, l), lossy.l_one,
            alice_optimal_state(p, l, std::move(basis))};
}

double classical_lose_limit(double y, double eta, int n) {
    if (!(y >= 0.0 && y < 1.0)) throw Error("y must be in [0,1)");
    if (!(eta > 0.0 && eta <= 1.0)) throw Error("eta must be in (0,1]");
    if (n < 1) throw Error("n must be >= 1");
    return 1.0 - std::pow(y + (1.0 - eta) * (1.0 - y), n);
}

double scf_bias(double p, double epsilon) {
    if (p + epsilon >= 2.0) throw Error("p + epsilon must be below 2");
    return std::max(0.5 - (p - epsilon) / 2.0,
                    1.0 / (2.0 - (p + epsilon)) - 0.5);
}

ScfResult scf_solve() {
    // Substituting x(y) and z(y) into the third equation leaves a single
    // strictly decreasing function of y on (0, 1/2).
    const auto x_of = [](double y) {
        return y * y / ((1.0 - y) * (1.0 - 2.0 * y));
    };
    const auto z_of = [](double y) { return y / ((1.0 - y) * (1.0 - y)); };
    const auto f = [&](double y) {
        const double x = x_of(y);
        const double z = z_of(y);
        return 1.0 - x / 2.0 - 1.0 / (2.0 - y - z + y * z);
    };

    double lo = 1e-9;
    double hi = 0.5 - 1e-9;
    if (!(f(lo) > 0.0) || !(f(hi) < 0.0))
        throw NoRootInUnitInterval("no sign change on (0, 1/2)");
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) > 0.0 ? lo : hi) = mid;
    }
    const double y = 0.5 * (lo + hi);
    const double x = x_of(y);
    const double z = z_of(y);

    const double p_d_a = 1.0 - (1.0 - y) * (1.0 - z);
    const double p_d_b = 1.0 - x;
    const double p = 1.0 - (1.0 - x) * (1.0 - y); // honest win probability
    const double epsilon = p_d_a - p;
    if (std::abs(p_d_b - (1.0 - p + epsilon)) > 1e-9)
        throw Error("inconsistent cheating probabilities at the root");

    return {x, y, z, p, epsilon, scf_bias(p, epsilon)};
}

} // namespace qwcf
