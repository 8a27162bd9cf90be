#include "qwcf/fock.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace qwcf {

namespace {

// Factorials stay exactly representable in a double well past the caps this
// library is used with (<= ~20 photons total).
double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

void require_mode(const FockBasis& basis, int mode) {
    if (mode < 0 || mode >= basis.mode_count())
        throw ModeOutOfRange("mode index " + std::to_string(mode) +
                             " out of range for " +
                             std::to_string(basis.mode_count()) + " modes");
}

void require_efficiency(double eta) {
    if (!(eta >= 0.0 && eta <= 1.0))
        throw EfficiencyOutOfRange("efficiency " + std::to_string(eta) +
                                   " outside [0,1]");
}

} // namespace

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    double c = 1.0;
    for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return std::round(c);
}

// ---------------------------------------------------------------------------
// FockBasis
// ---------------------------------------------------------------------------

FockBasis::FockBasis(int mode_count, int max_total_photons)
    : modes_(mode_count), cap_(max_total_photons) {
    if (mode_count < 1) throw WrongModeCount("mode_count must be >= 1");
    if (max_total_photons < 0)
        throw OccupationExceedsTruncation("max_total_photons must be >= 0");

    // Grade by total photon number; lexicographic within each grade.
    std::vector<int> tuple(modes_, 0);
    for (int total = 0; total <= cap_; ++total) {
        // Enumerate tuples with the given total in lexicographic order.
        auto emit = [&](auto&& self, int mode, int left) -> void {
            if (mode == modes_ - 1) {
                tuple[mode] = left;
                states_.push_back(tuple);
                return;
            }
            for (int n = 0; n <= left; ++n) {
                tuple[mode] = n;
                self(self, mode + 1, left - n);
            }
        };
        emit(emit, 0, total);
    }
}

int FockBasis::index_of(std::span<const int> occupations) const {
    if (static_cast<int>(occupations.size()) != modes_)
        throw WrongModeCount("occupation tuple has " +
                             std::to_string(occupations.size()) +
                             " entries, basis has " + std::to_string(modes_) +
                             " modes");
    int total = 0;
    for (int n : occupations) {
        if (n < 0) throw OccupationExceedsTruncation("negative occupation");
        total += n;
    }
    if (total > cap_)
        throw OccupationExceedsTruncation(
            "total occupation " + std::to_string(total) + " exceeds cap " +
            std::to_string(cap_));

    // Graded lex enumeration is ordered, so a binary search would work; the
    // bases here are tiny, a linear scan within the grade is plenty.
    for (int i = 0; i < dimension(); ++i) {
        const auto& s = states_[i];
        if (std::equal(s.begin(), s.end(), occupations.begin())) return i;
    }
    throw OccupationExceedsTruncation("occupation tuple not in basis");
}

BasisPtr make_basis(int mode_count, int max_total_photons) {
    return std::make_shared<const FockBasis>(mode_count, max_total_photons);
}

// ---------------------------------------------------------------------------
// QuantumState
// ---------------------------------------------------------------------------

QuantumState::QuantumState(BasisPtr basis, Matrix rho)
    : basis_(std::move(basis)), rho_(std::move(rho)) {
    if (!basis_) throw InvalidState("null basis");
    const int d = basis_->dimension();
    if (rho_.rows() != d || rho_.cols() != d)
        throw InvalidState("density matrix is " + std::to_string(rho_.rows()) +
                           "x" + std::to_string(rho_.cols()) +
                           ", basis dimension is " + std::to_string(d));
}

QuantumState QuantumState::pure(BasisPtr basis, const Vector& amplitudes) {
    if (!basis) throw InvalidState("null basis");
    if (amplitudes.size() != basis->dimension())
        throw InvalidState("amplitude vector length mismatch");
    Matrix rho = amplitudes * amplitudes.adjoint();
    return QuantumState(std::move(basis), std::move(rho));
}

void QuantumState::check_invariants(const StateTolerances& tol) const {
    const double herm = (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
    if (herm > tol.hermiticity)
        throw InvalidState("hermiticity deviation " + std::to_string(herm));

    const double tr = trace();
    if (tr > 1.0 + tol.trace_high || tr < 1.0 - tol.trace_low)
        throw InvalidState("trace " + std::to_string(tr) + " outside bounds");

    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (rho_ + rho_.adjoint()),
                                             Eigen::EigenvaluesOnly);
    const double lo = es.eigenvalues().minCoeff();
    if (lo < -tol.psd_floor)
        throw InvalidState("negative eigenvalue " + std::to_string(lo));
}

QuantumState QuantumState::normalized() const {
    const double tr = trace();
    if (tr <= 0.0) throw InvalidState("cannot normalize zero-trace state");
    return QuantumState(basis_, rho_ / tr);
}

// ---------------------------------------------------------------------------
// Preparation
// ---------------------------------------------------------------------------

QuantumState prepare_fock(BasisPtr basis, std::span<const int> occupations) {
    const int idx = basis->index_of(occupations);
    Vector amp = Vector::Zero(basis->dimension());
    amp(idx) = 1.0;
    return QuantumState::pure(std::move(basis), amp);
}

QuantumState prepare_fock(BasisPtr basis, std::initializer_list<int> occupations) {
    return prepare_fock(std::move(basis),
                        std::span<const int>(occupations.begin(), occupations.size()));
}

// ---------------------------------------------------------------------------
// Beam splitter
// ---------------------------------------------------------------------------

namespace {

// Matrix element of the Fock-space lift of H(r) within the n-photon block of
// two modes: column j is the image of |j, n-j>, row p the weight on |p, n-p>.
// Derived by expanding (sqrt(r) a_k + sqrt(1-r) a_l)^j (sqrt(1-r) a_k -
// sqrt(r) a_l)^(n-j) and collecting a_k^p a_l^(n-p).
Eigen::MatrixXd bs_block(int n, double r) {
    const double sr = std::sqrt(r);
    const double st = std::sqrt(1.0 - r);
    Eigen::MatrixXd block(n + 1, n + 1);
    for (int j = 0; j <= n; ++j) {
        for (int p = 0; p <= n; ++p) {
            double acc = 0.0;
            const int lo = std::max(0, p - (n - j));
            const int hi = std::min(j, p);
            for (int i = lo; i <= hi; ++i) {
                const int sr_pow = i + (n - j) - (p - i);
                const int st_pow = (j - i) + (p - i);
                const double sign = ((n - j) - (p - i)) % 2 ? -1.0 : 1.0;
                acc += binomial(j, i) * binomial(n - j, p - i) *
                       std::pow(sr, sr_pow) * std::pow(st, st_pow) * sign;
            }
            block(p, j) = acc * std::sqrt(factorial(p) * factorial(n - p) /
                                          (factorial(j) * factorial(n - j)));
        }
    }
    return block;
}

} // namespace

Matrix beamsplitter_unitary(const FockBasis& basis, const BeamSplitterSpec& bs) {
    require_mode(basis, bs.mode_k);
    require_mode(basis, bs.mode_l);
    if (bs.mode_k == bs.mode_l)
        throw ModeOutOfRange("beam splitter modes must be distinct");
    if (!(bs.reflectivity >= 0.0 && bs.reflectivity <= 1.0))
        throw EfficiencyOutOfRange("reflectivity outside [0,1]");

    const int d = basis.dimension();
    Matrix u = Matrix::Zero(d, d);
    std::map<int, Eigen::MatrixXd> blocks;
    std::vector<int> target;
    for (int s = 0; s < d; ++s) {
        const auto& occ = basis.occupation(s);
        const int n = occ[bs.mode_k] + occ[bs.mode_l];
        auto it = blocks.find(n);
        if (it == blocks.end())
            it = blocks.emplace(n, bs_block(n, bs.reflectivity)).first;
        const Eigen::MatrixXd& block = it->second;
        target = occ;
        for (int p = 0; p <= n; ++p) {
            target[bs.mode_k] = p;
            target[bs.mode_l] = n - p;
            const int t = basis.index_of(target);
            u(t, s) += block(p, occ[bs.mode_k]);
        }
    }
    return u;
}

Matrix phase_unitary(const FockBasis& basis, int mode, double phase) {
    require_mode(basis, mode);
    const int d = basis.dimension();
    Matrix u = Matrix::Zero(d, d);
    for (int s = 0; s < d; ++s) {
        const int n = basis.occupation(s)[mode];
        u(s, s) = std::exp(Complex(0.0, phase * n));
    }
    return u;
}

std::vector<Matrix> loss_kraus(const FockBasis& basis, int mode, double efficiency) {
    require_mode(basis, mode);
    require_efficiency(efficiency);

    const int d = basis.dimension();
    const int cap = basis.max_total_photons();
    std::vector<Matrix> kraus;
    std::vector<int> target;
    for (int q = 0; q <= cap; ++q) {
        Matrix k = Matrix::Zero(d, d);
        bool nonzero = false;
        for (int s = 0; s < d; ++s) {
            const auto& occ = basis.occupation(s);
            const int n = occ[mode];
            if (n < q) continue;
            target = occ;
            target[mode] = n - q;
            const double w = binomial(n, q) *
                             std::pow(efficiency, n - q) *
                             std::pow(1.0 - efficiency, q);
            if (w == 0.0) continue;
            k(basis.index_of(target), s) = std::sqrt(w);
            nonzero = true;
        }
        if (nonzero) kraus.push_back(std::move(k));
    }
    return kraus;
}

QuantumState apply_beamsplitter(const QuantumState& state, const BeamSplitterSpec& bs) {
    const Matrix u = beamsplitter_unitary(state.basis(), bs);
    return QuantumState(state.basis_ptr(), u * state.matrix() * u.adjoint());
}

QuantumState apply_phase(const QuantumState& state, int mode, double phase) {
    const Matrix u = phase_unitary(state.basis(), mode, phase);
    return QuantumState(state.basis_ptr(), u * state.matrix() * u.adjoint());
}

QuantumState apply_loss(const QuantumState& state, int mode, double efficiency) {
    const auto kraus = loss_kraus(state.basis(), mode, efficiency);
    Matrix out = Matrix::Zero(state.matrix().rows(), state.matrix().cols());
    for (const Matrix& k : kraus) out += k * state.matrix() * k.adjoint();
    return QuantumState(state.basis_ptr(), std::move(out));
}

// ---------------------------------------------------------------------------
// Detection
// ---------------------------------------------------------------------------

Eigen::VectorXd povm_no_click_diagonal(const FockBasis& basis, int mode,
                                       const DetectorModel& det) {
    require_mode(basis, mode);
    require_efficiency(det.efficiency);
    if (!(det.dark_count >= 0.0 && det.dark_count < 1.0))
        throw EfficiencyOutOfRange("dark count probability outside [0,1)");

    Eigen::VectorXd diag(basis.dimension());
    for (int s = 0; s < basis.dimension(); ++s) {
        const int n = basis.occupation(s)[mode];
        diag(s) = (1.0 - det.dark_count) * std::pow(1.0 - det.efficiency, n);
    }
    return diag;
}

Matrix povm_no_click(const FockBasis& basis, int mode, const DetectorModel& det) {
    return povm_no_click_diagonal(basis, mode, det).cast<Complex>().asDiagonal();
}

double outcome_probability(const QuantumState& state,
                           std::span<const ModeOutcome> pattern) {
    const FockBasis& basis = state.basis();
    if (static_cast<int>(pattern.size()) != basis.mode_count())
        throw PatternModeMismatch("pattern has " + std::to_string(pattern.size()) +
                                  " entries, state has " +
                                  std::to_string(basis.mode_count()) + " modes");

    double p = 0.0;
    for (int s = 0; s < basis.dimension(); ++s) {
        double w = state.matrix()(s, s).real();
        if (w == 0.0) continue;
        const auto& occ = basis.occupation(s);
        for (int m = 0; m < basis.mode_count(); ++m) {
            const ModeOutcome& out = pattern[m];
            if (out.kind == ModeOutcome::Kind::Unmeasured) continue;
            const double eta = out.detector.efficiency;
            const double pdc = out.detector.dark_count;
            require_efficiency(eta);
            const int n = occ[m];
            switch (out.kind) {
            case ModeOutcome::Kind::NoClick:
                w *= (1.0 - pdc) * std::pow(1.0 - eta, n);
                break;
            case ModeOutcome::Kind::Click:
                w *= 1.0 - (1.0 - pdc) * std::pow(1.0 - eta, n);
                break;
            case ModeOutcome::Kind::ExactCount:
                w *= (n >= out.count)
                         ? binomial(n, out.count) * std::pow(eta, out.count) *
                               std::pow(1.0 - eta, n - out.count)
                         : 0.0;
                break;
            case ModeOutcome::Kind::Unmeasured:
                break;
            }
            if (w == 0.0) break;
        }
        p += w;
    }
    return p;
}

double outcome_probability(const QuantumState& state,
                           std::initializer_list<ModeOutcome> pattern) {
    return outcome_probability(
        state, std::span<const ModeOutcome>(pattern.begin(), pattern.size()));
}

} // namespace qwcf
