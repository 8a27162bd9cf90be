#pragma once

#include <complex>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qwcf {

using Complex = std::complex<double>;
using Matrix  = Eigen::MatrixXcd;
using Vector  = Eigen::VectorXcd;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OccupationExceedsTruncation : Error { using Error::Error; };
struct WrongModeCount              : Error { using Error::Error; };
struct ModeOutOfRange              : Error { using Error::Error; };
struct EfficiencyOutOfRange        : Error { using Error::Error; };
struct PatternModeMismatch         : Error { using Error::Error; };
struct TruncationTooSmall          : Error { using Error::Error; };
struct InvalidState                : Error { using Error::Error; };

// ---------------------------------------------------------------------------
// FockBasis: all occupation tuples (n_1..n_m) with sum <= max_total_photons,
// enumerated in graded lexicographic order (ascending total photon number,
// lexicographic within each grade). The cap is global, not per mode: passive
// optics and loss never raise the total, so truncation is exact for any
// input with at most the cap's photons.
// ---------------------------------------------------------------------------

class FockBasis {
public:
    FockBasis(int mode_count, int max_total_photons);

    int mode_count() const { return modes_; }
    int max_total_photons() const { return cap_; }
    int dimension() const { return static_cast<int>(states_.size()); }

    // Occupation tuple of basis vector `index`.
    const std::vector<int>& occupation(int index) const { return states_[index]; }

    // Index of the basis vector with the given occupations; throws if the
    // tuple is outside the basis.
    int index_of(std::span<const int> occupations) const;
    int index_of(std::initializer_list<int> occupations) const {
        return index_of(std::span<const int>(occupations.begin(), occupations.size()));
    }

    bool operator==(const FockBasis& other) const {
        return modes_ == other.modes_ && cap_ == other.cap_;
    }

private:
    int modes_;
    int cap_;
    std::vector<std::vector<int>> states_;
};

using BasisPtr = std::shared_ptr<const FockBasis>;

BasisPtr make_basis(int mode_count, int max_total_photons);

// ---------------------------------------------------------------------------
// QuantumState: density operator on a FockBasis.
// ---------------------------------------------------------------------------

struct StateTolerances {
    double hermiticity = 1e-12;   // max entrywise |rho - rho^dagger|
    double psd_floor   = 1e-10;   // smallest eigenvalue >= -psd_floor
    double trace_high  = 1e-12;   // trace <= 1 + trace_high
    double trace_low   = 1e-9;    // trace >= 1 - trace_low
};

class QuantumState {
public:
    QuantumState(BasisPtr basis, Matrix rho);

    static QuantumState pure(BasisPtr basis, const Vector& amplitudes);

    const FockBasis& basis() const { return *basis_; }
    const BasisPtr& basis_ptr() const { return basis_; }
    const Matrix& matrix() const { return rho_; }

    double trace() const { return rho_.trace().real(); }
    // How far the trace has fallen below 1 (0 for a normalized state).
    double trace_deficit() const { return 1.0 - trace(); }

    // Throws InvalidState if hermiticity, positivity, or trace bounds fail.
    void check_invariants(const StateTolerances& tol = {}) const;

    QuantumState normalized() const;

private:
    BasisPtr basis_;
    Matrix rho_;
};

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

// Beam splitter H(r) = [[sqrt(r), sqrt(1-r)], [sqrt(1-r), -sqrt(r)]] acting
// on creation operators of modes (k, l); real orthogonal and symmetric.
struct BeamSplitterSpec {
    double reflectivity = 0.5;
    int mode_k = 0;
    int mode_l = 1;
};

enum class DetectorKind { Threshold, NumberResolving };

struct DetectorModel {
    DetectorKind kind = DetectorKind::Threshold;
    double efficiency = 1.0;
    double dark_count = 0.0;
};

// Per-mode measurement outcome used by outcome_probability.
struct ModeOutcome {
    enum class Kind { Unmeasured, NoClick, Click, ExactCount };

    Kind kind = Kind::Unmeasured;
    int count = 0;            // ExactCount only
    DetectorModel detector{}; // ignored for Unmeasured

    static ModeOutcome unmeasured() { return {}; }
    static ModeOutcome no_click(DetectorModel det) {
        return {Kind::NoClick, 0, det};
    }
    static ModeOutcome click(DetectorModel det) {
        return {Kind::Click, 0, det};
    }
    static ModeOutcome exact_count(int n, DetectorModel det) {
        return {Kind::ExactCount, n, det};
    }
};

// |n_1..n_m><n_1..n_m| with unit trace.
QuantumState prepare_fock(BasisPtr basis, std::span<const int> occupations);
QuantumState prepare_fock(BasisPtr basis, std::initializer_list<int> occupations);

// Unitary lift of H(r) on two modes (identity elsewhere).
Matrix beamsplitter_unitary(const FockBasis& basis, const BeamSplitterSpec& bs);

// Diagonal unitary exp(i * phase * n) on one mode.
Matrix phase_unitary(const FockBasis& basis, int mode, double phase);

// Kraus operators of the single-mode loss channel with the given efficiency:
// K_q |n> = sqrt(C(n,q) eta^(n-q) (1-eta)^q) |n-q>. Trace preserving on the
// truncated space (lost photons land in vacuum, never outside the cap).
std::vector<Matrix> loss_kraus(const FockBasis& basis, int mode, double efficiency);

QuantumState apply_beamsplitter(const QuantumState& state, const BeamSplitterSpec& bs);
QuantumState apply_phase(const QuantumState& state, int mode, double phase);
QuantumState apply_loss(const QuantumState& state, int mode, double efficiency);

// No-click POVM element of a detector on one mode:
//   (1 - p_dc) * sum_n (1-eta)^n |n><n|   (identity on other modes).
// Same element for both detector kinds; click multiplicity for
// number-resolving detectors is handled by outcome_probability.
Matrix povm_no_click(const FockBasis& basis, int mode, const DetectorModel& det);

// Diagonal of povm_no_click (everything in this module is Fock-diagonal).
Eigen::VectorXd povm_no_click_diagonal(const FockBasis& basis, int mode,
                                       const DetectorModel& det);

// Tr[rho * Pi_pattern] for a tensor product of per-mode POVM elements.
//   NoClick        -> (1-p_dc)(1-eta)^n
//   Click          -> 1 - (1-p_dc)(1-eta)^n
//   ExactCount(k)  -> C(n,k) eta^k (1-eta)^(n-k)  (dark counts not modeled)
//   Unmeasured     -> 1 (mode traced out)
double outcome_probability(const QuantumState& state,
                           std::span<const ModeOutcome> pattern);
double outcome_probability(const QuantumState& state,
                           std::initializer_list<ModeOutcome> pattern);

// Exact binomial coefficient as a double (n up to the double-exact range).
double binomial(int n, int k);

} // namespace qwcf
