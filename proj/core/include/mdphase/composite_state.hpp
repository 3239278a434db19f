#pragma once

#include <utility>
#include <vector>

#include "mdphase/pointer_wave.hpp"

namespace mdphase {

/// One branch of the measurement superposition: system label, coefficient,
/// eigenvalue of the measured observable.
struct BranchSpec {
    int label = 0;
    cplx coeff{0.0, 0.0};
    double eigenvalue = 0.0;
};

/// Ordered branch pair (i, j) with the pointer shifts L_n the coupling gave
/// each branch. The order matters: it fixes the sign conventions of the
/// phase observables and of Z.
struct PhasePair {
    int i = 0;
    int j = 0;
    double shift_i = 0.0;
    double shift_j = 0.0;
};

/**
 * System (x) apparatus state in branch form, sum_n c_n |n> (x) |chi_n>.
 * Each chi_n is individually normalised; in the default mode the
 * coefficients satisfy sum |c_n|^2 = 1 (the relaxed mode exists for the
 * falsifier only). Values are immutable after construction; evolution
 * operations return new states.
 */
class CompositeState {
public:
    struct Branch {
        BranchSpec spec;
        PointerWave wave;
    };

    enum class Normalization { required, relaxed };

    CompositeState(GridPtr grid, std::vector<Branch> branches,
                   double coupling_length,
                   Normalization mode = Normalization::required);

    const GridPtr& grid() const { return grid_; }
    const std::vector<Branch>& branches() const { return branches_; }
    double coupling_length() const { return coupling_length_; }
    Normalization normalization() const { return mode_; }

    /// Throws DomainError for unknown labels.
    const Branch& branch(int label) const;

    /// Pair with shifts L_n = coupling_length * O_n.
    PhasePair pair(int label_i, int label_j) const;

    /// sum |c_n|^2 (the squared norm of the state, since each chi_n is unit).
    double total_weight() const;

    /// Copy with coefficients replaced (same labels/eigenvalues/waves).
    CompositeState with_coefficients(const std::vector<cplx>& coeffs) const;

    /// Copy with branch waves replaced in order.
    CompositeState with_waves(std::vector<PointerWave> waves) const;

private:
    GridPtr grid_;
    std::vector<Branch> branches_;
    double coupling_length_ = 0.0;
    Normalization mode_ = Normalization::required;
};

/// Premeasurement coupling: chi_n = translate(initial, L * O_n) per branch.
/// The coupling pulse is idealised as instantaneous, so only the integrated
/// length L enters. Throws GeometryError when a shifted packet would violate
/// the grid margins.
CompositeState couple(const std::vector<BranchSpec>& branches, double coupling_length,
                      const PointerWave& initial,
                      CompositeState::Normalization mode = CompositeState::Normalization::required);

/// <O> from the full state: sum_n |c_n|^2 O_n ||chi_n||^2. Cross terms vanish
/// identically because the branch labels are orthonormal.
double expect_observable(const CompositeState& s);

/// zeta = <chi_i| T(L_i - L_j) |chi_j>. For states produced by couple() and
/// evolved under one apparatus Hamiltonian this equals the overlap factor
/// Z_ij(t); zeta(0) = 1.
cplx pair_overlap(const CompositeState& s, const PhasePair& pair);

/// (<A1>, <A2>) = (Re, Im) of conj(c_i) c_j zeta: magnitude and phase of the
/// surviving branch coherence.
std::pair<double, double> expect_phase_ops(const CompositeState& s, const PhasePair& pair);

/// Definitional variances of the phase operators, using the operator
/// identity A1^2 = A2^2 = (P_i + P_j)/4:
///   var = <(P_i + P_j)>/4 - <A>^2.
std::pair<double, double> variance_phase_ops(const CompositeState& s, const PhasePair& pair);

/// Imaginary content of <[A1, A2]>, reported as (<P_j> - <P_i>)/2 and
/// cross-checked against the coefficient closed form (|c_j|^2 - |c_i|^2)/2.
double commutator_expect(const CompositeState& s, const PhasePair& pair);

/// Purity of the reduced pointer density operator,
/// tr rho_a^2 = sum_nm |c_n|^2 |c_m|^2 |<chi_n|chi_m>|^2 (normalised weights).
double reduced_pointer_purity(const CompositeState& s);

} // namespace mdphase
