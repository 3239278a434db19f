#pragma once

#include <string>

#include "mdphase/branch_vector.hpp"
#include "mdphase/composite_state.hpp"
#include "mdphase/hamiltonian.hpp"
#include "mdphase/propagator.hpp"

namespace mdphase {

/// Denominators below this are reported as verdict "undefined" rather than
/// raising an exception.
inline constexpr double degenerate_eps = 1e-14;

/**
 * Overlap factor of an ordered branch pair,
 *   Z_ij(t) = <psi| exp(+i t H(q+L_i)) exp(-i t H(q+L_j)) |psi>.
 * |Z| measures the surviving coherence between the branches, theta = arg Z
 * the dynamical phase picked up between the two shifted Hamiltonians.
 * Z(0) = 1, Z_ii = 1, Z_ij = conj(Z_ji), |Z| <= 1.
 */
struct OverlapZ {
    cplx value{1.0, 0.0};

    double abs() const { return std::abs(value); }
    /// arg in (-pi, pi].
    double theta() const;
};

/// Evaluates Z_ij(t) as the inner product of the two shifted-Hamiltonian
/// evolutions of |psi>, and cross-checks the result against the
/// phase-operator extraction from an equal-weight reference state
/// (NumericsError beyond 1e-7 disagreement).
OverlapZ overlap_Z(const PointerWave& initial, const ApparatusHamiltonian& h,
                   double L_i, double L_j, double t,
                   const PropagatorConfig& cfg = {});

/// Phi_ij(t) = arg(conj(c_i) c_j Z_ij(t)) in (-pi, pi]; at t = 0 this reduces
/// to the preparation phase arg(conj(c_i) c_j). Throws DomainError when any
/// magnitude involved is below degenerate_eps.
double relative_phase(cplx c_i, cplx c_j, const OverlapZ& z);

enum class Verdict { satisfied, violated, undefined };

/// Bound identifiers; raw8/raw12 are the unsimplified operator/vector forms
/// kept alongside the printed inequalities.
enum class BoundName { eq8, eq11, eq12, eq15, eq16, eq17, eq18, eq24, eq25 };
inline constexpr int bound_count = 9;

std::string to_string(Verdict v);
std::string to_string(BoundName n);

struct BoundInputs {
    double ci2 = 0.0;
    double cj2 = 0.0;
    double abs_z = 0.0;
    double phi = 0.0;   // NaN when undefined
};

/**
 * One inequality evaluation. Slack is sense-adjusted so that slack >= 0
 * always means satisfied regardless of whether the printed inequality reads
 * lhs >= rhs or lhs <= rhs. verdict == undefined iff a denominator fell
 * below degenerate_eps (lhs/rhs/slack are NaN in that case).
 */
struct BoundReport {
    BoundName name = BoundName::eq11;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    Verdict verdict = Verdict::undefined;
    BoundInputs inputs;
    std::string note;
};

/// Fubini-Study distances between Psi(t), A1 Psi(t), A2 Psi(t).
struct FSDistances {
    double d12 = 0.0;
    double d23 = 0.0;
    double d13 = 0.0;
};

/// D(a, b) = 1 - |<a|b>|^2 / (||a||^2 ||b||^2): invariant under global phase
/// and positive rescaling of either argument. Throws DomainError on vectors
/// with norm^2 below degenerate_eps.
double fubini_study_D(const BranchVector& a, const BranchVector& b);
double fubini_study_D(const PointerWave& a, const PointerWave& b);

/// Direct evaluation on the live vectors (Psi, A1 Psi, A2 Psi).
FSDistances distances_triple(const CompositeState& s, const PhasePair& pair);

/// Printed closed forms, with S = ci2 + cj2 (inputs are the physical,
/// norm-divided weights):
///   D12 = 1 - 4 P |Z|^2 cos^2(Phi) / S,  D23 = 1 - (ci2-cj2)^2 / S^2,
///   D13 = 1 - 4 P |Z|^2 sin^2(Phi) / S.
FSDistances distances_closed_form(double ci2, double cj2, double abs_z, double phi);

// --- inequality evaluators -------------------------------------------------
// ci2/cj2 are the branch weights |c_i|^2, |c_j|^2 as given (raw); phi may be
// NaN when the relative phase is undefined, which propagates to the verdict.

/// Uncertainty-relation bound on the relative phase:
///   sin^2(2 Phi) >= (S |Z|^2 - 1) / (P |Z|^4),  S = ci2 + cj2, P = ci2 cj2.
BoundReport bound_uncertainty(double ci2, double cj2, const OverlapZ& z, double phi);

/// Two-branch specialisation of bound_uncertainty with S fixed to 1
/// (bit-identical to the general evaluator at S = 1).
BoundReport bound_uncertainty_sg(double ci2, double cj2, const OverlapZ& z, double phi);

/// Raw operator form behind bound_uncertainty:
///   var1 * var2 >= ((cj2 - ci2)/2)^2 / 4.
BoundReport bound_raw_uncertainty(double var1, double var2, double ci2, double cj2);

/// Distance-triangle bound: cos(2 Phi) <= 1 / (|Z|^2 S).
BoundReport bound_triangle(double ci2, double cj2, const OverlapZ& z, double phi);

/// Raw vector form behind bound_triangle: D12 + D23 >= D13 on live distances.
BoundReport bound_raw_triangle(const FSDistances& d);

/// Tightened bound combining the two:
///   sin^2(Phi) >= (1/2) (S|Z|^2 - 1)/(S|Z|^2 + 1) * S / (P |Z|^2).
BoundReport bound_tight(double ci2, double cj2, const OverlapZ& z, double phi);

/// Two-branch specialisation of bound_tight with S fixed to 1.
BoundReport bound_tight_sg(double ci2, double cj2, const OverlapZ& z, double phi);

/// Small-angle minimum phase, reported as the bound Phi^2 >= (Phi^2)_min
/// where (Phi^2)_min is bound_tight's right-hand side.
BoundReport bound_min_phase(double ci2, double cj2, const OverlapZ& z, double phi);

/// sqrt(max((Phi^2)_min, 0)); 0 whenever the tight bound is vacuous.
double min_phase(double ci2, double cj2, const OverlapZ& z);

/// Immediately-after-preparation bound, evaluated with the preparation phase
/// phi0 and the printed |Z(t)|^2 denominator:
///   sin^2(phi0) >= (1/2) (S - 1)/(S + 1) * S / (P |Z|^2).
BoundReport bound_post_measurement(double ci2, double cj2, const OverlapZ& z_later,
                                   double phi0);

} // namespace mdphase
