#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mdphase/composite_state.hpp"
#include "mdphase/hamiltonian.hpp"
#include "mdphase/phase_bounds.hpp"

namespace mdphase {

enum class ScenarioKind { general, stern_gerlach, peres };

std::string to_string(ScenarioKind k);

struct GridSpec {
    int n_points = 0;
    double q_min = 0.0;
    double q_max = 0.0;
};

struct PacketSpec {
    double center = 0.0;
    double width = 1.0;
    double momentum = 0.0;
};

struct BranchInput {
    cplx c{0.0, 0.0};
    double eigenvalue = 0.0;
};

/**
 * Fully resolved scenario description. Branches are labelled 1..N in list
 * order. For stern_gerlach/peres there are exactly two branches with
 * eigenvalues +1/2 and -1/2 (in that order) and the coupling is the doubled
 * sigma_z form, so the pointer shifts are +L and -L.
 */
struct ScenarioConfig {
    ScenarioKind scenario = ScenarioKind::general;
    GridSpec grid;
    double mass = 1.0;
    Potential potential;
    PacketSpec packet;
    std::vector<BranchInput> branches;
    double coupling_length = 0.0;
    std::vector<double> times{0.0};
    std::pair<int, int> pair{0, 0};    ///< labels; {0,0} = scenario default
    std::uint64_t seed = 0;
    bool falsifier_mode = false;
    double peres_z_threshold = 0.1;    ///< |Z| scan threshold for run_peres
    double system_phase_coeff = 0.0;   ///< diagonal system term: c_n -> c_n e^{-i coeff O_n t}

    /// Pointer shift of branch `index` (0-based): L*O_n, doubled for SG.
    double branch_shift(int index) const;
    /// Defaults: (1,2) for general, (2,1) = (down, up) for SG/peres, which is
    /// the ordering the worked Stern-Gerlach example uses.
    std::pair<int, int> resolved_pair() const;
};

/**
 * One row of a scenario run: the overlap factor, phase observables,
 * distances and every bound verdict at a single time. z/theta/phi come from
 * the live state (pair_overlap); the independently computed
 * shifted-Hamiltonian route must agree within 1e-7 (recorded in
 * z_route_residual, enforced by the runner).
 */
struct TimeRow {
    double t = 0.0;
    cplx z{1.0, 0.0};
    double theta = 0.0;
    double phi = 0.0;           // NaN when undefined
    double a1 = 0.0, a2 = 0.0;
    double var1 = 0.0, var2 = 0.0;
    double comm = 0.0;
    double d12 = 0.0, d23 = 0.0, d13 = 0.0;
    double sz = 0.0;            // populated for SG/peres scenarios
    std::array<BoundReport, bound_count> bounds{};
    double z_route_residual = 0.0;
    double fs_residual = 0.0;   // max |closed form - direct| over d12,d23,d13
    double phi_min = 0.0;       // min_phase() value
};

struct TimeSeries {
    ScenarioKind scenario = ScenarioKind::general;
    std::pair<int, int> pair{1, 2};
    bool definite_state = false;   ///< one |c_n| within 1e-12 of 1
    bool has_sz = false;
    double expect_obs = 0.0;       ///< <O> (equals <s_z> for SG/peres)
    std::vector<TimeRow> rows;
};

struct PeresRow {
    double t = 0.0;
    cplx exp_A{0.0, 0.0};          ///< <A> from the live state
    cplx exp_A_direct{0.0, 0.0};   ///< alpha beta* Z(t), shifted-evolution route
    double route_residual = 0.0;   ///< |exp_A - exp_A_direct|
    double abs_residual = 0.0;     ///< | |<A>| - |alpha beta*| |Z| |
    cplx exp_A_prime{0.0, 0.0};    ///< <A'(t)>, the undoing operator
    double undo_residual = 0.0;    ///< |<A'> - alpha beta*|
    double abs_z = 0.0;
};

/// Undoing analysis on top of the Stern-Gerlach run: A = A1 + i A2 for the
/// (down, up) pair, equal to e^{2iLp} s_-; its Heisenberg conjugate A' has
/// constant expectation alpha beta*, and [A, s_z] = A certifies that A does
/// not commute with the conserved s_z.
struct PeresReport {
    TimeSeries series;
    std::vector<PeresRow> rows;
    double commutator_residual = 0.0;   ///< max ||([A, s_z] - A) v|| over probes
    int probe_count = 0;
    double z_threshold = 0.1;
    std::optional<double> first_crossing; ///< first sampled t with |Z| < threshold
    double min_abs_z = 1.0;
    double min_abs_z_at = 0.0;
};

TimeSeries run_general(const ScenarioConfig& cfg);
TimeSeries run_stern_gerlach(const ScenarioConfig& cfg);
PeresReport run_peres(const ScenarioConfig& cfg);

/// For configs with one coefficient of modulus 1 (within 1e-12): the phase
/// bounds degenerate, reported as verdict "undefined" with the
/// which-state-information annotation. Throws DomainError when no
/// coefficient is definite.
BoundReport definite_state_check(const ScenarioConfig& cfg);

} // namespace mdphase
