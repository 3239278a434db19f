#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "mdphase/composite_state.hpp"
#include "mdphase/phase_bounds.hpp"

namespace mdphase {

/// Fixed histogram binning for cross-run diffing: 64 bins over [-1, 1],
/// values clamped into the range.
inline constexpr int falsifier_hist_bins = 64;

/// Violation tolerances at which counts are recorded; counts must be
/// monotone non-increasing as the tolerance loosens.
inline constexpr std::array<double, 3> falsifier_tolerances{1e-12, 1e-10, 1e-8};

/// Tally of one inequality over a trial population.
struct TrialTally {
    std::uint64_t trials = 0;
    std::uint64_t violations = 0;     ///< slack < -1e-10
    std::uint64_t skipped = 0;        ///< degenerate draws
    double max_violation = 0.0;       ///< largest |negative slack| seen
    double min_slack = 0.0;
    std::array<std::uint64_t, falsifier_hist_bins> slack_hist{};
    std::map<std::string, std::uint64_t> violations_at; ///< keyed "1e-12",...

    void record(double slack);
    void record_skip() { ++skipped; }
};

/// RHS sign census of one printed bound over a trial population.
struct SignTally {
    std::uint64_t trials = 0;
    std::uint64_t defined = 0;
    std::uint64_t undefined = 0;
    std::uint64_t rhs_positive = 0;   ///< rhs > 1e-12
    double max_rhs = 0.0;
    std::array<std::uint64_t, falsifier_hist_bins> rhs_hist{};

    void record(const BoundReport& r);
};

struct FalsifierReport {
    std::string kind;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    TrialTally uncertainty;               // falsify_uncertainty
    TrialTally triangle_structured;       // falsify_triangle, Eq.-14-shaped triples
    TrialTally triangle_random;           // falsify_triangle, fully random triples
    std::map<std::string, SignTally> census_normalized;
    std::map<std::string, SignTally> census_unnormalized;
};

/// Deterministic random composite state: coefficients uniform on the complex
/// sphere (scaled by a factor in (0, 2] when unnormalized), pointer waves
/// random Gaussian mixtures respecting the grid margins. Identical
/// (seed, n_branches, grid, normalized) reproduce identical states.
CompositeState sample_random_composite(std::uint64_t seed, int n_branches,
                                       const GridPtr& grid, bool normalized);

/// Grid the falsifier populations live on.
GridPtr falsifier_grid();

/// Uncertainty relation var1*var2 >= |<[A1,A2]>|^2/4, evaluated with
/// physical (norm-divided) expectations so it is a theorem for any vector;
/// any violation beyond 1e-10 is an implementation bug.
FalsifierReport falsify_uncertainty(std::uint64_t trials, std::uint64_t seed);

/// Triangle inequality D12 + D23 >= D13 on (Psi, A1 Psi, A2 Psi) triples and
/// on fully random vector triples, reported separately. Empirical census: no
/// expected outcome is hardcoded.
FalsifierReport falsify_triangle(std::uint64_t trials, std::uint64_t seed);

/// RHS sign census of the printed bounds (eq11/eq16/eq18/eq24/eq25) over
/// normalized and unnormalized populations.
FalsifierReport bound_sign_census(std::uint64_t trials, std::uint64_t seed);

/// All three, sharing one seed; the shape cmd_falsify serialises.
FalsifierReport falsify_all(std::uint64_t trials, std::uint64_t seed);

} // namespace mdphase
