#include "mdphase/falsifier.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mdphase/errors.hpp"
#include "mdphase/rng.hpp"

namespace mdphase {

namespace {

constexpr double violation_tol = 1e-10;
constexpr double positive_rhs_tol = 1e-12;
constexpr int max_sample_retries = 100;

int hist_bin(double x) {
    const double clamped = std::clamp(x, -1.0, 1.0);
    const int bin = static_cast<int>((clamped + 1.0) * 0.5 * falsifier_hist_bins);
    return std::clamp(bin, 0, falsifier_hist_bins - 1);
}

std::string tol_key(double tol) {
    if (tol == 1e-12) return "1e-12";
    if (tol == 1e-10) return "1e-10";
    if (tol == 1e-8) return "1e-08";
    return std::to_string(tol);
}

std::vector<cplx> random_mixture(const GridPtr& grid, RngStream& rng) {
    std::vector<cplx> amp(grid->n, cplx(0.0, 0.0));
    const int gaussians = rng.uniform_int(1, 3);
    for (int g = 0; g < gaussians; ++g) {
        const double center = rng.uniform(-3.0, 3.0);
        const double width = rng.uniform(0.8, 1.4);
        const double momentum = rng.uniform(-1.0, 1.0);
        const cplx mix = rng.complex_gaussian();
        for (int m = 0; m < grid->n; ++m) {
            const double x = grid->q[m] - center;
            const double phase = momentum * grid->q[m];
            amp[m] += mix * std::exp(-x * x / (4.0 * width * width)) *
                      cplx(std::cos(phase), std::sin(phase));
        }
    }
    return amp;
}

struct PairChoice {
    int label_i, label_j;
};

PairChoice random_pair(RngStream& rng, int n_branches) {
    const int i = rng.uniform_int(1, n_branches);
    int j = rng.uniform_int(1, n_branches - 1);
    if (j >= i) ++j;
    return {i, j};
}

} // namespace

void TrialTally::record(double slack) {
    ++trials;
    ++slack_hist[static_cast<std::size_t>(hist_bin(slack))];
    if (trials == 1 || slack < min_slack) min_slack = slack;
    for (double tol : falsifier_tolerances) {
        if (slack < -tol) ++violations_at[tol_key(tol)];
    }
    if (slack < -violation_tol) {
        ++violations;
        max_violation = std::max(max_violation, -slack);
    }
}

void SignTally::record(const BoundReport& r) {
    ++trials;
    if (r.verdict == Verdict::undefined) {
        ++undefined;
        return;
    }
    ++defined;
    if (r.rhs > positive_rhs_tol) ++rhs_positive;
    if (defined == 1 || r.rhs > max_rhs) max_rhs = r.rhs;
    ++rhs_hist[static_cast<std::size_t>(hist_bin(r.rhs))];
}

GridPtr falsifier_grid() {
    static GridPtr grid = make_grid(64, -16.0, 16.0);
    return grid;
}

CompositeState sample_random_composite(std::uint64_t seed, int n_branches,
                                       const GridPtr& grid, bool normalized) {
    if (n_branches < 2) throw ConfigError("sample_random_composite: need >= 2 branches");
    if (!grid) throw DomainError("sample_random_composite: null grid");

    RngStream rng(seed);
    for (int attempt = 0; attempt < max_sample_retries; ++attempt) {
        // Coefficients uniform on the complex sphere; optional radial factor
        // in (0, 2] for the unnormalized census population.
        std::vector<cplx> coeffs(n_branches);
        double norm2 = 0.0;
        for (auto& c : coeffs) {
            c = rng.complex_gaussian();
            norm2 += std::norm(c);
        }
        double scale = 1.0 / std::sqrt(norm2);
        if (!normalized) scale *= 2.0 * (1.0 - rng.uniform01());
        for (auto& c : coeffs) c *= scale;

        // Evenly spaced eigenvalues in [-1, 1], modest coupling length: the
        // pair translations the evaluators apply stay well inside the grid.
        const double L = rng.uniform(0.5, 1.25);
        std::vector<CompositeState::Branch> branches;
        branches.reserve(static_cast<std::size_t>(n_branches));
        bool ok = true;
        for (int n = 0; n < n_branches; ++n) {
            const double eigenvalue =
                (n_branches == 1) ? 0.0 : -1.0 + 2.0 * n / (n_branches - 1.0);
            PointerWave wave = wave_from_amplitudes(grid, random_mixture(grid, rng));
            branches.push_back({BranchSpec{n + 1, coeffs[static_cast<std::size_t>(n)],
                                           eigenvalue},
                                std::move(wave)});
        }
        // Margin precheck: every ordered pair translation must not wrap.
        for (int a = 0; a < n_branches && ok; ++a) {
            for (int b = 0; b < n_branches && ok; ++b) {
                if (a == b) continue;
                const double dist = L * (branches[a].spec.eigenvalue -
                                         branches[b].spec.eigenvalue);
                if (detail::wrap_mass(*grid, branches[b].wave.amp, dist) > 1e-8) ok = false;
            }
        }
        if (!ok) continue;
        return CompositeState(grid, std::move(branches), L,
                              normalized ? CompositeState::Normalization::required
                                         : CompositeState::Normalization::relaxed);
    }
    throw GeometryError("sample_random_composite: margin retries exhausted");
}

FalsifierReport falsify_uncertainty(std::uint64_t trials, std::uint64_t seed) {
    if (trials < 1) throw ConfigError("falsify_uncertainty: trials must be >= 1");
    FalsifierReport report;
    report.kind = "uncertainty";
    report.trials = trials;
    report.seed = seed;

    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        RngStream meta = RngStream::for_trial(seed, trial);
        const int n_branches = meta.uniform_int(2, 4);
        const bool normalized = (trial % 2 == 0);
        const CompositeState state =
            sample_random_composite(meta.next_u64(), n_branches, falsifier_grid(), normalized);
        const auto pick = random_pair(meta, n_branches);
        const PhasePair pair = state.pair(pick.label_i, pick.label_j);

        // Physical (norm-divided) expectations: the relation is then a
        // theorem for any vector, normalized or not.
        const double total = state.total_weight();
        const cplx ci = state.branch(pair.i).spec.coeff;
        const cplx cj = state.branch(pair.j).spec.coeff;
        const double ci2 = std::norm(ci) / total;
        const double cj2 = std::norm(cj) / total;
        const cplx w = std::conj(ci) * cj * pair_overlap(state, pair) / total;
        const double var1 = 0.25 * (ci2 + cj2) - w.real() * w.real();
        const double var2 = 0.25 * (ci2 + cj2) - w.imag() * w.imag();
        const double comm = 0.5 * (cj2 - ci2);
        report.uncertainty.record(var1 * var2 - 0.25 * comm * comm);
    }
    return report;
}

FalsifierReport falsify_triangle(std::uint64_t trials, std::uint64_t seed) {
    if (trials < 1) throw ConfigError("falsify_triangle: trials must be >= 1");
    FalsifierReport report;
    report.kind = "triangle";
    report.trials = trials;
    report.seed = seed;
    const GridPtr grid = falsifier_grid();

    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        RngStream meta = RngStream::for_trial(seed, trial);

        // Population 1: structured triples (Psi, A1 Psi, A2 Psi).
        {
            const int n_branches = meta.uniform_int(2, 4);
            const CompositeState state =
                sample_random_composite(meta.next_u64(), n_branches, grid, true);
            const auto pick = random_pair(meta, n_branches);
            const PhasePair pair = state.pair(pick.label_i, pick.label_j);
            const BranchVector v = BranchVector::from_state(state);
            const BranchVector v1 = v.apply_a1(pair);
            const BranchVector v2 = v.apply_a2(pair);
            if (v1.norm_sq() < degenerate_eps || v2.norm_sq() < degenerate_eps) {
                report.triangle_structured.record_skip();
            } else {
                const double d12 = fubini_study_D(v, v1);
                const double d23 = fubini_study_D(v1, v2);
                const double d13 = fubini_study_D(v, v2);
                report.triangle_structured.record(d12 + d23 - d13);
            }
        }

        // Population 2: fully random vector triples on the same space.
        {
            const int n_labels = meta.uniform_int(1, 3);
            RngStream wave_rng(meta.next_u64());
            auto random_vector = [&]() {
                BranchVector v(grid);
                for (int label = 1; label <= n_labels; ++label) {
                    auto amp = random_mixture(grid, wave_rng);
                    const cplx weight = wave_rng.complex_gaussian();
                    for (auto& a : amp) a *= weight;
                    v.set_part(label, std::move(amp));
                }
                return v;
            };
            const BranchVector u1 = random_vector();
            const BranchVector u2 = random_vector();
            const BranchVector u3 = random_vector();
            if (u1.norm_sq() < degenerate_eps || u2.norm_sq() < degenerate_eps ||
                u3.norm_sq() < degenerate_eps) {
                report.triangle_random.record_skip();
            } else {
                const double d12 = fubini_study_D(u1, u2);
                const double d23 = fubini_study_D(u2, u3);
                const double d13 = fubini_study_D(u1, u3);
                report.triangle_random.record(d12 + d23 - d13);
            }
        }
    }
    return report;
}

FalsifierReport bound_sign_census(std::uint64_t trials, std::uint64_t seed) {
    if (trials < 1) throw ConfigError("bound_sign_census: trials must be >= 1");
    FalsifierReport report;
    report.kind = "census";
    report.trials = trials;
    report.seed = seed;
    const GridPtr grid = falsifier_grid();

    const auto run_population = [&](bool normalized,
                                    std::map<std::string, SignTally>& tallies,
                                    std::uint64_t salt) {
        for (std::uint64_t trial = 0; trial < trials; ++trial) {
            RngStream meta = RngStream::for_trial(seed ^ salt, trial);
            const int n_branches = meta.uniform_int(2, 4);
            const CompositeState state =
                sample_random_composite(meta.next_u64(), n_branches, grid, normalized);
            const auto pick = random_pair(meta, n_branches);
            const PhasePair pair = state.pair(pick.label_i, pick.label_j);

            const cplx ci = state.branch(pair.i).spec.coeff;
            const cplx cj = state.branch(pair.j).spec.coeff;
            const double ci2 = std::norm(ci);
            const double cj2 = std::norm(cj);
            const OverlapZ z{pair_overlap(state, pair)};
            double phi = std::numeric_limits<double>::quiet_NaN();
            try {
                phi = relative_phase(ci, cj, z);
            } catch (const DomainError&) {
            }

            tallies["eq11"].record(bound_uncertainty(ci2, cj2, z, phi));
            tallies["eq16"].record(bound_tight(ci2, cj2, z, phi));
            tallies["eq18"].record(bound_post_measurement(ci2, cj2, z, phi));
            tallies["eq24"].record(bound_uncertainty_sg(ci2, cj2, z, phi));
            tallies["eq25"].record(bound_tight_sg(ci2, cj2, z, phi));
        }
    };

    run_population(true, report.census_normalized, 0x6e6f726dULL);
    run_population(false, report.census_unnormalized, 0x756e6f72ULL);
    return report;
}

FalsifierReport falsify_all(std::uint64_t trials, std::uint64_t seed) {
    if (trials < 1) throw ConfigError("falsify_all: trials must be >= 1");
    FalsifierReport uncertainty = falsify_uncertainty(trials, seed);
    FalsifierReport triangle = falsify_triangle(trials, seed);
    FalsifierReport census = bound_sign_census(trials, seed);

    FalsifierReport all;
    all.kind = "all";
    all.trials = trials;
    all.seed = seed;
    all.uncertainty = uncertainty.uncertainty;
    all.triangle_structured = triangle.triangle_structured;
    all.triangle_random = triangle.triangle_random;
    all.census_normalized = std::move(census.census_normalized);
    all.census_unnormalized = std::move(census.census_unnormalized);
    return all;
}

} // namespace mdphase
