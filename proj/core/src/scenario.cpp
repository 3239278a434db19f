#include "mdphase/scenario.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "mdphase/errors.hpp"
#include "mdphase/propagator.hpp"
#include "mdphase/rng.hpp"

namespace mdphase {

namespace {

constexpr double nan_value = std::numeric_limits<double>::quiet_NaN();
constexpr double definite_tol = 1e-12;
constexpr double z_route_tol = 1e-7;
constexpr int structural_check_max_n = 64;

std::string annotate(double t, const char* what) {
    return "at t = " + std::to_string(t) + ": " + what;
}

// ---------------------------------------------------------------------------
// Dense structural cross-check for the Stern-Gerlach runner (small grids):
// the spin (x) trig forms of the phase operators must reproduce the
// translation forms. Basis index s*n + m with s = 0 (up), 1 (down).

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

Mat dft_matrix(const Grid& g) {
    const int n = g.n;
    Mat f(n, n);
    const double w = 2.0 * std::numbers::pi / n;
    for (int k = 0; k < n; ++k)
        for (int m = 0; m < n; ++m)
            f(k, m) = cplx(std::cos(-w * k * m), std::sin(-w * k * m)) / std::sqrt(double(n));
    return f;
}

// Diagonal-in-p operator fn(p) brought back to the position basis.
Mat p_function_matrix(const Grid& g, const std::function<cplx(double)>& fn) {
    const Mat f = dft_matrix(g);
    Vec diag(g.n);
    for (int k = 0; k < g.n; ++k) diag(k) = fn(g.p[k]);
    return f.adjoint() * diag.asDiagonal() * f;
}

Mat kron2(const Eigen::Matrix2cd& spin, const Mat& pointer) {
    const int n = static_cast<int>(pointer.rows());
    Mat out(2 * n, 2 * n);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            out.block(a * n, b * n, n, n) = spin(a, b) * pointer;
    return out;
}

struct SgDenseOps {
    Mat a1_translation, a2_translation; // pair-ordered translation forms
    Mat a1_spin, a2_spin;               // s_x/s_y (x) trig forms
};

// pair (i, j) = (down, up): shift_i = -L, shift_j = +L.
SgDenseOps sg_dense_operators(const Grid& g, double L) {
    SgDenseOps ops;
    const Mat t_down_up = p_function_matrix(
        g, [&](double p) { return std::exp(cplx(0.0, 2.0 * L * p)); }); // T(-2L)
    const Mat t_up_down = t_down_up.adjoint();                           // T(+2L)

    Eigen::Matrix2cd e_down_up = Eigen::Matrix2cd::Zero(); // |down><up|
    e_down_up(1, 0) = 1.0;
    Eigen::Matrix2cd e_up_down = e_down_up.transpose();

    const Mat b = kron2(e_down_up, t_down_up);             // B = s_- (x) e^{2iLp}
    const Mat bdag = kron2(e_up_down, t_up_down);
    ops.a1_translation = 0.5 * (b + bdag);
    ops.a2_translation = cplx(0.0, 0.5) * (bdag - b);

    const Mat cos2lp = p_function_matrix(g, [&](double p) { return std::cos(2.0 * L * p); });
    const Mat sin2lp = p_function_matrix(g, [&](double p) { return std::sin(2.0 * L * p); });
    Eigen::Matrix2cd sx, sy;
    sx << 0.0, 0.5, 0.5, 0.0;
    sy << 0.0, cplx(0.0, -0.5), cplx(0.0, 0.5), 0.0;
    ops.a1_spin = kron2(sx, cos2lp) + kron2(sy, sin2lp);
    ops.a2_spin = kron2(sx, sin2lp) - kron2(sy, cos2lp);
    return ops;
}

Vec sg_full_vector(const CompositeState& s, const std::vector<cplx>& coeffs) {
    const int n = s.grid()->n;
    Vec v = Vec::Zero(2 * n);
    for (std::size_t b = 0; b < s.branches().size(); ++b) {
        const auto& br = s.branches()[b];
        const int block = (br.spec.eigenvalue > 0.0) ? 0 : 1; // up first
        for (int m = 0; m < n; ++m) v(block * n + m) = coeffs[b] * br.wave.amp[m];
    }
    return v;
}

void sg_structural_check(const CompositeState& state, const std::vector<cplx>& coeffs,
                         double L, double a1, double a2, double t) {
    const Grid& g = *state.grid();
    const SgDenseOps ops = sg_dense_operators(g, L);
    const Vec v = sg_full_vector(state, coeffs);
    const auto expect = [&](const Mat& op) {
        return (v.adjoint() * (op * v))(0, 0).real() * g.dq;
    };
    const double checks[4] = {expect(ops.a1_translation), expect(ops.a1_spin),
                              expect(ops.a2_translation), expect(ops.a2_spin)};
    const double ref[4] = {a1, a1, a2, a2};
    for (int c = 0; c < 4; ++c) {
        if (std::abs(checks[c] - ref[c]) > 1e-9) {
            throw NumericsError(annotate(t, "Stern-Gerlach operator forms disagree with the "
                                            "branch expectations"));
        }
    }
}

// ---------------------------------------------------------------------------

struct RunnerSetup {
    GridPtr grid;
    PointerWave packet;
    ApparatusHamiltonian h;
    CompositeState state;
    PhasePair pair;
    std::size_t idx_i = 0, idx_j = 0; // branch indices of the pair
    double phi0 = nan_value;          // preparation phase arg(c_i* c_j)
    bool definite = false;
    PropagatorConfig run_cfg;         // dt resolved for the whole run
};

double wrap_pi(double a) {
    double r = std::remainder(a, 2.0 * std::numbers::pi);
    if (r <= -std::numbers::pi) r += 2.0 * std::numbers::pi;
    return r;
}

void validate_two_level(const ScenarioConfig& cfg) {
    if (cfg.branches.size() != 2) {
        throw ConfigError("stern_gerlach/peres scenarios require exactly two branches");
    }
    if (std::abs(cfg.branches[0].eigenvalue - 0.5) > 1e-12 ||
        std::abs(cfg.branches[1].eigenvalue + 0.5) > 1e-12) {
        throw ConfigError("stern_gerlach/peres branches must carry eigenvalues +1/2 "
                          "(first) and -1/2 (second)");
    }
}

RunnerSetup prepare(const ScenarioConfig& cfg) {
    if (cfg.branches.size() < 2) {
        throw ConfigError("scenario requires at least two branches for the phase pair");
    }
    if (cfg.times.empty()) throw ConfigError("scenario requires a non-empty time list");
    for (std::size_t k = 0; k < cfg.times.size(); ++k) {
        if (cfg.times[k] < 0.0 || (k > 0 && cfg.times[k] <= cfg.times[k - 1])) {
            throw ConfigError("times must be sorted ascending and non-negative");
        }
    }
    if (cfg.scenario != ScenarioKind::general) validate_two_level(cfg);

    GridPtr grid = make_grid(cfg.grid.n_points, cfg.grid.q_min, cfg.grid.q_max);
    PointerWave packet =
        gaussian_packet(grid, cfg.packet.center, cfg.packet.width, cfg.packet.momentum);
    const ApparatusHamiltonian h{cfg.mass, cfg.potential, 0.0};

    // SG couples through the doubled sigma_z form: eigenvalues +-1/2 but
    // pointer shifts +-L, i.e. an effective coupling length of 2L.
    const double L_eff = (cfg.scenario == ScenarioKind::general)
                             ? cfg.coupling_length
                             : 2.0 * cfg.coupling_length;

    std::vector<BranchSpec> specs;
    specs.reserve(cfg.branches.size());
    for (std::size_t n = 0; n < cfg.branches.size(); ++n) {
        specs.push_back({static_cast<int>(n) + 1, cfg.branches[n].c,
                         cfg.branches[n].eigenvalue});
    }
    const auto mode = cfg.falsifier_mode ? CompositeState::Normalization::relaxed
                                         : CompositeState::Normalization::required;
    RunnerSetup s{grid, packet, h, couple(specs, L_eff, packet, mode), PhasePair{},
                  0, 0, nan_value, false, PropagatorConfig{}};

    auto [label_i, label_j] = cfg.resolved_pair();
    s.pair = s.state.pair(label_i, label_j);
    s.idx_i = static_cast<std::size_t>(label_i - 1);
    s.idx_j = static_cast<std::size_t>(label_j - 1);

    const cplx ci = specs[s.idx_i].coeff;
    const cplx cj = specs[s.idx_j].coeff;
    if (std::abs(ci) >= degenerate_eps && std::abs(cj) >= degenerate_eps) {
        s.phi0 = wrap_pi(std::arg(std::conj(ci) * cj));
    }
    for (const auto& spec : specs) {
        if (std::abs(std::abs(spec.coeff) - 1.0) <= definite_tol) s.definite = true;
    }

    // One dt for every evolution in the run, so the state route and the
    // shifted-Hamiltonian route carry identical discretisation error.
    s.run_cfg = PropagatorConfig{};
    const double horizon = cfg.times.back();
    if (horizon > 0.0) {
        try {
            const auto& wave_i = s.state.branch(label_i).wave;
            const auto& wave_j = s.state.branch(label_j).wave;
            double dt = select_timestep({wave_i, wave_j}, s.h, horizon);
            dt = std::min(dt,
                          select_timestep({s.packet}, shifted(s.h, s.pair.shift_i), horizon));
            dt = std::min(dt,
                          select_timestep({s.packet}, shifted(s.h, s.pair.shift_j), horizon));
            s.run_cfg.dt = dt;
        } catch (const GeometryError& e) {
            throw GeometryError(annotate(horizon, e.what()) + " (time-step selection)");
        } catch (const NumericsError& e) {
            throw NumericsError(annotate(horizon, e.what()) + " (time-step selection)");
        }
    }
    return s;
}

std::vector<cplx> rotated_coefficients(const ScenarioConfig& cfg, double t) {
    std::vector<cplx> out(cfg.branches.size());
    for (std::size_t n = 0; n < cfg.branches.size(); ++n) {
        const double phase = -cfg.system_phase_coeff * cfg.branches[n].eigenvalue * t;
        out[n] = cfg.branches[n].c * cplx(std::cos(phase), std::sin(phase));
    }
    return out;
}

TimeRow evaluate_row(double t, const CompositeState& state_t, const PhasePair& pair,
                     const cplx& z_direct, double phi0, bool definite, bool want_sz,
                     double total_weight) {
    TimeRow row;
    row.t = t;

    const cplx zeta = pair_overlap(state_t, pair);
    row.z_route_residual = std::abs(zeta - z_direct);
    if (row.z_route_residual > z_route_tol) {
        throw NumericsError("overlap routes disagree by " +
                            std::to_string(row.z_route_residual));
    }

    // At t = 0 no evolution has happened and Z = 1 identically; the computed
    // zeta only adds rounding noise there.
    row.z = (t == 0.0) ? cplx(1.0, 0.0) : zeta;
    if (std::abs(row.z) > 1.0 + 1e-10) {
        throw NumericsError("overlap magnitude " + std::to_string(std::abs(row.z)) +
                            " exceeds 1");
    }
    // Cauchy-Schwarz bounds |Z| by 1; shave the rounding excess so the bound
    // right-hand sides keep their exact-arithmetic signs.
    if (std::abs(row.z) > 1.0) row.z /= std::abs(row.z);
    const OverlapZ z{row.z};
    row.theta = z.theta();

    const auto& bi = state_t.branch(pair.i);
    const auto& bj = state_t.branch(pair.j);
    const double ci2 = std::norm(bi.spec.coeff);
    const double cj2 = std::norm(bj.spec.coeff);

    const auto [a1, a2] = expect_phase_ops(state_t, pair);
    row.a1 = a1;
    row.a2 = a2;
    const auto [v1, v2] = variance_phase_ops(state_t, pair);
    row.var1 = v1;
    row.var2 = v2;
    row.comm = commutator_expect(state_t, pair);

    row.phi = nan_value;
    try {
        row.phi = relative_phase(bi.spec.coeff, bj.spec.coeff, z);
    } catch (const DomainError&) {
    }

    FSDistances direct{nan_value, nan_value, nan_value};
    row.fs_residual = nan_value;
    try {
        direct = distances_triple(state_t, pair);
        const FSDistances closed = distances_closed_form(
            ci2 / total_weight, cj2 / total_weight, z.abs(),
            std::isfinite(row.phi) ? row.phi : 0.0);
        if (std::isfinite(row.phi)) {
            row.fs_residual = std::max({std::abs(direct.d12 - closed.d12),
                                        std::abs(direct.d23 - closed.d23),
                                        std::abs(direct.d13 - closed.d13)});
        }
    } catch (const DomainError&) {
    }
    row.d12 = direct.d12;
    row.d23 = direct.d23;
    row.d13 = direct.d13;

    if (want_sz) row.sz = expect_observable(state_t);

    row.bounds[0] = bound_raw_uncertainty(row.var1, row.var2, ci2, cj2);
    row.bounds[1] = bound_uncertainty(ci2, cj2, z, row.phi);
    row.bounds[2] = bound_raw_triangle(direct);
    row.bounds[3] = bound_triangle(ci2, cj2, z, row.phi);
    row.bounds[4] = bound_tight(ci2, cj2, z, row.phi);
    row.bounds[5] = bound_min_phase(ci2, cj2, z, row.phi);
    row.bounds[6] = bound_post_measurement(ci2, cj2, z, phi0);
    row.bounds[7] = bound_uncertainty_sg(ci2, cj2, z, row.phi);
    row.bounds[8] = bound_tight_sg(ci2, cj2, z, row.phi);

    row.phi_min = nan_value;
    try {
        row.phi_min = min_phase(ci2, cj2, z);
    } catch (const DomainError&) {
    }

    if (definite) {
        for (auto& b : row.bounds) {
            if (b.verdict == Verdict::undefined) {
                b.note = "definite macrostate: bound undefined (which-state information "
                         "excludes a measurable relative phase)";
            }
        }
    }
    return row;
}

TimeSeries run_series(const ScenarioConfig& cfg, ScenarioKind kind) {
    RunnerSetup s = prepare(cfg);
    const bool want_sz = (kind != ScenarioKind::general);
    const bool structural = want_sz && s.grid->n <= structural_check_max_n;

    TimeSeries series;
    series.scenario = kind;
    series.pair = {s.pair.i, s.pair.j};
    series.definite_state = s.definite;
    series.has_sz = want_sz;
    series.expect_obs = expect_observable(s.state);

    const ApparatusHamiltonian h_i = shifted(s.h, s.pair.shift_i);
    const ApparatusHamiltonian h_j = shifted(s.h, s.pair.shift_j);

    CompositeState state = s.state;
    PointerWave path_i = s.packet;
    PointerWave path_j = s.packet;
    double t_prev = 0.0;

    for (double t : cfg.times) {
        try {
            const double seg = t - t_prev;
            if (seg > 0.0) {
                state = propagate(state, s.h, seg, s.run_cfg);
                path_i = propagate(path_i, h_i, seg, s.run_cfg);
                path_j = propagate(path_j, h_j, seg, s.run_cfg);
            }
            t_prev = t;

            const auto coeffs = rotated_coefficients(cfg, t);
            const CompositeState view = state.with_coefficients(coeffs);
            const cplx z_direct = (t == 0.0) ? cplx(1.0, 0.0) : inner(path_i, path_j);

            TimeRow row = evaluate_row(t, view, s.pair, z_direct, s.phi0, s.definite,
                                       want_sz, view.total_weight());
            if (structural) {
                std::vector<cplx> view_coeffs;
                for (const auto& b : view.branches()) view_coeffs.push_back(b.spec.coeff);
                sg_structural_check(view, view_coeffs, cfg.coupling_length, row.a1, row.a2, t);
            }
            series.rows.push_back(std::move(row));
        } catch (const GeometryError& e) {
            throw GeometryError(annotate(t, e.what()));
        } catch (const NumericsError& e) {
            throw NumericsError(annotate(t, e.what()));
        } catch (const DomainError& e) {
            throw DomainError(annotate(t, e.what()));
        }
    }
    return series;
}

PointerWave random_probe_wave(const GridPtr& grid, RngStream& rng, double center) {
    std::vector<cplx> amp(grid->n, cplx(0.0, 0.0));
    const int gaussians = rng.uniform_int(1, 3);
    for (int g = 0; g < gaussians; ++g) {
        const double c = center + rng.uniform(-2.0, 2.0);
        const double w = rng.uniform(0.8, 1.6);
        const double k = rng.uniform(-1.0, 1.0);
        const cplx mix = rng.complex_gaussian();
        for (int m = 0; m < grid->n; ++m) {
            const double x = grid->q[m] - c;
            const double phase = k * grid->q[m];
            amp[m] += mix * std::exp(-x * x / (4.0 * w * w)) *
                      cplx(std::cos(phase), std::sin(phase));
        }
    }
    return wave_from_amplitudes(grid, std::move(amp));
}

} // namespace

double ScenarioConfig::branch_shift(int index) const {
    const double factor = (scenario == ScenarioKind::general) ? 1.0 : 2.0;
    return factor * coupling_length * branches.at(static_cast<std::size_t>(index)).eigenvalue;
}

std::pair<int, int> ScenarioConfig::resolved_pair() const {
    if (pair.first != 0 || pair.second != 0) return pair;
    if (scenario == ScenarioKind::general) return {1, 2};
    return {2, 1}; // (down, up): the ordering of the worked SG example
}

std::string to_string(ScenarioKind k) {
    switch (k) {
        case ScenarioKind::general: return "general";
        case ScenarioKind::stern_gerlach: return "stern_gerlach";
        case ScenarioKind::peres: return "peres";
    }
    return "?";
}

TimeSeries run_general(const ScenarioConfig& cfg) {
    if (cfg.scenario != ScenarioKind::general) {
        throw ConfigError("run_general requires a general-scenario config");
    }
    return run_series(cfg, ScenarioKind::general);
}

TimeSeries run_stern_gerlach(const ScenarioConfig& cfg) {
    if (cfg.scenario != ScenarioKind::stern_gerlach) {
        throw ConfigError("run_stern_gerlach requires a stern_gerlach config");
    }
    return run_series(cfg, ScenarioKind::stern_gerlach);
}

PeresReport run_peres(const ScenarioConfig& cfg) {
    if (cfg.scenario != ScenarioKind::peres) {
        throw ConfigError("run_peres requires a peres config");
    }
    if (cfg.system_phase_coeff != 0.0) {
        throw ConfigError("run_peres requires system_phase_coeff = 0 (the undoing "
                          "operator is conjugated with the apparatus Hamiltonian only)");
    }
    const auto [label_i, label_j] = cfg.resolved_pair();
    if (label_i != 2 || label_j != 1) {
        throw ConfigError("run_peres requires the (down, up) pair [2, 1]");
    }

    RunnerSetup s = prepare(cfg);
    PeresReport report;
    report.z_threshold = cfg.peres_z_threshold;
    report.series.scenario = ScenarioKind::peres;
    report.series.pair = {s.pair.i, s.pair.j};
    report.series.definite_state = s.definite;
    report.series.has_sz = true;
    report.series.expect_obs = expect_observable(s.state);

    const cplx alpha = cfg.branches[0].c; // up, +1/2
    const cplx beta = cfg.branches[1].c;  // down, -1/2
    const cplx alpha_beta_star = alpha * std::conj(beta);

    const ApparatusHamiltonian h_i = shifted(s.h, s.pair.shift_i);
    const ApparatusHamiltonian h_j = shifted(s.h, s.pair.shift_j);
    const bool structural = s.grid->n <= structural_check_max_n;

    CompositeState state = s.state;
    PointerWave path_i = s.packet;
    PointerWave path_j = s.packet;
    // Honest reconstruction of A |Psi(0)>: A = |down><up| (x) T(-2L) sends the
    // up branch T(+L) psi to T(-L) psi, so the undoing route evolves an
    // independently built copy of that wave.
    PointerWave undo_wave = translate(s.packet, s.pair.shift_i);
    double t_prev = 0.0;

    report.min_abs_z = 1.0;
    report.min_abs_z_at = 0.0;

    for (double t : cfg.times) {
        try {
            const double seg = t - t_prev;
            if (seg > 0.0) {
                state = propagate(state, s.h, seg, s.run_cfg);
                path_i = propagate(path_i, h_i, seg, s.run_cfg);
                path_j = propagate(path_j, h_j, seg, s.run_cfg);
                undo_wave = propagate(undo_wave, s.h, seg, s.run_cfg);
            }
            t_prev = t;

            const auto coeffs = rotated_coefficients(cfg, t);
            const CompositeState view = state.with_coefficients(coeffs);
            const cplx z_direct = (t == 0.0) ? cplx(1.0, 0.0) : inner(path_i, path_j);

            TimeRow row = evaluate_row(t, view, s.pair, z_direct, s.phi0, s.definite,
                                       true, view.total_weight());
            if (structural) {
                std::vector<cplx> view_coeffs;
                for (const auto& b : view.branches()) view_coeffs.push_back(b.spec.coeff);
                sg_structural_check(view, view_coeffs, cfg.coupling_length, row.a1, row.a2, t);
            }

            PeresRow pr;
            pr.t = t;
            pr.exp_A = cplx(row.a1, row.a2);              // <A1> + i <A2>, pair (down, up)
            pr.exp_A_direct = alpha_beta_star * z_direct;
            pr.route_residual = std::abs(pr.exp_A - pr.exp_A_direct);
            pr.abs_z = std::abs(row.z);
            pr.abs_residual = std::abs(std::abs(pr.exp_A) -
                                       std::abs(alpha_beta_star) * pr.abs_z);
            // <A'(t)> = <Psi(t)| e^{-itH} A |Psi(0)>: the down component of
            // A Psi(0) is alpha T(-L) psi, evolved alongside the state.
            const cplx undo = std::conj(beta) * alpha * inner(state.branch(2).wave, undo_wave);
            pr.exp_A_prime = undo;
            pr.undo_residual = std::abs(undo - alpha_beta_star);
            report.rows.push_back(pr);

            if (pr.abs_z < report.min_abs_z) {
                report.min_abs_z = pr.abs_z;
                report.min_abs_z_at = t;
            }
            if (!report.first_crossing && pr.abs_z < report.z_threshold) {
                report.first_crossing = t;
            }
            report.series.rows.push_back(std::move(row));
        } catch (const GeometryError& e) {
            throw GeometryError(annotate(t, e.what()));
        } catch (const NumericsError& e) {
            throw NumericsError(annotate(t, e.what()));
        } catch (const DomainError& e) {
            throw DomainError(annotate(t, e.what()));
        }
    }

    // [A, s_z] = A on probe vectors: A fails to commute with the conserved
    // s_z by exactly itself, so it cannot be measured exactly.
    RngStream rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
    report.probe_count = 50;
    double worst = 0.0;
    for (int probe = 0; probe < report.probe_count; ++probe) {
        BranchVector v(s.grid);
        v.set_part(1, random_probe_wave(s.grid, rng, s.pair.shift_j).amp); // up near +L
        v.set_part(2, random_probe_wave(s.grid, rng, s.pair.shift_i).amp); // down near -L
        const cplx cu = rng.complex_gaussian();
        const cplx cd = rng.complex_gaussian();
        v = v.apply_label_diagonal([&](int label) { return label == 1 ? cu : cd; });
        const double vnorm = std::sqrt(v.norm_sq());

        const auto apply_A = [&](const BranchVector& x) {
            // A = B for the (down, up) pair: A1 + i A2 picks out exactly B.
            return x.apply_a1(s.pair).added(x.apply_a2(s.pair).scaled(cplx(0.0, 1.0)));
        };
        const auto apply_sz = [&](const BranchVector& x) {
            return x.apply_label_diagonal(
                [](int label) { return label == 1 ? cplx(0.5, 0.0) : cplx(-0.5, 0.0); });
        };

        const BranchVector lhs = apply_A(apply_sz(v)).added(apply_sz(apply_A(v)).scaled(-1.0));
        const BranchVector residual = lhs.added(apply_A(v).scaled(-1.0));
        worst = std::max(worst, std::sqrt(residual.norm_sq()) / vnorm);
    }
    report.commutator_residual = worst;
    return report;
}

BoundReport definite_state_check(const ScenarioConfig& cfg) {
    if (cfg.branches.size() < 2) {
        throw ConfigError("definite_state_check requires at least two branches");
    }
    bool definite = false;
    for (const auto& b : cfg.branches) {
        if (std::abs(std::abs(b.c) - 1.0) <= definite_tol) definite = true;
    }
    if (!definite) {
        throw DomainError("definite_state_check: no coefficient has modulus 1 "
                          "within 1e-12");
    }
    const auto [label_i, label_j] = cfg.resolved_pair();
    const double ci2 = std::norm(cfg.branches.at(label_i - 1).c);
    const double cj2 = std::norm(cfg.branches.at(label_j - 1).c);
    BoundReport r = bound_tight_sg(ci2, cj2, OverlapZ{cplx(1.0, 0.0)}, nan_value);
    r.note = "definite macrostate: bound undefined (which-state information excludes "
             "a measurable relative phase)";
    return r;
}

} // namespace mdphase
