// Acceptance suite: one pass/fail line per criterion. Exercises the library
// against independent oracles and drives the CLI end to end on the stock
// configs. Exit code 0 iff every criterion passes.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mdphase/config.hpp"
#include "mdphase/errors.hpp"
#include "mdphase/falsifier.hpp"
#include "mdphase/phase_bounds.hpp"
#include "mdphase/propagator.hpp"
#include "mdphase/report_io.hpp"
#include "mdphase/rng.hpp"
#include "mdphase/scenario.hpp"
#include "oracles.hpp"

using namespace mdphase;
namespace fs = std::filesystem;

namespace {

struct Options {
    std::string cli;
    std::string configs;
    std::string out = "acceptance_out";
};

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

PointerWave random_wave(const GridPtr& grid, RngStream& rng) {
    std::vector<cplx> amp(static_cast<std::size_t>(grid->n));
    const int gaussians = rng.uniform_int(1, 3);
    for (int g = 0; g < gaussians; ++g) {
        const double c = rng.uniform(-3.0, 3.0);
        const double w = rng.uniform(0.8, 1.4);
        const double k = rng.uniform(-1.0, 1.0);
        const cplx mix = rng.complex_gaussian();
        for (int m = 0; m < grid->n; ++m) {
            const double x = grid->q[m] - c;
            amp[static_cast<std::size_t>(m)] +=
                mix * std::exp(-x * x / (4.0 * w * w)) * std::polar(1.0, k * grid->q[m]);
        }
    }
    return wave_from_amplitudes(grid, std::move(amp));
}

// --- criterion 1: operator identity ----------------------------------------

Outcome operator_identity() {
    const auto grid = make_grid(64, -16.0, 16.0);
    RngStream rng(2026);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const int branches = rng.uniform_int(2, 4);
        CompositeState state =
            sample_random_composite(rng.next_u64(), branches, grid, true);
        const PhasePair pair = state.pair(1, branches);

        BranchVector v(grid);
        for (int label = 1; label <= branches; ++label) {
            v.set_part(label, random_wave(grid, rng).amp);
        }
        const BranchVector projected = v.project_pair(pair).scaled(0.25);
        const BranchVector sq1 = v.apply_a1(pair).apply_a1(pair);
        const BranchVector sq2 = v.apply_a2(pair).apply_a2(pair);
        worst = std::max(worst,
                         std::sqrt(sq1.added(projected.scaled(-1.0)).norm_sq()));
        worst = std::max(worst,
                         std::sqrt(sq2.added(projected.scaled(-1.0)).norm_sq()));
    }
    return {worst < 1e-12,
            "A1^2 = A2^2 = (P_i+P_j)/4 on 200 vectors, max residual " + fmt(worst)};
}

// --- criterion 2: post-coupling expectations --------------------------------

Outcome post_coupling_expectations() {
    const auto grid = make_grid(256, -24.0, 24.0);
    const auto psi = gaussian_packet(grid, 0.0, 1.0, 0.0);
    RngStream rng(4096);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        cplx ci = rng.complex_gaussian();
        cplx cj = rng.complex_gaussian();
        const double norm = std::sqrt(std::norm(ci) + std::norm(cj));
        ci /= norm;
        cj /= norm;
        const auto state = couple({{1, ci, 1.0}, {2, cj, -1.0}}, 4.0, psi);
        const auto [a1, a2] = expect_phase_ops(state, state.pair(1, 2));
        const double phi = std::arg(std::conj(ci) * cj);
        const double mag = std::abs(ci) * std::abs(cj);
        worst = std::max(worst, std::abs(a1 - mag * std::cos(phi)));
        worst = std::max(worst, std::abs(a2 - mag * std::sin(phi)));
    }
    return {worst < 1e-10, "100 random pairs at t=0, max deviation " + fmt(worst)};
}

// --- criterion 3: uncertainty theorem ---------------------------------------

Outcome uncertainty_theorem() {
    const auto report = falsify_uncertainty(10000, 20260810);
    const bool pass = report.uncertainty.violations == 0;
    return {pass, "10^4 states (normalized+unnormalized), violations " +
                      std::to_string(report.uncertainty.violations) +
                      ", min slack " + fmt(report.uncertainty.min_slack)};
}

// --- criterion 4: algebraic bridge ------------------------------------------

Outcome bridge_identity() {
    const auto grid = falsifier_grid();
    RngStream rng(11011);
    double worst = 0.0;
    int evaluated = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const bool normalized = (trial % 2 == 0);
        const CompositeState state = sample_random_composite(
            rng.next_u64(), rng.uniform_int(2, 4), grid, normalized);
        const PhasePair pair = state.pair(1, 2);
        const cplx ci = state.branch(1).spec.coeff;
        const cplx cj = state.branch(2).spec.coeff;
        const OverlapZ z{pair_overlap(state, pair)};
        double phi;
        try {
            phi = relative_phase(ci, cj, z);
        } catch (const DomainError&) {
            continue;
        }
        const auto [var1, var2] = variance_phase_ops(state, pair);
        const double ci2 = std::norm(ci), cj2 = std::norm(cj);
        const double S = ci2 + cj2, P = ci2 * cj2, z2 = z.abs() * z.abs();
        const double comm = 0.5 * (cj2 - ci2);
        const double s2 = std::sin(2.0 * phi);
        const double lhs = var1 * var2 - 0.25 * comm * comm;
        const double rhs = 0.25 * P * (1.0 - S * z2 + P * z2 * z2 * s2 * s2);
        worst = std::max(worst, std::abs(lhs - rhs));
        ++evaluated;
    }
    return {worst < 1e-10 && evaluated > 900,
            std::to_string(evaluated) + " states, max identity residual " + fmt(worst)};
}

// --- criterion 5: Z oracles --------------------------------------------------

Outcome z_oracles() {
    std::string detail;

    // free particle: full coherence at all times
    {
        const auto grid = make_grid(512, -40.0, 40.0);
        const auto psi = gaussian_packet(grid, 0.0, 1.0, 0.0);
        const ApparatusHamiltonian h{1.0, Potential::free(), 0.0};
        double worst = 0.0;
        for (double t : {0.0, 2.5, 5.0, 7.5, 10.0}) {
            const auto z = overlap_Z(psi, h, -6.0, 6.0, t);
            worst = std::max(worst, std::abs(z.value - cplx(1.0, 0.0)));
        }
        if (worst >= 1e-8) return {false, "free-particle |Z-1| = " + fmt(worst)};
        detail += "free |Z-1| " + fmt(worst);
    }

    // linear potential: theta = -2 k L t
    {
        const auto grid = make_grid(1024, -40.0, 40.0);
        const auto psi = gaussian_packet(grid, 0.0, 1.0, 0.0);
        const double k = 0.3, L = 10.0;
        const ApparatusHamiltonian h{1.0, Potential::linear(k), 0.0};
        double worst = 0.0;
        for (double t : {0.5, 1.0, 2.0, 3.5, 5.0}) {
            const auto z = overlap_Z(psi, h, -L, L, t);
            const double expected = -2.0 * k * L * t;
            worst = std::max(worst, std::abs(std::remainder(z.theta() - expected,
                                                            2.0 * std::numbers::pi)));
        }
        if (worst >= 1e-5) return {false, "linear-potential arg Z residual " + fmt(worst)};
        detail += ", linear theta residual " + fmt(worst);
    }

    // split-step vs dense exponential on grid 256
    {
        const auto grid = make_grid(256, -20.0, 20.0);
        const auto psi = gaussian_packet(grid, 1.0, 1.0, 0.4);
        double worst = 0.0;
        PropagatorConfig cfg;
        cfg.convergence_tol = 1e-9;
        for (const auto& pot : {Potential::harmonic(0.8), Potential::quartic(0.02)}) {
            const ApparatusHamiltonian h{1.0, pot, 0.0};
            const auto split = propagate(psi, h, 1.0, cfg);
            const auto dense = propagate_dense(psi, h, 1.0);
            const double fid = std::norm(inner(split, dense)) /
                               (norm_sq(split) * norm_sq(dense));
            worst = std::max(worst, 1.0 - fid);
        }
        if (worst >= 1e-7) return {false, "split vs dense fidelity defect " + fmt(worst)};
        detail += ", split-vs-dense defect " + fmt(worst);
    }
    return {true, detail};
}

// --- criterion 6: distance closed forms --------------------------------------

Outcome distance_closed_forms() {
    const auto grid = falsifier_grid();
    RngStream rng(606);
    double worst = 0.0;
    int evaluated = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const CompositeState state = sample_random_composite(
            rng.next_u64(), rng.uniform_int(2, 4), grid, true);
        const PhasePair pair = state.pair(1, 2);
        const cplx ci = state.branch(1).spec.coeff;
        const cplx cj = state.branch(2).spec.coeff;
        const OverlapZ z{pair_overlap(state, pair)};
        double phi;
        try {
            phi = relative_phase(ci, cj, z);
        } catch (const DomainError&) {
            continue;
        }
        const auto direct = distances_triple(state, pair);
        const auto closed =
            distances_closed_form(std::norm(ci), std::norm(cj), z.abs(), phi);
        worst = std::max({worst, std::abs(direct.d12 - closed.d12),
                          std::abs(direct.d23 - closed.d23),
                          std::abs(direct.d13 - closed.d13)});
        ++evaluated;
    }
    return {worst < 1e-9 && evaluated > 450,
            std::to_string(evaluated) + " states, max deviation " + fmt(worst)};
}

// --- criterion 7: Stern-Gerlach structural equivalence ------------------------

Outcome sg_structural() {
    const auto grid = make_grid(64, -16.0, 16.0);
    const double L = 4.0;
    RngStream rng(714);
    double worst_ops = 0.0, worst_sz = 0.0, worst_var = 0.0;

    for (int trial = 0; trial < 10; ++trial) {
        const double a2w = rng.uniform(0.15, 0.85);
        const cplx alpha = std::polar(std::sqrt(a2w), rng.uniform(-3.0, 3.0));
        const cplx beta = std::polar(std::sqrt(1.0 - a2w), rng.uniform(-3.0, 3.0));

        ScenarioConfig cfg;
        cfg.scenario = ScenarioKind::stern_gerlach;
        cfg.grid = {64, -16.0, 16.0};
        cfg.potential = Potential::harmonic(0.6);
        cfg.packet = {0.0, 0.8, 0.0};
        cfg.branches = {{alpha, 0.5}, {beta, -0.5}};
        cfg.coupling_length = L;
        cfg.times = {0.0, 0.4, 0.9};
        const auto series = run_stern_gerlach(cfg);

        worst_sz = std::max(worst_sz, std::abs(series.expect_obs -
                                               0.5 * (std::norm(alpha) - std::norm(beta))));

        // independent dense check of the spin (x) trig forms against the rows
        const Eigen::MatrixXcd cos2lp = oracles::p_function_matrix(
            *grid, [&](double p) { return cplx(std::cos(2.0 * L * p), 0.0); });
        const Eigen::MatrixXcd sin2lp = oracles::p_function_matrix(
            *grid, [&](double p) { return cplx(std::sin(2.0 * L * p), 0.0); });

        // rebuild the evolved state at each listed time and compare
        const auto psi = gaussian_packet(grid, 0.0, 0.8, 0.0);
        const ApparatusHamiltonian h{1.0, Potential::harmonic(0.6), 0.0};
        CompositeState state = couple({{1, alpha, 0.5}, {2, beta, -0.5}}, 2.0 * L, psi);
        const PhasePair pair = state.pair(2, 1);
        double t_prev = 0.0;
        for (std::size_t r = 0; r < cfg.times.size(); ++r) {
            const double t = cfg.times[r];
            if (t > t_prev) state = propagate(state, h, t - t_prev);
            t_prev = t;

            const int n = grid->n;
            Eigen::VectorXcd v = Eigen::VectorXcd::Zero(2 * n);
            for (int m = 0; m < n; ++m) {
                v(m) = alpha * state.branch(1).wave.amp[m];
                v(n + m) = beta * state.branch(2).wave.amp[m];
            }
            auto spin_expect = [&](const Eigen::Matrix2cd& s, const Eigen::MatrixXcd& g1,
                                   const Eigen::Matrix2cd& s2, const Eigen::MatrixXcd& g2,
                                   double sign) {
                Eigen::MatrixXcd op(2 * n, 2 * n);
                for (int a = 0; a < 2; ++a) {
                    for (int b = 0; b < 2; ++b) {
                        op.block(a * n, b * n, n, n) = s(a, b) * g1 + sign * s2(a, b) * g2;
                    }
                }
                return (v.adjoint() * (op * v))(0, 0).real() * grid->dq;
            };
            Eigen::Matrix2cd sx, sy;
            sx << 0.0, 0.5, 0.5, 0.0;
            sy << 0.0, cplx(0.0, -0.5), cplx(0.0, 0.5), 0.0;

            const double a1_spin = spin_expect(sx, cos2lp, sy, sin2lp, +1.0);
            const double a2_spin = spin_expect(sx, sin2lp, sy, cos2lp, -1.0);
            const auto [a1, a2] = expect_phase_ops(state, pair);
            worst_ops = std::max({worst_ops, std::abs(a1_spin - a1), std::abs(a2_spin - a2)});

            // printed variance forms at S = 1
            const double p = std::norm(alpha) * std::norm(beta);
            const double z2 = std::norm(pair_overlap(state, pair));
            const auto [var1, var2] = variance_phase_ops(state, pair);
            const OverlapZ z{pair_overlap(state, pair)};
            double phi;
            try {
                phi = relative_phase(state.branch(2).spec.coeff,
                                     state.branch(1).spec.coeff, z);
            } catch (const DomainError&) {
                continue;
            }
            worst_var = std::max(
                {worst_var,
                 std::abs(var1 - (0.25 - p * z2 * std::cos(phi) * std::cos(phi))),
                 std::abs(var2 - (0.25 - p * z2 * std::sin(phi) * std::sin(phi)))});
        }
    }
    const bool pass = worst_ops < 1e-9 && worst_sz < 1e-10 && worst_var < 1e-9;
    return {pass, "operator forms " + fmt(worst_ops) + ", <s_z> " + fmt(worst_sz) +
                      ", variance forms " + fmt(worst_var)};
}

// --- criterion 8: trivial-bound reproductions ---------------------------------

Outcome trivial_bounds() {
    // t = 0 Stern-Gerlach: the tightened bound's rhs is exactly zero
    {
        ScenarioConfig cfg;
        cfg.scenario = ScenarioKind::stern_gerlach;
        cfg.grid = {256, -24.0, 24.0};
        cfg.packet = {0.0, 1.0, 0.0};
        cfg.branches = {{cplx(std::sqrt(0.7), 0.0), 0.5},
                        {std::polar(std::sqrt(0.3), 0.6), -0.5}};
        cfg.coupling_length = 6.0;
        cfg.times = {0.0};
        const auto series = run_stern_gerlach(cfg);
        const auto& eq25 = series.rows.front().bounds[8];
        if (!(eq25.rhs == 0.0 && eq25.verdict == Verdict::satisfied)) {
            return {false, "t=0 eq25 rhs not exactly zero"};
        }
    }
    // free particle: eq11 rhs <= 0 at every sampled time
    {
        ScenarioConfig cfg;
        cfg.scenario = ScenarioKind::general;
        cfg.grid = {512, -50.0, 50.0};
        cfg.packet = {0.0, 1.0, 0.0};
        const double amp = 1.0 / std::sqrt(3.0);
        cfg.branches = {{cplx(amp, 0.0), -1.0},
                        {std::polar(amp, 1.2), 0.0},
                        {cplx(amp, 0.0), 1.0}};
        cfg.coupling_length = 10.0;
        cfg.times = {0.0, 1.0, 2.0, 4.0, 6.0};
        const auto series = run_general(cfg);
        for (const auto& row : series.rows) {
            const auto& eq11 = row.bounds[1];
            if (!(eq11.rhs <= 1e-12)) {
                return {false, "free-particle eq11 rhs " + fmt(eq11.rhs) + " at t " +
                                   fmt(row.t)};
            }
        }
    }
    // definite state: undefined, annotated
    {
        ScenarioConfig cfg;
        cfg.scenario = ScenarioKind::stern_gerlach;
        cfg.grid = {256, -24.0, 24.0};
        cfg.packet = {0.0, 1.0, 0.0};
        cfg.branches = {{cplx(1.0, 0.0), 0.5}, {cplx(0.0, 0.0), -0.5}};
        cfg.coupling_length = 6.0;
        cfg.times = {0.0, 0.5};
        const auto series = run_stern_gerlach(cfg);
        const auto check = definite_state_check(cfg);
        if (!(series.definite_state && check.verdict == Verdict::undefined)) {
            return {false, "definite state not flagged"};
        }
        for (const auto& row : series.rows) {
            if (row.bounds[8].verdict != Verdict::undefined ||
                row.bounds[8].note.empty()) {
                return {false, "definite-state rows not annotated as undefined"};
            }
        }
    }
    return {true, "t=0 rhs exact zero; free-particle rhs <= 0; definite state undefined"};
}

// --- criterion 9: Peres suite --------------------------------------------------

Outcome peres_suite(const Options& opt) {
    const auto cfg = parse_config((fs::path(opt.configs) / "peres.json").string());
    const auto report = run_peres(cfg);

    double worst_route = 0.0, worst_abs = 0.0, worst_undo = 0.0;
    for (const auto& r : report.rows) {
        worst_route = std::max(worst_route, r.route_residual);
        worst_abs = std::max(worst_abs, r.abs_residual);
        worst_undo = std::max(worst_undo, r.undo_residual);
    }
    const bool residuals_ok = report.rows.size() == 20 && worst_route < 1e-8 &&
                              worst_abs < 1e-8 && worst_undo < 1e-8 &&
                              report.commutator_residual < 1e-10;

    std::string crossing = "|Z| min " + fmt(report.min_abs_z) + " at t " +
                           fmt(report.min_abs_z_at);
    if (report.min_abs_z < 0.5) {
        crossing += " (below 0.5 within the horizon)";
    } else {
        crossing += " (did not reach 0.5; reported, not asserted)";
    }
    return {residuals_ok, "<A> route " + fmt(worst_route) + ", undo " + fmt(worst_undo) +
                              ", commutator " + fmt(report.commutator_residual) + "; " +
                              crossing};
}

// --- criterion 10: census determinism ------------------------------------------

Outcome census_determinism() {
    const auto a = falsifier_json(falsify_all(10000, 424242)).dump(2);
    const auto b = falsifier_json(falsify_all(10000, 424242)).dump(2);
    if (a != b) return {false, "reports differ under one seed"};

    const auto report = falsify_all(10000, 424242);
    for (const char* name : {"eq11", "eq16", "eq24", "eq25"}) {
        const auto it = report.census_normalized.find(name);
        if (it == report.census_normalized.end()) return {false, "census missing bound"};
        if (it->second.rhs_positive != 0) {
            return {false, std::string(name) + " rhs positive for a normalized state"};
        }
    }
    return {true, "byte-identical replay; normalized positive-RHS fraction 0"};
}

// --- criterion 11: CLI end to end ----------------------------------------------

int run_cli(const std::string& cmd) {
    const int rc = std::system(cmd.c_str());
    if (rc == -1) return -1;
    return WEXITSTATUS(rc);
}

bool csv_is_rectangular(const fs::path& path, int expected_rows) {
    std::ifstream in(path);
    if (!in) return false;
    std::string header;
    if (!std::getline(in, header)) return false;
    const auto commas = static_cast<long>(std::count(header.begin(), header.end(), ','));
    int rows = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (std::count(line.begin(), line.end(), ',') != commas) return false;
        ++rows;
    }
    return rows == expected_rows;
}

bool json_file_valid(const fs::path& path, const std::vector<std::string>& keys) {
    std::ifstream in(path);
    if (!in) return false;
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded()) return false;
    for (const auto& key : keys) {
        if (!j.contains(key)) return false;
    }
    return true;
}

Outcome cli_end_to_end(const Options& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    for (const std::string name : {"general", "stern_gerlach", "peres"}) {
        const fs::path config = fs::path(opt.configs) / (name + ".json");
        const fs::path out = fs::path(opt.out) / name;
        fs::remove_all(out);
        const std::string log = (fs::path(opt.out) / (name + ".log")).string();
        const int rc = run_cli(opt.cli + " run " + config.string() + " --out " +
                               out.string() + " > " + log + " 2>&1");
        if (rc != 0) return {false, name + " exited with code " + std::to_string(rc)};

        const auto cfg = parse_config(config.string());
        if (!csv_is_rectangular(out / "timeseries.csv",
                                static_cast<int>(cfg.times.size()))) {
            return {false, name + ": timeseries.csv malformed"};
        }
        if (!json_file_valid(out / "bounds.json", {"scenario", "pair", "rows"})) {
            return {false, name + ": bounds.json malformed"};
        }
        if (!json_file_valid(out / "manifest.json",
                             {"artifact", "version", "resolved_config", "outputs"})) {
            return {false, name + ": manifest.json malformed"};
        }
        if (name == "peres" &&
            !json_file_valid(out / "peres_report.json", {"rows", "commutator_residual"})) {
            return {false, "peres_report.json malformed"};
        }
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return {seconds < 300.0,
            "three stock configs, exit 0, schema-valid outputs, " + fmt(seconds) + " s"};
}

} // namespace

int main(int argc, char** argv) {
    Options opt;
    for (int a = 1; a + 1 < argc; a += 2) {
        const std::string flag = argv[a];
        if (flag == "--cli") opt.cli = argv[a + 1];
        if (flag == "--configs") opt.configs = argv[a + 1];
        if (flag == "--out") opt.out = argv[a + 1];
    }
    if (opt.cli.empty() || opt.configs.empty()) {
        std::cerr << "usage: acceptance --cli PATH --configs DIR [--out DIR]\n";
        return 2;
    }
    fs::create_directories(opt.out);

    struct Criterion {
        int id;
        const char* name;
        double budget_seconds;
        std::function<Outcome()> fn;
    };
    const std::vector<Criterion> criteria{
        {1, "operator identity", 10.0, operator_identity},
        {2, "post-coupling expectations", 0.0, post_coupling_expectations},
        {3, "uncertainty theorem", 60.0, uncertainty_theorem},
        {4, "algebraic bridge identity", 0.0, bridge_identity},
        {5, "overlap-factor oracles", 120.0, z_oracles},
        {6, "distance closed forms", 0.0, distance_closed_forms},
        {7, "Stern-Gerlach structural equivalence", 0.0, sg_structural},
        {8, "trivial-bound reproductions", 0.0, trivial_bounds},
        {9, "measurement-undoing suite", 0.0, [&] { return peres_suite(opt); }},
        {10, "census determinism", 0.0, census_determinism},
        {11, "CLI end to end", 300.0, [&] { return cli_end_to_end(opt); }},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criterion.fn();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_budget =
            (criterion.budget_seconds <= 0.0) || (seconds < criterion.budget_seconds);
        const bool pass = outcome.pass && in_budget;
        if (!pass) ++failures;
        std::printf("[%s] %2d %-38s %6.1fs  %s%s\n", pass ? "PASS" : "FAIL", criterion.id,
                    criterion.name, seconds, outcome.detail.c_str(),
                    in_budget ? "" : " (over time budget)");
        std::fflush(stdout);
    }
    std::printf("ACCEPTANCE: %zu/%zu criteria passed\n", criteria.size() - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
