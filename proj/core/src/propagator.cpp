#include "mdphase/propagator.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fft.hpp"
#include "mdphase/errors.hpp"

namespace mdphase {

namespace {

std::vector<cplx> phase_factors(const std::vector<double>& values, double factor) {
    std::vector<cplx> out(values.size());
    for (std::size_t m = 0; m < values.size(); ++m) {
        const double phase = -factor * values[m];
        out[m] = cplx(std::cos(phase), std::sin(phase));
    }
    return out;
}

// Initial auto-dt guess from the wave's own energy scale; the halving gate
// does the real accuracy work from here.
double initial_dt(const PointerWave& w, const ApparatusHamiltonian& h) {
    const double omega_scale = 4.0 * std::abs(energy(w, h)) + 1.0;
    return 0.01 * std::min(1.0, 2.0 * std::numbers::pi / omega_scale);
}

PointerWave run_split_step(const PointerWave& w, const ApparatusHamiltonian& h,
                           double t, double dt, const PropagatorConfig& cfg) {
    const Grid& g = *w.grid;
    const auto v = potential_on_grid(h, g);

    const int steps = std::max(1, static_cast<int>(std::ceil(t / dt - 1e-12)));
    const double dt_eff = t / steps;

    const auto half_kick = phase_factors(v, 0.5 * dt_eff);
    const auto full_kick = phase_factors(v, dt_eff);
    std::vector<double> kinetic(g.n);
    for (int k = 0; k < g.n; ++k) kinetic[k] = g.p[k] * g.p[k] / (2.0 * h.mass);
    const auto drift = phase_factors(kinetic, dt_eff);

    std::vector<cplx> amp = w.amp;
    const double norm_before = norm_sq(w);
    const int band = std::max(2, g.n / 32);
    // Check the boundary band as the wave moves, not just at the end: on the
    // periodic grid a runaway packet would otherwise wrap and come back.
    const int check_every = std::max(1, steps / 4096);

    // exp(-iV dt/2) [exp(-iT dt) exp(-iV dt)]^(steps-1) exp(-iT dt) exp(-iV dt/2)
    for (int m = 0; m < g.n; ++m) amp[m] *= half_kick[m];
    for (int s = 0; s < steps; ++s) {
        detail::fft_forward(amp);
        for (int k = 0; k < g.n; ++k) amp[k] *= drift[k];
        detail::fft_backward(amp);
        if (s + 1 < steps) {
            for (int m = 0; m < g.n; ++m) amp[m] *= full_kick[m];
        }
        if (s % check_every == 0 || s + 1 == steps) {
            const double edge = detail::band_mass(g, amp, band);
            if (edge > cfg.edge_mass_tol) {
                throw GeometryError("wave reached the grid boundary: edge-band mass " +
                                    std::to_string(edge) + " after " +
                                    std::to_string(s + 1) + " steps");
            }
        }
    }
    for (int m = 0; m < g.n; ++m) amp[m] *= half_kick[m];

    PointerWave out{w.grid, std::move(amp)};
    const double drift_err = std::abs(norm_sq(out) - norm_before);
    if (drift_err > cfg.norm_drift_tol) {
        throw NumericsError("propagation norm drift " + std::to_string(drift_err) +
                            " over " + std::to_string(steps) + " steps");
    }
    return out;
}

double fidelity(const PointerWave& a, const PointerWave& b) {
    return std::norm(inner(a, b)) / (norm_sq(a) * norm_sq(b));
}

// Convergence gate: halving dt must leave the final-state fidelity within
// convergence_tol AND the energy expectation within 5e-7 relative. The
// fidelity test alone is blind to the coherent phase-like error that shows
// up as energy drift.
double gate_timestep(const PointerWave& w, const ApparatusHamiltonian& h, double t,
                     const PropagatorConfig& cfg) {
    double dt = (cfg.dt > 0.0) ? cfg.dt : initial_dt(w, h);
    if (t <= 0.0) return dt;
    PointerWave coarse = run_split_step(w, h, t, dt, cfg);
    double coarse_energy = energy(coarse, h);
    for (int halving = 0; halving < cfg.max_halvings; ++halving) {
        PointerWave fine = run_split_step(w, h, t, 0.5 * dt, cfg);
        const double fine_energy = energy(fine, h);
        const bool fidelity_ok = std::abs(1.0 - fidelity(coarse, fine)) < cfg.convergence_tol;
        const bool energy_ok = std::abs(coarse_energy - fine_energy) <=
                               5e-7 * std::max(1.0, std::abs(fine_energy));
        if (fidelity_ok && energy_ok) return dt;
        dt *= 0.5;
        coarse = std::move(fine);
        coarse_energy = fine_energy;
    }
    throw NumericsError("time step did not converge after " +
                        std::to_string(cfg.max_halvings) + " halvings (t = " +
                        std::to_string(t) + ")");
}

} // namespace

PointerWave propagate(const PointerWave& w, const ApparatusHamiltonian& h, double t,
                      const PropagatorConfig& cfg) {
    if (!w.grid) throw DomainError("propagate: wave has no grid");
    if (t < 0.0) throw DomainError("propagate: negative time");
    if (t == 0.0) return w;
    const double dt = (cfg.dt > 0.0) ? cfg.dt : gate_timestep(w, h, t, cfg);
    return run_split_step(w, h, t, dt, cfg);
}

CompositeState propagate(const CompositeState& s, const ApparatusHamiltonian& h, double t,
                         const PropagatorConfig& cfg) {
    if (t < 0.0) throw DomainError("propagate: negative time");
    if (t == 0.0) return s;
    std::vector<PointerWave> waves;
    waves.reserve(s.branches().size());
    for (const auto& b : s.branches()) waves.push_back(propagate(b.wave, h, t, cfg));
    return s.with_waves(std::move(waves));
}

double select_timestep(const std::vector<PointerWave>& waves, const ApparatusHamiltonian& h,
                       double t, const PropagatorConfig& cfg) {
    if (waves.empty()) throw DomainError("select_timestep: no waves");
    double dt = std::numeric_limits<double>::infinity();
    for (const auto& w : waves) dt = std::min(dt, gate_timestep(w, h, t, cfg));
    return dt;
}

PointerWave propagate_dense(const PointerWave& w, const ApparatusHamiltonian& h, double t) {
    if (!w.grid) throw DomainError("propagate_dense: wave has no grid");
    const Grid& g = *w.grid;
    if (g.n > 256) {
        throw DomainError("propagate_dense: grid too large (" + std::to_string(g.n) +
                          " > 256)");
    }

    using Mat = Eigen::MatrixXcd;
    using Vec = Eigen::VectorXcd;
    const int n = g.n;

    // Unitary DFT matrix F_km = exp(-2 pi i k m / n) / sqrt(n); built from
    // first principles so this route shares nothing with the FFT path.
    Mat f(n, n);
    const double two_pi_over_n = 2.0 * std::numbers::pi / n;
    for (int k = 0; k < n; ++k) {
        for (int m = 0; m < n; ++m) {
            const double phase = -two_pi_over_n * k * m;
            f(k, m) = cplx(std::cos(phase), std::sin(phase)) / std::sqrt(double(n));
        }
    }

    Vec kinetic(n);
    for (int k = 0; k < n; ++k) kinetic(k) = g.p[k] * g.p[k] / (2.0 * h.mass);
    Mat ham = f.adjoint() * kinetic.asDiagonal() * f;
    const auto v = potential_on_grid(h, g);
    for (int m = 0; m < n; ++m) ham(m, m) += v[m];

    Eigen::SelfAdjointEigenSolver<Mat> solver(ham);
    if (solver.info() != Eigen::Success) {
        throw NumericsError("propagate_dense: eigendecomposition failed");
    }

    Vec psi = Eigen::Map<const Vec>(w.amp.data(), n);
    Vec modes = solver.eigenvectors().adjoint() * psi;
    for (int k = 0; k < n; ++k) {
        const double phase = -t * solver.eigenvalues()(k);
        modes(k) *= cplx(std::cos(phase), std::sin(phase));
    }
    psi = solver.eigenvectors() * modes;

    PointerWave out{w.grid, std::vector<cplx>(n)};
    Eigen::Map<Vec>(out.amp.data(), n) = psi;
    return out;
}

double energy(const PointerWave& w, const ApparatusHamiltonian& h) {
    const Grid& g = *w.grid;
    const auto v = potential_on_grid(h, g);
    double pot = 0.0;
    for (int m = 0; m < g.n; ++m) pot += v[m] * std::norm(w.amp[m]);
    pot *= g.dq;

    const auto phi = momentum_amplitudes(w);
    double kin = 0.0;
    for (int k = 0; k < g.n; ++k) {
        kin += g.p[k] * g.p[k] / (2.0 * h.mass) * std::norm(phi[k]);
    }
    kin *= g.dp;
    return (pot + kin) / norm_sq(w);
}

} // namespace mdphase
