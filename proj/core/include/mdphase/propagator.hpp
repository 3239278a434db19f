#pragma once

#include <vector>

#include "mdphase/composite_state.hpp"
#include "mdphase/hamiltonian.hpp"
#include "mdphase/pointer_wave.hpp"

namespace mdphase {

/**
 * Settings for the production propagator: 2nd-order symmetric split-step
 *   exp(-i V dt/2) exp(-i T dt) exp(-i V dt/2).
 * dt = 0 requests automatic selection: start from
 * 0.01 * min(1, 2*pi / omega_scale) and halve until halving once more
 * changes the final-state fidelity by less than convergence_tol.
 */
struct PropagatorConfig {
    double dt = 0.0;                 ///< 0 = auto-select via the gate
    double convergence_tol = 1e-8;   ///< |1 - fidelity(dt, dt/2)| threshold
    int max_halvings = 18;
    double norm_drift_tol = 1e-8;    ///< NumericsError beyond this
    double edge_mass_tol = 1e-8;     ///< GeometryError beyond this
};

/// Evolve one wave by exp(-i t H). Unitary up to rounding; checks norm drift
/// and boundary-band mass after the run.
PointerWave propagate(const PointerWave& w, const ApparatusHamiltonian& h,
                      double t, const PropagatorConfig& cfg = {});

/// Evolve every branch wave by the same exp(-i t H); coefficients untouched.
CompositeState propagate(const CompositeState& s, const ApparatusHamiltonian& h,
                         double t, const PropagatorConfig& cfg = {});

/// Runs the convergence gate on each wave and returns the coarsest dt that
/// passes for all of them. Throws NumericsError if the gate never passes.
double select_timestep(const std::vector<PointerWave>& waves,
                       const ApparatusHamiltonian& h, double t,
                       const PropagatorConfig& cfg = {});

/// Dense cross-validation oracle (n <= 256): eigendecomposition of the grid
/// Hamiltonian, kinetic part assembled from an explicit DFT matrix. Never
/// the default propagator.
PointerWave propagate_dense(const PointerWave& w, const ApparatusHamiltonian& h,
                            double t);

/// <H> = <T> + <V> for a normalised wave.
double energy(const PointerWave& w, const ApparatusHamiltonian& h);

} // namespace mdphase
