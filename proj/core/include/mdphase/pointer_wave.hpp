#pragma once

#include <complex>
#include <vector>

#include "mdphase/grid.hpp"

namespace mdphase {

using cplx = std::complex<double>;

/**
 * Apparatus pointer wavefunction on a Grid, position representation.
 * Normalised so that sum |psi(q_m)|^2 dq = 1 after construction; every
 * operation below is unitary and returns a new wave. Immutable in practice:
 * safe to share and send between threads.
 */
struct PointerWave {
    GridPtr grid;
    std::vector<cplx> amp;
};

/// Normalised Gaussian  psi(q) ~ exp(-(q-center)^2/(4 width^2) + i momentum q).
/// Throws GeometryError when the 6-sigma support (in position or momentum)
/// does not fit inside the grid.
PointerWave gaussian_packet(const GridPtr& grid, double center, double width,
                            double momentum);

/// Wraps raw amplitudes, normalising them (falsifier / test entry point).
PointerWave wave_from_amplitudes(const GridPtr& grid, std::vector<cplx> amp);

double norm_sq(const PointerWave& w);

/// dq-weighted inner product <a|b>; conjugate-symmetric. Throws DomainError
/// on mismatched grids.
cplx inner(const PointerWave& a, const PointerWave& b);

/// Rigid shift by +distance, exp(-i distance p) as a momentum-space phase.
/// Exactly unitary on the periodic grid; throws GeometryError when more than
/// 1e-8 of the probability mass would wrap around the boundary.
PointerWave translate(const PointerWave& w, double distance);

double mean_q(const PointerWave& w);
double var_q(const PointerWave& w);
double mean_p(const PointerWave& w);

/// Momentum-representation amplitudes phi(p_k) (ordering of grid->p),
/// normalised so that sum |phi|^2 dp = sum |psi|^2 dq (Parseval).
std::vector<cplx> momentum_amplitudes(const PointerWave& w);

/// Inverse of momentum_amplitudes.
PointerWave wave_from_momentum(const GridPtr& grid, const std::vector<cplx>& phi);

namespace detail {

/// Unnormalised building blocks shared with BranchVector: same boundary
/// semantics as translate(), operating on raw amplitude vectors.
double wrap_mass(const Grid& g, const std::vector<cplx>& amp, double distance);
void translate_raw(const Grid& g, std::vector<cplx>& amp, double distance);
double band_mass(const Grid& g, const std::vector<cplx>& amp, int band_cells);

} // namespace detail

} // namespace mdphase
