#pragma once

#include <memory>
#include <vector>

namespace mdphase {

/**
 * Uniform one-dimensional position grid together with the conjugate momentum
 * lattice of the discrete Fourier transform. Natural units, hbar = 1.
 *
 * The grid is periodic under the transform; physical validity of any
 * operation that moves probability mass is enforced by boundary-margin
 * checks in the wave operations, not by absorbing boundaries.
 */
struct Grid {
    int n = 0;              ///< number of points; power of two, >= 8
    double q_min = 0.0;
    double q_max = 0.0;
    double dq = 0.0;        ///< (q_max - q_min) / n
    double dp = 0.0;        ///< 2*pi / (n * dq)
    std::vector<double> q;  ///< q_min + m*dq
    std::vector<double> p;  ///< FFT-ordered: 0, dp, ..., (n/2-n)*dp, ..., -dp

    double box_length() const { return q_max - q_min; }
    double p_max() const { return 0.5 * n * dp; }

    bool compatible(const Grid& other) const {
        return n == other.n && q_min == other.q_min && q_max == other.q_max;
    }
};

/// Grids are immutable and shared between waves.
using GridPtr = std::shared_ptr<const Grid>;

/// Throws ConfigError unless n_points is a power of two >= 8 and q_max > q_min.
GridPtr make_grid(int n_points, double q_min, double q_max);

} // namespace mdphase
