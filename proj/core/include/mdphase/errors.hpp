#pragma once

#include <stdexcept>
#include <string>

namespace mdphase {

/// Invalid construction parameters or configuration input (bad grid sizes,
/// schema violations, out-of-range physics parameters).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Probability mass would leave the physically valid region of the periodic
/// grid (clipped packets, boundary wraparound, packets reaching the edge).
struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Numerical failure: norm drift, a time step that does not converge, or a
/// cross-check between two computation routes that disagrees.
struct NumericsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad arguments against otherwise valid state: unknown branch labels,
/// mismatched grids, degenerate norms.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace mdphase
