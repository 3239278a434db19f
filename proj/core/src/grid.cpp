#include "mdphase/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "mdphase/errors.hpp"

namespace mdphase {

namespace {
bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }
} // namespace

GridPtr make_grid(int n_points, double q_min, double q_max) {
    if (n_points < 8 || !is_power_of_two(n_points)) {
        throw ConfigError("grid n_points must be a power of two >= 8, got " +
                          std::to_string(n_points));
    }
    if (!(q_max > q_min)) {
        throw ConfigError("grid requires q_max > q_min, got [" + std::to_string(q_min) +
                          ", " + std::to_string(q_max) + "]");
    }
    auto g = std::make_shared<Grid>();
    g->n = n_points;
    g->q_min = q_min;
    g->q_max = q_max;
    g->dq = (q_max - q_min) / n_points;
    g->dp = 2.0 * std::numbers::pi / (n_points * g->dq);
    g->q.resize(n_points);
    g->p.resize(n_points);
    for (int m = 0; m < n_points; ++m) {
        g->q[m] = q_min + m * g->dq;
        const int k = (m < n_points / 2) ? m : m - n_points;
        g->p[m] = k * g->dp;
    }
    return g;
}

} // namespace mdphase
