#include "mdphase/pointer_wave.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fft.hpp"
#include "mdphase/errors.hpp"

namespace mdphase {

namespace {

constexpr double wrap_tolerance = 1e-8;

void require_grid(const PointerWave& w) {
    if (!w.grid || w.amp.size() != static_cast<std::size_t>(w.grid->n)) {
        throw DomainError("pointer wave has no grid or mismatched amplitude length");
    }
}

double raw_norm_sq(const Grid& g, const std::vector<cplx>& amp) {
    double s = 0.0;
    for (const auto& a : amp) s += std::norm(a);
    return s * g.dq;
}

void normalize(const Grid& g, std::vector<cplx>& amp) {
    const double n2 = raw_norm_sq(g, amp);
    if (n2 < 1e-300) throw DomainError("cannot normalise a zero wave");
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& a : amp) a *= inv;
}

} // namespace

namespace detail {

double wrap_mass(const Grid& g, const std::vector<cplx>& amp, double distance) {
    if (distance == 0.0) return 0.0;
    if (std::abs(distance) >= g.box_length()) return raw_norm_sq(g, amp);
    double mass = 0.0;
    if (distance > 0.0) {
        const double edge = g.q_max - distance;
        for (int m = 0; m < g.n; ++m)
            if (g.q[m] >= edge) mass += std::norm(amp[m]);
    } else {
        const double edge = g.q_min - distance;
        for (int m = 0; m < g.n; ++m)
            if (g.q[m] < edge) mass += std::norm(amp[m]);
    }
    return mass * g.dq;
}

void translate_raw(const Grid& g, std::vector<cplx>& amp, double distance) {
    if (distance == 0.0) return;
    fft_forward(amp);
    for (int k = 0; k < g.n; ++k) {
        const double phase = -distance * g.p[k];
        amp[k] *= cplx(std::cos(phase), std::sin(phase));
    }
    fft_backward(amp);
}

double band_mass(const Grid& g, const std::vector<cplx>& amp, int band_cells) {
    band_cells = std::min(band_cells, g.n / 2);
    double mass = 0.0;
    for (int m = 0; m < band_cells; ++m) {
        mass += std::norm(amp[m]);
        mass += std::norm(amp[g.n - 1 - m]);
    }
    return mass * g.dq;
}

} // namespace detail

PointerWave gaussian_packet(const GridPtr& grid, double center, double width,
                            double momentum) {
    if (!grid) throw DomainError("gaussian_packet: null grid");
    if (!(width > 0.0)) throw ConfigError("gaussian_packet: width must be positive");

    // 6-sigma support must fit; the corresponding clipped tail mass is ~2e-9.
    if (center - 6.0 * width < grid->q_min || center + 6.0 * width > grid->q_max) {
        throw GeometryError("gaussian packet clipped by grid boundary: center " +
                            std::to_string(center) + ", width " + std::to_string(width));
    }
    // Same margin in the momentum representation (sigma_p = 1/(2 width)).
    if (std::abs(momentum) + 3.0 / width > grid->p_max()) {
        throw GeometryError("gaussian packet clipped in momentum: momentum " +
                            std::to_string(momentum) + ", width " + std::to_string(width));
    }

    std::vector<cplx> amp(grid->n);
    for (int m = 0; m < grid->n; ++m) {
        const double x = grid->q[m] - center;
        const double envelope = std::exp(-x * x / (4.0 * width * width));
        const double phase = momentum * grid->q[m];
        amp[m] = envelope * cplx(std::cos(phase), std::sin(phase));
    }
    normalize(*grid, amp);
    return PointerWave{grid, std::move(amp)};
}

PointerWave wave_from_amplitudes(const GridPtr& grid, std::vector<cplx> amp) {
    if (!grid) throw DomainError("wave_from_amplitudes: null grid");
    if (amp.size() != static_cast<std::size_t>(grid->n)) {
        throw DomainError("wave_from_amplitudes: amplitude length does not match grid");
    }
    normalize(*grid, amp);
    return PointerWave{grid, std::move(amp)};
}

double norm_sq(const PointerWave& w) {
    require_grid(w);
    return raw_norm_sq(*w.grid, w.amp);
}

cplx inner(const PointerWave& a, const PointerWave& b) {
    require_grid(a);
    require_grid(b);
    if (!a.grid->compatible(*b.grid)) throw DomainError("inner: mismatched grids");
    cplx s{0.0, 0.0};
    for (int m = 0; m < a.grid->n; ++m) s += std::conj(a.amp[m]) * b.amp[m];
    return s * a.grid->dq;
}

PointerWave translate(const PointerWave& w, double distance) {
    require_grid(w);
    if (distance == 0.0) return w;
    const double wrapped = detail::wrap_mass(*w.grid, w.amp, distance);
    if (wrapped > wrap_tolerance) {
        throw GeometryError("translate by " + std::to_string(distance) +
                            " would wrap mass " + std::to_string(wrapped) +
                            " around the periodic boundary");
    }
    PointerWave out{w.grid, w.amp};
    detail::translate_raw(*w.grid, out.amp, distance);
    return out;
}

double mean_q(const PointerWave& w) {
    require_grid(w);
    double s = 0.0;
    for (int m = 0; m < w.grid->n; ++m) s += w.grid->q[m] * std::norm(w.amp[m]);
    return s * w.grid->dq / norm_sq(w);
}

double var_q(const PointerWave& w) {
    const double mu = mean_q(w);
    double s = 0.0;
    for (int m = 0; m < w.grid->n; ++m) {
        const double x = w.grid->q[m] - mu;
        s += x * x * std::norm(w.amp[m]);
    }
    return s * w.grid->dq / norm_sq(w);
}

double mean_p(const PointerWave& w) {
    const auto phi = momentum_amplitudes(w);
    double s = 0.0, n = 0.0;
    for (int k = 0; k < w.grid->n; ++k) {
        const double m2 = std::norm(phi[k]);
        s += w.grid->p[k] * m2;
        n += m2;
    }
    return s / n;
}

std::vector<cplx> momentum_amplitudes(const PointerWave& w) {
    require_grid(w);
    const Grid& g = *w.grid;
    std::vector<cplx> phi = w.amp;
    detail::fft_forward(phi);
    const double scale = g.dq / std::sqrt(2.0 * std::numbers::pi);
    for (int k = 0; k < g.n; ++k) {
        const double phase = -g.p[k] * g.q_min;
        phi[k] *= scale * cplx(std::cos(phase), std::sin(phase));
    }
    return phi;
}

PointerWave wave_from_momentum(const GridPtr& grid, const std::vector<cplx>& phi) {
    if (!grid) throw DomainError("wave_from_momentum: null grid");
    const Grid& g = *grid;
    if (phi.size() != static_cast<std::size_t>(g.n)) {
        throw DomainError("wave_from_momentum: length does not match grid");
    }
    std::vector<cplx> amp(phi);
    const double scale = std::sqrt(2.0 * std::numbers::pi) / g.dq;
    for (int k = 0; k < g.n; ++k) {
        const double phase = g.p[k] * g.q_min;
        amp[k] *= scale * cplx(std::cos(phase), std::sin(phase));
    }
    detail::fft_backward(amp);
    return PointerWave{grid, std::move(amp)};
}

} // namespace mdphase
