#include "mdphase/hamiltonian.hpp"

#include <cmath>

#include "mdphase/errors.hpp"

namespace mdphase {

double Potential::value(double q, double mass) const {
    switch (kind) {
        case PotentialKind::none:
            return 0.0;
        case PotentialKind::linear:
            return k * q;
        case PotentialKind::harmonic:
            return 0.5 * mass * omega * omega * q * q;
        case PotentialKind::quartic:
            return lambda * q * q * q * q;
        case PotentialKind::polynomial: {
            double v = 0.0;
            for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * q + *it;
            return v;
        }
    }
    return 0.0;
}

Potential Potential::free() { return {}; }

Potential Potential::linear(double k) {
    Potential p;
    p.kind = PotentialKind::linear;
    p.k = k;
    return p;
}

Potential Potential::harmonic(double omega) {
    Potential p;
    p.kind = PotentialKind::harmonic;
    p.omega = omega;
    return p;
}

Potential Potential::quartic(double lambda) {
    Potential p;
    p.kind = PotentialKind::quartic;
    p.lambda = lambda;
    return p;
}

Potential Potential::polynomial(std::vector<double> coeffs) {
    Potential p;
    p.kind = PotentialKind::polynomial;
    p.coeffs = std::move(coeffs);
    return p;
}

std::string to_string(PotentialKind kind) {
    switch (kind) {
        case PotentialKind::none: return "none";
        case PotentialKind::linear: return "linear";
        case PotentialKind::harmonic: return "harmonic";
        case PotentialKind::quartic: return "quartic";
        case PotentialKind::polynomial: return "polynomial";
    }
    return "?";
}

ApparatusHamiltonian shifted(const ApparatusHamiltonian& h, double L) {
    ApparatusHamiltonian out = h;
    out.shift += L;
    return out;
}

std::vector<double> potential_on_grid(const ApparatusHamiltonian& h, const Grid& g) {
    if (!(h.mass > 0.0)) throw ConfigError("apparatus mass must be positive");
    std::vector<double> v(g.n);
    for (int m = 0; m < g.n; ++m) {
        v[m] = h.potential_at(g.q[m]);
        if (!std::isfinite(v[m])) {
            throw ConfigError("potential overflows at q = " + std::to_string(g.q[m]));
        }
    }
    return v;
}

} // namespace mdphase
