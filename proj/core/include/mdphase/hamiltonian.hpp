#pragma once

#include <string>
#include <vector>

#include "mdphase/grid.hpp"

namespace mdphase {

enum class PotentialKind { none, linear, harmonic, quartic, polynomial };

/// Stock pointer potentials. The harmonic form is 0.5 * M * omega^2 * q^2,
/// so it needs the mass of the Hamiltonian it belongs to.
struct Potential {
    PotentialKind kind = PotentialKind::none;
    double k = 0.0;                  // linear: k * q
    double omega = 0.0;              // harmonic
    double lambda = 0.0;             // quartic: lambda * q^4
    std::vector<double> coeffs;      // polynomial: sum coeffs[j] * q^j

    double value(double q, double mass) const;

    static Potential free();
    static Potential linear(double k);
    static Potential harmonic(double omega);
    static Potential quartic(double lambda);
    static Potential polynomial(std::vector<double> coeffs);
};

std::string to_string(PotentialKind kind);

/// Pointer Hamiltonian p^2 / 2M + V(q + shift). A nonzero shift evaluates
/// the potential at the translated coordinate, which is how the effective
/// Hamiltonians H(q + L_n) of the evolved branches arise.
struct ApparatusHamiltonian {
    double mass = 1.0;
    Potential potential;
    double shift = 0.0;

    double potential_at(double q) const { return potential.value(q + shift, mass); }
};

/// h with the coordinate shifted by a further L. Evolving under the result
/// equals translate(-L) after evolve(h) after translate(+L) on any wave.
ApparatusHamiltonian shifted(const ApparatusHamiltonian& h, double L);

/// V(q_m + shift) sampled on the grid; throws ConfigError if any value is
/// not finite.
std::vector<double> potential_on_grid(const ApparatusHamiltonian& h, const Grid& g);

} // namespace mdphase
