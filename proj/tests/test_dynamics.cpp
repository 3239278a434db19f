#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mdphase/errors.hpp"
#include "mdphase/hamiltonian.hpp"
#include "mdphase/pointer_wave.hpp"
#include "mdphase/propagator.hpp"
#include "mdphase/rng.hpp"
#include "oracles.hpp"

using namespace mdphase;

namespace {

double fidelity(const PointerWave& a, const PointerWave& b) {
    return std::norm(inner(a, b)) / (norm_sq(a) * norm_sq(b));
}

PointerWave random_packet(const GridPtr& g, RngStream& rng) {
    return gaussian_packet(g, rng.uniform(-1.5, 1.5), rng.uniform(0.8, 1.3),
                           rng.uniform(-0.8, 0.8));
}

} // namespace

TEST_CASE("free Gaussian spreading") {
    const auto g = make_grid(1024, -60.0, 60.0);
    const auto w = gaussian_packet(g, 0.0, 1.0, 0.0);
    const ApparatusHamiltonian h{1.0, Potential::free(), 0.0};

    for (double t : {1.0, 2.0, 4.0}) {
        const auto evolved = propagate(w, h, t);
        CHECK(std::abs(mean_q(evolved)) < 1e-8);
        CHECK(var_q(evolved) == doctest::Approx(1.0 + t * t / 4.0).epsilon(1e-4));

        // full-wave comparison against the analytic spreading solution
        const auto analytic =
            wave_from_amplitudes(g, oracles::free_gaussian_evolved(*g, 1.0, t, 1.0));
        CHECK(fidelity(evolved, analytic) == doctest::Approx(1.0).epsilon(1e-8));
    }

    // the mass enters through t^2 / (4 M^2)
    const ApparatusHamiltonian heavy{2.0, Potential::free(), 0.0};
    const auto evolved = propagate(w, heavy, 4.0);
    CHECK(var_q(evolved) == doctest::Approx(1.0 + 16.0 / 16.0).epsilon(1e-4));
}

TEST_CASE("t = 0 is the identity") {
    const auto g = make_grid(256, -20.0, 20.0);
    const auto w = gaussian_packet(g, 0.5, 1.0, 0.3);
    const ApparatusHamiltonian h{1.0, Potential::quartic(0.01), 0.0};
    const auto same = propagate(w, h, 0.0);
    for (int m = 0; m < g->n; ++m) CHECK(same.amp[m] == w.amp[m]);
    CHECK_THROWS_AS(propagate(w, h, -1.0), DomainError);
}

TEST_CASE("harmonic coherent oscillation follows Ehrenfest") {
    const auto g = make_grid(1024, -40.0, 40.0);
    const double omega = 0.7;
    const double d = 5.0;
    const auto w = gaussian_packet(g, d, 1.0, 0.0);
    const ApparatusHamiltonian h{1.0, Potential::harmonic(omega), 0.0};

    for (double t : {0.5, 1.3, 2.9, 4.4}) {
        const auto evolved = propagate(w, h, t);
        CHECK(mean_q(evolved) == doctest::Approx(d * std::cos(omega * t)).epsilon(1e-4));
    }
}

TEST_CASE("split-step agrees with the dense exponential") {
    const auto g = make_grid(256, -20.0, 20.0);
    const auto w = gaussian_packet(g, 1.0, 1.0, 0.5);

    SUBCASE("free particle") {
        const ApparatusHamiltonian h{1.0, Potential::free(), 0.0};
        const auto split = propagate(w, h, 1.0);
        const auto dense = propagate_dense(w, h, 1.0);
        CHECK(fidelity(split, dense) >= 1.0 - 1e-7);
    }
    SUBCASE("harmonic full period returns home") {
        const double omega = 1.1;
        const ApparatusHamiltonian h{1.0, Potential::harmonic(omega), 0.0};
        const double period = 2.0 * std::numbers::pi / omega;
        const auto split = propagate(w, h, period);
        CHECK(fidelity(split, w) == doctest::Approx(1.0).epsilon(1e-6));
        const auto dense = propagate_dense(w, h, period);
        CHECK(fidelity(dense, w) == doctest::Approx(1.0).epsilon(1e-6));
    }
    SUBCASE("quartic") {
        const ApparatusHamiltonian h{1.0, Potential::quartic(0.02), 0.0};
        const auto split = propagate(w, h, 1.5);
        const auto dense = propagate_dense(w, h, 1.5);
        CHECK(fidelity(split, dense) >= 1.0 - 1e-7);
    }
    SUBCASE("dense t = 0 is the identity") {
        const ApparatusHamiltonian h{1.0, Potential::quartic(0.02), 0.0};
        const auto dense = propagate_dense(w, h, 0.0);
        CHECK(fidelity(dense, w) == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("grid size gate") {
        const auto big = make_grid(512, -20.0, 20.0);
        const ApparatusHamiltonian h{1.0, Potential::free(), 0.0};
        CHECK_THROWS_AS(propagate_dense(gaussian_packet(big, 0.0, 1.0, 0.0), h, 1.0),
                        DomainError);
    }
}

TEST_CASE("shifted Hamiltonians") {
    const auto g = make_grid(512, -30.0, 30.0);
    const auto w = gaussian_packet(g, 0.0, 1.0, 0.0);

    SUBCASE("free dynamics is shift independent") {
        const ApparatusHamiltonian h{1.0, Potential::free(), 0.0};
        const auto a = propagate(w, h, 2.0);
        const auto b = propagate(w, shifted(h, 7.0), 2.0);
        CHECK(fidelity(a, b) == doctest::Approx(1.0).epsilon(1e-10));
    }
    SUBCASE("linear shift adds only a global phase") {
        const ApparatusHamiltonian h{1.0, Potential::linear(0.4), 0.0};
        const auto a = propagate(w, h, 2.0);
        const auto b = propagate(w, shifted(h, 5.0), 2.0);
        CHECK(fidelity(a, b) == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(mean_q(a) == doctest::Approx(mean_q(b)).epsilon(1e-8));
        CHECK(mean_p(a) == doctest::Approx(mean_p(b)).epsilon(1e-8));
        // b = exp(-i k L t) a, so <b|a> = exp(+i k L t)
        const cplx overlap = inner(b, a);
        const double expected = 0.4 * 5.0 * 2.0;
        CHECK(std::abs(std::remainder(std::arg(overlap) - expected,
                                      2.0 * std::numbers::pi)) < 1e-6);
    }
    SUBCASE("harmonic shift moves the well minimum to -L") {
        const double omega = 0.9;
        const ApparatusHamiltonian h{1.0, Potential::harmonic(omega), 0.0};
        const auto hs = shifted(h, 4.0);
        // packet starts at 0, oscillates about -4
        const double t = 1.1;
        const auto evolved = propagate(w, hs, t);
        CHECK(mean_q(evolved) ==
              doctest::Approx(-4.0 + 4.0 * std::cos(omega * t)).epsilon(1e-4));
    }
}

TEST_CASE("shifted evolution equals translate-conjugated evolution") {
    const auto g = make_grid(512, -30.0, 30.0);
    RngStream rng(57);
    const std::vector<Potential> potentials{Potential::linear(0.3), Potential::harmonic(0.8),
                                            Potential::quartic(0.01)};
    for (const auto& pot : potentials) {
        const ApparatusHamiltonian h{1.0, pot, 0.0};
        for (double t : {0.1, 1.0, 5.0}) {
            const auto w = random_packet(g, rng);
            const double L = 2.0;
            PropagatorConfig cfg;
            cfg.dt = select_timestep({w}, shifted(h, L), t);

            const auto direct = propagate(w, shifted(h, L), t, cfg);
            const auto conjugated =
                translate(propagate(translate(w, L), h, t, cfg), -L);
            CHECK(fidelity(direct, conjugated) == doctest::Approx(1.0).epsilon(1e-8));
            // Pointwise agreement where the state has support. Far outside it
            // the periodic seam of the sampled potential leaves phase ripples
            // of ~1e-8 amplitude on top of a ~0 wave, at different spots on
            // the two routes.
            double max_diff = 0.0;
            for (int m = 0; m < g->n; ++m) {
                if (std::abs(direct.amp[m]) < 1e-4) continue;
                max_diff = std::max(max_diff, std::abs(direct.amp[m] - conjugated.amp[m]));
            }
            CHECK(max_diff < 1e-8);
        }
    }
}

TEST_CASE("unitarity over a thousand steps") {
    const auto g = make_grid(512, -30.0, 30.0);
    const auto w = gaussian_packet(g, 1.0, 1.0, 0.5);
    const std::vector<Potential> potentials{Potential::free(), Potential::linear(0.3),
                                            Potential::harmonic(0.8), Potential::quartic(0.01)};
    for (const auto& pot : potentials) {
        const ApparatusHamiltonian h{1.0, pot, 0.0};
        PropagatorConfig cfg;
        cfg.dt = 1e-3;
        const auto evolved = propagate(w, h, 1.0, cfg); // exactly 1000 steps
        CHECK(std::abs(norm_sq(evolved) - 1.0) < 1e-10);
    }
}

TEST_CASE("energy is conserved") {
    const auto g = make_grid(512, -30.0, 30.0);
    const auto w = gaussian_packet(g, 2.0, 1.0, 0.3);
    for (const auto& pot : {Potential::harmonic(0.8), Potential::quartic(0.01)}) {
        const ApparatusHamiltonian h{1.0, pot, 0.0};
        const double e0 = energy(w, h);
        const auto evolved = propagate(w, h, 3.0);
        CHECK(energy(evolved, h) == doctest::Approx(e0).epsilon(1e-6));
    }
}

TEST_CASE("auto time step passes the halving gate") {
    const auto g = make_grid(512, -30.0, 30.0);
    const auto w = gaussian_packet(g, 0.0, 1.0, 0.0);
    const ApparatusHamiltonian h{1.0, Potential::harmonic(0.8), 0.0};
    const double t = 2.0;

    const double dt = select_timestep({w}, h, t);
    PropagatorConfig coarse;
    coarse.dt = dt;
    PropagatorConfig fine;
    fine.dt = 0.5 * dt;
    const auto a = propagate(w, h, t, coarse);
    const auto b = propagate(w, h, t, fine);
    CHECK(std::abs(1.0 - fidelity(a, b)) < 1e-8);
}

TEST_CASE("propagation errors surface as typed exceptions") {
    const auto g = make_grid(256, -12.0, 12.0);
    const auto w = gaussian_packet(g, 0.0, 1.0, 0.0);
    // a strong constant force drives the packet into the boundary
    const ApparatusHamiltonian h{1.0, Potential::linear(2.0), 0.0};
    CHECK_THROWS_AS(propagate(w, h, 6.0), GeometryError);
}
