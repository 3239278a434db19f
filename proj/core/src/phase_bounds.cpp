#include "mdphase/phase_bounds.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "mdphase/errors.hpp"

namespace mdphase {

namespace {

constexpr double nan_value = std::numeric_limits<double>::quiet_NaN();

double wrap_pi(double angle) {
    // into (-pi, pi]
    double a = std::remainder(angle, 2.0 * std::numbers::pi);
    if (a <= -std::numbers::pi) a += 2.0 * std::numbers::pi;
    return a;
}

BoundReport undefined_report(BoundName name, const BoundInputs& in) {
    BoundReport r;
    r.name = name;
    r.lhs = r.rhs = r.slack = nan_value;
    r.verdict = Verdict::undefined;
    r.inputs = in;
    return r;
}

/// ge_sense: true for lhs >= rhs bounds, false for lhs <= rhs bounds.
/// Slacks within a few ulps of zero are reported as exact saturation, so a
/// mathematically saturated bound cannot flip verdict on rounding noise.
BoundReport make_report(BoundName name, double lhs, double rhs, bool ge_sense,
                        const BoundInputs& in) {
    BoundReport r;
    r.name = name;
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = ge_sense ? lhs - rhs : rhs - lhs;
    const double snap = 1e-13 * std::max({1.0, std::abs(lhs), std::abs(rhs)});
    if (std::abs(r.slack) < snap) r.slack = 0.0;
    r.verdict = (r.slack >= 0.0) ? Verdict::satisfied : Verdict::violated;
    r.inputs = in;
    return r;
}

double tight_rhs_value(double S, double P, double z2) {
    return 0.5 * ((S * z2 - 1.0) / (S * z2 + 1.0)) * S / (P * z2);
}

BoundReport eval_uncertainty(BoundName name, double ci2, double cj2, const OverlapZ& z,
                             double phi, double S) {
    const double P = ci2 * cj2;
    const double z2 = z.abs() * z.abs();
    const BoundInputs in{ci2, cj2, z.abs(), phi};
    if (P * z2 * z2 < degenerate_eps || !std::isfinite(phi)) {
        return undefined_report(name, in);
    }
    const double s2 = std::sin(2.0 * phi);
    const double lhs = s2 * s2;
    const double rhs = (S * z2 - 1.0) / (P * z2 * z2);
    return make_report(name, lhs, rhs, true, in);
}

BoundReport eval_tight(BoundName name, double ci2, double cj2, const OverlapZ& z,
                       double phi, double S) {
    const double P = ci2 * cj2;
    const double z2 = z.abs() * z.abs();
    const BoundInputs in{ci2, cj2, z.abs(), phi};
    if (P * z2 < degenerate_eps || !std::isfinite(phi)) return undefined_report(name, in);
    const double s = std::sin(phi);
    return make_report(name, s * s, tight_rhs_value(S, P, z2), true, in);
}

} // namespace

double OverlapZ::theta() const { return wrap_pi(std::arg(value)); }

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::satisfied: return "satisfied";
        case Verdict::violated: return "violated";
        case Verdict::undefined: return "undefined";
    }
    return "?";
}

std::string to_string(BoundName n) {
    switch (n) {
        case BoundName::eq8: return "eq8";
        case BoundName::eq11: return "eq11";
        case BoundName::eq12: return "eq12";
        case BoundName::eq15: return "eq15";
        case BoundName::eq16: return "eq16";
        case BoundName::eq17: return "eq17";
        case BoundName::eq18: return "eq18";
        case BoundName::eq24: return "eq24";
        case BoundName::eq25: return "eq25";
    }
    return "?";
}

OverlapZ overlap_Z(const PointerWave& initial, const ApparatusHamiltonian& h,
                   double L_i, double L_j, double t, const PropagatorConfig& cfg) {
    if (t < 0.0) throw DomainError("overlap_Z: negative time");
    if (t == 0.0 || L_i == L_j) return OverlapZ{cplx(1.0, 0.0)};

    const ApparatusHamiltonian h_i = shifted(h, L_i);
    const ApparatusHamiltonian h_j = shifted(h, L_j);

    // One dt for every evolution below: the two routes then differ only by
    // grid-level aliasing, not by the split-step truncation error.
    PropagatorConfig run_cfg = cfg;
    if (run_cfg.dt <= 0.0) {
        run_cfg.dt = std::min(select_timestep({initial}, h_i, t, cfg),
                              select_timestep({initial}, h_j, t, cfg));
    }

    // Route (a): inner product of the two shifted-Hamiltonian evolutions,
    // normalised by the actual wave norms (Cauchy-Schwarz keeps |Z| <= 1).
    const PointerWave wi = propagate(initial, h_i, t, run_cfg);
    const PointerWave wj = propagate(initial, h_j, t, run_cfg);
    cplx direct = inner(wi, wj) / std::sqrt(norm_sq(wi) * norm_sq(wj));

    // Route (b): phase-operator extraction from an equal-weight reference
    // state (eigenvalues chosen so the shifts are exactly L_i, L_j).
    const double amp = 1.0 / std::sqrt(2.0);
    const std::vector<BranchSpec> specs{{1, cplx(amp, 0.0), L_i}, {2, cplx(amp, 0.0), L_j}};
    CompositeState reference = couple(specs, 1.0, initial);
    reference = propagate(reference, h, t, run_cfg);
    const auto [a1, a2] = expect_phase_ops(reference, reference.pair(1, 2));
    const cplx extracted = 2.0 * cplx(a1, a2);

    if (std::abs(direct - extracted) > 1e-7) {
        throw NumericsError("overlap_Z routes disagree by " +
                            std::to_string(std::abs(direct - extracted)));
    }
    if (std::abs(direct) > 1.0 + 1e-10) {
        throw NumericsError("overlap_Z magnitude " + std::to_string(std::abs(direct)) +
                            " exceeds 1");
    }
    if (std::abs(direct) > 1.0) direct /= std::abs(direct);
    return OverlapZ{direct};
}

double relative_phase(cplx c_i, cplx c_j, const OverlapZ& z) {
    if (std::abs(c_i) < degenerate_eps || std::abs(c_j) < degenerate_eps ||
        z.abs() < degenerate_eps) {
        throw DomainError("relative phase undefined: a magnitude vanishes");
    }
    return wrap_pi(std::arg(std::conj(c_i) * c_j * z.value));
}

double fubini_study_D(const BranchVector& a, const BranchVector& b) {
    const double na = a.norm_sq();
    const double nb = b.norm_sq();
    if (na < degenerate_eps || nb < degenerate_eps) {
        throw DomainError("fubini_study_D: zero-norm vector");
    }
    return 1.0 - std::norm(inner(a, b)) / (na * nb);
}

double fubini_study_D(const PointerWave& a, const PointerWave& b) {
    const double na = norm_sq(a);
    const double nb = norm_sq(b);
    if (na < degenerate_eps || nb < degenerate_eps) {
        throw DomainError("fubini_study_D: zero-norm vector");
    }
    return 1.0 - std::norm(inner(a, b)) / (na * nb);
}

FSDistances distances_triple(const CompositeState& s, const PhasePair& pair) {
    const BranchVector v = BranchVector::from_state(s);
    const BranchVector v1 = v.apply_a1(pair);
    const BranchVector v2 = v.apply_a2(pair);
    return FSDistances{fubini_study_D(v, v1), fubini_study_D(v1, v2), fubini_study_D(v, v2)};
}

FSDistances distances_closed_form(double ci2, double cj2, double abs_z, double phi) {
    const double S = ci2 + cj2;
    if (S * S < degenerate_eps) throw DomainError("distances_closed_form: weightless pair");
    const double P = ci2 * cj2;
    const double z2 = abs_z * abs_z;
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    const double diff = ci2 - cj2;
    return FSDistances{1.0 - 4.0 * P * z2 * c * c / S, 1.0 - diff * diff / (S * S),
                       1.0 - 4.0 * P * z2 * s * s / S};
}

BoundReport bound_uncertainty(double ci2, double cj2, const OverlapZ& z, double phi) {
    return eval_uncertainty(BoundName::eq11, ci2, cj2, z, phi, ci2 + cj2);
}

BoundReport bound_uncertainty_sg(double ci2, double cj2, const OverlapZ& z, double phi) {
    return eval_uncertainty(BoundName::eq24, ci2, cj2, z, phi, 1.0);
}

BoundReport bound_raw_uncertainty(double var1, double var2, double ci2, double cj2) {
    const double comm = 0.5 * (cj2 - ci2);
    const BoundInputs in{ci2, cj2, nan_value, nan_value};
    return make_report(BoundName::eq8, var1 * var2, 0.25 * comm * comm, true, in);
}

BoundReport bound_triangle(double ci2, double cj2, const OverlapZ& z, double phi) {
    const double S = ci2 + cj2;
    const double z2 = z.abs() * z.abs();
    const BoundInputs in{ci2, cj2, z.abs(), phi};
    if (z2 * S < degenerate_eps || !std::isfinite(phi)) {
        return undefined_report(BoundName::eq15, in);
    }
    return make_report(BoundName::eq15, std::cos(2.0 * phi), 1.0 / (z2 * S), false, in);
}

BoundReport bound_raw_triangle(const FSDistances& d) {
    BoundInputs in{nan_value, nan_value, nan_value, nan_value};
    if (!std::isfinite(d.d12) || !std::isfinite(d.d23) || !std::isfinite(d.d13)) {
        return undefined_report(BoundName::eq12, in);
    }
    return make_report(BoundName::eq12, d.d12 + d.d23, d.d13, true, in);
}

BoundReport bound_tight(double ci2, double cj2, const OverlapZ& z, double phi) {
    return eval_tight(BoundName::eq16, ci2, cj2, z, phi, ci2 + cj2);
}

BoundReport bound_tight_sg(double ci2, double cj2, const OverlapZ& z, double phi) {
    return eval_tight(BoundName::eq25, ci2, cj2, z, phi, 1.0);
}

BoundReport bound_min_phase(double ci2, double cj2, const OverlapZ& z, double phi) {
    const double P = ci2 * cj2;
    const double z2 = z.abs() * z.abs();
    const BoundInputs in{ci2, cj2, z.abs(), phi};
    if (P * z2 < degenerate_eps || !std::isfinite(phi)) {
        return undefined_report(BoundName::eq17, in);
    }
    return make_report(BoundName::eq17, phi * phi, tight_rhs_value(ci2 + cj2, P, z2), true, in);
}

double min_phase(double ci2, double cj2, const OverlapZ& z) {
    const double P = ci2 * cj2;
    const double z2 = z.abs() * z.abs();
    if (P * z2 < degenerate_eps) throw DomainError("min_phase: degenerate inputs");
    return std::sqrt(std::max(tight_rhs_value(ci2 + cj2, P, z2), 0.0));
}

BoundReport bound_post_measurement(double ci2, double cj2, const OverlapZ& z_later,
                                   double phi0) {
    // A pair exhausting a normalized state has S = 1 exactly; computing the
    // weights leaves rounding noise in S - 1 that the small denominator
    // would otherwise amplify, so snap it.
    double S = ci2 + cj2;
    if (std::abs(S - 1.0) < 1e-14) S = 1.0;
    const double P = ci2 * cj2;
    const double z2 = z_later.abs() * z_later.abs();
    const BoundInputs in{ci2, cj2, z_later.abs(), phi0};
    if (P * z2 < degenerate_eps || !std::isfinite(phi0)) {
        return undefined_report(BoundName::eq18, in);
    }
    const double s = std::sin(phi0);
    const double rhs = 0.5 * ((S - 1.0) / (S + 1.0)) * S / (P * z2);
    return make_report(BoundName::eq18, s * s, rhs, true, in);
}

} // namespace mdphase
