#include "mdphase/composite_state.hpp"

#include <cmath>
#include <set>
#include <string>

#include "mdphase/errors.hpp"

namespace mdphase {

namespace {
constexpr double branch_norm_tol = 1e-10;
constexpr double weight_tol = 1e-8;
} // namespace

CompositeState::CompositeState(GridPtr grid, std::vector<Branch> branches,
                               double coupling_length, Normalization mode)
    : grid_(std::move(grid)),
      branches_(std::move(branches)),
      coupling_length_(coupling_length),
      mode_(mode) {
    if (!grid_) throw DomainError("composite state: null grid");
    if (branches_.empty()) throw DomainError("composite state: no branches");

    std::set<int> labels;
    double weight = 0.0;
    for (const auto& b : branches_) {
        if (!labels.insert(b.spec.label).second) {
            throw DomainError("composite state: duplicate branch label " +
                              std::to_string(b.spec.label));
        }
        if (!b.wave.grid || !b.wave.grid->compatible(*grid_)) {
            throw DomainError("composite state: branch wave on a different grid");
        }
        const double n2 = norm_sq(b.wave);
        if (std::abs(n2 - 1.0) > branch_norm_tol) {
            throw DomainError("composite state: branch " + std::to_string(b.spec.label) +
                              " wave norm^2 = " + std::to_string(n2));
        }
        weight += std::norm(b.spec.coeff);
    }
    if (mode_ == Normalization::required && std::abs(weight - 1.0) > weight_tol) {
        throw DomainError("composite state: sum |c_n|^2 = " + std::to_string(weight) +
                          ", expected 1 (use the relaxed mode only in the falsifier)");
    }
}

const CompositeState::Branch& CompositeState::branch(int label) const {
    for (const auto& b : branches_) {
        if (b.spec.label == label) return b;
    }
    throw DomainError("unknown branch label " + std::to_string(label));
}

PhasePair CompositeState::pair(int label_i, int label_j) const {
    if (label_i == label_j) throw DomainError("phase pair requires distinct labels");
    const auto& bi = branch(label_i);
    const auto& bj = branch(label_j);
    return PhasePair{label_i, label_j, coupling_length_ * bi.spec.eigenvalue,
                     coupling_length_ * bj.spec.eigenvalue};
}

double CompositeState::total_weight() const {
    double weight = 0.0;
    for (const auto& b : branches_) weight += std::norm(b.spec.coeff);
    return weight;
}

CompositeState CompositeState::with_coefficients(const std::vector<cplx>& coeffs) const {
    if (coeffs.size() != branches_.size()) {
        throw DomainError("with_coefficients: wrong coefficient count");
    }
    std::vector<Branch> out = branches_;
    for (std::size_t n = 0; n < out.size(); ++n) out[n].spec.coeff = coeffs[n];
    return CompositeState(grid_, std::move(out), coupling_length_, mode_);
}

CompositeState CompositeState::with_waves(std::vector<PointerWave> waves) const {
    if (waves.size() != branches_.size()) throw DomainError("with_waves: wrong wave count");
    std::vector<Branch> out = branches_;
    for (std::size_t n = 0; n < out.size(); ++n) out[n].wave = std::move(waves[n]);
    return CompositeState(grid_, std::move(out), coupling_length_, mode_);
}

CompositeState couple(const std::vector<BranchSpec>& branches, double coupling_length,
                      const PointerWave& initial, CompositeState::Normalization mode) {
    if (!initial.grid) throw DomainError("couple: initial wave has no grid");
    std::vector<CompositeState::Branch> out;
    out.reserve(branches.size());
    for (const auto& spec : branches) {
        try {
            out.push_back({spec, translate(initial, coupling_length * spec.eigenvalue)});
        } catch (const GeometryError& e) {
            throw GeometryError("couple: branch " + std::to_string(spec.label) + ": " +
                                e.what());
        }
    }
    return CompositeState(initial.grid, std::move(out), coupling_length, mode);
}

double expect_observable(const CompositeState& s) {
    // Full-state evaluation in branch form; off-diagonal <chi_i|chi_j> terms
    // carry <phi_i|O|phi_j> = 0 and drop out identically.
    double value = 0.0;
    for (const auto& b : s.branches()) {
        value += std::norm(b.spec.coeff) * b.spec.eigenvalue * norm_sq(b.wave);
    }
    return value;
}

cplx pair_overlap(const CompositeState& s, const PhasePair& pair) {
    const auto& bi = s.branch(pair.i);
    const auto& bj = s.branch(pair.j);
    try {
        // Normalising by the actual wave norms keeps |zeta| <= 1 up to
        // rounding even after long propagations (Cauchy-Schwarz).
        const cplx raw = inner(bi.wave, translate(bj.wave, pair.shift_i - pair.shift_j));
        return raw / std::sqrt(norm_sq(bi.wave) * norm_sq(bj.wave));
    } catch (const GeometryError& e) {
        throw GeometryError("pair_overlap(" + std::to_string(pair.i) + "," +
                            std::to_string(pair.j) + "): " + e.what());
    }
}

std::pair<double, double> expect_phase_ops(const CompositeState& s, const PhasePair& pair) {
    const auto& bi = s.branch(pair.i);
    const auto& bj = s.branch(pair.j);
    const cplx w = std::conj(bi.spec.coeff) * bj.spec.coeff * pair_overlap(s, pair);
    return {w.real(), w.imag()};
}

std::pair<double, double> variance_phase_ops(const CompositeState& s, const PhasePair& pair) {
    const auto& bi = s.branch(pair.i);
    const auto& bj = s.branch(pair.j);
    const double pop =
        std::norm(bi.spec.coeff) * norm_sq(bi.wave) + std::norm(bj.spec.coeff) * norm_sq(bj.wave);
    const auto [a1, a2] = expect_phase_ops(s, pair);
    return {0.25 * pop - a1 * a1, 0.25 * pop - a2 * a2};
}

double commutator_expect(const CompositeState& s, const PhasePair& pair) {
    const auto& bi = s.branch(pair.i);
    const auto& bj = s.branch(pair.j);
    const double ci2 = std::norm(bi.spec.coeff);
    const double cj2 = std::norm(bj.spec.coeff);
    const double from_state =
        0.5 * (cj2 * norm_sq(bj.wave) - ci2 * norm_sq(bi.wave));
    const double closed_form = 0.5 * (cj2 - ci2);
    if (std::abs(from_state - closed_form) > 1e-10) {
        throw NumericsError("commutator expectation drifted from the closed form by " +
                            std::to_string(std::abs(from_state - closed_form)));
    }
    return from_state;
}

double reduced_pointer_purity(const CompositeState& s) {
    const double total = s.total_weight();
    double purity = 0.0;
    for (const auto& a : s.branches()) {
        for (const auto& b : s.branches()) {
            const double wa = std::norm(a.spec.coeff) / total;
            const double wb = std::norm(b.spec.coeff) / total;
            purity += wa * wb * std::norm(inner(a.wave, b.wave));
        }
    }
    return purity;
}

} // namespace mdphase
