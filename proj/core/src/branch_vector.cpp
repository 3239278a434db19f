#include "mdphase/branch_vector.hpp"

#include <cmath>

#include "mdphase/composite_state.hpp"
#include "mdphase/errors.hpp"

namespace mdphase {

namespace {

constexpr double wrap_tolerance = 1e-8;

std::vector<cplx> translated(const Grid& g, const std::vector<cplx>& amp,
                             double distance) {
    const double wrapped = detail::wrap_mass(g, amp, distance);
    if (wrapped > wrap_tolerance) {
        throw GeometryError("branch-vector translation by " + std::to_string(distance) +
                            " would wrap mass " + std::to_string(wrapped));
    }
    std::vector<cplx> out = amp;
    detail::translate_raw(g, out, distance);
    return out;
}

} // namespace

BranchVector BranchVector::from_state(const CompositeState& s) {
    BranchVector v(s.grid());
    for (const auto& b : s.branches()) {
        std::vector<cplx> part = b.wave.amp;
        for (auto& a : part) a *= b.spec.coeff;
        v.set_part(b.spec.label, std::move(part));
    }
    return v;
}

void BranchVector::set_part(int label, std::vector<cplx> amp) {
    if (!grid_) throw DomainError("branch vector has no grid");
    if (amp.size() != static_cast<std::size_t>(grid_->n)) {
        throw DomainError("branch-vector part length does not match grid");
    }
    parts_[label] = std::move(amp);
}

const std::vector<cplx>* BranchVector::part(int label) const {
    auto it = parts_.find(label);
    return it == parts_.end() ? nullptr : &it->second;
}

double BranchVector::norm_sq() const {
    double s = 0.0;
    for (const auto& [label, amp] : parts_) {
        for (const auto& a : amp) s += std::norm(a);
    }
    return s * grid_->dq;
}

BranchVector BranchVector::scaled(cplx factor) const {
    BranchVector out(grid_);
    for (const auto& [label, amp] : parts_) {
        std::vector<cplx> part = amp;
        for (auto& a : part) a *= factor;
        out.parts_[label] = std::move(part);
    }
    return out;
}

BranchVector BranchVector::added(const BranchVector& other) const {
    if (!grid_ || !other.grid_ || !grid_->compatible(*other.grid_)) {
        throw DomainError("branch-vector addition: mismatched grids");
    }
    BranchVector out = *this;
    for (const auto& [label, amp] : other.parts_) {
        auto it = out.parts_.find(label);
        if (it == out.parts_.end()) {
            out.parts_[label] = amp;
        } else {
            for (int m = 0; m < grid_->n; ++m) it->second[m] += amp[m];
        }
    }
    return out;
}

BranchVector BranchVector::apply_label_diagonal(const std::function<cplx(int)>& f) const {
    BranchVector out(grid_);
    for (const auto& [label, amp] : parts_) {
        const cplx factor = f(label);
        std::vector<cplx> part = amp;
        for (auto& a : part) a *= factor;
        out.parts_[label] = std::move(part);
    }
    return out;
}

BranchVector BranchVector::project_pair(const PhasePair& pair) const {
    BranchVector out(grid_);
    if (const auto* pi = part(pair.i)) out.parts_[pair.i] = *pi;
    if (const auto* pj = part(pair.j)) out.parts_[pair.j] = *pj;
    return out;
}

// A1 = (B + B')/2 and A2 = i (B' - B)/2 with B = |i><j| (x) T(L_i - L_j):
//   (B v)_i = T(L_i - L_j) v_j,   (B' v)_j = T(L_j - L_i) v_i.
BranchVector BranchVector::apply_a1(const PhasePair& pair) const {
    BranchVector out(grid_);
    if (const auto* vj = part(pair.j)) {
        auto t = translated(*grid_, *vj, pair.shift_i - pair.shift_j);
        for (auto& a : t) a *= 0.5;
        out.parts_[pair.i] = std::move(t);
    }
    if (const auto* vi = part(pair.i)) {
        auto t = translated(*grid_, *vi, pair.shift_j - pair.shift_i);
        for (auto& a : t) a *= 0.5;
        out.parts_[pair.j] = std::move(t);
    }
    return out;
}

BranchVector BranchVector::apply_a2(const PhasePair& pair) const {
    BranchVector out(grid_);
    if (const auto* vj = part(pair.j)) {
        auto t = translated(*grid_, *vj, pair.shift_i - pair.shift_j);
        for (auto& a : t) a *= cplx(0.0, -0.5);
        out.parts_[pair.i] = std::move(t);
    }
    if (const auto* vi = part(pair.i)) {
        auto t = translated(*grid_, *vi, pair.shift_j - pair.shift_i);
        for (auto& a : t) a *= cplx(0.0, 0.5);
        out.parts_[pair.j] = std::move(t);
    }
    return out;
}

cplx inner(const BranchVector& a, const BranchVector& b) {
    if (!a.grid() || !b.grid() || !a.grid()->compatible(*b.grid())) {
        throw DomainError("branch-vector inner: mismatched grids");
    }
    cplx s{0.0, 0.0};
    for (const auto& [label, ap] : a.parts()) {
        const auto* bp = b.part(label);
        if (!bp) continue;
        for (int m = 0; m < a.grid()->n; ++m) s += std::conj(ap[m]) * (*bp)[m];
    }
    return s * a.grid()->dq;
}

} // namespace mdphase
