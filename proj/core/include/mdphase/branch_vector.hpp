#pragma once

#include <functional>
#include <map>
#include <vector>

#include "mdphase/pointer_wave.hpp"

namespace mdphase {

class CompositeState;
struct PhasePair;

/**
 * Vector in the system (x) apparatus space in branch form, without the
 * c_n (x) chi_n factorisation: one unnormalised pointer amplitude block per
 * system label. Branch labels are exactly orthonormal, so inner products
 * reduce to sums of pointer inner products over common labels.
 *
 * This is the workhorse for applying the phase operators directly to state
 * vectors (distance triples, operator-identity checks, probe vectors).
 */
class BranchVector {
public:
    BranchVector() = default;
    explicit BranchVector(GridPtr grid) : grid_(std::move(grid)) {}

    static BranchVector from_state(const CompositeState& s);

    const GridPtr& grid() const { return grid_; }
    const std::map<int, std::vector<cplx>>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    /// Inserts or overwrites the block for a label.
    void set_part(int label, std::vector<cplx> amp);
    const std::vector<cplx>* part(int label) const;

    double norm_sq() const;
    BranchVector scaled(cplx factor) const;
    BranchVector added(const BranchVector& other) const;

    /// Diagonal operator in the label basis: label -> multiplier.
    BranchVector apply_label_diagonal(const std::function<cplx(int)>& f) const;

    /// (P_i + P_j) v : keeps only the two pair labels.
    BranchVector project_pair(const PhasePair& pair) const;

    /// A1 v and A2 v for the given pair (the off-diagonal phase operators
    /// built from the pair translations). Throw GeometryError when the
    /// translation would wrap significant mass around the grid boundary.
    BranchVector apply_a1(const PhasePair& pair) const;
    BranchVector apply_a2(const PhasePair& pair) const;

private:
    GridPtr grid_;
    std::map<int, std::vector<cplx>> parts_;
};

cplx inner(const BranchVector& a, const BranchVector& b);

} // namespace mdphase
