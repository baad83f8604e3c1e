#ifndef SYZ_SPINE_HPP
#define SYZ_SPINE_HPP

#include "syz/subdivision.hpp"

namespace syz {

struct LegendreEval {
    Rat value;
    std::vector<VecZ> argmax;   // all saturating domain points, sorted
};

/// L(n) = max over the domain of <m,n> + λ(m), with the saturating set.
LegendreEval legendre_eval(const HeightFunction& lambda, const VecQ& n);

/// Cell of the decomposition of R^d by the corner locus, labeled by a
/// simplex of the central triangulation.  Bounded exactly when the label
/// contains the origin.
struct SpineCell {
    std::vector<VecZ> label;    // vertex set, sorted
    HPolyhedron hrep;
    bool bounded = false;
    int dim = -1;
};

struct Spine {
    HeightFunction lambda;
    Subdivision central;                 // the induced central triangulation
    LatticePolytope dual_body;           // the height dual, = the central cell
    std::vector<SpineCell> cells;        // one per simplex label, all dimensions
    const SpineCell* cell_by_label(const std::vector<VecZ>& label) const;
    /// 1-dimensional cells as (vertex, vertex) segments and (vertex, ray)
    /// rays, for plotting the corner locus in d = 2
    std::vector<std::pair<VecQ, VecQ>> corner_segments() const;   // bounded
    std::vector<std::pair<VecQ, VecQ>> corner_rays() const;       // point, direction
};

/// Throws NotGenericHeights unless the heights induce a central triangulation.
Spine build_spine(const HeightFunction& lambda);

/// Q_σ = F_σ^dual + NC(carrier σ): exact equality of the cell closure with
/// the Minkowski-sum description.
bool verify_qcell_minkowski(const Spine& spine, const SpineCell& cell);

/// Defining system: equalities across I, strict inequalities with margin eps
/// against every other domain point.  I nonempty, disjoint from J.
HPolyhedron q_ij_polyhedron(const HeightFunction& lambda, const std::vector<VecZ>& i_set,
                            const std::vector<VecZ>& j_set, const Rat& eps);

/// {m in the domain : <m,w> = 1}
std::vector<VecZ> w_perp(const HeightFunction& lambda, const VecZ& w);

struct TruncatedPolytope {
    std::vector<VecZ> removed;
    LatticePolytope hull;       // conv of the domain points not in w-perp
};
TruncatedPolytope truncate(const HeightFunction& lambda, const VecZ& w);

/// Isomorphic face lattices of the two closures, matched by active
/// constraint sets; false when either strict set is empty.
bool combinatorial_equivalence(const HeightFunction& lambda, const std::vector<VecZ>& i_set,
                               const std::vector<VecZ>& j_set, const Rat& eps1, const Rat& eps2);

/// relint(a) ⊆ b where a is taken closed and b honors its strict rows.
bool relint_subset(const HPolyhedron& a, const HPolyhedron& b);

} // namespace syz

#endif
