#ifndef SYZ_BSD_HPP
#define SYZ_BSD_HPP

#include "syz/poset.hpp"

namespace syz {

/// The normal fan of q refines the normal fan of p (p is a Minkowski summand
/// of q up to scaling).
bool is_minkowski_summand(const LatticePolytope& p, const LatticePolytope& q);

/// κ : L(Q) → L(P) on face posets (indices into the given FacePosets),
/// sending F to the face of P any functional in relint NC_Q(F) maximizes.
std::vector<int> kappa_map(const LatticePolytope& q, const FacePoset& qfp,
                           const LatticePolytope& p, const FacePoset& pfp);

/// Generalized barycentric subdivision of Q with respect to a summand P,
/// with its combinatorial face poset and the realized cells.
struct GeometricBsd {
    BsdPoset poset;
    std::vector<std::vector<int>> element_vertices;  // per element, indices into `points`
    std::vector<VecQ> points;
    Rat eps;
    Subdivision subdivision() const;                 // maximal cells only
};

/// Throws NotSummand / EpsTooLarge.  eps ≤ 0 picks the default
/// 1/(2 · max facet lattice diameter), halving until each pulled translate
/// sits in the relative interior of its face.
GeometricBsd geometric_bsd(const LatticePolytope& q, const LatticePolytope& p, Rat eps = 0);

/// δ-realization of bsd(T,T) for a boundary triangulation: the face for
/// (τ, 𝔗) is δτ + (1−δ)𝔗, and the cellular map sends it to τ.
struct DeltaRealization {
    BsdPoset poset;                      // over the simplex poset of T, κ = id
    SimplexPoset tposet;
    std::vector<std::vector<int>> element_vertices;
    std::vector<VecQ> points;
    Rat delta;
    /// the map 𝔡^δ: element id → simplex id of T (the τ label)
    int label(int element) const { return poset.elements[element].p; }
};

DeltaRealization delta_realization(const Triangulation& t, const Rat& delta);

} // namespace syz

#endif
