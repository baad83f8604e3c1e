#ifndef SYZ_SUBDIVISION_HPP
#define SYZ_SUBDIVISION_HPP

#include "syz/heights.hpp"
#include "syz/polytope.hpp"

#include <cstdint>

namespace syz {

/// Polyhedral subdivision of a point configuration, cells as index sets into
/// `points`.  Produced by height envelopes, pulling, and the generalized
/// barycentric constructions.
struct Subdivision {
    int d = 0;
    std::vector<VecQ> points;
    std::vector<std::vector<int>> cells;   // maximal cells, each sorted; list sorted
    bool coherent = false;
    bool simplicial = false;
    bool central = false;

    int origin_index() const;
    /// All faces of all maximal cells, as point-index sets (computed
    /// polytopally; includes the maximal cells, excludes the empty face).
    std::vector<std::vector<int>> all_faces() const;
    /// Cells canonicalized to sorted coordinate tuples, for set comparison
    /// across different indexings.
    std::vector<std::vector<VecQ>> cell_point_sets() const;
};

/// Boundary triangulation: integral points actually used, maximal simplices.
struct Triangulation {
    int d = 0;
    std::vector<VecZ> points;
    std::vector<std::vector<int>> maxcells;

    std::vector<VecZ> cell_points(const std::vector<int>& cell) const;
};

/// Regular subdivision of conv(domain) induced by the concave envelope of the
/// height lift.  Flags report simpliciality and centrality; ties are never
/// broken silently.
Subdivision central_subdivision(const HeightFunction& h);

/// Restriction of a central simplicial subdivision to the boundary:
/// cells σ with σ ∪ {0} maximal.  Throws NotCentral / NotGenericHeights.
Triangulation boundary_restriction(const Subdivision& sub);

/// Identical cell sets of the two induced subdivisions.  Both heights must be
/// generic (simplicial and central), otherwise NotGenericHeights.
bool same_secondary_cone(const HeightFunction& h1, const HeightFunction& h2);

/// Pulls the polytope conv(p_pts) inside the relative interior of a face of
/// the complex: faces conv(F ∪ F') for F ⪯ P, F' ≺ Q, F ⊄ F', whose normal
/// cones meet in their relative interiors.
Subdivision pull(const Subdivision& sub, const std::vector<VecQ>& p_pts);

/// Integer heights (origin at 0) whose central subdivision is simplicial,
/// central, and uses every boundary lattice point; deterministic in `seed`,
/// growing the sampling range until success.
HeightFunction generic_heights(const LatticePolytope& p, std::uint64_t seed, int max_attempts = 40);

} // namespace syz

#endif
