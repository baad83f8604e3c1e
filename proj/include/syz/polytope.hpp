#ifndef SYZ_POLYTOPE_HPP
#define SYZ_POLYTOPE_HPP

#include "syz/polyhedron.hpp"

namespace syz {

/// Bounded polytope with both representations cross-validated on
/// construction.  Vertices are exact rational points (integral for actual
/// lattice polytopes), facet normals are primitive integer vectors.
class LatticePolytope {
public:
    LatticePolytope() = default;

    static LatticePolytope from_vertices(int dim, std::vector<VecQ> pts);
    static LatticePolytope from_inequalities(int dim, std::vector<Constraint> cons);

    int ambient_dim() const { return d_; }
    int dim() const { return poly_.dim(); }
    const std::vector<VecQ>& vertices() const { return poly_.generators().vertices; }
    /// Facets as (primitive integer normal, rhs) pairs, sorted.
    const std::vector<std::pair<VecZ, Rat>>& facets() const { return facets_; }
    const HPolyhedron& body() const { return poly_; }
    const FaceLattice& face_lattice() const { return poly_.face_lattice(); }

    bool contains(const VecQ& x) const { return poly_.closure_contains(x); }
    bool interior_contains(const VecQ& x) const;
    bool has_integral_vertices() const;

    bool operator==(const LatticePolytope& o) const { return vertices() == o.vertices(); }

private:
    int d_ = 0;
    HPolyhedron poly_;
    std::vector<std::pair<VecZ, Rat>> facets_;
};

/// {m : <m,n> ≤ 1 for all n in P}.  Requires 0 in the interior of P.
LatticePolytope polar_dual(const LatticePolytope& p);

/// All vertices of the polar dual are integral.  Requires integral vertices
/// and 0 interior.
bool is_reflexive(const LatticePolytope& p);

struct LatticePoints {
    std::vector<VecZ> points;     // sorted lexicographically
    std::vector<bool> interior;   // parallel flags
    std::vector<VecZ> boundary() const;
    int interior_count() const;
};

/// Integral points of a bounded polytope, tagged boundary/interior.
LatticePoints lattice_points(const LatticePolytope& p);

/// Face of the polar dual to F: {n in P° : <m,n> = 1 for all m in F}.
/// Returns the face index in polar.face_lattice().  F must be a proper
/// nonempty face and P reflexive.
int dual_face(const LatticePolytope& p, int face_id, const LatticePolytope& polar);

/// Normal cone of the face (by id in p.face_lattice()); NC(P, P) = {0}.
HPolyhedron normal_cone(const LatticePolytope& p, int face_id);

/// Lattice-normalized volume of the simplex spanned by the points (relative
/// to the saturated lattice of its affine span); 1 iff unimodular.
Int normalized_volume(const std::vector<VecZ>& simplex);

/// Height-induced dual body {n : <m,n> ≤ h(0) - h(m)} over the height
/// domain.  Throws EmptyOrLowerDim when the result is not full-dimensional
/// with 0 interior.
LatticePolytope height_dual(int dim, const std::vector<VecZ>& domain, const std::vector<Rat>& values);

} // namespace syz

#endif
