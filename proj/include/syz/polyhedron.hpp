#ifndef SYZ_POLYHEDRON_HPP
#define SYZ_POLYHEDRON_HPP

#include "syz/numeric.hpp"

#include <optional>
#include <vector>

namespace syz {

/// One linear condition a·x ≤ b (eq=false) or a·x = b (eq=true).
/// strict=true turns ≤ into <; only meaningful on inequalities.
struct Constraint {
    VecQ a;
    Rat b;
    bool eq = false;
    bool strict = false;

    static Constraint le(VecQ a, Rat b) { return {std::move(a), std::move(b), false, false}; }
    static Constraint lt(VecQ a, Rat b) { return {std::move(a), std::move(b), false, true}; }
    static Constraint equal(VecQ a, Rat b) { return {std::move(a), std::move(b), true, false}; }
};

/// V-representation: conv(vertices) + cone(rays) + span(lineality).
struct Generators {
    std::vector<VecQ> vertices;
    std::vector<VecQ> rays;        // primitive integer directions
    std::vector<VecQ> lineality;   // canonical primitive basis
    bool trivial() const { return vertices.empty(); }
};

struct ConeGenerators {
    std::vector<VecQ> rays;
    std::vector<VecQ> lineality;
};

/// Extreme rays and lineality of {y : eqs·y = 0, ineqs·y ≤ 0} by the double
/// description method with the combinatorial adjacency test.
ConeGenerators dd_cone(int n, const std::vector<VecQ>& eqs, const std::vector<VecQ>& ineqs);

class HPolyhedron;

/// Face of a polyhedron, identified by the generators it contains.
struct PFace {
    std::vector<int> gens;     // indices into the combined (vertices, rays) list
    std::vector<int> facets;   // irredundant facet inequalities tight on the face
    std::vector<int> active;   // indices of original constraints tight on the face
    int dim = -1;
};

struct FaceLattice {
    std::vector<PFace> faces;  // graded: sorted by (dim, gens); includes empty and top face
    int top = -1;
    int bottom = -1;

    int dim() const { return top >= 0 ? faces[top].dim : -1; }
    bool leq(int f1, int f2) const;               // face inclusion
    std::vector<int> of_dim(int k) const;
    std::vector<int> f_vector() const;            // counts by dim 0..dim(), no empty face
    int find_by_gens(const std::vector<int>& gens) const;
};

/// Possibly unbounded polyhedron carrying both representations.  Strict
/// inequality flags ride along on the H-representation: all geometric
/// computations use the closure, membership and emptiness honor strictness.
class HPolyhedron {
public:
    HPolyhedron() = default;
    HPolyhedron(int dim, std::vector<Constraint> cons);
    static HPolyhedron from_generators(int dim, Generators g);

    int ambient_dim() const { return d_; }
    const std::vector<Constraint>& constraints() const { return cons_; }
    const Generators& generators() const;

    bool closure_empty() const;
    bool is_empty() const;                 // honors strict rows
    int dim() const;                       // affine dimension of the closure, -1 if empty

    bool closure_contains(const VecQ& x) const;
    bool contains(const VecQ& x) const;    // honors strict rows
    bool relint_contains(const VecQ& x) const;   // relative interior of the closure
    VecQ relint_point() const;             // throws on empty closure

    ConeGenerators recession() const;      // rays + lineality
    bool bounded() const;

    HPolyhedron closure() const;
    HPolyhedron intersect(const HPolyhedron& other) const;

    /// Canonical irredundant H-description of the closure: implicit
    /// equalities first, then facets, all primitive and sorted.
    std::vector<Constraint> canonical_hrep() const;

    const FaceLattice& face_lattice() const;

    /// Same point set (closures compared exactly, via mutual inclusion of
    /// generators).
    bool set_equals(const HPolyhedron& other) const;
    bool subset_of(const HPolyhedron& other) const;

    /// Constraint indices (into constraints()) tight on the whole closure.
    std::vector<int> implicit_equalities() const;

private:
    void ensure_generators() const;
    void ensure_canonical() const;
    void ensure_faces() const;

    int d_ = 0;
    std::vector<Constraint> cons_;
    mutable std::optional<Generators> gens_;
    mutable std::optional<std::vector<Constraint>> canon_;
    mutable std::optional<FaceLattice> faces_;
    mutable std::optional<std::vector<bool>> implicit_;
};

/// Minkowski sum of a polyhedron and a polyhedral cone (recession add-on).
HPolyhedron minkowski_sum(const HPolyhedron& p, const HPolyhedron& cone);

/// relint(a) ∩ relint(b) ≠ ∅, both taken as closed sets.
bool relint_intersects(const HPolyhedron& a, const HPolyhedron& b);

/// Normal cone {y : y maximized over conv(pts) on all of face_pts}; face_pts
/// must be nonempty.  Lives in the dual space of the same dimension.
HPolyhedron normal_cone_of(const std::vector<VecQ>& pts, const std::vector<VecQ>& face_pts);

} // namespace syz

#endif
