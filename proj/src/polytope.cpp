#include "syz/polytope.hpp"
#include "syz/errors.hpp"
#include "syz/intlinalg.hpp"

#include <algorithm>

namespace syz {

namespace {

std::vector<std::pair<VecZ, Rat>> facet_pairs(const HPolyhedron& poly) {
    std::vector<std::pair<VecZ, Rat>> out;
    for (const Constraint& c : poly.canonical_hrep()) {
        if (c.eq) continue;
        const int d = int(c.a.size());
        VecQ full(d + 1);
        full.head(d) = c.a;
        full[d] = -c.b;
        VecZ p = primitive(full);
        out.emplace_back(VecZ(p.head(d)), Rat(-p[d]));
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.second != y.second) return x.second < y.second;
        return lex_less(x.first, y.first);
    });
    return out;
}

} // namespace

LatticePolytope LatticePolytope::from_vertices(int dim, std::vector<VecQ> pts) {
    Generators g;
    g.vertices = std::move(pts);
    HPolyhedron hull = HPolyhedron::from_generators(dim, std::move(g));
    LatticePolytope p;
    p.d_ = dim;
    p.poly_ = std::move(hull);
    p.facets_ = facet_pairs(p.poly_);
    p.poly_.generators();   // force V-rep; validates both views exist
    return p;
}

LatticePolytope LatticePolytope::from_inequalities(int dim, std::vector<Constraint> cons) {
    HPolyhedron poly(dim, std::move(cons));
    if (!poly.bounded()) throw Unbounded("from_inequalities: polyhedron is unbounded");
    LatticePolytope p;
    p.d_ = dim;
    p.poly_ = std::move(poly);
    p.facets_ = facet_pairs(p.poly_);
    return p;
}

bool LatticePolytope::interior_contains(const VecQ& x) const {
    if (dim() < d_) return false;
    for (const auto& [a, b] : facets_)
        if (to_rational(a).dot(x) >= b) return false;
    return true;
}

bool LatticePolytope::has_integral_vertices() const {
    for (const VecQ& v : vertices())
        if (!is_integral(v)) return false;
    return true;
}

LatticePolytope polar_dual(const LatticePolytope& p) {
    const int d = p.ambient_dim();
    if (!p.interior_contains(VecQ::Zero(d)))
        throw OriginNotInterior("polar_dual: origin is not an interior point");
    std::vector<VecQ> dual_verts;
    for (const auto& [a, b] : p.facets()) dual_verts.push_back(to_rational(a) / b);
    LatticePolytope dual = LatticePolytope::from_vertices(d, std::move(dual_verts));
    // cross-check: the dual's facets are <x, v> ≤ 1 over vertices of p
    for (const VecQ& v : p.vertices())
        for (const VecQ& w : dual.vertices())
            if (v.dot(w) > 1) throw std::logic_error("polar_dual: inconsistent duality");
    return dual;
}

bool is_reflexive(const LatticePolytope& p) {
    if (!p.has_integral_vertices())
        throw std::invalid_argument("is_reflexive: vertices must be integral");
    return polar_dual(p).has_integral_vertices();
}

std::vector<VecZ> LatticePoints::boundary() const {
    std::vector<VecZ> out;
    for (size_t i = 0; i < points.size(); ++i)
        if (!interior[i]) out.push_back(points[i]);
    return out;
}

int LatticePoints::interior_count() const {
    int n = 0;
    for (bool b : interior) n += b;
    return n;
}

LatticePoints lattice_points(const LatticePolytope& p) {
    const int d = p.ambient_dim();
    if (p.vertices().empty()) return {};
    VecZ lo(d), hi(d);
    for (int i = 0; i < d; ++i) {
        Rat mn = p.vertices()[0][i], mx = mn;
        for (const VecQ& v : p.vertices()) {
            if (v[i] < mn) mn = v[i];
            if (v[i] > mx) mx = v[i];
        }
        // floor / ceil of rationals
        Int fn = num(mn) / den(mn);
        if (Rat(fn) > mn) fn -= 1;
        Int cx = num(mx) / den(mx);
        if (Rat(cx) < mx) cx += 1;
        lo[i] = fn;
        hi[i] = cx;
    }
    LatticePoints out;
    VecZ cur = lo;
    while (true) {
        VecQ x = to_rational(cur);
        if (p.contains(x)) {
            out.points.push_back(cur);
            out.interior.push_back(p.interior_contains(x));
        }
        int i = d - 1;
        while (i >= 0) {
            cur[i] += 1;
            if (cur[i] <= hi[i]) break;
            cur[i] = lo[i];
            --i;
        }
        if (i < 0) break;
    }
    // odometer order is already lexicographic
    return out;
}

int dual_face(const LatticePolytope& p, int face_id, const LatticePolytope& polar) {
    const FaceLattice& fl = p.face_lattice();
    if (face_id < 0 || face_id >= int(fl.faces.size())) throw NotProperFace();
    const PFace& f = fl.faces[face_id];
    if (f.dim < 0 || face_id == fl.top) throw NotProperFace("dual_face: face must be proper and nonempty");
    std::vector<int> dual_gens;
    for (size_t w = 0; w < polar.vertices().size(); ++w) {
        bool all_one = true;
        for (int g : f.gens)
            if (p.vertices()[g].dot(polar.vertices()[w]) != 1) { all_one = false; break; }
        if (all_one) dual_gens.push_back(int(w));
    }
    int id = polar.face_lattice().find_by_gens(dual_gens);
    if (id < 0) throw std::logic_error("dual_face: pairing set is not a face of the polar");
    return id;
}

HPolyhedron normal_cone(const LatticePolytope& p, int face_id) {
    const FaceLattice& fl = p.face_lattice();
    if (face_id < 0 || face_id >= int(fl.faces.size()) || fl.faces[face_id].dim < 0)
        throw NotProperFace("normal_cone: need a nonempty face");
    std::vector<VecQ> face_pts;
    for (int g : fl.faces[face_id].gens) face_pts.push_back(p.vertices()[g]);
    return normal_cone_of(p.vertices(), face_pts);
}

Int normalized_volume(const std::vector<VecZ>& simplex) {
    if (simplex.empty()) throw Degenerate("normalized_volume: no points");
    const int k = int(simplex.size()) - 1;
    if (k == 0) return 1;
    MatZ edges(k, simplex[0].size());
    for (int i = 0; i < k; ++i) edges.row(i) = (simplex[i + 1] - simplex[0]).transpose();
    SmithNF s = smith(edges);
    if (s.rank() < k) throw Degenerate("normalized_volume: points are affinely dependent");
    return s.index();
}

LatticePolytope height_dual(int dim, const std::vector<VecZ>& domain, const std::vector<Rat>& values) {
    if (domain.size() != values.size())
        throw std::invalid_argument("height_dual: domain/value size mismatch");
    Rat h0;
    bool found = false;
    for (size_t i = 0; i < domain.size(); ++i)
        if (domain[i].isZero()) { h0 = values[i]; found = true; }
    if (!found) throw std::invalid_argument("height_dual: the origin must be in the height domain");
    std::vector<Constraint> cons;
    for (size_t i = 0; i < domain.size(); ++i) {
        if (domain[i].isZero()) continue;
        cons.push_back(Constraint::le(to_rational(domain[i]), h0 - values[i]));
    }
    HPolyhedron poly(dim, cons);
    if (poly.closure_empty() || poly.dim() < dim || !poly.bounded())
        throw EmptyOrLowerDim("height_dual: heights give a degenerate body");
    LatticePolytope p = LatticePolytope::from_inequalities(dim, cons);
    if (!p.interior_contains(VecQ::Zero(dim)))
        throw EmptyOrLowerDim("height_dual: origin is not interior");
    return p;
}

} // namespace syz
