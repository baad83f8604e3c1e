#include "syz/subdivision.hpp"
#include "syz/errors.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace syz {

int Subdivision::origin_index() const {
    for (size_t i = 0; i < points.size(); ++i) {
        bool zero = true;
        for (Eigen::Index j = 0; j < points[i].size(); ++j)
            if (points[i][j] != 0) { zero = false; break; }
        if (zero) return int(i);
    }
    return -1;
}

std::vector<std::vector<int>> Subdivision::all_faces() const {
    std::set<std::vector<int>> seen;
    for (const auto& cell : cells) {
        std::vector<VecQ> pts;
        for (int i : cell) pts.push_back(points[i]);
        LatticePolytope cp = LatticePolytope::from_vertices(d, pts);
        // map polytope vertices back to configuration indices, then collect
        // all configuration points lying on each face
        for (const PFace& f : cp.face_lattice().faces) {
            if (f.dim < 0) continue;
            std::vector<VecQ> fverts;
            for (int g : f.gens) fverts.push_back(cp.vertices()[g]);
            HPolyhedron fh = HPolyhedron::from_generators(d, {fverts, {}, {}});
            std::vector<int> face_ids;
            for (int i : cell)
                if (fh.closure_contains(points[i])) face_ids.push_back(i);
            seen.insert(face_ids);
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<std::vector<VecQ>> Subdivision::cell_point_sets() const {
    std::vector<std::vector<VecQ>> out;
    for (const auto& cell : cells) {
        std::vector<VecQ> pts;
        for (int i : cell) pts.push_back(points[i]);
        std::sort(pts.begin(), pts.end(), VecQLess{});
        out.push_back(std::move(pts));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return lex_less(a[i], b[i]);
        return false;
    });
    return out;
}

std::vector<VecZ> Triangulation::cell_points(const std::vector<int>& cell) const {
    std::vector<VecZ> out;
    for (int i : cell) out.push_back(points[i]);
    return out;
}

Subdivision central_subdivision(const HeightFunction& h) {
    const int d = h.dim();
    const auto& dom = h.domain();
    Subdivision sub;
    sub.d = d;
    sub.coherent = true;
    for (const VecZ& p : dom) sub.points.push_back(to_rational(p));

    // lift and take the upper hull
    std::vector<VecQ> lifted;
    for (size_t i = 0; i < dom.size(); ++i) {
        VecQ q(d + 1);
        q.head(d) = to_rational(dom[i]);
        q[d] = h.values()[i];
        lifted.push_back(q);
    }
    HPolyhedron hull = HPolyhedron::from_generators(d + 1, {lifted, {}, {}});

    if (hull.dim() <= d) {
        // affine heights: a single cell with every point
        std::vector<int> all(dom.size());
        for (size_t i = 0; i < all.size(); ++i) all[i] = int(i);
        sub.cells.push_back(all);
    } else {
        for (const Constraint& c : hull.canonical_hrep()) {
            if (c.eq || c.a[d] <= 0) continue;   // keep upper facets only
            std::vector<int> cell;
            for (size_t i = 0; i < lifted.size(); ++i)
                if (c.a.dot(lifted[i]) == c.b) cell.push_back(int(i));
            sub.cells.push_back(std::move(cell));
        }
        std::sort(sub.cells.begin(), sub.cells.end());
    }

    sub.simplicial = true;
    for (const auto& cell : sub.cells)
        if (int(cell.size()) != d + 1) { sub.simplicial = false; break; }
    const int oi = sub.origin_index();
    sub.central = oi >= 0;
    if (sub.central)
        for (const auto& cell : sub.cells)
            if (!std::binary_search(cell.begin(), cell.end(), oi)) { sub.central = false; break; }
    return sub;
}

Triangulation boundary_restriction(const Subdivision& sub) {
    if (!sub.central) throw NotCentral("boundary_restriction: subdivision is not central");
    if (!sub.simplicial) throw NotGenericHeights("boundary_restriction: subdivision is not simplicial");
    const int oi = sub.origin_index();
    std::vector<int> used;   // old indices, origin removed
    std::set<int> used_set;
    for (const auto& cell : sub.cells)
        for (int i : cell)
            if (i != oi) used_set.insert(i);
    used.assign(used_set.begin(), used_set.end());
    std::map<int, int> renum;
    Triangulation tri;
    tri.d = sub.d;
    for (size_t k = 0; k < used.size(); ++k) {
        renum[used[k]] = int(k);
        tri.points.push_back(to_integer(sub.points[used[k]]));
    }
    for (const auto& cell : sub.cells) {
        std::vector<int> bcell;
        for (int i : cell)
            if (i != oi) bcell.push_back(renum[i]);
        std::sort(bcell.begin(), bcell.end());
        tri.maxcells.push_back(std::move(bcell));
    }
    std::sort(tri.maxcells.begin(), tri.maxcells.end());
    return tri;
}

bool same_secondary_cone(const HeightFunction& h1, const HeightFunction& h2) {
    Subdivision s1 = central_subdivision(h1);
    Subdivision s2 = central_subdivision(h2);
    if (!s1.simplicial || !s2.simplicial)
        throw NotGenericHeights("same_secondary_cone: heights are not generic");
    return s1.cell_point_sets() == s2.cell_point_sets();
}

namespace {

struct ComplexFace {
    std::vector<int> ids;     // configuration indices on the face
    HPolyhedron hull;
};

} // namespace

Subdivision pull(const Subdivision& sub, const std::vector<VecQ>& p_pts) {
    if (p_pts.empty()) throw std::invalid_argument("pull: empty polytope");
    const int d = sub.d;

    LatticePolytope pp = LatticePolytope::from_vertices(d, p_pts);
    const std::vector<VecQ>& pverts = pp.vertices();

    // locate the face of the complex holding P in its relative interior
    std::vector<std::vector<int>> faces = sub.all_faces();
    int host = -1;
    HPolyhedron host_hull;
    for (size_t f = 0; f < faces.size(); ++f) {
        std::vector<VecQ> pts;
        for (int i : faces[f]) pts.push_back(sub.points[i]);
        HPolyhedron fh = HPolyhedron::from_generators(d, {pts, {}, {}});
        bool inside = true;
        for (const VecQ& v : pverts)
            if (!fh.relint_contains(v)) { inside = false; break; }
        if (inside) { host = int(f); host_hull = fh; break; }
    }
    if (host < 0) throw NotInRelativeInterior("pull: polytope is not in the relative interior of a face");

    Subdivision out;
    out.d = d;
    out.coherent = sub.coherent;
    out.points = sub.points;
    std::vector<int> pids;   // indices of P's vertices in the new configuration
    for (const VecQ& v : pverts) {
        int id = -1;
        for (size_t i = 0; i < out.points.size(); ++i)
            if (out.points[i] == v) { id = int(i); break; }
        if (id < 0) {
            id = int(out.points.size());
            out.points.push_back(v);
        }
        pids.push_back(id);
    }

    const auto& host_ids = faces[host];
    for (const auto& cell : sub.cells) {
        bool affected = std::includes(cell.begin(), cell.end(), host_ids.begin(), host_ids.end());
        if (!affected) {
            out.cells.push_back(cell);
            continue;
        }
        std::vector<VecQ> qpts;
        for (int i : cell) qpts.push_back(sub.points[i]);
        LatticePolytope q = LatticePolytope::from_vertices(d, qpts);
        const FaceLattice& qfl = q.face_lattice();
        const int qdim = q.dim();

        const FaceLattice& pfl = pp.face_lattice();
        for (const PFace& f : pfl.faces) {
            if (f.dim < 0) continue;
            std::vector<VecQ> fpts;
            for (int g : f.gens) fpts.push_back(pverts[g]);
            HPolyhedron nc_f = normal_cone_of(pverts, fpts);

            for (size_t qi = 0; qi < qfl.faces.size(); ++qi) {
                const PFace& fq = qfl.faces[qi];
                if (int(qi) == qfl.top) continue;     // F' is a proper (possibly empty) face
                std::vector<VecQ> fqpts;
                for (int g : fq.gens) fqpts.push_back(q.vertices()[g]);

                if (fq.dim >= 0) {
                    // F ⊄ F'
                    HPolyhedron fq_hull = HPolyhedron::from_generators(d, {fqpts, {}, {}});
                    bool contained = true;
                    for (const VecQ& v : fpts)
                        if (!fq_hull.closure_contains(v)) { contained = false; break; }
                    if (contained) continue;
                    HPolyhedron nc_q = normal_cone_of(q.vertices(), fqpts);
                    if (!relint_intersects(nc_f, nc_q)) continue;
                }
                // candidate face conv(F ∪ F'); keep the full-dimensional ones
                std::vector<VecQ> cand = fpts;
                cand.insert(cand.end(), fqpts.begin(), fqpts.end());
                if (affine_dim(cand) != qdim) continue;
                std::vector<int> ids;
                for (int g : f.gens) ids.push_back(pids[g]);
                for (const VecQ& v : fqpts) {
                    for (int i : cell)
                        if (sub.points[i] == v) { ids.push_back(i); break; }
                }
                // collect every configuration point lying on the cell
                HPolyhedron cand_hull = HPolyhedron::from_generators(d, {cand, {}, {}});
                std::set<int> full(ids.begin(), ids.end());
                for (int i : cell)
                    if (cand_hull.closure_contains(sub.points[i])) full.insert(i);
                out.cells.emplace_back(full.begin(), full.end());
            }
        }
    }
    std::sort(out.cells.begin(), out.cells.end());
    out.cells.erase(std::unique(out.cells.begin(), out.cells.end()), out.cells.end());

    out.simplicial = true;
    for (const auto& cell : out.cells) {
        std::vector<VecQ> pts;
        for (int i : cell) pts.push_back(out.points[i]);
        if (affine_dim(pts) != int(cell.size()) - 1) { out.simplicial = false; break; }
    }
    const int oi = out.origin_index();
    out.central = oi >= 0;
    if (out.central)
        for (const auto& cell : out.cells)
            if (!std::binary_search(cell.begin(), cell.end(), oi)) { out.central = false; break; }
    return out;
}

HeightFunction generic_heights(const LatticePolytope& p, std::uint64_t seed, int max_attempts) {
    LatticePoints lp = lattice_points(p);
    const int d = p.ambient_dim();
    int origin = -1;
    for (size_t i = 0; i < lp.points.size(); ++i)
        if (lp.points[i].isZero()) origin = int(i);
    if (origin < 0) throw std::invalid_argument("generic_heights: origin not a lattice point");

    Int d2max = 0;
    for (const VecZ& q : lp.points) {
        Int n2 = 0;
        for (int i = 0; i < d; ++i) n2 += q[i] * q[i];
        if (n2 > d2max) d2max = n2;
    }

    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        const Int range = Int(8) << std::min(attempt, 24);
        const Int quad = range * d2max + 1;          // strict concavity beats the jitter
        const Int bias = (attempt + 1) * quad * d2max * 4;   // pulls the origin first
        std::vector<Rat> values(lp.points.size());
        for (size_t i = 0; i < lp.points.size(); ++i) {
            if (int(i) == origin) { values[i] = 0; continue; }
            Int n2 = 0;
            for (int j = 0; j < d; ++j) n2 += lp.points[i][j] * lp.points[i][j];
            Int jitter = Int(rng()) % range;
            values[i] = Rat(-(quad * n2 + bias + jitter));
        }
        HeightFunction h(lp.points, values);
        Subdivision sub = central_subdivision(h);
        if (!sub.simplicial || !sub.central) continue;
        std::vector<bool> used(lp.points.size(), false);
        for (const auto& cell : sub.cells)
            for (int i : cell) used[i] = true;
        bool all = true;
        for (size_t i = 0; i < used.size(); ++i)
            if (!used[i] && int(i) != origin) all = false;
        if (all) return h;
    }
    throw ExhaustedAttempts("generic_heights: no generic vector found within the attempt bound");
}

} // namespace syz
