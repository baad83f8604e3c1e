#include "syz/bsd.hpp"
#include "syz/errors.hpp"

#include <algorithm>
#include <map>

namespace syz {

namespace {

// vertex ids of P maximizing the functional y
std::vector<int> argmax_face(const LatticePolytope& p, const VecQ& y) {
    Rat best;
    bool first = true;
    for (const VecQ& v : p.vertices()) {
        Rat s = y.dot(v);
        if (first || s > best) { best = s; first = false; }
    }
    std::vector<int> out;
    for (size_t i = 0; i < p.vertices().size(); ++i)
        if (y.dot(p.vertices()[i]) == best) out.push_back(int(i));
    return out;
}

VecQ barycenter(const std::vector<VecQ>& pts) {
    VecQ c = VecQ::Zero(pts[0].size());
    for (const VecQ& p : pts) c += p;
    return c / Rat(int(pts.size()));
}

std::vector<VecQ> face_vertices(const LatticePolytope& p, int face_id) {
    std::vector<VecQ> out;
    for (int g : p.face_lattice().faces[face_id].gens) out.push_back(p.vertices()[g]);
    return out;
}

} // namespace

bool is_minkowski_summand(const LatticePolytope& p, const LatticePolytope& q) {
    if (p.ambient_dim() != q.ambient_dim())
        throw std::invalid_argument("is_minkowski_summand: dimension mismatch");
    for (const VecQ& u : q.vertices()) {
        ConeGenerators nc = normal_cone_of(q.vertices(), {u}).recession();
        std::vector<int> meet;
        bool first = true;
        auto intersect_with = [&](const VecQ& y) {
            std::vector<int> am = argmax_face(p, y);
            if (first) { meet = am; first = false; return; }
            std::vector<int> next;
            std::set_intersection(meet.begin(), meet.end(), am.begin(), am.end(),
                                  std::back_inserter(next));
            meet = next;
        };
        for (const VecQ& r : nc.rays) intersect_with(r);
        for (const VecQ& l : nc.lineality) {
            intersect_with(l);
            intersect_with(VecQ(-l));
        }
        if (first) continue;          // NC_Q(u) = {0}: q is a point, any p passes via 0
        if (meet.empty()) return false;
    }
    return true;
}

std::vector<int> kappa_map(const LatticePolytope& q, const FacePoset& qfp,
                           const LatticePolytope& p, const FacePoset& pfp) {
    std::vector<int> kappa(qfp.poset.n, -1);
    for (int a = 0; a < qfp.poset.n; ++a) {
        std::vector<VecQ> fverts = face_vertices(q, qfp.face_ids[a]);
        HPolyhedron nc = normal_cone_of(q.vertices(), fverts);
        VecQ y = nc.relint_point();
        std::vector<int> gens = argmax_face(p, y);
        int fid = p.face_lattice().find_by_gens(gens);
        if (fid < 0) throw NotSummand("kappa_map: argmax set is not a face of the summand");
        for (int b = 0; b < pfp.poset.n; ++b)
            if (pfp.face_ids[b] == fid) kappa[a] = b;
        if (kappa[a] < 0) throw std::logic_error("kappa_map: face not in poset");
    }
    return kappa;
}

Subdivision GeometricBsd::subdivision() const {
    Subdivision sub;
    if (points.empty()) return sub;
    sub.d = int(points[0].size());
    sub.points = points;
    int topdim = -1;
    std::vector<int> dims(poset.elements.size());
    for (size_t e = 0; e < poset.elements.size(); ++e) {
        std::vector<VecQ> pts;
        for (int i : element_vertices[e]) pts.push_back(points[i]);
        dims[e] = affine_dim(pts);
        topdim = std::max(topdim, dims[e]);
    }
    for (size_t e = 0; e < poset.elements.size(); ++e)
        if (dims[e] == topdim) sub.cells.push_back(element_vertices[e]);
    std::sort(sub.cells.begin(), sub.cells.end());
    sub.coherent = true;
    sub.simplicial = true;
    for (const auto& cell : sub.cells)
        if (int(cell.size()) != topdim + 1) { sub.simplicial = false; break; }
    sub.central = false;
    return sub;
}

GeometricBsd geometric_bsd(const LatticePolytope& q, const LatticePolytope& p, Rat eps) {
    if (!is_minkowski_summand(p, q)) throw NotSummand("geometric_bsd: p is not a summand of q");
    FacePoset qfp = face_poset(q);
    FacePoset pfp = face_poset(p);
    std::vector<int> kappa = kappa_map(q, qfp, p, pfp);

    // barycenters of faces, and of their κ-images
    std::vector<VecQ> fhat(qfp.poset.n), khat(qfp.poset.n);
    std::vector<std::vector<VecQ>> kverts(qfp.poset.n);
    for (int a = 0; a < qfp.poset.n; ++a) {
        fhat[a] = barycenter(face_vertices(q, qfp.face_ids[a]));
        kverts[a] = face_vertices(p, pfp.face_ids[kappa[a]]);
        khat[a] = barycenter(kverts[a]);
    }

    bool default_eps = eps <= 0;
    if (default_eps) {
        // half the reciprocal of the largest facet lattice diameter
        Int diam = 1;
        for (const VecQ& u : q.vertices())
            for (const VecQ& v : q.vertices())
                for (Eigen::Index i = 0; i < u.size(); ++i) {
                    Rat g = u[i] - v[i];
                    Int a = num(g) / den(g);
                    if (a < 0) a = -a;
                    if (a > diam) diam = a;
                }
        eps = Rat(1, 2 * diam);
    }

    auto translate_ok = [&](const Rat& e) {
        for (int a = 0; a < qfp.poset.n; ++a) {
            std::vector<VecQ> fverts = face_vertices(q, qfp.face_ids[a]);
            HPolyhedron fh = HPolyhedron::from_generators(q.ambient_dim(), {fverts, {}, {}});
            for (const VecQ& g : kverts[a]) {
                VecQ t = fhat[a] + e * (g - khat[a]);
                if (!fh.relint_contains(t)) return false;
            }
        }
        return true;
    };
    if (default_eps) {
        int halvings = 0;
        while (!translate_ok(eps)) {
            eps /= 2;
            if (++halvings > 64) throw EpsTooLarge("geometric_bsd: no valid epsilon found");
        }
    } else if (!translate_ok(eps)) {
        throw EpsTooLarge("geometric_bsd: translate leaves the relative interior of its face");
    }

    GeometricBsd out;
    out.eps = eps;
    out.poset = combinatorial_bsd(qfp.poset, pfp.poset, kappa);

    std::map<VecQ, int, VecQLess> point_id;
    auto intern = [&](const VecQ& v) {
        auto it = point_id.find(v);
        if (it != point_id.end()) return it->second;
        int id = int(out.points.size());
        out.points.push_back(v);
        point_id.emplace(v, id);
        return id;
    };
    for (const BsdElement& el : out.poset.elements) {
        std::set<int> verts;
        for (int fi : el.chain) {
            for (const VecQ& g : face_vertices(p, pfp.face_ids[el.p])) {
                VecQ v = fhat[fi] + eps * (g - khat[fi]);
                verts.insert(intern(v));
            }
        }
        out.element_vertices.emplace_back(verts.begin(), verts.end());
    }
    return out;
}

DeltaRealization delta_realization(const Triangulation& t, const Rat& delta) {
    if (delta <= 0 || delta >= 1)
        throw std::invalid_argument("delta_realization: delta must be in (0,1)");
    DeltaRealization out;
    out.delta = delta;
    out.tposet = simplex_poset(t.maxcells);
    const Poset& tp = out.tposet.poset;
    std::vector<int> identity(tp.n);
    for (int i = 0; i < tp.n; ++i) identity[i] = i;
    out.poset = combinatorial_bsd(tp, tp, identity);

    // barycenters of the simplices
    std::vector<VecQ> that(tp.n);
    for (int i = 0; i < tp.n; ++i) {
        std::vector<VecQ> pts;
        for (int v : out.tposet.simplices[i]) pts.push_back(to_rational(t.points[v]));
        that[i] = barycenter(pts);
    }

    std::map<VecQ, int, VecQLess> point_id;
    auto intern = [&](const VecQ& v) {
        auto it = point_id.find(v);
        if (it != point_id.end()) return it->second;
        int id = int(out.points.size());
        out.points.push_back(v);
        point_id.emplace(v, id);
        return id;
    };
    for (const BsdElement& el : out.poset.elements) {
        std::set<int> verts;
        for (int ti : el.chain)
            for (int u : out.tposet.simplices[el.p]) {
                VecQ v = delta * to_rational(t.points[u]) + (1 - delta) * that[ti];
                verts.insert(intern(v));
            }
        out.element_vertices.emplace_back(verts.begin(), verts.end());
    }
    return out;
}

} // namespace syz
