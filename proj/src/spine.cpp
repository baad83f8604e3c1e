#include "syz/spine.hpp"
#include "syz/errors.hpp"
#include "syz/poset.hpp"

#include <algorithm>
#include <set>

namespace syz {

LegendreEval legendre_eval(const HeightFunction& lambda, const VecQ& n) {
    LegendreEval out;
    bool first = true;
    for (size_t i = 0; i < lambda.size(); ++i) {
        Rat v = to_rational(lambda.domain()[i]).dot(n) + lambda.values()[i];
        if (first || v > out.value) { out.value = v; first = false; }
    }
    for (size_t i = 0; i < lambda.size(); ++i) {
        Rat v = to_rational(lambda.domain()[i]).dot(n) + lambda.values()[i];
        if (v == out.value) out.argmax.push_back(lambda.domain()[i]);
    }
    return out;
}

namespace {

HPolyhedron label_cell(const HeightFunction& lambda, const std::vector<int>& label_ids) {
    const int d = lambda.dim();
    std::vector<Constraint> cons;
    const int m0 = label_ids.front();
    const VecQ p0 = to_rational(lambda.domain()[m0]);
    const Rat h0 = lambda.values()[m0];
    for (size_t k = 1; k < label_ids.size(); ++k) {
        int m = label_ids[k];
        cons.push_back(Constraint::equal(to_rational(lambda.domain()[m]) - p0,
                                         h0 - lambda.values()[m]));
    }
    std::set<int> in_label(label_ids.begin(), label_ids.end());
    for (size_t i = 0; i < lambda.size(); ++i) {
        if (in_label.count(int(i))) continue;
        cons.push_back(Constraint::le(to_rational(lambda.domain()[i]) - p0,
                                      h0 - lambda.values()[i]));
    }
    return HPolyhedron(d, std::move(cons));
}

} // namespace

const SpineCell* Spine::cell_by_label(const std::vector<VecZ>& label) const {
    for (const SpineCell& c : cells)
        if (c.label == label) return &c;
    return nullptr;
}

std::vector<std::pair<VecQ, VecQ>> Spine::corner_segments() const {
    std::vector<std::pair<VecQ, VecQ>> out;
    for (const SpineCell& c : cells) {
        if (c.dim != 1) continue;
        const Generators& g = c.hrep.generators();
        if (g.vertices.size() == 2 && g.rays.empty())
            out.emplace_back(g.vertices[0], g.vertices[1]);
    }
    return out;
}

std::vector<std::pair<VecQ, VecQ>> Spine::corner_rays() const {
    std::vector<std::pair<VecQ, VecQ>> out;
    for (const SpineCell& c : cells) {
        if (c.dim != 1) continue;
        const Generators& g = c.hrep.generators();
        if (g.vertices.size() == 1 && g.rays.size() == 1)
            out.emplace_back(g.vertices[0], g.rays[0]);
    }
    return out;
}

Spine build_spine(const HeightFunction& lambda) {
    Spine spine;
    spine.lambda = lambda;
    spine.central = central_subdivision(lambda);
    if (!spine.central.simplicial || !spine.central.central)
        throw NotGenericHeights("build_spine: heights do not induce a central triangulation");
    spine.dual_body = height_dual(lambda.dim(), lambda.domain(), lambda.values());

    SimplexPoset sp = simplex_poset(spine.central.cells);
    for (const auto& label_ids : sp.simplices) {
        SpineCell cell;
        for (int i : label_ids) cell.label.push_back(to_integer(spine.central.points[i]));
        cell.hrep = label_cell(lambda, label_ids);
        cell.dim = cell.hrep.dim();
        ConeGenerators rec = cell.hrep.recession();
        cell.bounded = rec.rays.empty() && rec.lineality.empty();
        spine.cells.push_back(std::move(cell));
    }
    return spine;
}

bool verify_qcell_minkowski(const Spine& spine, const SpineCell& cell) {
    const int d = spine.lambda.dim();
    // F_σ^dual: the face of the height dual where the σ-constraints are tight
    std::vector<VecZ> sigma;
    for (const VecZ& p : cell.label)
        if (!p.isZero()) sigma.push_back(p);
    std::vector<Constraint> cons;
    for (const auto& [a, b] : spine.dual_body.facets())
        cons.push_back(Constraint::le(to_rational(a), b));
    const Rat h0 = spine.lambda.value(VecZ::Zero(d));
    for (const VecZ& v : sigma)
        cons.push_back(Constraint::equal(to_rational(v), h0 - spine.lambda.value(v)));
    HPolyhedron face(d, std::move(cons));

    // NC(carrier of the whole label); the carrier is Δ itself when the label
    // contains the interior origin, so those cones collapse to {0}
    std::vector<VecQ> hull_pts;
    for (const VecZ& p : spine.lambda.domain()) hull_pts.push_back(to_rational(p));
    std::vector<VecQ> face_pts;
    for (const VecZ& v : cell.label) face_pts.push_back(to_rational(v));
    HPolyhedron nc = normal_cone_of(hull_pts, face_pts);

    HPolyhedron sum = minkowski_sum(face, nc);
    return sum.set_equals(cell.hrep.closure());
}

HPolyhedron q_ij_polyhedron(const HeightFunction& lambda, const std::vector<VecZ>& i_set,
                            const std::vector<VecZ>& j_set, const Rat& eps) {
    if (i_set.empty()) throw std::invalid_argument("q_ij_polyhedron: I must be nonempty");
    const int d = lambda.dim();
    std::set<VecZ, VecZLess> in_i(i_set.begin(), i_set.end()), in_j(j_set.begin(), j_set.end());
    for (const VecZ& p : i_set)
        if (in_j.count(p)) throw std::invalid_argument("q_ij_polyhedron: I and J overlap");
    const VecQ p0 = to_rational(i_set.front());
    const Rat h0 = lambda.value(i_set.front());
    std::vector<Constraint> cons;
    for (size_t k = 1; k < i_set.size(); ++k)
        cons.push_back(Constraint::equal(to_rational(i_set[k]) - p0, h0 - lambda.value(i_set[k])));
    for (const VecZ& m : lambda.domain()) {
        if (in_i.count(m) || in_j.count(m)) continue;
        cons.push_back(Constraint::lt(to_rational(m) - p0, h0 - lambda.value(m) - eps));
    }
    return HPolyhedron(d, std::move(cons));
}

std::vector<VecZ> w_perp(const HeightFunction& lambda, const VecZ& w) {
    std::vector<VecZ> out;
    for (const VecZ& m : lambda.domain()) {
        Int dot = 0;
        for (Eigen::Index i = 0; i < m.size(); ++i) dot += m[i] * w[i];
        if (dot == 1) out.push_back(m);
    }
    return out;
}

TruncatedPolytope truncate(const HeightFunction& lambda, const VecZ& w) {
    TruncatedPolytope out;
    out.removed = w_perp(lambda, w);
    std::set<VecZ, VecZLess> removed(out.removed.begin(), out.removed.end());
    std::vector<VecQ> keep;
    for (const VecZ& m : lambda.domain())
        if (!removed.count(m)) keep.push_back(to_rational(m));
    out.hull = LatticePolytope::from_vertices(lambda.dim(), keep);
    return out;
}

bool relint_subset(const HPolyhedron& a, const HPolyhedron& b) {
    if (a.closure_empty()) return true;
    if (!a.subset_of(b.closure())) return false;
    const Generators& g = a.generators();
    for (const Constraint& c : b.constraints()) {
        if (!c.strict || c.eq) continue;
        bool tight = true;
        for (const VecQ& v : g.vertices)
            if (c.a.dot(v) != c.b) { tight = false; break; }
        if (tight)
            for (const VecQ& r : g.rays)
                if (c.a.dot(r) != 0) { tight = false; break; }
        if (tight)
            for (const VecQ& l : g.lineality)
                if (c.a.dot(l) != 0) { tight = false; break; }
        if (tight) return false;   // a strict row collapses on all of a
    }
    return true;
}

bool combinatorial_equivalence(const HeightFunction& lambda, const std::vector<VecZ>& i_set,
                               const std::vector<VecZ>& j_set, const Rat& eps1, const Rat& eps2) {
    HPolyhedron q1 = q_ij_polyhedron(lambda, i_set, j_set, eps1);
    HPolyhedron q2 = q_ij_polyhedron(lambda, i_set, j_set, eps2);
    if (q1.is_empty() || q2.is_empty()) return false;
    auto active_family = [](const HPolyhedron& q) {
        std::set<std::vector<int>> fam;
        for (const PFace& f : q.face_lattice().faces) fam.insert(f.active);
        return fam;
    };
    return active_family(q1) == active_family(q2);
}

} // namespace syz
