#include <doctest.h>

#include "syz/errors.hpp"
#include "syz/polytope.hpp"
#include "support.hpp"

#include <random>
#include <set>

using namespace syz;
using namespace syz::testing;

namespace {

LatticePolytope square() {
    return LatticePolytope::from_vertices(2, qpts({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}));
}

LatticePolytope cubic_triangle() {
    return LatticePolytope::from_vertices(2, qpts({{-1, -1}, {-1, 2}, {2, -1}}));
}

LatticePolytope fig_delta() {
    return LatticePolytope::from_vertices(
        3, qpts({{0, 0, 1}, {2, 0, -1}, {-2, 0, -1}, {0, 2, -1}, {0, -2, -1}}));
}

LatticePolytope fig_delta_dual() {
    return LatticePolytope::from_vertices(
        3, qpts({{0, 0, -1}, {1, 1, 1}, {1, -1, 1}, {-1, 1, 1}, {-1, -1, 1}}));
}

std::set<VecQ, VecQLess> vset(const std::vector<VecQ>& v) { return {v.begin(), v.end()}; }

// oracle: 2d facet enumeration over vertex pairs; returns polar vertices a/b
std::vector<VecQ> polar_vertices_2d_oracle(const std::vector<VecQ>& verts) {
    std::vector<VecQ> out;
    const int n = int(verts.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            VecQ dir = verts[j] - verts[i];
            VecQ normal(2);
            normal << dir[1], -dir[0];
            for (int sign = 0; sign < 2; ++sign) {
                VecQ a = sign ? VecQ(-normal) : normal;
                Rat b = a.dot(verts[i]);
                bool valid = true, tight_third = false;
                for (const VecQ& v : verts) {
                    Rat s = a.dot(v);
                    if (s > b) { valid = false; break; }
                }
                if (valid && b > 0) out.push_back(a / b);
                (void)tight_third;
            }
        }
    std::sort(out.begin(), out.end(), VecQLess{});
    out.erase(std::unique(out.begin(), out.end(), [](const VecQ& a, const VecQ& b) { return a == b; }),
              out.end());
    return out;
}

} // namespace

TEST_CASE("polar dual: square <-> diamond") {
    LatticePolytope sq = square();
    LatticePolytope diamond = polar_dual(sq);
    CHECK(vset(diamond.vertices()) == vset(qpts({{1, 0}, {-1, 0}, {0, 1}, {0, -1}})));
    CHECK(polar_dual(diamond) == sq);
}

TEST_CASE("polar dual: the 3d bipyramid pair") {
    LatticePolytope delta = fig_delta();
    LatticePolytope dual = polar_dual(delta);
    CHECK(vset(dual.vertices()) == vset(fig_delta_dual().vertices()));
    CHECK(polar_dual(dual) == delta);
}

TEST_CASE("polar dual: cubic triangle, against the 2d facet oracle") {
    LatticePolytope tri = cubic_triangle();
    auto oracle = polar_vertices_2d_oracle(tri.vertices());
    LatticePolytope dual = polar_dual(tri);
    CHECK(vset(dual.vertices()) == vset(oracle));
    CHECK(vset(dual.vertices()) == vset(qpts({{-1, 0}, {0, -1}, {1, 1}})));
}

TEST_CASE("polar dual requires interior origin") {
    LatticePolytope shifted = LatticePolytope::from_vertices(2, qpts({{0, 0}, {2, 0}, {0, 2}}));
    CHECK_THROWS_AS(polar_dual(shifted), OriginNotInterior);
}

TEST_CASE("is_reflexive") {
    CHECK(is_reflexive(square()));
    CHECK(is_reflexive(cubic_triangle()));
    CHECK(is_reflexive(fig_delta()));
    CHECK(is_reflexive(fig_delta_dual()));
    LatticePolytope tall = LatticePolytope::from_vertices(2, qpts({{1, 0}, {-1, 0}, {0, 2}, {0, -2}}));
    // oracle: its polar has a fractional vertex
    auto pv = polar_vertices_2d_oracle(tall.vertices());
    bool fractional = false;
    for (const VecQ& v : pv)
        if (!is_integral(v)) fractional = true;
    CHECK(fractional);
    CHECK(!is_reflexive(tall));
}

TEST_CASE("lattice points: segment") {
    LatticePolytope seg = LatticePolytope::from_vertices(2, qpts({{-1, 0}, {2, 0}}));
    LatticePoints lp = lattice_points(seg);
    CHECK(lp.points == zpts({{-1, 0}, {0, 0}, {1, 0}, {2, 0}}));
    CHECK(lp.interior_count() == 0);   // no interior: segment is lower-dimensional
}

TEST_CASE("lattice points: cubic triangle has 10 points, one interior") {
    LatticePolytope tri = cubic_triangle();
    LatticePoints lp = lattice_points(tri);

    // oracle: independent half-plane scan (facets of the triangle hardcoded)
    int count = 0, inside = 0;
    for (int x = -3; x <= 3; ++x)
        for (int y = -3; y <= 3; ++y) {
            bool in = (-x <= 1) && (-y <= 1) && (x + y <= 1);
            bool strict = (-x < 1) && (-y < 1) && (x + y < 1);
            count += in;
            inside += strict;
        }
    CHECK(count == 10);
    CHECK(inside == 1);

    CHECK(lp.points.size() == 10);
    CHECK(lp.interior_count() == 1);
    for (size_t i = 0; i < lp.points.size(); ++i)
        if (lp.interior[i]) CHECK(lp.points[i] == zv({0, 0}));
}

TEST_CASE("lattice points: 3d bipyramid") {
    LatticePoints lp = lattice_points(fig_delta());
    // oracle: |x|+|y|+z ≤ 1, z ≥ -1 scan
    int count = 0, inside = 0;
    for (int x = -2; x <= 2; ++x)
        for (int y = -2; y <= 2; ++y)
            for (int z = -1; z <= 1; ++z) {
                bool in = std::abs(x) + std::abs(y) + z <= 1 && z >= -1;
                bool strict = std::abs(x) + std::abs(y) + z < 1 && z > -1;
                count += in;
                inside += strict;
            }
    CHECK(count == 19);
    CHECK(inside == 1);
    CHECK(lp.points.size() == 19);
    CHECK(lp.interior_count() == 1);

    LatticePoints dlp = lattice_points(fig_delta_dual());
    CHECK(dlp.points.size() == 11);
    CHECK(dlp.interior_count() == 1);
    CHECK(dlp.boundary().size() == 10);
}

TEST_CASE("face lattice: triangle and cubes") {
    LatticePolytope tri = cubic_triangle();
    const FaceLattice& fl = tri.face_lattice();
    CHECK(fl.f_vector() == std::vector<int>{3, 3, 1});
    CHECK(fl.faces.size() == 8);   // with empty face

    for (int d = 2; d <= 3; ++d) {
        std::vector<VecQ> corners;
        for (int mask = 0; mask < (1 << d); ++mask) {
            VecQ v(d);
            for (int i = 0; i < d; ++i) v[i] = Rat((mask >> i & 1) ? 1 : -1);
            corners.push_back(v);
        }
        LatticePolytope cb = LatticePolytope::from_vertices(d, corners);
        size_t total = cb.face_lattice().faces.size();
        size_t expected = 1;  // empty face
        for (int k = 0; k < d; ++k) expected *= 3;
        CHECK(total == expected + 1);
    }
}

TEST_CASE("face lattice of the 3d bipyramid, against a facet-subset oracle") {
    LatticePolytope delta = fig_delta();

    // oracle: faces arise as vertex sets cut out by subsets of the hardcoded
    // facet list (normals paired to the dual's vertices)
    auto verts = delta.vertices();
    auto normals = qpts({{0, 0, -1}, {1, 1, 1}, {1, -1, 1}, {-1, 1, 1}, {-1, -1, 1}});
    std::set<std::vector<int>> facesets;
    for (int mask = 0; mask < (1 << 5); ++mask) {
        std::vector<int> tight;
        for (size_t v = 0; v < verts.size(); ++v) {
            bool all = true;
            for (int i = 0; i < 5; ++i)
                if ((mask >> i & 1) && normals[i].dot(verts[v]) != 1) all = false;
            if (all) tight.push_back(int(v));
        }
        facesets.insert(tight);
    }
    std::map<int, int> by_size;
    for (const auto& fs : facesets) ++by_size[int(fs.size())];
    // vertex sets of size 1, 2, 3/4 correspond to dims 0, 1, 2 here
    CHECK(by_size[1] == 5);

    const FaceLattice& fl = delta.face_lattice();
    CHECK(fl.f_vector() == std::vector<int>{5, 8, 5, 1});
    CHECK(int(facesets.size()) == 5 + 8 + 5 + 1 + 1);   // proper faces + top + empty
    CHECK(fl.faces.size() == facesets.size());
}

TEST_CASE("dual_face: square vertex to diamond edge") {
    LatticePolytope sq = square();
    LatticePolytope dm = polar_dual(sq);
    const FaceLattice& fl = sq.face_lattice();
    int vid = -1;
    for (size_t i = 0; i < fl.faces.size(); ++i) {
        if (fl.faces[i].dim != 0) continue;
        if (sq.vertices()[fl.faces[i].gens[0]] == qv({1, 1})) vid = int(i);
    }
    REQUIRE(vid >= 0);
    int did = dual_face(sq, vid, dm);
    const PFace& df = dm.face_lattice().faces[did];
    CHECK(df.dim == 1);
    std::vector<VecQ> dfv;
    for (int g : df.gens) dfv.push_back(dm.vertices()[g]);
    CHECK(vset(dfv) == vset(qpts({{1, 0}, {0, 1}})));
}

TEST_CASE("dual_face: apex of the bipyramid, and the involution") {
    LatticePolytope delta = fig_delta();
    LatticePolytope dual = polar_dual(delta);
    const FaceLattice& fl = delta.face_lattice();
    int apex = -1;
    for (size_t i = 0; i < fl.faces.size(); ++i)
        if (fl.faces[i].dim == 0 && delta.vertices()[fl.faces[i].gens[0]] == qv({0, 0, 1}))
            apex = int(i);
    REQUIRE(apex >= 0);
    int did = dual_face(delta, apex, dual);
    const PFace& df = dual.face_lattice().faces[did];
    CHECK(df.dim == 2);
    std::vector<VecQ> dfv;
    for (int g : df.gens) dfv.push_back(dual.vertices()[g]);
    CHECK(vset(dfv) == vset(qpts({{1, 1, 1}, {1, -1, 1}, {-1, 1, 1}, {-1, -1, 1}})));

    // involution with dimension sum d-1 on every proper face
    for (size_t i = 0; i < fl.faces.size(); ++i) {
        const PFace& f = fl.faces[i];
        if (f.dim < 0 || int(i) == fl.top) continue;
        int j = dual_face(delta, int(i), dual);
        CHECK(fl.faces[i].dim + dual.face_lattice().faces[j].dim == 2);
        int back = dual_face(dual, j, delta);
        CHECK(back == int(i));
        // order reversing: check against every other proper face
        for (size_t k = 0; k < fl.faces.size(); ++k) {
            const PFace& g = fl.faces[k];
            if (g.dim < 0 || int(k) == fl.top) continue;
            if (fl.leq(int(i), int(k))) {
                int jk = dual_face(delta, int(k), dual);
                CHECK(dual.face_lattice().leq(jk, j));
            }
        }
    }
}

TEST_CASE("normal cones") {
    LatticePolytope sq = square();
    const FaceLattice& fl = sq.face_lattice();
    HPolyhedron whole = normal_cone(sq, fl.top);
    CHECK(whole.dim() == 0);

    int vid = -1;
    for (size_t i = 0; i < fl.faces.size(); ++i)
        if (fl.faces[i].dim == 0 && sq.vertices()[fl.faces[i].gens[0]] == qv({1, 1})) vid = int(i);
    HPolyhedron nc = normal_cone(sq, vid);
    auto rec = nc.recession();
    REQUIRE(rec.rays.size() == 2);
    CHECK(vset(rec.rays) == vset(qpts({{1, 0}, {0, 1}})));

    // bipyramid: cone at vertex (2,0,-1) is spanned by its three facet normals
    LatticePolytope delta = fig_delta();
    const FaceLattice& dfl = delta.face_lattice();
    int wid = -1;
    for (size_t i = 0; i < dfl.faces.size(); ++i)
        if (dfl.faces[i].dim == 0 && delta.vertices()[dfl.faces[i].gens[0]] == qv({2, 0, -1})) wid = int(i);
    HPolyhedron nc3 = normal_cone(delta, wid);
    auto rec3 = nc3.recession();
    CHECK(nc3.dim() == 3);
    CHECK(vset(rec3.rays) == vset(qpts({{0, 0, -1}, {1, 1, 1}, {1, -1, 1}})));
}

TEST_CASE("normal cones partition dual space") {
    LatticePolytope delta = fig_delta();
    const FaceLattice& fl = delta.face_lattice();
    std::vector<HPolyhedron> cones;
    std::vector<int> dims;
    for (size_t i = 0; i < fl.faces.size(); ++i) {
        if (fl.faces[i].dim < 0) continue;
        cones.push_back(normal_cone(delta, int(i)));
        dims.push_back(fl.faces[i].dim);
        CHECK(cones.back().dim() == 3 - fl.faces[i].dim);
    }
    std::mt19937_64 rng(31337);
    for (int t = 0; t < 50; ++t) {
        VecQ y(3);
        for (int i = 0; i < 3; ++i) y[i] = Rat(int(rng() % 41) - 20, 1 + int(rng() % 5));
        int hits = 0;
        for (const auto& c : cones) hits += c.relint_contains(y);
        CHECK(hits == 1);
    }
}

TEST_CASE("minkowski sum examples") {
    LatticePolytope unit = LatticePolytope::from_vertices(2, qpts({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
    Generators coneg;
    coneg.vertices.push_back(qv({0, 0}));
    coneg.rays.push_back(qv({1, 0}));
    HPolyhedron cone = HPolyhedron::from_generators(2, coneg);
    HPolyhedron sum = minkowski_sum(unit.body(), cone);
    std::vector<Constraint> strip;
    strip.push_back(Constraint::le(qv({0, 1}), Rat(1)));
    strip.push_back(Constraint::le(qv({0, -1}), Rat(0)));
    strip.push_back(Constraint::le(qv({-1, 0}), Rat(0)));
    CHECK(sum.set_equals(HPolyhedron(2, strip)));
    // vertices(P+C) ⊆ vertices(P), recession = C
    for (const VecQ& v : sum.generators().vertices) {
        bool among = false;
        for (const VecQ& u : unit.vertices()) among |= (u == v);
        CHECK(among);
    }
}

TEST_CASE("normalized volume") {
    CHECK(normalized_volume(zpts({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 1);
    CHECK(normalized_volume(zpts({{0, 0}, {2, 0}})) == 2);
    CHECK(normalized_volume(zpts({{0, 0}, {1, 0}, {0, 2}})) == 2);
    CHECK_THROWS_AS(normalized_volume(zpts({{0, 0}, {1, 1}, {2, 2}})), Degenerate);

    // oracle: half-open parallelepiped lattice point count
    auto parallelepiped_count = [](const std::vector<VecZ>& simplex) {
        const int d = int(simplex[0].size());
        const int k = int(simplex.size()) - 1;
        MatQ edges(d, k);
        for (int i = 0; i < k; ++i) edges.col(i) = to_rational(VecZ(simplex[i + 1] - simplex[0]));
        long lo[4], hi[4];
        for (int i = 0; i < d; ++i) {
            Rat mn = 0, mx = 0, sum = 0;
            for (int j = 0; j < k; ++j) {
                if (edges(i, j) < 0) mn += edges(i, j);
                else mx += edges(i, j);
            }
            (void)sum;
            lo[i] = long(num(mn).convert_to<long>()) - 1;
            hi[i] = long(num(mx).convert_to<long>()) + 1;
        }
        int count = 0;
        std::vector<long> cur(d);
        for (int i = 0; i < d; ++i) cur[i] = lo[i];
        while (true) {
            VecQ x(d);
            for (int i = 0; i < d; ++i) x[i] = Rat(cur[i]);
            VecQ a;
            if (solve_q(edges, x, a)) {
                if (MatQ(edges * a) == x) {   // inside the span
                    bool ok = true;
                    for (int j = 0; j < k; ++j)
                        if (a[j] < 0 || a[j] >= 1) ok = false;
                    count += ok;
                }
            }
            int i = d - 1;
            while (i >= 0) {
                if (++cur[i] <= hi[i]) break;
                cur[i] = lo[i];
                --i;
            }
            if (i < 0) break;
        }
        return count;
    };

    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 25; ++trial) {
        int d = 2 + int(rng() % 2);
        int k = 1 + int(rng() % d);
        std::vector<VecZ> pts;
        for (int i = 0; i <= k; ++i) {
            VecZ v(d);
            for (int j = 0; j < d; ++j) v[j] = int(rng() % 7) - 3;
            pts.push_back(v);
        }
        try {
            Int vol = normalized_volume(pts);
            CHECK(vol == parallelepiped_count(pts));
        } catch (const Degenerate&) {
            // affinely dependent draw; skip
        }
    }
}

TEST_CASE("height dual: constant heights reduce to the polar") {
    LatticePolytope diamond = LatticePolytope::from_vertices(2, qpts({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}));
    LatticePoints lp = lattice_points(diamond);
    std::vector<Rat> values;
    for (const VecZ& p : lp.points) values.push_back(p.isZero() ? Rat(1) : Rat(0));
    LatticePolytope hd = height_dual(2, lp.points, values);
    CHECK(hd == square());
}

TEST_CASE("height dual: the running d=2 heights") {
    std::vector<VecZ> domain = zpts({{0, 0}, {-1, -1}, {-1, 0}, {-1, 2}, {2, -1}});
    std::vector<Rat> values = {Rat(2), Rat(0), Rat(1), Rat(1), Rat(1)};
    LatticePolytope hd = height_dual(2, domain, values);
    std::vector<VecQ> expect = qpts({{-1, -1}, {-1, 0}, {1, 1}});
    VecQ frac(2);
    frac << Rat(-1, 3), Rat(-5, 3);
    expect.push_back(frac);
    CHECK(vset(hd.vertices()) == vset(expect));
    // facet list matches the four statement inequalities
    CHECK(hd.facets().size() == 4);
}

TEST_CASE("height dual: degenerate heights throw") {
    std::vector<VecZ> domain = zpts({{0, 0}, {1, 0}, {-1, 0}});
    std::vector<Rat> values = {Rat(0), Rat(0), Rat(0)};
    CHECK_THROWS_AS(height_dual(2, domain, values), EmptyOrLowerDim);
}
