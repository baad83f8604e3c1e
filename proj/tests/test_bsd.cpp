#include <doctest.h>

#include "syz/bsd.hpp"
#include "syz/errors.hpp"
#include "support.hpp"

#include <map>
#include <set>

using namespace syz;
using namespace syz::testing;

namespace {

LatticePolytope triangle() {
    return LatticePolytope::from_vertices(2, qpts({{0, 0}, {2, 0}, {0, 2}}));
}

LatticePolytope square2() {
    return LatticePolytope::from_vertices(2, qpts({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}));
}

LatticePolytope point_at(std::initializer_list<long> c) {
    return LatticePolytope::from_vertices(int(c.size()), {qv(c)});
}

// brute-force chain enumeration oracle over a poset given by its relation
long count_chains_brute(const Poset& p) {
    long total = 0;
    std::vector<int> stack;
    auto rec = [&](auto&& self, int last) -> void {
        for (int e = 0; e < p.n; ++e) {
            if (last >= 0 && !(p.leq(last, e) && last != e)) continue;
            if (last >= 0 && p.rank[e] < p.rank[last]) continue;
            ++total;
            self(self, e);
        }
    };
    // chains are ascending by rank, so "last < e in the order" suffices
    rec(rec, -1);
    return total;
}

} // namespace

TEST_CASE("combinatorial bsd with a one-point target is the chain poset") {
    FacePoset q = face_poset(triangle());
    Poset single;
    single.n = 1;
    single.rank = {0};
    single.rel = {{true}};
    std::vector<int> kappa(q.poset.n, 0);
    BsdPoset b = combinatorial_bsd(q.poset, single, kappa);
    CHECK(long(b.elements.size()) == count_chains_brute(q.poset));
    for (const BsdElement& e : b.elements) CHECK(!e.chain.empty());
}

TEST_CASE("combinatorial bsd with the identity correspondence, brute force count") {
    FacePoset q = face_poset(triangle());
    std::vector<int> identity(q.poset.n);
    for (int i = 0; i < q.poset.n; ++i) identity[i] = i;
    BsdPoset b = combinatorial_bsd(q.poset, q.poset, identity);

    // oracle: enumerate admissible (p, chain) pairs directly
    long count = 0;
    auto chains = q.poset.chains();
    for (const auto& ch : chains)
        for (int p = 0; p < q.poset.n; ++p)
            if (q.poset.leq(p, ch.front())) ++count;
    CHECK(long(b.elements.size()) == count);

    // the poset order is the product order
    for (size_t i = 0; i < b.elements.size(); ++i) {
        CHECK(b.leq(int(i), int(i)));
        for (size_t j = 0; j < b.elements.size(); ++j) {
            if (b.leq(int(i), int(j)) && b.leq(int(j), int(i))) CHECK(i == j);
        }
    }
}

TEST_CASE("combinatorial bsd rejects rank-increasing maps") {
    FacePoset q = face_poset(triangle());
    // map everything to the top face: order preserving but rank increasing
    int top = -1;
    for (int i = 0; i < q.poset.n; ++i)
        if (q.poset.rank[i] == 2) top = i;
    std::vector<int> bad(q.poset.n, top);
    CHECK_THROWS_AS(combinatorial_bsd(q.poset, q.poset, bad), NotOrderPreserving);
}

TEST_CASE("minkowski summands") {
    LatticePolytope oct = LatticePolytope::from_vertices(
        2, qpts({{2, 1}, {2, -1}, {-2, 1}, {-2, -1}, {1, 2}, {1, -2}, {-1, 2}, {-1, -2}}));
    CHECK(is_minkowski_summand(square2(), oct));
    CHECK(!is_minkowski_summand(triangle(), square2()));
    CHECK(is_minkowski_summand(point_at({0, 0}), square2()));
    CHECK(!is_minkowski_summand(square2(), point_at({0, 0})));
    // every polytope is a summand of itself
    CHECK(is_minkowski_summand(square2(), square2()));
}

TEST_CASE("classical barycentric subdivision of a triangle: 7 vertices, 6 cells") {
    GeometricBsd b = geometric_bsd(triangle(), point_at({1, 0}));
    Subdivision sub = b.subdivision();
    CHECK(sub.cells.size() == 6);
    CHECK(sub.simplicial);
    std::set<int> used;
    for (const auto& c : sub.cells) used.insert(c.begin(), c.end());
    CHECK(used.size() == 7);
}

TEST_CASE("classical barycentric subdivision of a square: 8 triangles") {
    GeometricBsd b = geometric_bsd(square2(), point_at({0, 0}));
    CHECK(b.subdivision().cells.size() == 8);
}

TEST_CASE("bsd f-vector equals chain counts for point summands") {
    for (const LatticePolytope& q : {triangle(), square2()}) {
        GeometricBsd b = geometric_bsd(q, point_at({0, 0}));
        // count elements by chain length
        std::map<int, long> by_dim_elements, by_dim_geometric;
        for (size_t e = 0; e < b.poset.elements.size(); ++e) {
            ++by_dim_elements[int(b.poset.elements[e].chain.size()) - 1];
            std::vector<VecQ> pts;
            for (int i : b.element_vertices[e]) pts.push_back(b.points[i]);
            ++by_dim_geometric[affine_dim(pts)];
        }
        CHECK(by_dim_elements == by_dim_geometric);
        FacePoset qfp = face_poset(q);
        std::map<int, long> chain_counts;
        for (const auto& ch : qfp.poset.chains()) ++chain_counts[int(ch.size()) - 1];
        CHECK(by_dim_elements == chain_counts);
    }
}

TEST_CASE("pentagon with a segment summand: the figure configuration") {
    // pentagon in the plane x+z = 1 with the edge of the bipyramid it
    // corresponds to; the published caption drops the apex z-coordinate
    LatticePolytope pent = LatticePolytope::from_vertices(
        3, qpts({{0, 0, 1}, {1, 2, 0}, {1, -2, 0}, {2, 2, -1}, {2, -2, -1}}));
    LatticePolytope edge = LatticePolytope::from_vertices(3, qpts({{0, 0, 1}, {2, 0, -1}}));
    REQUIRE(is_minkowski_summand(edge, pent));
    GeometricBsd b = geometric_bsd(pent, edge);

    // face-poset isomorphism: realized incidence matches the product order
    const size_t n = b.poset.elements.size();
    std::vector<HPolyhedron> hulls;
    for (size_t e = 0; e < n; ++e) {
        std::vector<VecQ> pts;
        for (int i : b.element_vertices[e]) pts.push_back(b.points[i]);
        hulls.push_back(HPolyhedron::from_generators(3, {pts, {}, {}}));
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            bool geo = true;
            for (int v : b.element_vertices[i])
                if (!hulls[j].closure_contains(b.points[v])) { geo = false; break; }
            CHECK(b.poset.leq(int(i), int(j)) == geo);
        }

    // each cell is an affine image of (face of P) x simplex
    FacePoset pfp = face_poset(edge);
    for (size_t e = 0; e < n; ++e) {
        const BsdElement& el = b.poset.elements[e];
        int r = int(el.chain.size()) - 1;
        int gdim = pfp.poset.rank[el.p];
        std::vector<VecQ> pts;
        for (int i : b.element_vertices[e]) pts.push_back(b.points[i]);
        CHECK(affine_dim(pts) == r + gdim);
    }
}

TEST_CASE("geometric bsd rejects oversized epsilon") {
    LatticePolytope seg = LatticePolytope::from_vertices(2, qpts({{0, 0}, {1, 0}}));
    CHECK_THROWS_AS(geometric_bsd(square2(), seg, Rat(10)), EpsTooLarge);
    // with a valid epsilon the segment summand subdivides the square
    GeometricBsd b = geometric_bsd(square2(), seg, Rat(1, 4));
    CHECK(!b.subdivision().cells.empty());
}

TEST_CASE("delta realization of a single simplex") {
    Triangulation t;
    t.d = 2;
    t.points = zpts({{0, 0}, {2, 0}, {0, 2}});
    t.maxcells = {{0, 1, 2}};
    DeltaRealization dr = delta_realization(t, Rat(1, 3));

    // poset comparison with combinatorial bsd (identity kappa)
    SimplexPoset sp = simplex_poset(t.maxcells);
    std::vector<int> id(sp.poset.n);
    for (int i = 0; i < sp.poset.n; ++i) id[i] = i;
    BsdPoset expect = combinatorial_bsd(sp.poset, sp.poset, id);
    CHECK(dr.poset.elements == expect.elements);

    // realized incidence reproduces the poset order
    const size_t n = dr.poset.elements.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            std::vector<VecQ> pts;
            for (int v : dr.element_vertices[j]) pts.push_back(dr.points[v]);
            HPolyhedron hull = HPolyhedron::from_generators(2, {pts, {}, {}});
            bool geo = true;
            for (int v : dr.element_vertices[i])
                if (!hull.closure_contains(dr.points[v])) { geo = false; break; }
            CHECK(dr.poset.leq(int(i), int(j)) == geo);
        }
}

TEST_CASE("delta realization: the map is constant on vertex stars") {
    Triangulation t;
    t.d = 2;
    t.points = zpts({{0, 0}, {2, 0}, {0, 2}, {-2, 0}});
    t.maxcells = {{0, 1, 2}, {0, 2, 3}};
    DeltaRealization dr = delta_realization(t, Rat(1, 4));
    for (int w = 0; w < int(t.points.size()); ++w) {
        int wsimplex = dr.tposet.index_of({w});
        REQUIRE(wsimplex >= 0);
        int wvertex = -1;
        for (size_t e = 0; e < dr.poset.elements.size(); ++e) {
            const BsdElement& el = dr.poset.elements[e];
            if (el.p == wsimplex && el.chain == std::vector<int>{wsimplex}) wvertex = int(e);
        }
        REQUIRE(wvertex >= 0);
        for (size_t e = 0; e < dr.poset.elements.size(); ++e)
            if (dr.poset.leq(wvertex, int(e))) CHECK(dr.label(int(e)) == wsimplex);
    }
}

TEST_CASE("delta realization: top copies grow with delta") {
    Triangulation t;
    t.d = 2;
    t.points = zpts({{0, 0}, {2, 0}, {0, 2}});
    t.maxcells = {{0, 1, 2}};
    auto top_copy_area = [&](const Rat& delta) {
        DeltaRealization dr = delta_realization(t, delta);
        int top = dr.tposet.index_of({0, 1, 2});
        for (size_t e = 0; e < dr.poset.elements.size(); ++e) {
            const BsdElement& el = dr.poset.elements[e];
            if (el.p == top && el.chain == std::vector<int>{top}) {
                std::vector<VecQ> pts;
                for (int v : dr.element_vertices[e]) pts.push_back(dr.points[v]);
                // doubled area of the triangle
                MatQ m(2, 2);
                m.col(0) = pts[1] - pts[0];
                m.col(1) = pts[2] - pts[0];
                Rat a = m.determinant();
                return a < 0 ? Rat(-a) : a;
            }
        }
        return Rat(-1);
    };
    Rat half = top_copy_area(Rat(1, 2));
    Rat threequarters = top_copy_area(Rat(3, 4));
    CHECK(half == Rat(4) * Rat(1, 4));           // (1/2)^2 of doubled area 4
    CHECK(threequarters == Rat(4) * Rat(9, 16));
    CHECK(threequarters > half);
}
