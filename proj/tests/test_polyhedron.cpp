#include <doctest.h>

#include "syz/errors.hpp"
#include "syz/polyhedron.hpp"
#include "support.hpp"

#include <random>

using namespace syz;
using namespace syz::testing;

namespace {

HPolyhedron cube(int d) {
    std::vector<Constraint> cons;
    for (int i = 0; i < d; ++i) {
        VecQ e = VecQ::Zero(d);
        e[i] = 1;
        cons.push_back(Constraint::le(e, Rat(1)));
        cons.push_back(Constraint::le(-e, Rat(1)));
    }
    return HPolyhedron(d, cons);
}

} // namespace

TEST_CASE("dd: cube vertices and facets") {
    for (int d = 1; d <= 4; ++d) {
        HPolyhedron c = cube(d);
        CHECK(c.generators().vertices.size() == size_t(1) << d);
        CHECK(c.generators().rays.empty());
        CHECK(c.bounded());
        CHECK(c.dim() == d);
        int nfacets = 0;
        for (const Constraint& f : c.canonical_hrep())
            if (!f.eq) ++nfacets;
        CHECK(nfacets == 2 * d);
    }
}

TEST_CASE("dd: unbounded quadrant strip") {
    // unit square + cone((1,0)) as H-polyhedron {0 ≤ y ≤ 1, x ≥ 0}
    std::vector<Constraint> cons;
    cons.push_back(Constraint::le(qv({0, 1}), Rat(1)));
    cons.push_back(Constraint::le(qv({0, -1}), Rat(0)));
    cons.push_back(Constraint::le(qv({-1, 0}), Rat(0)));
    HPolyhedron p(2, cons);
    CHECK(p.generators().vertices.size() == 2);
    REQUIRE(p.generators().rays.size() == 1);
    CHECK(p.generators().rays[0] == qv({1, 0}));
    CHECK(!p.bounded());
}

TEST_CASE("dd: equalities produce lower-dimensional sets") {
    std::vector<Constraint> cons;
    cons.push_back(Constraint::equal(qv({1, 1, 0}), Rat(2)));
    cons.push_back(Constraint::le(qv({1, 0, 0}), Rat(3)));
    cons.push_back(Constraint::le(qv({-1, 0, 0}), Rat(3)));
    cons.push_back(Constraint::le(qv({0, 0, 1}), Rat(0)));
    cons.push_back(Constraint::le(qv({0, 0, -1}), Rat(0)));
    HPolyhedron p(3, cons);
    CHECK(p.dim() == 1);
    CHECK(p.generators().vertices.size() == 2);
    CHECK(p.generators().lineality.empty());
}

TEST_CASE("dd: empty polyhedron") {
    std::vector<Constraint> cons;
    cons.push_back(Constraint::le(qv({1}), Rat(0)));
    cons.push_back(Constraint::le(qv({-1}), Rat(-1)));
    HPolyhedron p(1, cons);
    CHECK(p.closure_empty());
    CHECK(p.is_empty());
    CHECK(p.dim() == -1);
}

TEST_CASE("strict emptiness") {
    // {x ≤ 0, x ≥ 0, x < 0} is empty though its closure is a point
    std::vector<Constraint> cons;
    cons.push_back(Constraint::le(qv({1}), Rat(0)));
    cons.push_back(Constraint::le(qv({-1}), Rat(0)));
    HPolyhedron closed(1, cons);
    CHECK(!closed.is_empty());
    cons.push_back(Constraint::lt(qv({1}), Rat(0)));
    HPolyhedron open(1, cons);
    CHECK(!open.closure_empty());
    CHECK(open.is_empty());
}

TEST_CASE("roundtrip: H -> V -> H is stable (random bounded)") {
    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 20; ++trial) {
        int d = 2 + int(rng() % 2);
        // random points, take hull, then rebuild from the hull's facets
        std::vector<VecQ> pts;
        for (int i = 0; i < 8; ++i) {
            VecQ v(d);
            for (int j = 0; j < d; ++j) v[j] = Rat(int(rng() % 11) - 5);
            pts.push_back(v);
        }
        Generators g;
        g.vertices = pts;
        HPolyhedron hull = HPolyhedron::from_generators(d, g);
        HPolyhedron back(d, hull.canonical_hrep());
        CHECK(hull.set_equals(back));
        CHECK(back.generators().vertices == hull.generators().vertices);
    }
}

TEST_CASE("face lattice of the square") {
    HPolyhedron sq = cube(2);
    const FaceLattice& fl = sq.face_lattice();
    CHECK(fl.f_vector() == std::vector<int>{4, 4, 1});
    CHECK(fl.faces.size() == 10);   // with the empty face
    CHECK(fl.dim() == 2);
}

TEST_CASE("relint membership and intersection") {
    HPolyhedron sq = cube(2);
    CHECK(sq.relint_contains(qv({0, 0})));
    CHECK(!sq.relint_contains(qv({1, 0})));

    // edge {x=1} as its own polyhedron
    std::vector<Constraint> cons = sq.constraints();
    cons.push_back(Constraint::equal(qv({1, 0}), Rat(1)));
    HPolyhedron edge(2, cons);
    CHECK(edge.relint_contains(qv({1, 0})));
    CHECK(!edge.relint_contains(qv({1, 1})));

    CHECK(relint_intersects(sq, sq));
    CHECK(!relint_intersects(sq, edge));   // edge relint misses square relint
    CHECK(relint_intersects(edge, edge));
}

TEST_CASE("normal cones of a square") {
    auto pts = qpts({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
    HPolyhedron nc = normal_cone_of(pts, {qv({1, 1})});
    // cone spanned by (1,0),(0,1)
    CHECK(nc.closure_contains(qv({1, 0})));
    CHECK(nc.closure_contains(qv({0, 1})));
    CHECK(nc.closure_contains(qv({2, 3})));
    CHECK(!nc.closure_contains(qv({-1, 0})));
    auto rec = nc.recession();
    CHECK(rec.rays.size() == 2);
    CHECK(rec.lineality.empty());

    HPolyhedron whole = normal_cone_of(pts, pts);
    CHECK(whole.dim() == 0);   // {0}
    CHECK(whole.closure_contains(qv({0, 0})));
}

TEST_CASE("minkowski sum with a cone") {
    HPolyhedron sq = cube(2);
    Generators coneg;
    coneg.vertices.push_back(qv({0, 0}));
    coneg.rays.push_back(qv({1, 0}));
    HPolyhedron cone = HPolyhedron::from_generators(2, coneg);
    HPolyhedron sum = minkowski_sum(sq, cone);
    CHECK(sum.generators().vertices.size() == 2);
    REQUIRE(sum.generators().rays.size() == 1);
    CHECK(sum.generators().rays[0] == qv({1, 0}));
    // P + {0} = P
    Generators zg;
    zg.vertices.push_back(qv({0, 0}));
    HPolyhedron zero = HPolyhedron::from_generators(2, zg);
    CHECK(minkowski_sum(sq, zero).set_equals(sq));
}

TEST_CASE("hull membership property (random)") {
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 10; ++trial) {
        int d = 2 + int(rng() % 2);
        std::vector<VecQ> pts;
        for (int i = 0; i < 7; ++i) {
            VecQ v(d);
            for (int j = 0; j < d; ++j) v[j] = Rat(int(rng() % 9) - 4);
            pts.push_back(v);
        }
        Generators g;
        g.vertices = pts;
        HPolyhedron hull = HPolyhedron::from_generators(d, g);
        for (const VecQ& p : pts) CHECK(hull.closure_contains(p));
        // random convex combinations stay inside
        for (int k = 0; k < 20; ++k) {
            VecQ x = VecQ::Zero(d);
            Rat total = 0;
            for (const VecQ& p : pts) {
                Rat w = Rat(int(rng() % 5));
                x += w * p;
                total += w;
            }
            if (total == 0) continue;
            x /= total;
            CHECK(hull.closure_contains(x));
        }
    }
}
