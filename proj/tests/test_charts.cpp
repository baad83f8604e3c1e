#include <doctest.h>

#include "syz/charts.hpp"
#include "syz/errors.hpp"
#include "syz/polytope.hpp"
#include "support.hpp"

#include <random>

using namespace syz;
using namespace syz::testing;

namespace {

Triangulation boundary_of(const LatticePolytope& p, std::uint64_t seed) {
    return boundary_restriction(central_subdivision(generic_heights(p, seed)));
}

struct Corpus {
    Triangulation s, t;
};

Corpus cubic2d() {
    LatticePolytope delta = LatticePolytope::from_vertices(2, qpts({{-1, -1}, {-1, 2}, {2, -1}}));
    return {boundary_of(delta, 17), boundary_of(polar_dual(delta), 18)};
}

Corpus fig3d() {
    LatticePolytope delta = LatticePolytope::from_vertices(
        3, qpts({{0, 0, 1}, {2, 0, -1}, {-2, 0, -1}, {0, 2, -1}, {0, -2, -1}}));
    return {boundary_of(delta, 101), boundary_of(polar_dual(delta), 202)};
}

Int dot(const VecZ& a, const VecZ& b) {
    Int s = 0;
    for (Eigen::Index i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

} // namespace

TEST_CASE("chart U: kernel bases") {
    Chart c = chart_u(zv({0, 0, 1}));
    REQUIRE(c.basis.cols() == 2);
    for (int i = 0; i < 2; ++i) CHECK(dot(zv({0, 0, 1}), c.basis.col(i)) == 0);
    // saturated: e_1 and e_2 must be integer combinations of the basis
    MatQ b = to_rational(MatZ(c.basis));
    for (auto target : {zv({1, 0, 0}), zv({0, 1, 0})}) {
        VecQ x;
        REQUIRE(solve_q(b, to_rational(target), x));
        CHECK(MatQ(b * x) == to_rational(target));
        CHECK(is_integral(x));
    }

    Chart c2 = chart_u(zv({-1, 0}));
    REQUIRE(c2.basis.cols() == 1);
    CHECK(dot(zv({-1, 0}), c2.basis.col(0)) == 0);
    CHECK((c2.basis(1, 0) == 1 || c2.basis(1, 0) == -1));
}

TEST_CASE("chart V: unimodular completion with positive orientation") {
    Chart c = chart_v(zv({1, 1, 1}));
    MatZ full(3, 3);
    full.col(0) = zv({1, 1, 1});
    full.col(1) = c.basis.col(0);
    full.col(2) = c.basis.col(1);
    CHECK(det_z(full) == 1);
    CHECK_THROWS_AS(chart_v(zv({2, 4, 0})), NonPrimitive);
}

TEST_CASE("transition: 1x1 case and determinant one") {
    MatZ f = transition(zv({-1, 0}), zv({-1, 0}));
    REQUIRE(f.rows() == 1);
    CHECK(f(0, 0) == 1);

    CHECK_THROWS_AS(transition(zv({1, 0}), zv({0, 1})), NotAdjacent);

    // every adjacent pair of the 3d corpus has a det +1 transition
    Corpus c = fig3d();
    int count = 0;
    for (const VecZ& v : c.s.points)
        for (const VecZ& w : c.t.points) {
            if (dot(v, w) != 1) continue;
            MatZ f3 = transition(v, w);
            CHECK(det_z(f3) == 1);
            ++count;
        }
    CHECK(count > 0);
}

TEST_CASE("monodromy: degenerate loops are the identity") {
    VecZ v0 = zv({0, 0, 1}), w0 = zv({1, 1, 1});
    REQUIRE(dot(v0, w0) == 1);
    CHECK(monodromy({v0, w0}) == MatZ::Identity(2, 2));

    // loop with w_1 = w_0 through another vertex of S
    VecZ v1 = zv({1, 1, -1});
    REQUIRE(dot(v1, w0) == 1);
    CHECK(monodromy({v0, w0, v1, w0}) == MatZ::Identity(2, 2));

    CHECK_THROWS_AS(monodromy({v0}), InvalidLoop);
    CHECK_THROWS_AS(monodromy({v0, zv({0, 0, -1})}), InvalidLoop);
}

TEST_CASE("monodromy equals the closed formula on all corpus primary loops") {
    long checked = 0;
    for (const Corpus& c : {cubic2d(), fig3d()}) {
        for (const auto& [v0, w0, v1, w1] : primary_loops(c.s, c.t)) {
            // all four orientations of the loop
            std::vector<std::array<VecZ, 4>> variants = {
                {v0, w0, v1, w1}, {v1, w0, v0, w1}, {v0, w1, v1, w0}, {v1, w1, v0, w0}};
            for (const auto& [a0, b0, a1, b1] : variants) {
                MatZ composed = monodromy({a0, b0, a1, b1});
                MatZ closed = primary_formula(a0, b0, a1, b1);
                CHECK(composed == closed);
                ++checked;
            }
        }
    }
    CHECK(checked >= 96);   // the 3d instance alone carries 24 primary squares
}

TEST_CASE("primary formula: unipotence and trivial cases") {
    VecZ v0 = zv({0, 0, 1}), v1 = zv({1, 0, 0});
    VecZ w0 = zv({1, 1, 1}), w1 = zv({1, -1, 1});
    for (const VecZ& v : {v0, v1})
        for (const VecZ& w : {w0, w1}) REQUIRE(dot(v, w) == 1);
    MatZ m = primary_formula(v0, w0, v1, w1);
    MatZ n = m - MatZ::Identity(2, 2);
    CHECK(MatZ(n * n).isZero());
    CHECK(det_z(m) == 1);
    CHECK(primary_formula(v0, w0, v1, w0) == MatZ::Identity(2, 2));
    CHECK_THROWS_AS(primary_formula(v0, w0, v1, zv({0, 0, -1})), PairingViolation);
}

TEST_CASE("monodromy invariants under base change and reversal") {
    // conjugation by transitions: trace and divisors of M - 1 are shared
    // between the two U-based readings of the same primary square
    Corpus c = fig3d();
    auto loops = primary_loops(c.s, c.t);
    REQUIRE(!loops.empty());
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const auto& [v0, w0, v1, w1] = loops[rng() % loops.size()];
        MatZ m1 = monodromy({v0, w0, v1, w1});
        MatZ m2 = monodromy({v1, w1, v0, w0});   // same square from the other chart
        CHECK(m1.trace() == m2.trace());
        const int d1 = int(m1.rows());
        SmithNF s1 = smith(MatZ(m1 - MatZ::Identity(d1, d1)));
        SmithNF s2 = smith(MatZ(m2 - MatZ::Identity(d1, d1)));
        CHECK(s1.divisors == s2.divisors);

        // reversal inverts
        MatZ rev = monodromy({v0, w1, v1, w0});
        CHECK(MatZ(m1 * rev) == MatZ::Identity(d1, d1));
        // concatenation multiplies: square followed by its reverse
        CHECK(monodromy({v0, w0, v1, w1, v0, w1, v1, w0}) == MatZ::Identity(d1, d1));
    }
}

TEST_CASE("local monodromy: unimodular simplices give index one") {
    // primary square in d=3 with unimodular sigma and tau
    std::vector<VecZ> sigma = zpts({{0, 0, 1}, {1, 0, 0}});
    std::vector<VecZ> tau = zpts({{1, 1, 1}, {1, 0, 1}});
    CHECK(normalized_volume(sigma) == 1);
    CHECK(normalized_volume(tau) == 1);
    LocalMonodromy lm = local_monodromy(sigma, tau);
    CHECK(lm.k == 1);
    CHECK(lm.l == 1);
    CHECK(lm.generators.size() == 1);
    CHECK(lm.index == 1);
}

TEST_CASE("local monodromy: a volume-two edge doubles the index") {
    std::vector<VecZ> sigma = zpts({{1, 0, 0}, {1, 0, 2}});
    std::vector<VecZ> tau = zpts({{1, 0, 0}, {1, 1, 0}});
    CHECK(normalized_volume(sigma) == 2);
    CHECK(normalized_volume(tau) == 1);
    LocalMonodromy lm = local_monodromy(sigma, tau);
    CHECK(lm.index == 2);
    CHECK(lm.index == normalized_volume(sigma) * normalized_volume(tau));
}

TEST_CASE("local monodromy rejects degenerate input") {
    CHECK_THROWS_AS(local_monodromy(zpts({{1, 0, 0}}), zpts({{1, 0, 0}, {1, 1, 0}})),
                    NotDiscriminantVertex);
    CHECK_THROWS_AS(local_monodromy(zpts({{1, 0, 0}, {0, 1, 0}}), zpts({{1, 0, 0}, {1, 1, 0}})),
                    NotDiscriminantVertex);   // pairing fails
}

TEST_CASE("mirror transitions are transpose inverses") {
    Corpus c2 = cubic2d();
    CHECK(mirror_transition_check(c2.s, c2.t));
    Corpus c3 = fig3d();
    CHECK(mirror_transition_check(c3.s, c3.t));

    // applying transpose-inverse twice returns the original matrix
    MatZ f = transition(zv({0, 0, 1}), zv({1, 1, 1}));
    MatZ fti = to_integer(MatQ(to_rational(MatZ(f.transpose())).inverse()));
    MatZ back = to_integer(MatQ(to_rational(MatZ(fti.transpose())).inverse()));
    CHECK(back == f);
}

TEST_CASE("local monodromy: the index follows the tensor exponent law") {
    // volume-2 edge paired with a 2-simplex: the generator logs span the
    // tensor product of the edge lattices, so the saturation index is
    // vol(sigma)^l * vol(tau)^k = 4, not vol(sigma)*vol(tau) = 2
    std::vector<VecZ> sigma = zpts({{1, 0, 0, 0}, {1, 0, 0, 2}});
    std::vector<VecZ> tau = zpts({{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 0, 1, 0}});
    CHECK(normalized_volume(sigma) == 2);
    CHECK(normalized_volume(tau) == 1);
    LocalMonodromy lm = local_monodromy(sigma, tau);
    CHECK(lm.k == 1);
    CHECK(lm.l == 2);
    CHECK(lm.index == 4);
}
