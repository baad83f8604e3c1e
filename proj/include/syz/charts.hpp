#ifndef SYZ_CHARTS_HPP
#define SYZ_CHARTS_HPP

#include "syz/intlinalg.hpp"
#include "syz/subdivision.hpp"

#include <array>

namespace syz {

/// Chart lattice basis at a vertex of Γ.  For U(v) the columns span the
/// kernel lattice {n : <v,n> = 0}; for V(w) their classes form a basis of
/// Z^d / w.  Both are orientation-normalized so that every transition matrix
/// has determinant +1.
struct Chart {
    enum class Kind { U, V };
    Kind kind;
    VecZ point;
    MatZ basis;   // d × (d-1), columns
};

Chart chart_u(const VecZ& v);
Chart chart_v(const VecZ& w);   // throws NonPrimitive

/// Matrix of f_vw : Z^d_v → Z^d/w in the chart bases; requires <v,w> = 1
/// (NotAdjacent otherwise).  Always has determinant +1.
MatZ transition(const VecZ& v, const VecZ& w);

/// Composed monodromy along an alternating loop v_0, w_0, v_1, w_1, ...,
/// read right-to-left along the traversal, expressed in the U(v_0) basis.
MatZ monodromy(const std::vector<VecZ>& loop);

/// Closed form n ↦ n + <v_1,n>(w_1 - w_0) on Z^d_{v_0}, in the U(v_0) basis.
/// Requires all four pairings <v_i,w_j> = 1 (PairingViolation).
MatZ primary_formula(const VecZ& v0, const VecZ& w0, const VecZ& v1, const VecZ& w1);

struct LocalMonodromy {
    int k = 0, l = 0;
    VecZ base_v, base_w;
    std::vector<MatZ> generators;   // k·l primary loop matrices, (i,j) order
    Int index;                      // [saturation : span] of the flattened M - 1
};

/// Local monodromy at a discriminant vertex (σ̂, τ̂), from its simplex vertex
/// lists.  Base pair = lexicographically smallest vertices.  Verifies that
/// the generators commute and are unipotent with (M-1)^2 = 0.
LocalMonodromy local_monodromy(std::vector<VecZ> sigma_verts, std::vector<VecZ> tau_verts);

/// Primary loops (v0, w0, v1, w1) of the pair of triangulations: one loop per
/// fully paired (S-edge, T-edge), vertices in sorted order.
std::vector<std::array<VecZ, 4>> primary_loops(const Triangulation& s, const Triangulation& t);

/// For every Γ-edge: the transition of the mirror instance, written in the
/// dual chart bases, equals the transpose inverse of the original.
bool mirror_transition_check(const Triangulation& s, const Triangulation& t);

} // namespace syz

#endif
