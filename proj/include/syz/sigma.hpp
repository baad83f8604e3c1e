#ifndef SYZ_SIGMA_HPP
#define SYZ_SIGMA_HPP

#include "syz/homology.hpp"
#include "syz/poset.hpp"
#include "syz/subdivision.hpp"

#include <map>
#include <optional>

namespace syz {

/// Cell of Σ: a pair of chains in the face posets of S and T, dimension
/// r + t.  All vertex pairings between the chain tops equal 1.
struct SigmaCell {
    std::vector<int> s_chain;   // simplex ids, ascending by face order
    std::vector<int> t_chain;
    int dim() const { return int(s_chain.size() + t_chain.size()) - 2; }
    bool operator<(const SigmaCell& o) const {
        return std::tie(s_chain, t_chain) < std::tie(o.s_chain, o.t_chain);
    }
    bool operator==(const SigmaCell& o) const {
        return s_chain == o.s_chain && t_chain == o.t_chain;
    }
};

/// Bipartite graph on vert(S) ⊔ vert(T) with edges where <v,w> = 1.
struct GammaGraph {
    std::vector<VecZ> s_nodes, t_nodes;
    std::vector<std::pair<int, int>> edges;
    int components() const;
    bool connected() const { return components() == 1; }
    /// E - V + #components
    int cycle_rank() const;
};

GammaGraph gamma_graph(const Triangulation& s, const Triangulation& t);

/// The polytopal model of the SYZ base: the restriction of
/// bsd(S) × bsd(T) to the pairing-one locus of Δ × Δ∨.
class SigmaComplex {
public:
    SigmaComplex(Triangulation s, Triangulation t);

    const Triangulation& S() const { return s_; }
    const Triangulation& T() const { return t_; }
    const SimplexPoset& s_poset() const { return sp_; }
    const SimplexPoset& t_poset() const { return tp_; }

    /// fully paired simplex pairs (σ, τ) — the vertices of Σ
    const std::vector<std::pair<int, int>>& vertices() const { return paired_; }
    int vertex_index(int s_simplex, int t_simplex) const;
    /// (σ̂, τ̂) in Q^{2d}
    VecQ vertex_coordinates(int pair_id) const;

    const std::vector<SigmaCell>& cells() const { return cells_; }
    int cell_index(const SigmaCell& c) const;
    int dim() const;

    std::vector<SigmaCell> proper_faces(const SigmaCell& c) const;
    /// codimension-one faces
    std::vector<SigmaCell> cell_facets(const SigmaCell& c) const;
    /// vertex pairs (σ_i, τ_j) of the cell
    std::vector<int> cell_vertices(const SigmaCell& c) const;

    // --- discriminant ---
    bool is_discriminant_vertex(int pair_id) const;
    /// (k, l) = (dim σ, dim τ); throws NotDiscriminantVertex
    std::pair<int, int> vertex_type(int pair_id) const;
    /// full subcomplex induced by the discriminant vertices
    const std::vector<int>& discriminant_cells() const { return dcells_; }
    std::vector<int> discriminant_vertex_ids() const;

    // --- covers U_v, V_w ---
    bool cell_in_U(const SigmaCell& c, int s_point) const;   // σ_0 = {v}
    bool cell_in_V(const SigmaCell& c, int t_point) const;
    std::vector<int> cover_U(int s_point) const;
    std::vector<int> cover_V(int t_point) const;
    /// open star of the vertex (v, w): cells whose closure contains it
    std::vector<int> star_of_vertex(int s_point, int t_point) const;

    // --- verification ---
    bool pure() const;
    bool pseudomanifold() const;
    bool complex_connected() const;
    /// the nerve condition: U_v ∩ V_w ≠ ∅ iff vw ∈ Γ, every nonempty
    /// intersection equals the vertex star, and the cells missed by every
    /// cover are exactly the discriminant cells
    bool nerve_check() const;

    /// order complex (staircase refinement) for homology
    std::vector<std::vector<int>> order_complex() const;
    HomologyResult homology() const;

private:
    void enumerate_cells();
    Triangulation s_, t_;
    SimplexPoset sp_, tp_;
    std::vector<std::pair<int, int>> paired_;
    std::map<std::pair<int, int>, int> pair_index_;
    std::vector<SigmaCell> cells_;
    std::map<std::vector<int>, int> cell_index_;   // encoded [|s|, s..., t...]
    std::vector<int> dcells_;
};

/// Builds the mirror complex (roles of S and T swapped) and verifies that
/// swapping chains is a cell-complex isomorphism carrying D to D and
/// exchanging the covers; returns the mirror.
SigmaComplex mirror_model(const SigmaComplex& sigma);

} // namespace syz

#endif
