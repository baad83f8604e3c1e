#ifndef SYZ_POSET_HPP
#define SYZ_POSET_HPP

#include "syz/numeric.hpp"
#include "syz/polytope.hpp"
#include "syz/subdivision.hpp"

#include <vector>

namespace syz {

/// Finite graded poset with an explicit order relation.
struct Poset {
    int n = 0;
    std::vector<int> rank;
    std::vector<std::vector<bool>> rel;   // rel[a][b] = a ⪯ b

    bool leq(int a, int b) const { return rel[a][b]; }
    /// All nonempty chains, each listed ascending.
    std::vector<std::vector<int>> chains() const;
};

/// Poset of nonempty faces of a polytope, ranked by dimension.  `face_ids`
/// maps poset elements to indices in p.face_lattice().faces.
struct FacePoset {
    Poset poset;
    std::vector<int> face_ids;
};
FacePoset face_poset(const LatticePolytope& p);

/// Poset of the simplices of a simplicial complex (given by maximal cells),
/// ordered by inclusion.  `simplices` lists each element's vertex set.
struct SimplexPoset {
    Poset poset;
    std::vector<std::vector<int>> simplices;   // sorted vertex-index sets
    int index_of(const std::vector<int>& s) const;
};
SimplexPoset simplex_poset(const std::vector<std::vector<int>>& maxcells);

/// Element (p, q_0 ≺ … ≺ q_r) of bsd(Q, κ); p lives in the target poset.
struct BsdElement {
    int p;
    std::vector<int> chain;
    bool operator<(const BsdElement& o) const {
        return std::tie(p, chain) < std::tie(o.p, o.chain);
    }
    bool operator==(const BsdElement& o) const { return p == o.p && chain == o.chain; }
};

/// The generalized barycentric subdivision poset: subposet of bsd(Q) × P cut
/// out by p ⪯ κ(q_0), with the product order.
struct BsdPoset {
    std::vector<BsdElement> elements;   // sorted
    Poset q, p;
    std::vector<int> kappa;

    bool leq(int i, int j) const;
    int dim(int i, const std::vector<int>& qdim, const std::vector<int>& pdim) const;
};

/// Throws NotOrderPreserving when κ is not order preserving or increases rank.
BsdPoset combinatorial_bsd(const Poset& q, const Poset& p, const std::vector<int>& kappa);

} // namespace syz

#endif
