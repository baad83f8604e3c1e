#ifndef SYZ_HOMOLOGY_HPP
#define SYZ_HOMOLOGY_HPP

#include "syz/intlinalg.hpp"

#include <vector>

namespace syz {

struct HomologyResult {
    std::vector<long> betti;                  // b_0 .. b_top
    std::vector<std::vector<Int>> torsion;    // torsion coefficients of H_k
    bool torsion_free() const;
};

/// Integral simplicial homology from the full list of simplices (every face
/// present, vertices as sorted index sets).  Boundary ranks and elementary
/// divisors come from Smith normal form; a sparse unit-pivot reduction runs
/// first so only a small core ever goes dense.
HomologyResult simplicial_homology(const std::vector<std::vector<int>>& simplices);

/// rank and elementary divisors of a sparse integer matrix given as rows
struct RankDivisors {
    long rank = 0;
    std::vector<Int> divisors;   // nontrivial (> 1) divisors only
};
RankDivisors sparse_rank_divisors(int ncols, std::vector<std::vector<std::pair<int, Int>>> rows);

} // namespace syz

#endif
