#ifndef SYZ_INTLINALG_HPP
#define SYZ_INTLINALG_HPP

#include "syz/numeric.hpp"

namespace syz {

/// Smith normal form  U * M * V = S  with U, V unimodular and S diagonal,
/// diagonal entries nonnegative and each dividing the next.
struct SmithNF {
    MatZ U, S, V;
    std::vector<Int> divisors;   // nonzero diagonal entries, in order
    int rank() const { return int(divisors.size()); }
    /// Product of the nonzero elementary divisors (1 for the zero matrix);
    /// the index of the row/column lattice inside its saturation.
    Int index() const;
};

/// Row-style Hermite normal form  H = U * M  with U unimodular; H is in
/// echelon form with positive pivots and reduced entries above each pivot.
struct HermiteNF {
    MatZ H, U;
    int rank = 0;
};

SmithNF smith(const MatZ& m);
HermiteNF hermite(const MatZ& m);

/// Basis of {x : m x = 0} as matrix columns.  The basis spans the full
/// (saturated) kernel lattice.
MatZ integer_kernel(const MatZ& m);

Int det_z(const MatZ& m);

/// Columns: w followed by d-1 vectors completing it to a basis of Z^d.
/// Requires w primitive (throws NonPrimitive otherwise).
MatZ unimodular_completion(const VecZ& w);

MatQ to_rational(const MatZ& m);
MatZ to_integer(const MatQ& m);

} // namespace syz

#endif
