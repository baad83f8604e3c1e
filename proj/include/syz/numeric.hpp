#ifndef SYZ_NUMERIC_HPP
#define SYZ_NUMERIC_HPP

#include <Eigen/Dense>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <string>
#include <vector>

namespace syz {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using MatQ = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using VecQ = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using MatZ = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using VecZ = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

inline Int num(const Rat& q) { return numerator(q); }
inline Int den(const Rat& q) { return denominator(q); }

VecQ to_rational(const VecZ& v);
VecZ to_integer(const VecQ& v);        // throws if any entry is non-integral
bool is_integral(const VecQ& v);

/// Lexicographic comparison, used everywhere a deterministic order is needed.
bool lex_less(const VecQ& a, const VecQ& b);
bool lex_less(const VecZ& a, const VecZ& b);

struct VecQLess {
    bool operator()(const VecQ& a, const VecQ& b) const { return lex_less(a, b); }
};
struct VecZLess {
    bool operator()(const VecZ& a, const VecZ& b) const { return lex_less(a, b); }
};

/// Scales a rational vector by a positive rational so that the entries are
/// coprime integers.  Direction is preserved; the zero vector stays zero.
VecZ primitive(const VecQ& v);
VecZ primitive(const VecZ& v);

std::string to_string(const Rat& q);
std::string to_string(const VecQ& v);   // "x,y,..." with rationals as p/q
std::string to_string(const VecZ& v);

// --- dense rational linear algebra (small systems) ---

int rank_q(MatQ m);

/// Basis of the right kernel {x : m x = 0}, one basis vector per column,
/// scaled to primitive integer vectors.
std::vector<VecQ> kernel_q(const MatQ& m);

/// Solves m x = rhs; returns false when inconsistent.  Free variables are 0.
bool solve_q(const MatQ& m, const VecQ& rhs, VecQ& out);

/// Affine rank of a point set (dimension of affine hull; -1 for empty input).
int affine_dim(const std::vector<VecQ>& pts);

} // namespace syz

#endif
