#include "syz/numeric.hpp"

#include <sstream>

namespace syz {

VecQ to_rational(const VecZ& v) {
    VecQ out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
    return out;
}

bool is_integral(const VecQ& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (den(v[i]) != 1) return false;
    return true;
}

VecZ to_integer(const VecQ& v) {
    VecZ out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (den(v[i]) != 1) throw std::invalid_argument("to_integer: entry " + to_string(v[i]) + " is not integral");
        out[i] = num(v[i]);
    }
    return out;
}

bool lex_less(const VecQ& a, const VecQ& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

bool lex_less(const VecZ& a, const VecZ& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

VecZ primitive(const VecQ& v) {
    Int lcm_den = 1;
    for (Eigen::Index i = 0; i < v.size(); ++i) lcm_den = lcm(lcm_den, den(v[i]));
    VecZ w(v.size());
    Int g = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        w[i] = num(v[i]) * (lcm_den / den(v[i]));
        g = gcd(g, w[i]);
    }
    if (g > 1)
        for (Eigen::Index i = 0; i < v.size(); ++i) w[i] /= g;
    return w;
}

VecZ primitive(const VecZ& v) {
    Int g = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd(g, v[i]);
    if (g <= 1) return v;
    VecZ w(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) w[i] = v[i] / g;
    return w;
}

std::string to_string(const Rat& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

std::string to_string(const VecQ& v) {
    std::string s;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += to_string(v[i]);
    }
    return s;
}

std::string to_string(const VecZ& v) {
    std::string s;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += v[i].str();
    }
    return s;
}

namespace {

// Row echelon over Q, returns pivot columns.  m is modified in place.
std::vector<int> echelon(MatQ& m) {
    std::vector<int> pivots;
    int rows = int(m.rows()), cols = int(m.cols());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (m(i, c) != 0) { p = i; break; }
        if (p < 0) continue;
        m.row(p).swap(m.row(r));
        Rat inv = Rat(1) / m(r, c);
        m.row(r) *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i != r && m(i, c) != 0) m.row(i) -= m(i, c) * m.row(r);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

int rank_q(MatQ m) {
    return int(echelon(m).size());
}

std::vector<VecQ> kernel_q(const MatQ& m) {
    MatQ e = m;
    std::vector<int> pivots = echelon(e);
    int cols = int(m.cols());
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<VecQ> basis;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        VecQ v = VecQ::Zero(cols);
        v[c] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -e(int(r), c);
        basis.push_back(to_rational(primitive(v)));
    }
    return basis;
}

bool solve_q(const MatQ& m, const VecQ& rhs, VecQ& out) {
    MatQ aug(m.rows(), m.cols() + 1);
    aug.leftCols(m.cols()) = m;
    aug.col(m.cols()) = rhs;
    std::vector<int> pivots = echelon(aug);
    for (int c : pivots)
        if (c == int(m.cols())) return false;
    out = VecQ::Zero(m.cols());
    for (size_t r = 0; r < pivots.size(); ++r) out[pivots[r]] = aug(int(r), int(m.cols()));
    return true;
}

int affine_dim(const std::vector<VecQ>& pts) {
    if (pts.empty()) return -1;
    if (pts.size() == 1) return 0;
    MatQ m(pts.size() - 1, pts[0].size());
    for (size_t i = 1; i < pts.size(); ++i) m.row(int(i - 1)) = (pts[i] - pts[0]).transpose();
    return rank_q(m);
}

} // namespace syz
