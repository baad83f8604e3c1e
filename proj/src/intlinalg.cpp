#include "syz/intlinalg.hpp"
#include "syz/errors.hpp"

namespace syz {

MatQ to_rational(const MatZ& m) {
    MatQ out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Rat(m(i, j));
    return out;
}

MatZ to_integer(const MatQ& m) {
    MatZ out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (den(m(i, j)) != 1) throw std::invalid_argument("to_integer: matrix entry not integral");
            out(i, j) = num(m(i, j));
        }
    return out;
}

Int SmithNF::index() const {
    Int p = 1;
    for (const Int& d : divisors) p *= d;
    return p;
}

namespace {

Int iabs(const Int& x) { return x < 0 ? Int(-x) : x; }

void exgcd(const Int& a, const Int& b, Int& g, Int& x, Int& y) {
    if (b == 0) { g = iabs(a); x = (a < 0 ? -1 : 1); y = 0; return; }
    Int x1, y1;
    exgcd(b, Int(a % b), g, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
}

} // namespace

SmithNF smith(const MatZ& m) {
    const int rows = int(m.rows()), cols = int(m.cols());
    SmithNF r;
    r.S = m;
    r.U = MatZ::Identity(rows, rows);
    r.V = MatZ::Identity(cols, cols);
    MatZ& S = r.S;

    int t = 0;
    const int nmin = std::min(rows, cols);
    while (t < nmin) {
        // pivot: nonzero entry of minimal absolute value in S[t:, t:]
        int pi = -1, pj = -1;
        Int best = 0;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j)
                if (S(i, j) != 0 && (pi < 0 || iabs(S(i, j)) < best)) {
                    pi = i; pj = j; best = iabs(S(i, j));
                }
        if (pi < 0) break;
        S.row(t).swap(S.row(pi)); r.U.row(t).swap(r.U.row(pi));
        S.col(t).swap(S.col(pj)); r.V.col(t).swap(r.V.col(pj));

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < rows; ++i) {
                if (S(i, t) == 0) continue;
                Int q = S(i, t) / S(t, t);
                if (q != 0) { S.row(i) -= q * S.row(t); r.U.row(i) -= q * r.U.row(t); }
                if (S(i, t) != 0) {   // remainder smaller than pivot: swap up and restart
                    S.row(t).swap(S.row(i)); r.U.row(t).swap(r.U.row(i));
                    clean = false;
                }
            }
            if (!clean) continue;
            for (int j = t + 1; j < cols; ++j) {
                if (S(t, j) == 0) continue;
                Int q = S(t, j) / S(t, t);
                if (q != 0) { S.col(j) -= q * S.col(t); r.V.col(j) -= q * r.V.col(t); }
                if (S(t, j) != 0) {
                    S.col(t).swap(S.col(j)); r.V.col(t).swap(r.V.col(j));
                    clean = false;
                }
            }
        }
        if (S(t, t) < 0) { S.row(t) = -S.row(t); r.U.row(t) = -r.U.row(t); }
        ++t;
    }

    // enforce the divisibility chain d_i | d_{i+1}
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i + 1 < t; ++i) {
            const Int a = S(i, i), b = S(i + 1, i + 1);
            if (b % a == 0) continue;
            changed = true;
            Int g, x, y;
            exgcd(a, b, g, x, y);
            const Int as = a / g, bs = b / g;
            // 2x2 transform sending diag(a,b) to diag(g, a*b/g)
            MatZ P(2, 2), Q(2, 2);
            P << x, y, -bs, as;
            Q << 1, -y * bs, 1, x * as;
            MatZ rows2(2, S.cols());
            rows2.row(0) = S.row(i); rows2.row(1) = S.row(i + 1);
            rows2 = P * rows2;
            S.row(i) = rows2.row(0); S.row(i + 1) = rows2.row(1);
            MatZ urows(2, r.U.cols());
            urows.row(0) = r.U.row(i); urows.row(1) = r.U.row(i + 1);
            urows = P * urows;
            r.U.row(i) = urows.row(0); r.U.row(i + 1) = urows.row(1);
            MatZ cols2(S.rows(), 2);
            cols2.col(0) = S.col(i); cols2.col(1) = S.col(i + 1);
            cols2 = cols2 * Q;
            S.col(i) = cols2.col(0); S.col(i + 1) = cols2.col(1);
            MatZ vcols(r.V.rows(), 2);
            vcols.col(0) = r.V.col(i); vcols.col(1) = r.V.col(i + 1);
            vcols = vcols * Q;
            r.V.col(i) = vcols.col(0); r.V.col(i + 1) = vcols.col(1);
        }
    }

    for (int i = 0; i < t; ++i) r.divisors.push_back(S(i, i));
    return r;
}

HermiteNF hermite(const MatZ& m) {
    const int rows = int(m.rows()), cols = int(m.cols());
    HermiteNF r;
    r.H = m;
    r.U = MatZ::Identity(rows, rows);
    MatZ& H = r.H;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        // gcd-out the column below `row`
        int p = -1;
        for (int i = row; i < rows; ++i)
            if (H(i, col) != 0) { p = i; break; }
        if (p < 0) continue;
        H.row(row).swap(H.row(p)); r.U.row(row).swap(r.U.row(p));
        for (int i = row + 1; i < rows; ++i) {
            while (H(i, col) != 0) {
                Int q = H(i, col) / H(row, col);
                if (q != 0) { H.row(i) -= q * H.row(row); r.U.row(i) -= q * r.U.row(row); }
                if (H(i, col) != 0) { H.row(row).swap(H.row(i)); r.U.row(row).swap(r.U.row(i)); }
            }
        }
        if (H(row, col) < 0) { H.row(row) = -H.row(row); r.U.row(row) = -r.U.row(row); }
        for (int i = 0; i < row; ++i) {
            // floor-reduce entries above the pivot into [0, pivot)
            Int q = H(i, col) / H(row, col);
            if (H(i, col) - q * H(row, col) < 0) q -= 1;
            if (q != 0) { H.row(i) -= q * H.row(row); r.U.row(i) -= q * r.U.row(row); }
        }
        ++row;
    }
    r.rank = row;
    return r;
}

MatZ integer_kernel(const MatZ& m) {
    SmithNF s = smith(m);
    const int n = int(m.cols());
    const int k = n - s.rank();
    MatZ out(n, k);
    for (int j = 0; j < k; ++j) out.col(j) = s.V.col(s.rank() + j);
    return out;
}

Int det_z(const MatZ& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det_z: square matrix required");
    Rat d = to_rational(m).determinant();
    return num(d);
}

MatZ unimodular_completion(const VecZ& w) {
    const int d = int(w.size());
    Int g = 0;
    for (int i = 0; i < d; ++i) g = gcd(g, w[i]);
    if (g != 1) throw NonPrimitive("unimodular_completion: vector is not primitive");
    MatZ col(d, 1);
    col.col(0) = w;
    SmithNF s = smith(col);      // U * w = e_1 (up to sign handled by SNF positivity)
    MatQ uinv = to_rational(s.U).inverse();
    MatZ out = to_integer(uinv);
    out.col(0) = w;              // first column of U^{-1} is w when S = e_1
    return out;
}

} // namespace syz
