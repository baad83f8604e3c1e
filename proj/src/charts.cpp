#include "syz/charts.hpp"
#include "syz/errors.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace syz {

namespace {

Int pairing(const VecZ& v, const VecZ& w) {
    Int dot = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i) dot += v[i] * w[i];
    return dot;
}

bool primitive_vec(const VecZ& v) {
    Int g = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd(g, v[i]);
    return g == 1;
}

// integral solution of <v, x> = 1 for primitive v
VecZ pairing_one_witness(const VecZ& v) {
    MatZ row(1, v.size());
    row.row(0) = v.transpose();
    SmithNF s = smith(row);       // U (1x1 ±1), S = (1, 0, ...), V unimodular
    // v * V = U^{-1} * S, so <v, V e_1> = ±1
    VecZ w = s.V.col(0);
    if (pairing(v, w) == -1) w = -w;
    return w;
}

MatQ solve_columns(const MatZ& basis, const MatQ& rhs) {
    MatQ b = to_rational(basis);
    MatQ out(b.cols(), rhs.cols());
    for (Eigen::Index c = 0; c < rhs.cols(); ++c) {
        VecQ x;
        if (!solve_q(b, VecQ(rhs.col(c)), x))
            throw std::logic_error("solve_columns: inconsistent system");
        if (MatQ(b * x) != rhs.col(c)) throw std::logic_error("solve_columns: no exact solution");
        out.col(c) = x;
    }
    return out;
}

} // namespace

Chart chart_u(const VecZ& v) {
    const int d = int(v.size());
    MatZ row(1, d);
    row.row(0) = v.transpose();
    MatZ basis = integer_kernel(row);   // d x (d-1), saturated
    {
        // certify saturation: all elementary divisors of the basis are 1
        SmithNF s = smith(basis);
        if (s.rank() != d - 1 || s.index() != 1)
            throw std::logic_error("chart_u: kernel basis not saturated");
    }
    if (primitive_vec(v)) {
        VecZ w = pairing_one_witness(v);
        MatZ m(d, d);
        m.col(0) = w;
        m.rightCols(d - 1) = basis;
        if (det_z(m) < 0) basis.col(d - 2) = -basis.col(d - 2);
    }
    return {Chart::Kind::U, v, basis};
}

Chart chart_v(const VecZ& w) {
    const int d = int(w.size());
    if (!primitive_vec(w)) throw NonPrimitive("chart_v: vector is not primitive");
    MatZ full = unimodular_completion(w);
    if (det_z(full) < 0) full.col(d - 1) = -full.col(d - 1);
    MatZ basis = full.rightCols(d - 1);
    return {Chart::Kind::V, w, basis};
}

MatZ transition(const VecZ& v, const VecZ& w) {
    if (pairing(v, w) != 1) throw NotAdjacent("transition: <v,w> != 1");
    const int d = int(v.size());
    Chart cu = chart_u(v);
    Chart cv = chart_v(w);
    MatZ full(d, d);
    full.col(0) = w;
    full.rightCols(d - 1) = cv.basis;
    MatQ coords = solve_columns(full, to_rational(cu.basis));
    MatZ f = to_integer(MatQ(coords.bottomRows(d - 1)));
    if (det_z(f) != 1) throw std::logic_error("transition: determinant is not +1");
    return f;
}

MatZ monodromy(const std::vector<VecZ>& loop) {
    if (loop.size() < 2 || loop.size() % 2 != 0)
        throw InvalidLoop("monodromy: loop must alternate v,w,... with even length");
    const int d = int(loop[0].size());
    const size_t k = loop.size() / 2;
    MatZ m = MatZ::Identity(d - 1, d - 1);
    for (size_t i = 0; i < k; ++i) {
        const VecZ& v = loop[2 * i];
        const VecZ& w = loop[2 * i + 1];
        const VecZ& vnext = loop[(2 * i + 2) % loop.size()];
        if (pairing(v, w) != 1 || pairing(vnext, w) != 1)
            throw InvalidLoop("monodromy: consecutive pair is not an edge of the graph");
        MatZ fin = transition(v, w);
        MatZ fout = transition(vnext, w);
        MatZ finv = to_integer(MatQ(to_rational(fout).inverse()));
        m = MatZ(finv * MatZ(fin * m));
    }
    if (det_z(m) != 1) throw std::logic_error("monodromy: determinant is not 1");
    return m;
}

MatZ primary_formula(const VecZ& v0, const VecZ& w0, const VecZ& v1, const VecZ& w1) {
    for (const VecZ* v : {&v0, &v1})
        for (const VecZ* w : {&w0, &w1})
            if (pairing(*v, *w) != 1)
                throw PairingViolation("primary_formula: <v_i,w_j> != 1");
    const int d = int(v0.size());
    Chart cu = chart_u(v0);
    MatQ images(d, d - 1);
    for (int c = 0; c < d - 1; ++c) {
        VecZ b = cu.basis.col(c);
        VecZ img = b + pairing(v1, b) * VecZ(w1 - w0);
        images.col(c) = to_rational(img);
    }
    return to_integer(solve_columns(cu.basis, images));
}

LocalMonodromy local_monodromy(std::vector<VecZ> sigma_verts, std::vector<VecZ> tau_verts) {
    std::sort(sigma_verts.begin(), sigma_verts.end(), VecZLess{});
    std::sort(tau_verts.begin(), tau_verts.end(), VecZLess{});
    LocalMonodromy out;
    out.k = int(sigma_verts.size()) - 1;
    out.l = int(tau_verts.size()) - 1;
    if (out.k < 1 || out.l < 1)
        throw NotDiscriminantVertex("local_monodromy: both simplices must be positive-dimensional");
    for (const VecZ& v : sigma_verts)
        for (const VecZ& w : tau_verts)
            if (pairing(v, w) != 1)
                throw NotDiscriminantVertex("local_monodromy: simplices are not fully paired");
    out.base_v = sigma_verts[0];
    out.base_w = tau_verts[0];
    const int d = int(out.base_v.size());

    for (int i = 1; i <= out.k; ++i)
        for (int j = 1; j <= out.l; ++j)
            out.generators.push_back(
                primary_formula(out.base_v, out.base_w, sigma_verts[i], tau_verts[j]));

    const MatZ id = MatZ::Identity(d - 1, d - 1);
    for (const MatZ& g : out.generators) {
        MatZ n = g - id;
        if (!MatZ(n * n).isZero()) throw std::logic_error("local_monodromy: generator not 2-step unipotent");
        for (const MatZ& h : out.generators)
            if (MatZ(g * h) != MatZ(h * g)) throw std::logic_error("local_monodromy: generators do not commute");
    }

    // index of the generator span inside its saturation, via the flattened M - 1
    MatZ flat(out.generators.size(), (d - 1) * (d - 1));
    for (size_t r = 0; r < out.generators.size(); ++r) {
        MatZ n = out.generators[r] - id;
        for (int i = 0; i < d - 1; ++i)
            for (int j = 0; j < d - 1; ++j) flat(int(r), i * (d - 1) + j) = n(i, j);
    }
    SmithNF s = smith(flat);
    if (s.rank() != int(out.generators.size()))
        throw std::logic_error("local_monodromy: generator logs are linearly dependent");
    out.index = s.index();
    return out;
}

std::vector<std::array<VecZ, 4>> primary_loops(const Triangulation& s, const Triangulation& t) {
    auto edges_of = [](const Triangulation& tr) {
        std::set<std::pair<int, int>> es;
        for (const auto& c : tr.maxcells)
            for (size_t i = 0; i < c.size(); ++i)
                for (size_t j = i + 1; j < c.size(); ++j)
                    es.insert({std::min(c[i], c[j]), std::max(c[i], c[j])});
        return es;
    };
    std::vector<std::array<VecZ, 4>> out;
    for (auto [a, b] : edges_of(s))
        for (auto [u, w] : edges_of(t)) {
            bool all = true;
            for (int i : {a, b})
                for (int j : {u, w})
                    if (pairing(s.points[i], t.points[j]) != 1) { all = false; break; }
            if (all) out.push_back({s.points[a], t.points[u], s.points[b], t.points[w]});
        }
    return out;
}

bool mirror_transition_check(const Triangulation& s, const Triangulation& t) {
    const int d = int(s.points[0].size());
    // dual basis of the columns of b: integral rows m_i with m_i · b_j = δ_ij
    auto dual_rows = [&](const MatZ& basis) {
        SmithNF sm = smith(basis);   // U * B * V = [I; 0]
        MatZ rows(d - 1, d);
        for (int i = 0; i < d - 1; ++i) {
            VecZ x(d);
            x.setZero();
            // row (e_i V, 0) * U solves x * B = e_i
            for (int c = 0; c < d; ++c) {
                Int acc = 0;
                for (int r2 = 0; r2 < d - 1; ++r2) acc += sm.V(i, r2) * sm.U(r2, c);
                x[c] = acc;
            }
            rows.row(i) = x.transpose();
        }
        if (MatZ(rows * basis) != MatZ::Identity(d - 1, d - 1))
            throw std::logic_error("mirror_transition_check: dual basis construction failed");
        return rows;
    };

    for (const VecZ& vp : s.points)
        for (const VecZ& wp : t.points) {
            if (pairing(vp, wp) != 1) continue;
            MatZ f = transition(vp, wp);

            Chart cu = chart_u(vp);
            Chart cv = chart_v(wp);
            // mirror U-chart at w: dual basis of the V(w) classes; these are
            // the functionals vanishing on w, i.e. rows 2..d of [w|N]^{-1}
            MatZ full_w(d, d);
            full_w.col(0) = wp;
            full_w.rightCols(d - 1) = cv.basis;
            MatZ winv = to_integer(MatQ(to_rational(full_w).inverse()));
            MatZ bw = winv.bottomRows(d - 1);       // rows: basis of {m : <m,w> = 0}
            // mirror V-chart at v: dual basis of the U(v) basis, classes mod v
            MatZ nv = dual_rows(cu.basis);
            MatZ full(d, d);
            full.col(0) = vp;
            for (int i = 0; i < d - 1; ++i) full.col(i + 1) = nv.row(i).transpose();
            MatQ coords = solve_columns(full, to_rational(MatZ(bw.transpose())));
            MatZ g = to_integer(MatQ(coords.bottomRows(d - 1)));

            // g maps the U'(w) chart into the V'(v) chart; read across the
            // overlap in the original direction (U_v side to V_w side) the
            // mirror transition is g^{-1}, which must be the transpose inverse
            MatZ g_inv = to_integer(MatQ(to_rational(g).inverse()));
            MatZ ft_inv = to_integer(MatQ(to_rational(MatZ(f.transpose())).inverse()));
            if (g_inv != ft_inv) return false;
        }
    return true;
}

} // namespace syz
