#include "syz/amoeba.hpp"
#include "syz/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>

namespace syz {

namespace {

using cd = std::complex<double>;

std::vector<cd> companion_roots(const std::vector<cd>& coeffs) {
    int deg = int(coeffs.size()) - 1;
    while (deg > 0 && std::abs(coeffs[deg]) == 0.0) --deg;
    if (deg <= 0) return {};
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
    for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -coeffs[i] / coeffs[deg];
    for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    std::vector<cd> out;
    for (int i = 0; i < deg; ++i) out.push_back(solver.eigenvalues()[i]);
    return out;
}

// Roots of Σ c_k y^k grouped by tropical magnitude class.  Coefficients of a
// slice span many orders of magnitude for large s; rescaling y by each
// Newton-polygon slope keeps the companion matrix well conditioned.  The
// relative residual is evaluated in the rescaled frame, where it coincides
// with |p(y)| / max_k |c_k y^k| term by term.
std::vector<cd> slice_roots(const std::vector<cd>& coeffs, double rel_tol) {
    int lo = 0, hi = int(coeffs.size()) - 1;
    while (hi > lo && std::abs(coeffs[hi]) == 0.0) --hi;
    while (lo < hi && std::abs(coeffs[lo]) == 0.0) ++lo;
    if (hi <= lo) return {};

    // upper hull of (k, log|c_k|) over the support
    std::vector<std::pair<int, double>> pts;
    for (int k = lo; k <= hi; ++k)
        if (std::abs(coeffs[k]) > 0) pts.emplace_back(k, std::log(std::abs(coeffs[k])));
    std::vector<std::pair<int, double>> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            if ((b.second - a.second) * (p.first - a.first) <=
                (p.second - a.second) * (b.first - a.first))
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }

    std::vector<cd> accepted;
    for (size_t e = 0; e + 1 < hull.size(); ++e) {
        double slope = (hull[e + 1].second - hull[e].second) / (hull[e + 1].first - hull[e].first);
        double scale = std::exp(-slope);   // tropical root magnitude of this class
        std::vector<cd> scaled(coeffs.size());
        double maxc = 0;
        for (size_t k = 0; k < coeffs.size(); ++k) {
            scaled[k] = coeffs[k] * std::pow(scale, double(k));
            maxc = std::max(maxc, std::abs(scaled[k]));
        }
        if (!(maxc > 0) || !std::isfinite(maxc)) continue;
        for (auto& c : scaled) c /= maxc;
        auto eval = [&](const cd& z, cd& val, cd& deriv, double& tmax) {
            val = deriv = 0;
            tmax = 0;
            cd zp = 1.0;
            for (size_t k = 0; k < scaled.size(); ++k) {
                val += scaled[k] * zp;
                if (k + 1 < scaled.size()) deriv += double(k + 1) * scaled[k + 1] * zp;
                tmax = std::max(tmax, std::abs(scaled[k] * zp));
                zp *= z;
            }
        };
        for (cd z : companion_roots(scaled)) {
            if (!(std::abs(z) > 0) || !std::isfinite(std::abs(z))) continue;
            cd val, deriv;
            double tmax;
            for (int it = 0; it < 3; ++it) {   // polish
                eval(z, val, deriv, tmax);
                if (std::abs(deriv) > 0) z -= val / deriv;
            }
            eval(z, val, deriv, tmax);
            if (!(tmax > 0) || std::abs(val) >= rel_tol * tmax) continue;
            // keep roots belonging to this magnitude class
            if (std::abs(z) < 1e-3 || std::abs(z) > 1e3) continue;
            accepted.push_back(z * scale);
        }
    }
    // distinct magnitude classes can re-find boundary roots; deduplicate
    std::sort(accepted.begin(), accepted.end(), [](const cd& a, const cd& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    std::vector<cd> out;
    for (const cd& z : accepted) {
        if (!out.empty() && std::abs(z - out.back()) <= 1e-8 * std::abs(z)) continue;
        out.push_back(z);
    }
    return out;
}

double point_segment_distance(double px, double py, const std::array<double, 4>& seg) {
    double vx = seg[2] - seg[0], vy = seg[3] - seg[1];
    double wx = px - seg[0], wy = py - seg[1];
    double vv = vx * vx + vy * vy;
    double t = vv > 0 ? std::clamp((wx * vx + wy * vy) / vv, 0.0, 1.0) : 0.0;
    double dx = px - (seg[0] + t * vx), dy = py - (seg[1] + t * vy);
    return std::sqrt(dx * dx + dy * dy);
}

// Liang-Barsky clip of the parametric piece p + t*dir, t in [t0, t1]
bool clip_to_window(double px, double py, double dx, double dy, double t0, double t1,
                    const Window& w, std::array<double, 4>& out) {
    auto update = [&](double p, double q) {
        if (p == 0) return q >= 0;
        double r = q / p;
        if (p < 0) {
            if (r > t1) return false;
            if (r > t0) t0 = r;
        } else {
            if (r < t0) return false;
            if (r < t1) t1 = r;
        }
        return true;
    };
    if (!update(-dx, px - w.x0)) return false;
    if (!update(dx, w.x1 - px)) return false;
    if (!update(-dy, py - w.y0)) return false;
    if (!update(dy, w.y1 - py)) return false;
    if (t0 > t1) return false;
    out = {px + t0 * dx, py + t0 * dy, px + t1 * dx, py + t1 * dy};
    return true;
}

} // namespace

AmoebaSample sample_amoeba(const LaurentInstance& inst, const Window& window, int n_r, int n_phi) {
    if (inst.lambda.dim() != 2)
        throw std::invalid_argument("sample_amoeba: two variables only");
    if (inst.s <= 1) throw std::invalid_argument("sample_amoeba: s must exceed 1");
    AmoebaSample out;
    out.s = inst.s;
    out.window = window;
    const double logs = std::log(inst.s);

    const auto& dom = inst.lambda.domain();
    long m2_min = 0, m2_max = 0;
    std::vector<long> m1(dom.size()), m2(dom.size());
    std::vector<double> lam(dom.size());
    for (size_t i = 0; i < dom.size(); ++i) {
        m1[i] = dom[i][0].convert_to<long>();
        m2[i] = dom[i][1].convert_to<long>();
        lam[i] = Rat(inst.lambda.values()[i]).convert_to<double>();
        m2_min = std::min(m2_min, m2[i]);
        m2_max = std::max(m2_max, m2[i]);
    }

    const double pi = std::acos(-1.0);
    for (int iu = 0; iu < n_r; ++iu) {
        double u = window.x0 + (window.x1 - window.x0) * (n_r == 1 ? 0.5 : double(iu) / (n_r - 1));
        double absx = std::exp(u * logs);
        for (int ip = 0; ip < n_phi; ++ip) {
            double phi = 2.0 * pi * (double(ip) + 0.5) / n_phi;
            cd x = std::polar(absx, phi);
            std::vector<cd> coeffs(size_t(m2_max - m2_min + 1), cd(0, 0));
            double max_mag = 0;
            for (size_t i = 0; i < dom.size(); ++i) {
                cd term = std::exp(cd(lam[i] * logs, 0)) * std::pow(x, double(m1[i]));
                coeffs[size_t(m2[i] - m2_min)] += term;
                max_mag = std::max(max_mag, std::abs(term));
            }
            bool all_zero = true;
            for (const cd& c : coeffs)
                if (std::abs(c) > 1e-14 * max_mag) { all_zero = false; break; }
            if (all_zero || max_mag == 0) {
                ++out.degenerate_slices;
                continue;
            }
            for (const cd& y : slice_roots(coeffs, 1e-9)) {
                if (!(std::abs(y) > 0) || !std::isfinite(std::abs(y))) continue;
                ++out.total_roots;
                double v = std::log(std::abs(y)) / logs;
                if (window.contains(u, v)) out.points.push_back({u, v});
            }
        }
    }
    std::sort(out.points.begin(), out.points.end());
    return out;
}

AmoebaSample sample_amoeba_two_sided(const LaurentInstance& inst, const Window& window, int n_r,
                                     int n_phi) {
    AmoebaSample out = sample_amoeba(inst, window, n_r, n_phi);
    // swap the variables and sample again
    std::vector<VecZ> dom;
    for (const VecZ& m : inst.lambda.domain()) {
        VecZ t(2);
        t << m[1], m[0];
        dom.push_back(t);
    }
    HeightFunction swapped(dom, inst.lambda.values());
    Window tw{window.y0, window.x0, window.y1, window.x1};
    AmoebaSample other = sample_amoeba({swapped, inst.s}, tw, n_r, n_phi);
    out.degenerate_slices += other.degenerate_slices;
    out.total_roots += other.total_roots;
    for (const auto& p : other.points) out.points.push_back({p[1], p[0]});
    std::sort(out.points.begin(), out.points.end());
    out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
    return out;
}

std::vector<std::array<double, 4>> spine_window_segments(const Spine& spine, const Window& window) {
    std::vector<std::array<double, 4>> out;
    std::array<double, 4> seg;
    for (auto& [a, b] : spine.corner_segments()) {
        double ax = Rat(a[0]).convert_to<double>(), ay = Rat(a[1]).convert_to<double>();
        double bx = Rat(b[0]).convert_to<double>(), by = Rat(b[1]).convert_to<double>();
        if (clip_to_window(ax, ay, bx - ax, by - ay, 0.0, 1.0, window, seg)) out.push_back(seg);
    }
    const double huge = 1e9;
    for (auto& [p, r] : spine.corner_rays()) {
        double px = Rat(p[0]).convert_to<double>(), py = Rat(p[1]).convert_to<double>();
        double rx = Rat(r[0]).convert_to<double>(), ry = Rat(r[1]).convert_to<double>();
        if (clip_to_window(px, py, rx, ry, 0.0, huge, window, seg)) out.push_back(seg);
    }
    return out;
}

DistanceReport distance_to_spine(const AmoebaSample& sample, const Spine& spine) {
    if (sample.points.empty()) throw EmptySample("distance_to_spine: no sample points");
    std::vector<std::array<double, 4>> segs = spine_window_segments(spine, sample.window);
    if (segs.empty()) throw EmptySample("distance_to_spine: spine misses the window");
    DistanceReport rep;
    for (const auto& p : sample.points) {
        double best = 1e300;
        for (const auto& s : segs) best = std::min(best, point_segment_distance(p[0], p[1], s));
        rep.sup_dist = std::max(rep.sup_dist, best);
    }
    const double diag = std::hypot(sample.window.x1 - sample.window.x0,
                                   sample.window.y1 - sample.window.y0);
    const double step = diag / 400.0;
    for (const auto& s : segs) {
        double len = std::hypot(s[2] - s[0], s[3] - s[1]);
        int n = std::max(1, int(len / step));
        for (int i = 0; i <= n; ++i) {
            double t = double(i) / n;
            double qx = s[0] + t * (s[2] - s[0]), qy = s[1] + t * (s[3] - s[1]);
            double best = 1e300;
            for (const auto& p : sample.points) best = std::min(best, std::hypot(p[0] - qx, p[1] - qy));
            rep.spine_cover_dist = std::max(rep.spine_cover_dist, best);
        }
    }
    return rep;
}

std::vector<ConvergenceRow> convergence_experiment(const HeightFunction& lambda,
                                                   const std::vector<double>& s_list,
                                                   const Window& window, int n_r, int n_phi) {
    Spine spine = build_spine(lambda);
    std::vector<ConvergenceRow> rows;
    for (double s : s_list) {
        AmoebaSample sample = sample_amoeba_two_sided({lambda, s}, window, n_r, n_phi);
        DistanceReport rep = distance_to_spine(sample, spine);
        rows.push_back({s, rep.sup_dist, rep.spine_cover_dist});
    }
    if (rows.size() > 1) {
        for (size_t i = 1; i < rows.size(); ++i)
            if (rows[i].sup_dist > rows[i - 1].sup_dist * 1.10)
                throw Error("convergence_experiment: sup distance fails to decrease within the noise allowance");
    }
    return rows;
}

bool weakly_decreasing(const std::vector<ConvergenceRow>& rows, double slack) {
    for (size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].sup_dist > rows[i - 1].sup_dist * (1 + slack)) return false;
        if (rows[i].spine_cover_dist > rows[i - 1].spine_cover_dist * (1 + slack)) return false;
    }
    return true;
}

long samples_in_unbounded_cells(const AmoebaSample& sample, const Spine& spine, const Rat& eps) {
    // double-precision membership in the strict domination domains Q_v(eps)
    const int d = spine.lambda.dim();
    std::vector<std::vector<std::array<double, 3>>> cons_sets;   // a1, a2, b per constraint
    for (const SpineCell& c : spine.cells) {
        if (c.bounded || c.dim != d) continue;
        HPolyhedron q = q_ij_polyhedron(spine.lambda, c.label, {}, eps);
        std::vector<std::array<double, 3>> cs;
        for (const Constraint& con : q.constraints())
            cs.push_back({Rat(con.a[0]).convert_to<double>(), Rat(con.a[1]).convert_to<double>(),
                          Rat(con.b).convert_to<double>()});
        cons_sets.push_back(std::move(cs));
    }
    long count = 0;
    for (const auto& p : sample.points) {
        for (const auto& cs : cons_sets) {
            bool inside = true;
            for (const auto& c : cs)
                if (c[0] * p[0] + c[1] * p[1] >= c[2]) { inside = false; break; }
            if (inside) { ++count; break; }
        }
    }
    return count;
}

} // namespace syz
