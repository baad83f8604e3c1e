#include "syz/polyhedron.hpp"
#include "syz/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace syz {

namespace {

// tight-constraint sets as packed bit words; the adjacency test dominates
struct Tight {
    std::vector<std::uint64_t> w;
    explicit Tight(size_t n = 0) : w((n + 63) / 64, 0) {}
    void set(size_t i) { w[i / 64] |= std::uint64_t(1) << (i % 64); }
};

struct Ray {
    VecQ v;
    Tight tight;
};

bool subset(const Tight& a, const Tight& b) {
    for (size_t i = 0; i < a.w.size(); ++i)
        if (a.w[i] & ~b.w[i]) return false;
    return true;
}

Tight meet(const Tight& a, const Tight& b) {
    Tight c;
    c.w.resize(a.w.size());
    for (size_t i = 0; i < a.w.size(); ++i) c.w[i] = a.w[i] & b.w[i];
    return c;
}

// Canonical reduced primitive basis of a subspace spanned by the given vectors.
std::vector<VecQ> canonical_basis(const std::vector<VecQ>& span, int n) {
    if (span.empty()) return {};
    MatQ m(span.size(), n);
    for (size_t i = 0; i < span.size(); ++i) m.row(int(i)) = span[i].transpose();
    // reduced row echelon
    int rows = int(m.rows());
    int r = 0;
    for (int c = 0; c < n && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (m(i, c) != 0) { p = i; break; }
        if (p < 0) continue;
        m.row(p).swap(m.row(r));
        m.row(r) /= m(r, c);
        for (int i = 0; i < rows; ++i)
            if (i != r && m(i, c) != 0) m.row(i) -= m(i, c) * m.row(r);
        ++r;
    }
    std::vector<VecQ> out;
    for (int i = 0; i < r; ++i) out.push_back(to_rational(primitive(VecQ(m.row(i).transpose()))));
    std::sort(out.begin(), out.end(), VecQLess{});
    return out;
}

} // namespace

ConeGenerators dd_cone(int n, const std::vector<VecQ>& eqs, const std::vector<VecQ>& ineqs) {
    // start from the solution space of the equality system
    std::vector<VecQ> lin;
    if (eqs.empty()) {
        for (int i = 0; i < n; ++i) {
            VecQ e = VecQ::Zero(n);
            e[i] = 1;
            lin.push_back(e);
        }
    } else {
        MatQ m(eqs.size(), n);
        for (size_t i = 0; i < eqs.size(); ++i) m.row(int(i)) = eqs[i].transpose();
        lin = kernel_q(m);
    }

    const size_t m = ineqs.size();
    std::vector<Ray> rays;

    for (size_t k = 0; k < m; ++k) {
        const VecQ& a = ineqs[k];

        int lstar = -1;
        for (size_t i = 0; i < lin.size(); ++i)
            if (a.dot(lin[i]) != 0) { lstar = int(i); break; }

        if (lstar >= 0) {
            // the constraint slices the lineality space: one direction survives as a ray
            VecQ l = lin[lstar];
            Rat al = a.dot(l);
            std::vector<VecQ> newlin;
            for (size_t i = 0; i < lin.size(); ++i) {
                if (int(i) == lstar) continue;
                Rat c = a.dot(lin[i]) / al;
                newlin.push_back(lin[i] - c * l);
            }
            lin = std::move(newlin);
            for (Ray& r : rays) {
                Rat c = a.dot(r.v) / al;
                r.v = to_rational(primitive(VecQ(r.v - c * l)));
                r.tight.set(k);
            }
            Ray born;
            born.v = to_rational(primitive(VecQ(al > 0 ? VecQ(-l) : l)));
            born.tight = Tight(m);
            for (size_t j = 0; j < k; ++j) born.tight.set(j);
            rays.push_back(std::move(born));
            continue;
        }

        std::vector<int> pos, neg, zero;
        std::vector<Rat> val(rays.size());
        for (size_t i = 0; i < rays.size(); ++i) {
            val[i] = a.dot(rays[i].v);
            if (val[i] > 0) pos.push_back(int(i));
            else if (val[i] < 0) neg.push_back(int(i));
            else zero.push_back(int(i));
        }
        if (pos.empty()) {
            for (int i : zero) rays[i].tight.set(k);
            continue;
        }

        std::vector<Ray> next;
        for (int i : neg) next.push_back(rays[i]);
        for (int i : zero) {
            rays[i].tight.set(k);
            next.push_back(rays[i]);
        }
        for (int ip : pos) {
            for (int in : neg) {
                Tight common = meet(rays[ip].tight, rays[in].tight);
                bool adjacent = true;
                for (size_t j = 0; j < rays.size(); ++j) {
                    if (int(j) == ip || int(j) == in) continue;
                    if (subset(common, rays[j].tight)) { adjacent = false; break; }
                }
                if (!adjacent) continue;
                Ray born;
                born.v = to_rational(primitive(VecQ(-val[in] * rays[ip].v + val[ip] * rays[in].v)));
                born.tight = common;
                born.tight.set(k);
                next.push_back(std::move(born));
            }
        }
        rays = std::move(next);
    }

    ConeGenerators out;
    out.lineality = canonical_basis(lin, n);
    std::set<VecQ, VecQLess> seen;
    for (const Ray& r : rays) {
        if (r.v.isZero()) continue;
        if (seen.insert(r.v).second) out.rays.push_back(r.v);
    }
    std::sort(out.rays.begin(), out.rays.end(), VecQLess{});
    return out;
}

// ---------------------------------------------------------------------------

HPolyhedron::HPolyhedron(int dim, std::vector<Constraint> cons) : d_(dim), cons_(std::move(cons)) {
    for (const Constraint& c : cons_)
        if (int(c.a.size()) != d_) throw std::invalid_argument("HPolyhedron: constraint dimension mismatch");
}

HPolyhedron HPolyhedron::from_generators(int dim, Generators g) {
    std::vector<Constraint> cons;
    if (g.vertices.empty()) {
        cons.push_back(Constraint::le(VecQ::Zero(dim), Rat(-1)));
        HPolyhedron p(dim, std::move(cons));
        p.gens_ = Generators{};
        return p;
    }
    // polar cone in R^{d+1}: z·(v,1) ≤ 0, z·(r,0) ≤ 0, z·(l,0) = 0
    std::vector<VecQ> eqs, ineqs;
    auto lift = [dim](const VecQ& x, const Rat& t) {
        VecQ y(dim + 1);
        y.head(dim) = x;
        y[dim] = t;
        return y;
    };
    for (const VecQ& v : g.vertices) ineqs.push_back(lift(v, 1));
    for (const VecQ& r : g.rays) ineqs.push_back(lift(r, 0));
    for (const VecQ& l : g.lineality) eqs.push_back(lift(l, 0));
    ConeGenerators polar = dd_cone(dim + 1, eqs, ineqs);

    for (const VecQ& z : polar.rays) {
        VecQ a = z.head(dim);
        if (a.isZero()) continue;    // the homogenization facet t ≥ 0
        cons.push_back(Constraint::le(a, Rat(-z[dim])));
    }
    for (const VecQ& z : polar.lineality) {
        VecQ a = z.head(dim);
        if (a.isZero()) continue;
        cons.push_back(Constraint::equal(a, Rat(-z[dim])));
    }
    HPolyhedron p(dim, std::move(cons));
    return p;
}

void HPolyhedron::ensure_generators() const {
    if (gens_) return;
    std::vector<VecQ> eqs, ineqs;
    auto lift = [this](const VecQ& a, const Rat& b) {
        VecQ y(d_ + 1);
        y.head(d_) = a;
        y[d_] = -b;
        return y;
    };
    for (const Constraint& c : cons_) {
        if (c.eq) eqs.push_back(lift(c.a, c.b));
        else ineqs.push_back(lift(c.a, c.b));
    }
    VecQ tpos = VecQ::Zero(d_ + 1);
    tpos[d_] = -1;                       // -t ≤ 0
    ineqs.push_back(tpos);
    ConeGenerators cone = dd_cone(d_ + 1, eqs, ineqs);

    Generators g;
    for (const VecQ& r : cone.rays) {
        if (r[d_] > 0) {
            VecQ v = r.head(d_);
            g.vertices.push_back(v / r[d_]);
        } else {
            VecQ v = r.head(d_);
            if (!v.isZero()) g.rays.push_back(to_rational(primitive(v)));
        }
    }
    for (const VecQ& l : cone.lineality) {
        // lineality of the homogenization always has t = 0
        VecQ v = l.head(d_);
        if (!v.isZero()) g.lineality.push_back(v);
    }
    g.lineality = canonical_basis(g.lineality, d_);
    std::sort(g.vertices.begin(), g.vertices.end(), VecQLess{});
    std::sort(g.rays.begin(), g.rays.end(), VecQLess{});
    gens_ = std::move(g);
}

const Generators& HPolyhedron::generators() const {
    ensure_generators();
    return *gens_;
}

bool HPolyhedron::closure_empty() const {
    ensure_generators();
    return gens_->vertices.empty();
}

std::vector<int> HPolyhedron::implicit_equalities() const {
    ensure_generators();
    std::vector<int> out;
    for (size_t i = 0; i < cons_.size(); ++i) {
        const Constraint& c = cons_[i];
        if (c.eq) { out.push_back(int(i)); continue; }
        bool tight = true;
        for (const VecQ& v : gens_->vertices)
            if (c.a.dot(v) != c.b) { tight = false; break; }
        if (tight)
            for (const VecQ& r : gens_->rays)
                if (c.a.dot(r) != 0) { tight = false; break; }
        if (tight)
            for (const VecQ& l : gens_->lineality)
                if (c.a.dot(l) != 0) { tight = false; break; }
        if (tight) out.push_back(int(i));
    }
    return out;
}

bool HPolyhedron::is_empty() const {
    if (closure_empty()) return true;
    if (!implicit_) {
        std::vector<bool> imp(cons_.size(), false);
        for (int i : implicit_equalities()) imp[i] = true;
        implicit_ = std::move(imp);
    }
    for (size_t i = 0; i < cons_.size(); ++i)
        if (cons_[i].strict && !cons_[i].eq && (*implicit_)[i]) return true;
    return false;
}

int HPolyhedron::dim() const {
    ensure_generators();
    if (gens_->vertices.empty()) return -1;
    std::vector<VecQ> dirs;
    for (size_t i = 1; i < gens_->vertices.size(); ++i) dirs.push_back(gens_->vertices[i] - gens_->vertices[0]);
    for (const VecQ& r : gens_->rays) dirs.push_back(r);
    for (const VecQ& l : gens_->lineality) dirs.push_back(l);
    if (dirs.empty()) return 0;
    MatQ m(dirs.size(), d_);
    for (size_t i = 0; i < dirs.size(); ++i) m.row(int(i)) = dirs[i].transpose();
    return rank_q(m);
}

bool HPolyhedron::closure_contains(const VecQ& x) const {
    for (const Constraint& c : cons_) {
        Rat v = c.a.dot(x);
        if (c.eq) { if (v != c.b) return false; }
        else if (v > c.b) return false;
    }
    return true;
}

bool HPolyhedron::contains(const VecQ& x) const {
    for (const Constraint& c : cons_) {
        Rat v = c.a.dot(x);
        if (c.eq) { if (v != c.b) return false; }
        else if (c.strict ? v >= c.b : v > c.b) return false;
    }
    return true;
}

bool HPolyhedron::relint_contains(const VecQ& x) const {
    if (!closure_contains(x)) return false;
    if (!implicit_) {
        std::vector<bool> imp(cons_.size(), false);
        for (int i : implicit_equalities()) imp[i] = true;
        implicit_ = std::move(imp);
    }
    for (size_t i = 0; i < cons_.size(); ++i) {
        const Constraint& c = cons_[i];
        if (c.eq || (*implicit_)[i]) continue;
        if (c.a.dot(x) == c.b) return false;
    }
    return true;
}

VecQ HPolyhedron::relint_point() const {
    ensure_generators();
    if (gens_->vertices.empty()) throw EmptyOrLowerDim("relint_point of empty polyhedron");
    VecQ x = VecQ::Zero(d_);
    for (const VecQ& v : gens_->vertices) x += v;
    x /= Rat(int(gens_->vertices.size()));
    for (const VecQ& r : gens_->rays) x += r;
    return x;
}

ConeGenerators HPolyhedron::recession() const {
    ensure_generators();
    return {gens_->rays, gens_->lineality};
}

bool HPolyhedron::bounded() const {
    ensure_generators();
    return gens_->rays.empty() && gens_->lineality.empty();
}

HPolyhedron HPolyhedron::closure() const {
    std::vector<Constraint> cons = cons_;
    for (Constraint& c : cons) c.strict = false;
    HPolyhedron p(d_, std::move(cons));
    p.gens_ = gens_;
    return p;
}

HPolyhedron HPolyhedron::intersect(const HPolyhedron& other) const {
    std::vector<Constraint> cons = cons_;
    cons.insert(cons.end(), other.cons_.begin(), other.cons_.end());
    return HPolyhedron(d_, std::move(cons));
}

void HPolyhedron::ensure_canonical() const {
    if (canon_) return;
    ensure_generators();
    HPolyhedron back = from_generators(d_, *gens_);
    std::vector<Constraint> cons = back.cons_;
    for (Constraint& c : cons) {
        VecQ full(d_ + 1);
        full.head(d_) = c.a;
        full[d_] = -c.b;
        VecZ p = primitive(full);
        if (c.eq) {
            // canonical sign for equalities
            for (Eigen::Index i = 0; i < p.size(); ++i) {
                if (p[i] == 0) continue;
                if (p[i] < 0) p = -p;
                break;
            }
        }
        c.a = to_rational(VecZ(p.head(d_)));
        c.b = Rat(-p[d_]);
    }
    std::sort(cons.begin(), cons.end(), [](const Constraint& x, const Constraint& y) {
        if (x.eq != y.eq) return x.eq;
        if (x.b != y.b) return x.b < y.b;
        return lex_less(x.a, y.a);
    });
    canon_ = std::move(cons);
}

std::vector<Constraint> HPolyhedron::canonical_hrep() const {
    ensure_canonical();
    return *canon_;
}

bool HPolyhedron::subset_of(const HPolyhedron& other) const {
    ensure_generators();
    for (const VecQ& v : gens_->vertices)
        if (!other.closure_contains(v)) return false;
    for (const VecQ& r : gens_->rays) {
        for (const Constraint& c : other.cons_) {
            Rat v = c.a.dot(r);
            if (c.eq ? v != 0 : v > 0) return false;
        }
    }
    for (const VecQ& l : gens_->lineality) {
        for (const Constraint& c : other.cons_) {
            Rat v = c.a.dot(l);
            if (c.eq ? v != 0 : v != 0) return false;
        }
    }
    return true;
}

bool HPolyhedron::set_equals(const HPolyhedron& other) const {
    if (closure_empty() || other.closure_empty()) return closure_empty() == other.closure_empty();
    return subset_of(other) && other.subset_of(*this);
}

void HPolyhedron::ensure_faces() const {
    if (faces_) return;
    ensure_generators();
    FaceLattice fl;
    if (gens_->vertices.empty()) {
        PFace empty;
        empty.dim = -1;
        fl.faces.push_back(empty);
        fl.top = fl.bottom = 0;
        faces_ = std::move(fl);
        return;
    }
    const auto facets = canonical_hrep();
    const size_t nv = gens_->vertices.size(), nr = gens_->rays.size();

    auto tight_on = [&](const Constraint& c) {
        std::vector<int> t;
        for (size_t i = 0; i < nv; ++i)
            if (c.a.dot(gens_->vertices[i]) == c.b) t.push_back(int(i));
        for (size_t i = 0; i < nr; ++i)
            if (c.a.dot(gens_->rays[i]) == 0) t.push_back(int(nv + i));
        return t;
    };

    std::vector<std::vector<int>> facet_inc;
    for (const Constraint& c : facets)
        if (!c.eq) facet_inc.push_back(tight_on(c));

    std::vector<int> all(nv + nr);
    for (size_t i = 0; i < all.size(); ++i) all[i] = int(i);

    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> queue{all};
    seen.insert(all);
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        std::vector<int> cur = queue[qi];
        for (const auto& inc : facet_inc) {
            std::vector<int> meet;
            std::set_intersection(cur.begin(), cur.end(), inc.begin(), inc.end(), std::back_inserter(meet));
            // a face must contain a vertex
            bool has_vertex = !meet.empty() && meet.front() < int(nv);
            if (!has_vertex) continue;
            if (seen.insert(meet).second) queue.push_back(meet);
        }
    }

    auto face_dim = [&](const std::vector<int>& gens) {
        std::vector<VecQ> dirs;
        VecQ base;
        bool have_base = false;
        for (int g : gens) {
            if (g < int(nv)) {
                if (!have_base) { base = gens_->vertices[g]; have_base = true; }
                else dirs.push_back(gens_->vertices[g] - base);
            } else {
                dirs.push_back(gens_->rays[g - int(nv)]);
            }
        }
        for (const VecQ& l : gens_->lineality) dirs.push_back(l);
        if (dirs.empty()) return 0;
        MatQ m(dirs.size(), d_);
        for (size_t i = 0; i < dirs.size(); ++i) m.row(int(i)) = dirs[i].transpose();
        return rank_q(m);
    };

    auto face_point_tight = [&](const std::vector<int>& gens, const Constraint& c) {
        for (int g : gens) {
            if (g < int(nv)) {
                if (c.a.dot(gens_->vertices[g]) != c.b) return false;
            } else {
                if (c.a.dot(gens_->rays[g - int(nv)]) != 0) return false;
            }
        }
        for (const VecQ& l : gens_->lineality)
            if (c.a.dot(l) != 0) return false;
        return true;
    };

    for (const auto& gset : seen) {
        PFace f;
        f.gens = gset;
        f.dim = face_dim(gset);
        int fi = 0;
        for (const Constraint& c : facets) {
            if (!c.eq) {
                if (face_point_tight(gset, c)) f.facets.push_back(fi);
                ++fi;
            }
        }
        for (size_t ci = 0; ci < cons_.size(); ++ci)
            if (face_point_tight(gset, cons_[ci])) f.active.push_back(int(ci));
        fl.faces.push_back(std::move(f));
    }
    PFace empty;
    empty.dim = -1;
    for (size_t ci = 0; ci < cons_.size(); ++ci) empty.active.push_back(int(ci));
    fl.faces.push_back(std::move(empty));

    std::sort(fl.faces.begin(), fl.faces.end(), [](const PFace& x, const PFace& y) {
        if (x.dim != y.dim) return x.dim < y.dim;
        return x.gens < y.gens;
    });
    for (size_t i = 0; i < fl.faces.size(); ++i) {
        if (fl.faces[i].dim == -1) fl.bottom = int(i);
        if (fl.faces[i].gens.size() == nv + nr) fl.top = int(i);
    }
    faces_ = std::move(fl);
}

const FaceLattice& HPolyhedron::face_lattice() const {
    ensure_faces();
    return *faces_;
}

bool FaceLattice::leq(int f1, int f2) const {
    const auto& a = faces[f1].gens;
    const auto& b = faces[f2].gens;
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<int> FaceLattice::of_dim(int k) const {
    std::vector<int> out;
    for (size_t i = 0; i < faces.size(); ++i)
        if (faces[i].dim == k) out.push_back(int(i));
    return out;
}

std::vector<int> FaceLattice::f_vector() const {
    std::vector<int> out(std::max(0, dim() + 1), 0);
    for (const PFace& f : faces)
        if (f.dim >= 0) ++out[f.dim];
    return out;
}

int FaceLattice::find_by_gens(const std::vector<int>& gens) const {
    for (size_t i = 0; i < faces.size(); ++i)
        if (faces[i].gens == gens) return int(i);
    return -1;
}

// ---------------------------------------------------------------------------

HPolyhedron minkowski_sum(const HPolyhedron& p, const HPolyhedron& cone) {
    Generators g = p.generators();
    ConeGenerators c = cone.recession();
    // a cone's generators() vertex list is {0}; its structure is rays+lineality
    for (const VecQ& r : c.rays) g.rays.push_back(r);
    for (const VecQ& l : c.lineality) g.lineality.push_back(l);
    std::sort(g.rays.begin(), g.rays.end(), VecQLess{});
    g.rays.erase(std::unique(g.rays.begin(), g.rays.end(),
                             [](const VecQ& a, const VecQ& b) { return a == b; }),
                 g.rays.end());
    return HPolyhedron::from_generators(p.ambient_dim(), std::move(g));
}

bool relint_intersects(const HPolyhedron& a, const HPolyhedron& b) {
    HPolyhedron c = a.intersect(b);
    if (c.closure_empty()) return false;
    VecQ x = c.relint_point();
    return a.relint_contains(x) && b.relint_contains(x);
}

HPolyhedron normal_cone_of(const std::vector<VecQ>& pts, const std::vector<VecQ>& face_pts) {
    if (face_pts.empty()) throw std::invalid_argument("normal_cone_of: empty face");
    const int d = int(face_pts[0].size());
    const VecQ& v0 = face_pts[0];
    std::vector<Constraint> cons;
    for (size_t i = 1; i < face_pts.size(); ++i)
        cons.push_back(Constraint::equal(face_pts[i] - v0, Rat(0)));
    for (const VecQ& u : pts)
        cons.push_back(Constraint::le(u - v0, Rat(0)));
    return HPolyhedron(d, std::move(cons));
}

} // namespace syz
