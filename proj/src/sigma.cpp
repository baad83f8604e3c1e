#include "syz/sigma.hpp"
#include "syz/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace syz {

namespace {

std::vector<int> encode(const SigmaCell& c) {
    std::vector<int> key;
    key.reserve(c.s_chain.size() + c.t_chain.size() + 1);
    key.push_back(int(c.s_chain.size()));
    key.insert(key.end(), c.s_chain.begin(), c.s_chain.end());
    key.insert(key.end(), c.t_chain.begin(), c.t_chain.end());
    return key;
}

struct DSU {
    std::vector<int> up;
    explicit DSU(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
    int find(int x) { return up[x] == x ? x : up[x] = find(up[x]); }
    void join(int a, int b) { up[find(a)] = find(b); }
    int classes() {
        int c = 0;
        for (size_t i = 0; i < up.size(); ++i) c += (find(int(i)) == int(i));
        return c;
    }
};

// all chains of the poset ending at a fixed element, memoized
class ChainsAt {
public:
    explicit ChainsAt(const Poset& p) : p_(p), memo_(p.n) {}
    const std::vector<std::vector<int>>& at(int x) {
        if (!memo_[x].empty()) return memo_[x];
        std::vector<std::vector<int>> out{{x}};
        for (int y = 0; y < p_.n; ++y) {
            if (y == x || !p_.leq(y, x)) continue;
            for (const auto& c : at(y)) {
                std::vector<int> ext = c;
                ext.push_back(x);
                out.push_back(std::move(ext));
            }
        }
        memo_[x] = std::move(out);
        return memo_[x];
    }

private:
    const Poset& p_;
    std::vector<std::vector<std::vector<int>>> memo_;
};

} // namespace

GammaGraph gamma_graph(const Triangulation& s, const Triangulation& t) {
    GammaGraph g;
    g.s_nodes = s.points;
    g.t_nodes = t.points;
    for (size_t i = 0; i < s.points.size(); ++i)
        for (size_t j = 0; j < t.points.size(); ++j) {
            Int dot = 0;
            for (Eigen::Index k = 0; k < s.points[i].size(); ++k)
                dot += s.points[i][k] * t.points[j][k];
            if (dot == 1) g.edges.emplace_back(int(i), int(j));
        }
    return g;
}

int GammaGraph::components() const {
    DSU dsu(int(s_nodes.size() + t_nodes.size()));
    for (auto [i, j] : edges) dsu.join(i, int(s_nodes.size()) + j);
    return dsu.classes();
}

int GammaGraph::cycle_rank() const {
    return int(edges.size()) - int(s_nodes.size() + t_nodes.size()) + components();
}

SigmaComplex::SigmaComplex(Triangulation s, Triangulation t) : s_(std::move(s)), t_(std::move(t)) {
    // pairing bound <m,n> ≤ 1 must hold between all used points
    for (const VecZ& v : s_.points)
        for (const VecZ& w : t_.points) {
            Int dot = 0;
            for (Eigen::Index k = 0; k < v.size(); ++k) dot += v[k] * w[k];
            if (dot > 1)
                throw NotDualPair("build_sigma: pairing " + to_string(v) + " , " + to_string(w) +
                                  " exceeds 1");
        }
    sp_ = simplex_poset(s_.maxcells);
    tp_ = simplex_poset(t_.maxcells);

    // fully paired simplex pairs
    std::vector<std::vector<bool>> point_pair(s_.points.size(),
                                              std::vector<bool>(t_.points.size(), false));
    for (size_t i = 0; i < s_.points.size(); ++i)
        for (size_t j = 0; j < t_.points.size(); ++j) {
            Int dot = 0;
            for (Eigen::Index k = 0; k < s_.points[i].size(); ++k)
                dot += s_.points[i][k] * t_.points[j][k];
            point_pair[i][j] = (dot == 1);
        }
    for (int a = 0; a < sp_.poset.n; ++a) {
        for (int b = 0; b < tp_.poset.n; ++b) {
            bool all = true;
            for (int i : sp_.simplices[a]) {
                for (int j : tp_.simplices[b])
                    if (!point_pair[i][j]) { all = false; break; }
                if (!all) break;
            }
            if (all) {
                pair_index_[{a, b}] = int(paired_.size());
                paired_.emplace_back(a, b);
            }
        }
    }
    enumerate_cells();
}

void SigmaComplex::enumerate_cells() {
    ChainsAt schains(sp_.poset), tchains(tp_.poset);
    for (auto [a, b] : paired_) {
        for (const auto& cs : schains.at(a))
            for (const auto& ct : tchains.at(b)) cells_.push_back({cs, ct});
    }
    std::sort(cells_.begin(), cells_.end(), [](const SigmaCell& x, const SigmaCell& y) {
        if (x.dim() != y.dim()) return x.dim() < y.dim();
        return x < y;
    });
    for (size_t i = 0; i < cells_.size(); ++i) cell_index_[encode(cells_[i])] = int(i);

    // discriminant: cells all of whose vertices are discriminant vertices
    for (size_t i = 0; i < cells_.size(); ++i) {
        bool alld = true;
        for (int pid : cell_vertices(cells_[i]))
            if (!is_discriminant_vertex(pid)) { alld = false; break; }
        if (alld) dcells_.push_back(int(i));
    }
    // the paper notes this set induces a subcomplex; assert it
    std::set<int> dset(dcells_.begin(), dcells_.end());
    for (int ci : dcells_)
        for (const SigmaCell& f : proper_faces(cells_[ci])) {
            int fi = cell_index(f);
            if (fi < 0 || !dset.count(fi))
                throw std::logic_error("discriminant does not induce a subcomplex");
        }
}

int SigmaComplex::vertex_index(int s_simplex, int t_simplex) const {
    auto it = pair_index_.find({s_simplex, t_simplex});
    return it == pair_index_.end() ? -1 : it->second;
}

VecQ SigmaComplex::vertex_coordinates(int pair_id) const {
    auto [a, b] = paired_[pair_id];
    const int d = int(s_.points[0].size());
    VecQ out = VecQ::Zero(2 * d);
    for (int i : sp_.simplices[a]) out.head(d) += to_rational(s_.points[i]);
    out.head(d) /= Rat(int(sp_.simplices[a].size()));
    for (int j : tp_.simplices[b]) out.tail(d) += to_rational(t_.points[j]);
    out.tail(d) /= Rat(int(tp_.simplices[b].size()));
    return out;
}

int SigmaComplex::cell_index(const SigmaCell& c) const {
    auto it = cell_index_.find(encode(c));
    return it == cell_index_.end() ? -1 : it->second;
}

int SigmaComplex::dim() const {
    int d = -1;
    for (const SigmaCell& c : cells_) d = std::max(d, c.dim());
    return d;
}

std::vector<SigmaCell> SigmaComplex::proper_faces(const SigmaCell& c) const {
    std::vector<SigmaCell> out;
    const int ns = int(c.s_chain.size()), nt = int(c.t_chain.size());
    for (int ms = 1; ms < (1 << ns); ++ms)
        for (int mt = 1; mt < (1 << nt); ++mt) {
            if (ms == (1 << ns) - 1 && mt == (1 << nt) - 1) continue;
            SigmaCell f;
            for (int i = 0; i < ns; ++i)
                if (ms >> i & 1) f.s_chain.push_back(c.s_chain[i]);
            for (int j = 0; j < nt; ++j)
                if (mt >> j & 1) f.t_chain.push_back(c.t_chain[j]);
            out.push_back(std::move(f));
        }
    return out;
}

std::vector<SigmaCell> SigmaComplex::cell_facets(const SigmaCell& c) const {
    std::vector<SigmaCell> out;
    if (c.s_chain.size() > 1)
        for (size_t drop = 0; drop < c.s_chain.size(); ++drop) {
            SigmaCell f = c;
            f.s_chain.erase(f.s_chain.begin() + drop);
            out.push_back(std::move(f));
        }
    if (c.t_chain.size() > 1)
        for (size_t drop = 0; drop < c.t_chain.size(); ++drop) {
            SigmaCell f = c;
            f.t_chain.erase(f.t_chain.begin() + drop);
            out.push_back(std::move(f));
        }
    return out;
}

std::vector<int> SigmaComplex::cell_vertices(const SigmaCell& c) const {
    std::vector<int> out;
    for (int a : c.s_chain)
        for (int b : c.t_chain) {
            int pid = vertex_index(a, b);
            if (pid < 0) throw std::logic_error("cell has a non-paired vertex");
            out.push_back(pid);
        }
    std::sort(out.begin(), out.end());
    return out;
}

bool SigmaComplex::is_discriminant_vertex(int pair_id) const {
    auto [a, b] = paired_[pair_id];
    return sp_.poset.rank[a] >= 1 && tp_.poset.rank[b] >= 1;
}

std::pair<int, int> SigmaComplex::vertex_type(int pair_id) const {
    if (!is_discriminant_vertex(pair_id))
        throw NotDiscriminantVertex("vertex_type: vertex is not in the discriminant");
    auto [a, b] = paired_[pair_id];
    return {sp_.poset.rank[a], tp_.poset.rank[b]};
}

std::vector<int> SigmaComplex::discriminant_vertex_ids() const {
    std::vector<int> out;
    for (size_t i = 0; i < paired_.size(); ++i)
        if (is_discriminant_vertex(int(i))) out.push_back(int(i));
    return out;
}

bool SigmaComplex::cell_in_U(const SigmaCell& c, int s_point) const {
    return sp_.simplices[c.s_chain.front()] == std::vector<int>{s_point};
}

bool SigmaComplex::cell_in_V(const SigmaCell& c, int t_point) const {
    return tp_.simplices[c.t_chain.front()] == std::vector<int>{t_point};
}

std::vector<int> SigmaComplex::cover_U(int s_point) const {
    std::vector<int> out;
    for (size_t i = 0; i < cells_.size(); ++i)
        if (cell_in_U(cells_[i], s_point)) out.push_back(int(i));
    return out;
}

std::vector<int> SigmaComplex::cover_V(int t_point) const {
    std::vector<int> out;
    for (size_t i = 0; i < cells_.size(); ++i)
        if (cell_in_V(cells_[i], t_point)) out.push_back(int(i));
    return out;
}

std::vector<int> SigmaComplex::star_of_vertex(int s_point, int t_point) const {
    // independent route: closure membership via explicit face enumeration
    int sv = -1, tv = -1;
    for (int a = 0; a < sp_.poset.n; ++a)
        if (sp_.simplices[a] == std::vector<int>{s_point}) sv = a;
    for (int b = 0; b < tp_.poset.n; ++b)
        if (tp_.simplices[b] == std::vector<int>{t_point}) tv = b;
    std::vector<int> out;
    if (sv < 0 || tv < 0 || vertex_index(sv, tv) < 0) return out;
    for (size_t i = 0; i < cells_.size(); ++i) {
        const SigmaCell& c = cells_[i];
        // ({sv},{tv}) is a subchain pair iff both ids occur as chain members
        bool has = std::find(c.s_chain.begin(), c.s_chain.end(), sv) != c.s_chain.end() &&
                   std::find(c.t_chain.begin(), c.t_chain.end(), tv) != c.t_chain.end();
        if (has) out.push_back(int(i));
    }
    return out;
}

bool SigmaComplex::pure() const {
    const int top = dim();
    std::set<std::vector<int>> marked;
    for (const SigmaCell& c : cells_) {
        if (c.dim() != top) continue;
        marked.insert(encode(c));
        for (const SigmaCell& f : proper_faces(c)) marked.insert(encode(f));
    }
    for (const SigmaCell& c : cells_)
        if (!marked.count(encode(c))) return false;
    return true;
}

bool SigmaComplex::pseudomanifold() const {
    const int top = dim();
    std::map<std::vector<int>, int> count;
    for (const SigmaCell& c : cells_) {
        if (c.dim() != top) continue;
        for (const SigmaCell& f : cell_facets(c)) ++count[encode(f)];
    }
    for (const SigmaCell& c : cells_) {
        if (c.dim() != top - 1) continue;
        auto it = count.find(encode(c));
        if (it == count.end() || it->second != 2) return false;
    }
    return true;
}

bool SigmaComplex::complex_connected() const {
    if (paired_.empty()) return false;
    DSU dsu(int(paired_.size()));
    for (const SigmaCell& c : cells_) {
        std::vector<int> vs = cell_vertices(c);
        for (size_t i = 1; i < vs.size(); ++i) dsu.join(vs[0], vs[i]);
    }
    return dsu.classes() == 1;
}

bool SigmaComplex::nerve_check() const {
    // U_v ∩ V_w nonempty iff vw ∈ Γ, and then equals the star of (v,w)
    GammaGraph g = gamma_graph(s_, t_);
    std::set<std::pair<int, int>> gedges(g.edges.begin(), g.edges.end());
    for (size_t v = 0; v < s_.points.size(); ++v) {
        std::vector<int> uv = cover_U(int(v));
        for (size_t w = 0; w < t_.points.size(); ++w) {
            std::vector<int> vw = cover_V(int(w));
            std::vector<int> meet;
            std::set_intersection(uv.begin(), uv.end(), vw.begin(), vw.end(),
                                  std::back_inserter(meet));
            bool edge = gedges.count({int(v), int(w)}) > 0;
            if (edge != !meet.empty()) return false;
            if (edge && meet != star_of_vertex(int(v), int(w))) return false;
        }
    }
    // cells missed by every cover are exactly the discriminant cells
    std::set<int> dset(dcells_.begin(), dcells_.end());
    for (size_t i = 0; i < cells_.size(); ++i) {
        const SigmaCell& c = cells_[i];
        bool covered = sp_.poset.rank[c.s_chain.front()] == 0 ||
                       tp_.poset.rank[c.t_chain.front()] == 0;
        if (covered == (dset.count(int(i)) > 0)) return false;
    }
    return true;
}

std::vector<std::vector<int>> SigmaComplex::order_complex() const {
    // chains in the componentwise order on the vertex pairs
    const int n = int(paired_.size());
    std::vector<std::vector<int>> above(n);
    auto less_pair = [&](int x, int y) {
        auto [ax, bx] = paired_[x];
        auto [ay, by] = paired_[y];
        if (x == y) return false;
        return sp_.poset.leq(ax, ay) && tp_.poset.leq(bx, by);
    };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (less_pair(x, y)) above[x].push_back(y);

    std::vector<std::vector<int>> out;
    std::vector<int> chain;
    auto extend = [&](auto&& self, int last) -> void {
        const std::vector<int>& cand = above[last];
        for (int y : cand) {
            chain.push_back(y);
            std::vector<int> sorted = chain;
            std::sort(sorted.begin(), sorted.end());
            out.push_back(sorted);
            self(self, y);
            chain.pop_back();
        }
    };
    for (int x = 0; x < n; ++x) {
        chain = {x};
        out.push_back(chain);
        extend(extend, x);
    }
    return out;
}

HomologyResult SigmaComplex::homology() const {
    return simplicial_homology(order_complex());
}

SigmaComplex mirror_model(const SigmaComplex& sigma) {
    SigmaComplex mirror(sigma.T(), sigma.S());
    // the swap of chain pairs must be a cell-complex isomorphism
    if (mirror.cells().size() != sigma.cells().size())
        throw std::logic_error("mirror_model: cell counts differ");
    for (const SigmaCell& c : sigma.cells()) {
        SigmaCell swapped{c.t_chain, c.s_chain};
        if (mirror.cell_index(swapped) < 0)
            throw std::logic_error("mirror_model: swapped cell missing");
    }
    // discriminant corresponds to discriminant, with types transposed
    std::vector<int> d1 = sigma.discriminant_vertex_ids();
    std::vector<int> d2 = mirror.discriminant_vertex_ids();
    if (d1.size() != d2.size()) throw std::logic_error("mirror_model: discriminant sizes differ");
    for (int pid : d1) {
        auto [a, b] = sigma.vertices()[pid];
        int qid = mirror.vertex_index(b, a);
        if (qid < 0 || !mirror.is_discriminant_vertex(qid))
            throw std::logic_error("mirror_model: discriminant vertex not carried to discriminant");
        auto [k, l] = sigma.vertex_type(pid);
        auto [k2, l2] = mirror.vertex_type(qid);
        if (k != l2 || l != k2) throw std::logic_error("mirror_model: vertex type not transposed");
    }
    return mirror;
}

} // namespace syz
