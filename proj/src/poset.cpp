#include "syz/poset.hpp"
#include "syz/errors.hpp"

#include <algorithm>
#include <map>

namespace syz {

std::vector<std::vector<int>> Poset::chains() const {
    // elements sorted by rank so chains can only extend forward
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (rank[a] != rank[b]) return rank[a] < rank[b];
        return a < b;
    });
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto extend = [&](auto&& self, int start_pos) -> void {
        for (int pos = start_pos; pos < n; ++pos) {
            int e = order[pos];
            if (!cur.empty() && !(leq(cur.back(), e) && cur.back() != e)) continue;
            cur.push_back(e);
            out.push_back(cur);
            self(self, pos + 1);
            cur.pop_back();
        }
    };
    extend(extend, 0);
    return out;
}

FacePoset face_poset(const LatticePolytope& p) {
    const FaceLattice& fl = p.face_lattice();
    FacePoset fp;
    for (size_t i = 0; i < fl.faces.size(); ++i)
        if (fl.faces[i].dim >= 0) fp.face_ids.push_back(int(i));
    const int n = int(fp.face_ids.size());
    fp.poset.n = n;
    fp.poset.rank.resize(n);
    fp.poset.rel.assign(n, std::vector<bool>(n, false));
    for (int a = 0; a < n; ++a) {
        fp.poset.rank[a] = fl.faces[fp.face_ids[a]].dim;
        for (int b = 0; b < n; ++b) fp.poset.rel[a][b] = fl.leq(fp.face_ids[a], fp.face_ids[b]);
    }
    return fp;
}

SimplexPoset simplex_poset(const std::vector<std::vector<int>>& maxcells) {
    std::set<std::vector<int>> all;
    for (const auto& cell : maxcells) {
        const int k = int(cell.size());
        for (int mask = 1; mask < (1 << k); ++mask) {
            std::vector<int> s;
            for (int i = 0; i < k; ++i)
                if (mask >> i & 1) s.push_back(cell[i]);
            all.insert(s);
        }
    }
    SimplexPoset sp;
    sp.simplices.assign(all.begin(), all.end());
    std::sort(sp.simplices.begin(), sp.simplices.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    const int n = int(sp.simplices.size());
    sp.poset.n = n;
    sp.poset.rank.resize(n);
    sp.poset.rel.assign(n, std::vector<bool>(n, false));
    for (int a = 0; a < n; ++a) {
        sp.poset.rank[a] = int(sp.simplices[a].size()) - 1;
        for (int b = 0; b < n; ++b)
            sp.poset.rel[a][b] = std::includes(sp.simplices[b].begin(), sp.simplices[b].end(),
                                               sp.simplices[a].begin(), sp.simplices[a].end());
    }
    return sp;
}

int SimplexPoset::index_of(const std::vector<int>& s) const {
    for (size_t i = 0; i < simplices.size(); ++i)
        if (simplices[i] == s) return int(i);
    return -1;
}

bool BsdPoset::leq(int i, int j) const {
    const BsdElement& a = elements[i];
    const BsdElement& b = elements[j];
    if (!p.leq(a.p, b.p)) return false;
    return std::includes(b.chain.begin(), b.chain.end(), a.chain.begin(), a.chain.end());
}

int BsdPoset::dim(int i, const std::vector<int>& qdim, const std::vector<int>& pdim) const {
    (void)qdim;
    return int(elements[i].chain.size()) - 1 + pdim[elements[i].p];
}

BsdPoset combinatorial_bsd(const Poset& q, const Poset& p, const std::vector<int>& kappa) {
    if (int(kappa.size()) != q.n)
        throw std::invalid_argument("combinatorial_bsd: kappa size mismatch");
    for (int a = 0; a < q.n; ++a) {
        if (p.rank[kappa[a]] > q.rank[a])
            throw NotOrderPreserving("combinatorial_bsd: kappa increases rank");
        for (int b = 0; b < q.n; ++b)
            if (q.leq(a, b) && !p.leq(kappa[a], kappa[b]))
                throw NotOrderPreserving("combinatorial_bsd: kappa is not order preserving");
    }
    BsdPoset out;
    out.q = q;
    out.p = p;
    out.kappa = kappa;
    for (const auto& chain : q.chains()) {
        // chains come out ascending; q_0 is the first element
        for (int pe = 0; pe < p.n; ++pe) {
            if (!p.leq(pe, kappa[chain.front()])) continue;
            std::vector<int> sorted_chain = chain;
            std::sort(sorted_chain.begin(), sorted_chain.end());
            out.elements.push_back({pe, sorted_chain});
        }
    }
    std::sort(out.elements.begin(), out.elements.end());
    return out;
}

} // namespace syz
