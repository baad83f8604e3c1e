#include "syz/homology.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace syz {

bool HomologyResult::torsion_free() const {
    for (const auto& t : torsion)
        if (!t.empty()) return false;
    return true;
}

RankDivisors sparse_rank_divisors(int ncols, std::vector<std::vector<std::pair<int, Int>>> rows) {
    RankDivisors out;
    const int nrows = int(rows.size());
    std::vector<std::map<int, Int>> r(nrows);
    std::vector<std::set<int>> col_rows(ncols);
    for (int i = 0; i < nrows; ++i)
        for (auto& [j, v] : rows[i])
            if (v != 0) {
                r[i][j] = v;
                col_rows[j].insert(i);
            }
    std::vector<bool> row_done(nrows, false);

    auto eliminate = [&](int pi, int pj) {
        Int pv = r[pi][pj];
        std::vector<int> users(col_rows[pj].begin(), col_rows[pj].end());
        for (int i : users) {
            if (i == pi) continue;
            Int factor = r[i][pj] / pv;   // pv = ±1 here
            for (auto& [j, v] : r[pi]) {
                auto it = r[i].find(j);
                if (it == r[i].end()) {
                    Int nv = -factor * v;
                    if (nv != 0) {
                        r[i][j] = nv;
                        col_rows[j].insert(i);
                    }
                } else {
                    it->second -= factor * v;
                    if (it->second == 0) {
                        r[i].erase(it);
                        col_rows[j].erase(i);
                    }
                }
            }
        }
        for (auto& [j, v] : r[pi]) col_rows[j].erase(pi);
        r[pi].clear();
        row_done[pi] = true;
        ++out.rank;
    };

    // unit-pivot phase, greedy Markowitz-style choice
    while (true) {
        int best_i = -1, best_j = -1;
        long best_score = -1;
        for (int i = 0; i < nrows; ++i) {
            if (row_done[i] || r[i].empty()) continue;
            for (auto& [j, v] : r[i]) {
                if (v != 1 && v != -1) continue;
                long score = long(r[i].size() - 1) * long(col_rows[j].size() - 1);
                if (best_i < 0 || score < best_score) {
                    best_i = i;
                    best_j = j;
                    best_score = score;
                    if (score == 0) break;
                }
            }
            if (best_score == 0) break;
        }
        if (best_i < 0) break;
        eliminate(best_i, best_j);
    }

    // dense core
    std::vector<int> live_rows, live_cols;
    std::set<int> cols_used;
    for (int i = 0; i < nrows; ++i)
        if (!row_done[i] && !r[i].empty()) {
            live_rows.push_back(i);
            for (auto& [j, v] : r[i]) cols_used.insert(j);
        }
    if (!live_rows.empty()) {
        live_cols.assign(cols_used.begin(), cols_used.end());
        std::map<int, int> cindex;
        for (size_t k = 0; k < live_cols.size(); ++k) cindex[live_cols[k]] = int(k);
        MatZ dense = MatZ::Zero(live_rows.size(), live_cols.size());
        for (size_t a = 0; a < live_rows.size(); ++a)
            for (auto& [j, v] : r[live_rows[a]]) dense(int(a), cindex[j]) = v;
        SmithNF s = smith(dense);
        out.rank += s.rank();
        for (const Int& d : s.divisors)
            if (d > 1) out.divisors.push_back(d);
    }
    std::sort(out.divisors.begin(), out.divisors.end());
    return out;
}

HomologyResult simplicial_homology(const std::vector<std::vector<int>>& simplices) {
    int top = -1;
    for (const auto& s : simplices) top = std::max(top, int(s.size()) - 1);
    HomologyResult res;
    if (top < 0) return res;

    std::vector<std::vector<std::vector<int>>> by_dim(top + 1);
    for (const auto& s : simplices) by_dim[int(s.size()) - 1].push_back(s);
    std::vector<std::map<std::vector<int>, int>> index(top + 1);
    for (int k = 0; k <= top; ++k) {
        std::sort(by_dim[k].begin(), by_dim[k].end());
        by_dim[k].erase(std::unique(by_dim[k].begin(), by_dim[k].end()), by_dim[k].end());
        for (size_t i = 0; i < by_dim[k].size(); ++i) index[k][by_dim[k][i]] = int(i);
    }

    // rank of ∂_k : C_k -> C_{k-1} for k = 1..top, plus divisors of each
    std::vector<RankDivisors> bd(top + 2);
    for (int k = 1; k <= top; ++k) {
        std::vector<std::vector<std::pair<int, Int>>> rows;
        rows.reserve(by_dim[k].size());
        for (const auto& s : by_dim[k]) {
            std::vector<std::pair<int, Int>> row;
            std::vector<int> face(s.size() - 1);
            for (size_t drop = 0; drop < s.size(); ++drop) {
                int fi = 0;
                for (size_t i = 0; i < s.size(); ++i)
                    if (i != drop) face[fi++] = s[i];
                auto it = index[k - 1].find(face);
                row.emplace_back(it->second, (drop % 2 == 0) ? Int(1) : Int(-1));
            }
            rows.push_back(std::move(row));
        }
        bd[k] = sparse_rank_divisors(int(by_dim[k - 1].size()), std::move(rows));
    }

    res.betti.resize(top + 1);
    res.torsion.resize(top + 1);
    for (int k = 0; k <= top; ++k) {
        long nk = long(by_dim[k].size());
        long rk = (k >= 1) ? bd[k].rank : 0;
        long rk1 = (k + 1 <= top) ? bd[k + 1].rank : 0;
        res.betti[k] = nk - rk - rk1;
        if (k + 1 <= top) res.torsion[k] = bd[k + 1].divisors;
    }
    return res;
}

} // namespace syz
