#include "ternary/domination.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "ternary/cycles.hpp"
#include "ternary/ears.hpp"

namespace ternary {

namespace {

using u64 = std::uint64_t;

std::vector<u64> closed_masks(const Graph& g) {
    std::vector<u64> nb(g.n());
    for (int v = 0; v < g.n(); ++v) {
        u64 m = u64{1} << v;
        for (int u : g.neighbors(v)) m |= u64{1} << u;
        nb[v] = m;
    }
    return nb;
}

std::vector<int> mask_to_vec(u64 m) {
    std::vector<int> out;
    while (m) {
        int v = std::countr_zero(m);
        out.push_back(v);
        m &= m - 1;
    }
    return out;
}

// Exact minimum dominating set by branch and bound on uncovered vertices.
struct GammaSolver {
    int n;
    const std::vector<u64>& nbh;  // closed neighborhoods
    u64 full;
    int best_size;
    u64 best_set = 0;

    GammaSolver(int n_, const std::vector<u64>& nbh_) : n(n_), nbh(nbh_) {
        full = (n == 64) ? ~u64{0} : ((u64{1} << n) - 1);
        // greedy cover as initial upper bound
        u64 covered = 0, chosen = 0;
        while (covered != full) {
            int bv = -1, bc = -1;
            for (int v = 0; v < n; ++v) {
                int c = std::popcount(nbh[v] & ~covered);
                if (c > bc) {
                    bc = c;
                    bv = v;
                }
            }
            covered |= nbh[bv];
            chosen |= u64{1} << bv;
        }
        best_size = std::popcount(chosen);
        best_set = chosen;
    }

    // Disjoint closed-neighborhood packing: each packed vertex needs its
    // own dominator.
    int lower_bound(u64 covered) const {
        int lb = 0;
        u64 used = 0;
        for (u64 rem = full & ~covered; rem; rem &= rem - 1) {
            int v = std::countr_zero(rem);
            if (nbh[v] & used) continue;
            used |= nbh[v];
            ++lb;
        }
        return lb;
    }

    void dfs(u64 covered, u64 chosen, int size) {
        if (covered == full) {
            if (size < best_size) {
                best_size = size;
                best_set = chosen;
            }
            return;
        }
        if (size + lower_bound(covered) >= best_size) return;
        // uncovered vertex with the fewest possible dominators
        int pick = -1, pc = 65;
        for (u64 rem = full & ~covered; rem; rem &= rem - 1) {
            int v = std::countr_zero(rem);
            int c = std::popcount(nbh[v]);
            if (c < pc) {
                pc = c;
                pick = v;
            }
        }
        std::vector<int> cands = mask_to_vec(nbh[pick]);
        std::sort(cands.begin(), cands.end(), [&](int a, int b) {
            return std::popcount(nbh[a] & ~covered) > std::popcount(nbh[b] & ~covered);
        });
        for (int u : cands) dfs(covered | nbh[u], chosen | (u64{1} << u), size + 1);
    }

    std::pair<int, std::vector<int>> solve() {
        dfs(0, 0, 0);
        return {best_size, mask_to_vec(best_set)};
    }
};

std::pair<int, std::vector<int>> solve_gamma(const Graph& g) {
    auto nbh = closed_masks(g);
    GammaSolver s(g.n(), nbh);
    return s.solve();
}

// Maximal independent sets = maximal cliques of the complement.
// Bron-Kerbosch with pivoting; prunes on partial-set size.
struct MisSearch {
    int n;
    std::vector<u64> cadj;  // complement adjacency, self excluded
    int size_limit;         // skip branches with |R| > size_limit
    long long cap;          // max reported sets; -1 for "track min only"
    int best = 0x7fffffff;
    u64 best_set = 0;
    std::vector<u64> found;
    bool truncated = false;

    MisSearch(const Graph& g, int limit, long long cap_) : n(g.n()), cadj(g.n()), size_limit(limit), cap(cap_) {
        u64 full = (n == 64) ? ~u64{0} : ((u64{1} << n) - 1);
        for (int v = 0; v < n; ++v) {
            u64 adj = 0;
            for (int u : g.neighbors(v)) adj |= u64{1} << u;
            cadj[v] = full & ~adj & ~(u64{1} << v);
        }
    }

    void run() {
        u64 full = (n == 64) ? ~u64{0} : ((u64{1} << n) - 1);
        bk(0, full, 0);
    }

    void bk(u64 R, u64 P, u64 X) {
        if (truncated) return;
        int rsize = std::popcount(R);
        if (rsize > size_limit || rsize >= best) {
            if (cap < 0 || rsize > size_limit) return;
        }
        if (!P && !X) {
            if (rsize < best) {
                best = rsize;
                best_set = R;
            }
            if (cap >= 0 && rsize <= size_limit) {
                if (static_cast<long long>(found.size()) >= cap) {
                    truncated = true;
                    return;
                }
                found.push_back(R);
            }
            return;
        }
        // pivot maximizing |P & cadj[u]|
        int pivot = -1, pbest = -1;
        for (u64 pu = P | X; pu; pu &= pu - 1) {
            int u = std::countr_zero(pu);
            int c = std::popcount(P & cadj[u]);
            if (c > pbest) {
                pbest = c;
                pivot = u;
            }
        }
        u64 ext = P & ~cadj[pivot];
        for (u64 e = ext; e; e &= e - 1) {
            int v = std::countr_zero(e);
            u64 vb = u64{1} << v;
            bk(R | vb, P & cadj[v], X & cadj[v]);
            P &= ~vb;
            X |= vb;
        }
    }
};

void require_small(const Graph& g) {
    if (g.n() < 1) throw std::invalid_argument("domination: empty graph");
    if (g.n() > kMaxDominationVertices)
        throw std::invalid_argument("domination: exactness bound exceeded (n > 30)");
}

}  // namespace

std::pair<int, std::vector<int>> domination_number(const Graph& g) {
    require_small(g);
    return solve_gamma(g);
}

std::pair<int, std::vector<int>> independent_domination_number(const Graph& g) {
    require_small(g);
    MisSearch s(g, g.n(), -1);
    s.run();
    return {s.best, mask_to_vec(s.best_set)};
}

MinSetEnumeration enumerate_min_independent_dominating_sets(const Graph& g, long long cap) {
    require_small(g);
    auto [ival, w] = independent_domination_number(g);
    (void)w;
    MisSearch s(g, ival, cap);
    s.run();
    MinSetEnumeration out;
    out.i_value = ival;
    out.truncated = s.truncated;
    for (u64 m : s.found)
        if (std::popcount(m) == ival) out.sets.push_back(mask_to_vec(m));
    std::sort(out.sets.begin(), out.sets.end());
    return out;
}

std::pair<int, std::vector<std::pair<int, int>>> line_domination_number(const Graph& g) {
    if (g.edge_count() < 1) throw std::invalid_argument("line_domination_number: edgeless graph");
    if (g.edge_count() > kMaxLineDominationEdges)
        throw std::invalid_argument("line_domination_number: exactness bound exceeded (m > 40)");
    auto [lg, emap] = line_graph(g);
    auto [gamma, wit] = solve_gamma(lg);
    std::vector<std::pair<int, int>> edges;
    for (int idx : wit) edges.push_back(emap[idx]);
    return {gamma, edges};
}

PathPartition partition_path(const Graph& p) {
    if (p.n() < 1) throw std::invalid_argument("partition_path: empty graph");
    if (p.edge_count() != p.n() - 1 || !is_connected(p))
        throw std::invalid_argument("partition_path: not a path");
    int start = -1;
    for (int v = 0; v < p.n(); ++v) {
        if (p.degree(v) > 2) throw std::invalid_argument("partition_path: not a path");
        if (p.degree(v) <= 1 && start == -1) start = v;
    }
    PathPartition out;
    int prev = -1, cur = start;
    for (int pos = 1; pos <= p.n(); ++pos) {
        if (pos % 3 == 1)
            out.L.push_back(cur);
        else if (pos % 3 == 2)
            out.M.push_back(cur);
        else
            out.R.push_back(cur);
        int next = -1;
        for (int u : p.neighbors(cur))
            if (u != prev) next = u;
        prev = cur;
        cur = next;
    }
    return out;
}

std::optional<int> check_vertex_monotone(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("check_vertex_monotone: disconnected");
    auto cls = classify_ternary(g);
    if (!cls.has_value() || cls->tag != TernaryTag::ZeroOneTernary)
        throw std::invalid_argument("check_vertex_monotone: not (0,1)-ternary");
    if (g.n() == 1)
        throw std::invalid_argument("check_vertex_monotone: needs at least 2 vertices");
    int ig = independent_domination_number(g).first;
    for (int v = 0; v < g.n(); ++v) {
        auto [h, map] = delete_vertices(g, {v});
        (void)map;
        if (independent_domination_number(h).first >= ig) return v;
    }
    return std::nullopt;
}

BiconnectedTheoremReport check_biconnected_theorem(const Graph& g, long long cap) {
    if (!is_biconnected(g)) throw std::invalid_argument("check_biconnected_theorem: not 2-connected");
    auto cls = classify_ternary(g);
    if (!cls.has_value() || cls->tag != TernaryTag::ZeroOneTernary)
        throw std::invalid_argument("check_biconnected_theorem: not (0,1)-ternary");
    if (g.n() % 3 != 2)
        throw std::invalid_argument("check_biconnected_theorem: |V| must be 2 mod 3");

    BiconnectedTheoremReport rep;
    rep.m = (g.n() - 2) / 3;
    auto en = enumerate_min_independent_dominating_sets(g, cap);
    rep.i_value = en.i_value;
    rep.enumeration_complete = !en.truncated;
    rep.i_equals_m_plus_1 = (en.i_value == rep.m + 1);

    // clause 2: no minimum independent dominating set contains an admissible pair
    std::vector<std::vector<signed char>> adm(g.n(), std::vector<signed char>(g.n(), -1));
    auto admissible = [&](int a, int b) {
        if (adm[a][b] != -1) return adm[a][b] == 1;
        bool r = is_admissible_pair(g, a, b);
        adm[a][b] = adm[b][a] = r ? 1 : 0;
        return r;
    };
    rep.no_min_set_has_admissible_pair = true;
    for (const auto& s : en.sets) {
        for (std::size_t i = 0; i < s.size() && rep.no_min_set_has_admissible_pair; ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                if (admissible(s[i], s[j])) {
                    rep.no_min_set_has_admissible_pair = false;
                    rep.witness_set = s;
                    rep.witness_pair = {s[i], s[j]};
                    break;
                }
        if (!rep.no_min_set_has_admissible_pair) break;
    }

    rep.deletion_monotone = true;
    for (int x = 0; x < g.n(); ++x) {
        auto [h, map] = delete_vertices(g, {x});
        (void)map;
        if (independent_domination_number(h).first < en.i_value) {
            rep.deletion_monotone = false;
            rep.witness_vertex = x;
            break;
        }
    }

    std::vector<char> hit(g.n(), 0);
    for (const auto& s : en.sets)
        for (int v : s) hit[v] = 1;
    rep.every_vertex_in_some_min_set = true;
    for (int v = 0; v < g.n(); ++v)
        if (!hit[v]) {
            rep.every_vertex_in_some_min_set = false;
            rep.witness_vertex = v;
            break;
        }
    return rep;
}

}  // namespace ternary
