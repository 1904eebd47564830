#include "ternary/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "ternary/homology.hpp"

namespace ternary {

Hypergraph::Hypergraph(int n_, std::vector<std::vector<int>> edges_) : n(n_), edges(std::move(edges_)) {
    if (n < 0) throw std::invalid_argument("Hypergraph: negative vertex count");
    for (auto& e : edges) {
        if (e.empty()) throw std::invalid_argument("Hypergraph: empty edge");
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        for (int v : e)
            if (v < 0 || v >= n) throw std::invalid_argument("Hypergraph: vertex out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("Hypergraph: duplicate edge");
}

Hypergraph Hypergraph::from_graph(const Graph& g) {
    std::vector<std::vector<int>> es;
    for (auto [u, v] : g.edges()) es.push_back({u, v});
    return Hypergraph(g.n(), std::move(es));
}

int Hypergraph::max_edge_size() const {
    int m = 0;
    for (const auto& e : edges) m = std::max(m, static_cast<int>(e.size()));
    return m;
}

bool Hypergraph::has_unit_edge() const {
    for (const auto& e : edges)
        if (e.size() == 1) return true;
    return false;
}

namespace {

struct BergeSearch {
    const Hypergraph& h;
    const std::set<int>& residues;
    long long budget;
    std::vector<std::vector<int>> edges_of;
    std::vector<char> vused, eused;
    std::vector<int> vseq, eseq;
    std::optional<BergeCycle> witness;
    bool exhausted_budget = false;

    BergeSearch(const Hypergraph& h_, const std::set<int>& r, long long b)
        : h(h_), residues(r), budget(b), edges_of(h_.n), vused(h_.n, 0), eused(h_.edges.size(), 0) {
        for (std::size_t i = 0; i < h.edges.size(); ++i)
            for (int v : h.edges[i]) edges_of[v].push_back(static_cast<int>(i));
    }

    void run() {
        for (int v1 = 0; v1 < h.n && !witness && !exhausted_budget; ++v1) {
            vused[v1] = 1;
            vseq = {v1};
            extend(v1);
            vused[v1] = 0;
        }
    }

    // vseq holds v_1..v_i with v_1 the minimum vertex of the cycle;
    // eseq holds e_1..e_{i-1}.
    void extend(int cur) {
        if (witness || exhausted_budget) return;
        if (--budget < 0) {
            exhausted_budget = true;
            return;
        }
        const int v1 = vseq.front();
        for (int ei : edges_of[cur]) {
            if (eused[ei]) continue;
            const auto& e = h.edges[ei];
            // close the cycle with this edge as e_k (k >= 2)
            if (vseq.size() >= 2 && std::binary_search(e.begin(), e.end(), v1) &&
                residues.count(static_cast<int>(vseq.size()) % 3)) {
                eseq.push_back(ei);
                witness = BergeCycle{vseq, eseq};
                eseq.pop_back();
                return;
            }
            eused[ei] = 1;
            eseq.push_back(ei);
            for (int nv : e) {
                if (nv <= v1 || vused[nv]) continue;
                vused[nv] = 1;
                vseq.push_back(nv);
                extend(nv);
                vseq.pop_back();
                vused[nv] = 0;
                if (witness || exhausted_budget) break;
            }
            eseq.pop_back();
            eused[ei] = 0;
            if (witness || exhausted_budget) return;
        }
    }
};

}  // namespace

BergeSearchResult find_berge_cycle_in_residue(const Hypergraph& h, const std::set<int>& residues,
                                              long long budget) {
    BergeSearch s(h, residues, budget);
    s.run();
    if (s.witness) return {true, s.witness};
    return {!s.exhausted_budget, std::nullopt};
}

namespace {

using u64 = std::uint64_t;

struct HyperGammaSolver {
    int n;
    std::vector<u64> edge_masks;
    std::vector<std::vector<int>> edges_of;
    int best_size;
    u64 best_set;

    explicit HyperGammaSolver(const Hypergraph& h) : n(h.n), edges_of(h.n) {
        if (n > 62) throw std::invalid_argument("hyper_domination_number: n too large");
        for (std::size_t i = 0; i < h.edges.size(); ++i) {
            u64 m = 0;
            for (int v : h.edges[i]) m |= u64{1} << v;
            edge_masks.push_back(m);
            for (int v : h.edges[i]) edges_of[v].push_back(static_cast<int>(i));
        }
        best_set = (n == 64) ? ~u64{0} : ((u64{1} << n) - 1);  // all vertices always dominate
        best_size = n;
    }

    bool dominated(int v, u64 W) const {
        if ((W >> v) & 1) return true;
        u64 wv = W | (u64{1} << v);
        for (int ei : edges_of[v])
            if ((edge_masks[ei] & ~wv) == 0) return true;
        return false;
    }

    void dfs(u64 W) {
        int size = std::popcount(W);
        if (size >= best_size) return;
        int pick = -1, popts = 1 << 30;
        for (int v = 0; v < n; ++v) {
            if (dominated(v, W)) continue;
            int opts = 1 + static_cast<int>(edges_of[v].size());
            if (opts < popts) {
                popts = opts;
                pick = v;
            }
        }
        if (pick == -1) {
            best_size = size;
            best_set = W;
            return;
        }
        if (size + 1 >= best_size) return;
        dfs(W | (u64{1} << pick));
        for (int ei : edges_of[pick]) {
            u64 add = edge_masks[ei] & ~(u64{1} << pick);
            dfs(W | add);
        }
    }
};

}  // namespace

std::pair<int, std::vector<int>> hyper_domination_number(const Hypergraph& h) {
    if (h.n < 1) throw std::invalid_argument("hyper_domination_number: empty hypergraph");
    HyperGammaSolver s(h);
    s.dfs(0);
    std::vector<int> wit;
    for (int v = 0; v < h.n; ++v)
        if ((s.best_set >> v) & 1) wit.push_back(v);
    return {s.best_size, wit};
}

Hypergraph h_e_transform(const Hypergraph& h, const std::vector<int>& e) {
    std::vector<int> es = e;
    std::sort(es.begin(), es.end());
    auto it = std::find(h.edges.begin(), h.edges.end(), es);
    if (it == h.edges.end()) throw std::invalid_argument("h_e_transform: edge not in hypergraph");
    const int k = static_cast<int>(es.size());
    const int w = h.n;
    std::vector<std::vector<int>> edges;
    for (const auto& f : h.edges)
        if (f != es) edges.push_back(f);
    for (int i = 0; i < k; ++i) {
        int ui = h.n + 1 + i;
        edges.push_back({w, ui});
        edges.push_back({ui, es[i]});
    }
    return Hypergraph(h.n + k + 1, std::move(edges));
}

GraphReduction reduce_to_graph(const Hypergraph& h) {
    GraphReduction r;
    std::vector<std::vector<int>> kept;
    int dropped = 0;
    for (const auto& e : h.edges) {
        if (e.size() == 1)
            ++dropped;
        else
            kept.push_back(e);
    }
    Hypergraph cur(h.n, std::move(kept));
    r.unit_edges_dropped = dropped;
    while (true) {
        const std::vector<int>* big = nullptr;
        for (const auto& e : cur.edges)
            if (e.size() >= 3) {
                big = &e;
                break;
            }
        if (!big) break;
        cur = h_e_transform(cur, *big);
        ++r.transforms_applied;
    }
    std::vector<std::pair<int, int>> ges;
    for (const auto& e : cur.edges) ges.emplace_back(e[0], e[1]);
    r.graph = Graph(cur.n, ges);
    return r;
}

HyperTheoremVerdict check_hyper_theorem(const Hypergraph& h) {
    if (h.has_unit_edge())
        throw std::invalid_argument("check_hyper_theorem: size-1 edges are refused");
    auto berge = find_berge_cycle_in_residue(h, {0, 1});
    HyperTheoremVerdict v;
    if (!berge.determinate) {
        v.determinate = false;
        return v;
    }
    if (berge.witness)
        throw std::invalid_argument("check_hyper_theorem: hypergraph is not (0,1)-ternary");
    v.gamma = hyper_domination_number(h).first;
    HomologyProfile p = reduced_homology(independence_complex_hyper(h));
    if (p.d_value.kind == DValue::HomologyTrivial) {
        v.d_is_star = true;
        v.pass = true;
    } else if (p.d_value.kind == DValue::Sphere) {
        v.d = p.d_value.d;
        v.pass = (v.d == v.gamma - 1);
    } else {
        v.pass = false;
    }
    return v;
}

}  // namespace ternary
