#include "ternary/ears.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace ternary {

namespace {

// Shortest cycle, ties broken by canonical vertex sequence.
std::vector<int> shortest_cycle(const Graph& g) {
    std::vector<int> best;
    for (auto [a, b] : g.edges()) {
        // shortest a-b path avoiding the edge ab
        std::vector<int> parent(g.n(), -2);
        std::queue<int> q;
        parent[a] = -1;
        q.push(a);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u : g.neighbors(v)) {
                if (v == a && u == b) continue;
                if (parent[u] == -2) {
                    parent[u] = v;
                    q.push(u);
                }
            }
        }
        if (parent[b] == -2) continue;
        std::vector<int> cyc;
        for (int w = b; w != -1; w = parent[w]) cyc.push_back(w);
        Cycle can = canonical_cycle(cyc);
        if (best.empty() || can.size() < best.size() ||
            (can.size() == best.size() && can < best))
            best = can;
    }
    if (best.empty()) throw std::invalid_argument("shortest_cycle: acyclic graph");
    return best;
}

}  // namespace

EarDecomposition ear_decompose(const Graph& g, const ResidueSpec& spec) {
    if (!is_biconnected(g)) throw std::invalid_argument("ear_decompose: graph not 2-connected");
    auto res = all_cycles_in_residue(g, spec);
    if (!res.has_value())
        throw std::invalid_argument("ear_decompose: cycle enumeration indeterminate");
    if (!*res) throw std::invalid_argument("ear_decompose: cycle residue precondition fails");

    EarDecomposition d{shortest_cycle(g), {}, spec};
    std::vector<char> built(g.n(), 0);
    std::set<std::pair<int, int>> covered;
    auto cover = [&](int a, int b) { covered.insert({std::min(a, b), std::max(a, b)}); };
    const int len0 = static_cast<int>(d.initial_cycle.size());
    for (int i = 0; i < len0; ++i) {
        built[d.initial_cycle[i]] = 1;
        cover(d.initial_cycle[i], d.initial_cycle[(i + 1) % len0]);
    }

    while (static_cast<int>(covered.size()) < g.edge_count()) {
        int su = -1, sx = -1;
        for (int u = 0; u < g.n() && su == -1; ++u) {
            if (!built[u]) continue;
            for (int x : g.neighbors(u))
                if (!covered.count({std::min(u, x), std::max(u, x)})) {
                    su = u;
                    sx = x;
                    break;
                }
        }
        if (su == -1) throw std::logic_error("ear_decompose: uncovered edges unreachable");
        if (built[sx]) {  // chord
            cover(su, sx);
            d.ears.push_back(Ear{su, sx, {}});
            continue;
        }
        // walk from sx through unbuilt vertices to the built graph, avoiding su
        std::vector<int> parent(g.n(), -2);
        parent[sx] = -1;
        std::queue<int> q;
        q.push(sx);
        int hit = -1;
        while (!q.empty() && hit == -1) {
            int v = q.front();
            q.pop();
            for (int u : g.neighbors(v)) {
                if (u == su || parent[u] != -2) continue;
                if (built[u]) {
                    parent[u] = v;
                    hit = u;
                    break;
                }
                parent[u] = v;
                q.push(u);
            }
        }
        if (hit == -1) throw std::logic_error("ear_decompose: 2-connectivity walk failed");
        std::vector<int> internal;
        for (int w = parent[hit]; w != -1; w = parent[w]) internal.push_back(w);
        std::reverse(internal.begin(), internal.end());  // now sx ... last
        Ear ear{su, hit, internal};
        int prev = su;
        for (int w : internal) {
            cover(prev, w);
            built[w] = 1;
            prev = w;
        }
        cover(prev, hit);
        d.ears.push_back(std::move(ear));
    }
    validate_decomposition(g, d);
    return d;
}

void validate_decomposition(const Graph& g, const EarDecomposition& d) {
    std::vector<char> built(g.n(), 0);
    std::set<std::pair<int, int>> covered;
    auto cover = [&](int a, int b) {
        if (!g.adjacent(a, b)) throw std::logic_error("decomposition: non-edge used");
        auto e = std::make_pair(std::min(a, b), std::max(a, b));
        if (!covered.insert(e).second) throw std::logic_error("decomposition: edge covered twice");
    };
    const int len0 = static_cast<int>(d.initial_cycle.size());
    if (len0 < 3 || len0 % d.spec.m != d.spec.k)
        throw std::logic_error("decomposition: initial cycle length residue");
    for (int i = 0; i < len0; ++i) {
        if (built[d.initial_cycle[i]]) throw std::logic_error("decomposition: repeated cycle vertex");
        built[d.initial_cycle[i]] = 1;
    }
    for (int i = 0; i < len0; ++i) cover(d.initial_cycle[i], d.initial_cycle[(i + 1) % len0]);
    for (const Ear& e : d.ears) {
        if (!built[e.u] || !built[e.v]) throw std::logic_error("decomposition: ear endpoint not built");
        if (e.length() % d.spec.m != d.spec.k_prime)
            throw std::logic_error("decomposition: ear length residue");
        int prev = e.u;
        for (int w : e.internal) {
            if (built[w]) throw std::logic_error("decomposition: ear internal vertex not fresh");
            built[w] = 1;
            cover(prev, w);
            prev = w;
        }
        if (e.internal.empty() && e.u == e.v)
            throw std::logic_error("decomposition: degenerate ear");
        cover(prev, e.v);
    }
    for (int v = 0; v < g.n(); ++v)
        if (!built[v]) throw std::logic_error("decomposition: vertex not covered");
    if (static_cast<int>(covered.size()) != g.edge_count())
        throw std::logic_error("decomposition: edge set not covered");
}

bool check_same_ear_property(const EarDecomposition& d) {
    std::vector<std::set<int>> stages;
    stages.emplace_back(d.initial_cycle.begin(), d.initial_cycle.end());
    for (const Ear& e : d.ears) {
        bool ok = false;
        for (const auto& st : stages)
            if (st.count(e.u) && st.count(e.v)) {
                ok = true;
                break;
            }
        if (!ok) return false;
        std::set<int> st(e.internal.begin(), e.internal.end());
        st.insert(e.u);
        st.insert(e.v);
        stages.push_back(std::move(st));
    }
    return true;
}

std::vector<NiceCycle> find_nice_cycles(const Graph& g, const ResidueSpec& spec,
                                        long long max_count) {
    if (!is_biconnected(g)) throw std::invalid_argument("find_nice_cycles: not 2-connected");
    bool all_deg2 = true;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) != 2) all_deg2 = false;
    if (all_deg2) throw std::invalid_argument("find_nice_cycles: graph is a cycle");
    auto res = all_cycles_in_residue(g, spec, max_count);
    if (!res.has_value() || !*res)
        throw std::invalid_argument("find_nice_cycles: cycle residue precondition fails");

    CycleList all = enumerate_cycles(g, max_count);
    std::vector<NiceCycle> out;
    for (const Cycle& c : all.cycles) {
        const int len = static_cast<int>(c.size());
        std::vector<int> hubs;
        bool ok = true;
        for (int i = 0; i < len; ++i) {
            int deg = g.degree(c[i]);
            if (deg > 2)
                hubs.push_back(i);
            else if (deg != 2)
                ok = false;
        }
        if (!ok || hubs.size() != 2) continue;
        int pu = hubs[0], pv = hubs[1];
        int l1 = pv - pu, l2 = len - l1;
        if (l1 % spec.m != spec.k_prime || l2 % spec.m != spec.k_prime) continue;
        NiceCycle nc;
        nc.cycle = c;
        nc.hub_u = c[pu];
        nc.hub_v = c[pv];
        for (int i = pu; i <= pv; ++i) nc.arc_plus.push_back(c[i]);
        for (int i = pv; i <= pu + len; ++i) nc.arc_minus.push_back(c[i % len]);
        out.push_back(std::move(nc));
    }
    return out;
}

Graph attach_ear(const Graph& g, int u, int v, int length) {
    if (u == v || u < 0 || v < 0 || u >= g.n() || v >= g.n())
        throw std::invalid_argument("attach_ear: bad endpoints");
    if (length < 1) throw std::invalid_argument("attach_ear: length must be >= 1");
    if (length == 1 && g.adjacent(u, v))
        throw std::invalid_argument("attach_ear: chord already present");
    auto es = g.edges();
    int prev = u;
    for (int i = 0; i < length - 1; ++i) {
        int fresh = g.n() + i;
        es.emplace_back(prev, fresh);
        prev = fresh;
    }
    es.emplace_back(prev, v);
    return Graph(g.n() + length - 1, es);
}

bool is_admissible_pair(const Graph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("is_admissible_pair: u == v");
    if (!is_biconnected(g)) throw std::invalid_argument("is_admissible_pair: not 2-connected");
    auto cls = classify_ternary(g);
    if (!cls.has_value() || cls->tag != TernaryTag::ZeroOneTernary)
        throw std::invalid_argument("is_admissible_pair: graph not (0,1)-ternary");
    Graph h = attach_ear(g, u, v, 4);
    if (!is_biconnected(h)) return false;
    auto hc = classify_ternary(h);
    if (!hc.has_value()) throw std::runtime_error("is_admissible_pair: classification indeterminate");
    return hc->tag == TernaryTag::ZeroOneTernary;
}

}  // namespace ternary
