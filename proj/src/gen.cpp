#include "ternary/gen.hpp"

#include <random>
#include <set>
#include <stdexcept>

#include "ternary/cycles.hpp"
#include "ternary/ears.hpp"

namespace ternary {

namespace {

// replace the listed path edges (pairs along 0..n-1) by induced 4-cycles
Graph path_with_c4_replacements(int n, const std::vector<int>& replaced_left_endpoints) {
    std::set<int> rep(replaced_left_endpoints.begin(), replaced_left_endpoints.end());
    std::vector<std::pair<int, int>> es;
    int fresh = n;
    for (int i = 0; i + 1 < n; ++i) {
        if (rep.count(i)) {
            int p = fresh++, q = fresh++;
            es.emplace_back(i, p);
            es.emplace_back(p, i + 1);
            es.emplace_back(i, q);
            es.emplace_back(q, i + 1);
        } else {
            es.emplace_back(i, i + 1);
        }
    }
    return Graph(fresh, es);
}

}  // namespace

Graph gen_a_k(int k) {
    if (k < 1) throw std::invalid_argument("gen_a_k: need k >= 1");
    std::vector<int> all;
    for (int i = 0; i + 1 < 3 * k; ++i) all.push_back(i);
    return path_with_c4_replacements(3 * k, all);
}

Graph gen_b_k(int k) {
    if (k < 0) throw std::invalid_argument("gen_b_k: need k >= 0");
    const int n = 9 * k + 8;
    std::vector<int> rep;
    for (int pos = 1; pos <= n - 1; pos += 3) rep.push_back(pos - 1);  // 1-based edge -> left endpoint
    return path_with_c4_replacements(n, rep);
}

Graph gen_ear_grown(int max_vertices, int ears, std::uint64_t seed) {
    if (ears < 0) throw std::invalid_argument("gen_ear_grown: need ears >= 0");
    std::mt19937_64 rng(seed);
    Graph g = cycle_graph(rng() % 2 == 0 ? 5 : 8);
    if (g.n() > max_vertices) g = cycle_graph(5);
    if (g.n() > max_vertices) throw std::invalid_argument("gen_ear_grown: max_vertices < 5");
    for (int t = 0; t < ears; ++t) {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < g.n(); ++u)
            for (int v = u + 1; v < g.n(); ++v)
                if (is_admissible_pair(g, u, v)) pairs.emplace_back(u, v);
        if (pairs.empty()) throw std::runtime_error("gen_ear_grown: generation exhausted");
        auto [u, v] = pairs[rng() % pairs.size()];
        int len = rng() % 2 == 0 ? 4 : 7;
        if (g.n() + len - 1 > max_vertices) len = 4;
        if (g.n() + len - 1 > max_vertices) break;
        g = attach_ear(g, u, v, len);
    }
    auto cls = classify_ternary(g);
    if (!cls.has_value() || cls->tag != TernaryTag::ZeroOneTernary)
        throw std::logic_error("gen_ear_grown: output failed (0,1)-ternary assertion");
    return g;
}

Hypergraph gen_random_ternary_hypergraph(int n, int m, int max_edge, std::uint64_t seed) {
    if (n < 2 || n > 10) throw std::invalid_argument("gen_random_ternary_hypergraph: need 2 <= n <= 10");
    if (max_edge < 2 || max_edge > 4)
        throw std::invalid_argument("gen_random_ternary_hypergraph: need 2 <= max_edge <= 4");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 20000; ++attempt) {
        std::set<std::vector<int>> edges;
        int guard = 0;
        while (static_cast<int>(edges.size()) < m && ++guard < 1000) {
            int sz = 2 + static_cast<int>(rng() % (max_edge - 1));
            std::set<int> e;
            while (static_cast<int>(e.size()) < sz) e.insert(static_cast<int>(rng() % n));
            edges.insert(std::vector<int>(e.begin(), e.end()));
        }
        if (static_cast<int>(edges.size()) < m) continue;
        Hypergraph h(n, std::vector<std::vector<int>>(edges.begin(), edges.end()));
        auto res = find_berge_cycle_in_residue(h, {0, 1});
        if (res.determinate && !res.witness) return h;
    }
    throw std::runtime_error("gen_random_ternary_hypergraph: rejection budget exhausted");
}

int pair_count(int n) { return n * (n - 1) / 2; }

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    std::vector<std::pair<int, int>> es;
    int idx = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++idx)
            if ((mask >> idx) & 1) es.emplace_back(u, v);
    return Graph(n, es);
}

}  // namespace ternary
