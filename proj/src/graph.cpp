#include "ternary/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

namespace ternary {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges)
    : n_(n), words_((n + 63) / 64), adj_(n), bits_(n, std::vector<std::uint64_t>(words_, 0)) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("Graph: edge endpoint out of range");
        if (u == v) throw std::invalid_argument("Graph: self-loop");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (int v = 0; v < n; ++v) {
        std::sort(adj_[v].begin(), adj_[v].end());
        if (std::adjacent_find(adj_[v].begin(), adj_[v].end()) != adj_[v].end())
            throw std::invalid_argument("Graph: duplicate edge");
        for (int u : adj_[v]) bits_[v][u >> 6] |= std::uint64_t{1} << (u & 63);
    }
    edge_count_ = static_cast<int>(edges.size());
}

bool Graph::adjacent(int u, int v) const {
    return (bits_[u][v >> 6] >> (v & 63)) & 1;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> es;
    es.reserve(edge_count_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) es.emplace_back(u, v);
    return es;
}

int VertexBitset::count() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path_graph: need n >= 1");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph(n, es);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return Graph(n, es);
}

std::pair<Graph, std::vector<std::pair<int, int>>> line_graph(const Graph& g) {
    auto es = g.edges();  // sorted (u,v) with u < v
    std::vector<std::pair<int, int>> les;
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            auto [a, b] = es[i];
            auto [c, d] = es[j];
            if (a == c || a == d || b == c || b == d)
                les.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    return {Graph(static_cast<int>(es.size()), les), es};
}

std::pair<Graph, std::vector<int>> delete_vertices(const Graph& g, const std::vector<int>& s) {
    std::vector<char> del(g.n(), 0);
    for (int v : s) {
        if (v < 0 || v >= g.n()) throw std::invalid_argument("delete_vertices: vertex out of range");
        del[v] = 1;
    }
    std::vector<int> relabel(g.n(), -1);
    int m = 0;
    for (int v = 0; v < g.n(); ++v)
        if (!del[v]) relabel[v] = m++;
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : g.edges())
        if (!del[u] && !del[v]) es.emplace_back(relabel[u], relabel[v]);
    return {Graph(m, es), relabel};
}

bool is_connected(const Graph& g) {
    if (g.n() <= 1) return true;
    std::vector<char> seen(g.n(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbors(v))
            if (!seen[u]) {
                seen[u] = 1;
                ++cnt;
                stack.push_back(u);
            }
    }
    return cnt == g.n();
}

namespace {

// Hopcroft-Tarjan lowpoint DFS. Emits biconnected components as edge lists.
struct BiccState {
    const Graph& g;
    std::vector<int> num, low;
    std::vector<std::pair<int, int>> estack;
    std::vector<std::vector<std::pair<int, int>>> components;
    std::vector<char> is_cut;
    int timer = 0;

    explicit BiccState(const Graph& gr)
        : g(gr), num(gr.n(), -1), low(gr.n(), 0), is_cut(gr.n(), 0) {}

    void dfs(int v, int parent) {
        num[v] = low[v] = timer++;
        int children = 0;
        for (int u : g.neighbors(v)) {
            if (num[u] == -1) {
                estack.emplace_back(v, u);
                ++children;
                dfs(u, v);
                low[v] = std::min(low[v], low[u]);
                if (low[u] >= num[v]) {
                    if (parent != -1) is_cut[v] = 1;
                    pop_component(v, u);
                }
            } else if (u != parent && num[u] < num[v]) {
                estack.emplace_back(v, u);
                low[v] = std::min(low[v], num[u]);
            }
        }
        if (parent == -1) is_cut[v] = (children > 1);
    }

    void pop_component(int v, int u) {
        std::vector<std::pair<int, int>> comp;
        while (true) {
            auto e = estack.back();
            estack.pop_back();
            comp.push_back(e);
            if (e == std::make_pair(v, u)) break;
        }
        components.push_back(std::move(comp));
    }
};

}  // namespace

bool is_biconnected(const Graph& g) {
    if (g.n() < 3) return false;
    if (!is_connected(g)) return false;
    BiccState st(g);
    st.dfs(0, -1);
    for (int v = 0; v < g.n(); ++v)
        if (st.is_cut[v]) return false;
    return st.components.size() == 1;
}

BlockCutTree block_cut_tree(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("block_cut_tree: graph must be connected");
    BlockCutTree t;
    if (g.n() == 1) {
        t.blocks.push_back({0});
        t.block_cut_edges.push_back({});
        return t;
    }
    BiccState st(g);
    st.dfs(0, -1);
    for (int v = 0; v < g.n(); ++v)
        if (st.is_cut[v]) t.cut_vertices.push_back(v);
    for (auto& comp : st.components) {
        std::vector<int> vs;
        for (auto [u, v] : comp) {
            vs.push_back(u);
            vs.push_back(v);
        }
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        std::vector<int> cuts;
        for (int v : vs)
            if (st.is_cut[v]) cuts.push_back(v);
        t.blocks.push_back(std::move(vs));
        t.block_cut_edges.push_back(std::move(cuts));
    }
    return t;
}

void validate(const Graph& g) {
    long long deg_sum = 0;
    for (int v = 0; v < g.n(); ++v) {
        const auto& nb = g.neighbors(v);
        if (!std::is_sorted(nb.begin(), nb.end()))
            throw std::logic_error("validate: unsorted neighbor list");
        for (int u : nb) {
            if (u == v) throw std::logic_error("validate: self-loop");
            if (!g.adjacent(u, v)) throw std::logic_error("validate: asymmetric adjacency");
        }
        deg_sum += static_cast<long long>(nb.size());
    }
    if (deg_sum != 2LL * g.edge_count())
        throw std::logic_error("validate: edge count mismatch");
}

}  // namespace ternary
