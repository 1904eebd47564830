#ifndef TERNARY_GRAPH_HPP
#define TERNARY_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace ternary {

/// Simple undirected graph on vertices 0..n-1.
/// Immutable after construction; neighbor lists are sorted and the
/// bit rows mirror them word-by-word.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    int edge_count() const { return edge_count_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(int u, int v) const;

    /// Adjacency bit row of v, one uint64 word per 64 vertices.
    const std::vector<std::uint64_t>& bit_row(int v) const { return bits_[v]; }
    int words() const { return words_; }

    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int n_ = 0;
    int edge_count_ = 0;
    int words_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<std::uint64_t>> bits_;
};

/// Fixed-size vertex set as packed words; companion to Graph::bit_row.
struct VertexBitset {
    std::vector<std::uint64_t> w;
    explicit VertexBitset(int n) : w((n + 63) / 64, 0) {}
    void set(int v) { w[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void reset(int v) { w[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    bool test(int v) const { return (w[v >> 6] >> (v & 63)) & 1; }
    int count() const;
};

// -- constructions -------------------------------------------------------

/// Path on n vertices (n-1 edges), vertices 0..n-1 in order.
Graph path_graph(int n);

/// Cycle on n >= 3 vertices.
Graph cycle_graph(int n);

/// Line graph of g. The returned map lists, for each line-graph vertex,
/// the underlying edge of g (u < v). The map order is the sorted edge order.
std::pair<Graph, std::vector<std::pair<int, int>>> line_graph(const Graph& g);

/// Induced subgraph on V(g) \ s, densely relabeled.
/// relabel[old] = new label, or -1 for deleted vertices.
std::pair<Graph, std::vector<int>> delete_vertices(const Graph& g,
                                                   const std::vector<int>& s);

// -- connectivity --------------------------------------------------------

bool is_connected(const Graph& g);

/// 2-connectivity in the strict sense: >= 3 vertices, connected, no cut vertex.
bool is_biconnected(const Graph& g);

/// Block-cut tree of a connected graph. Blocks are maximal 2-connected
/// subgraphs with K_2 allowed, given as sorted vertex sets.
struct BlockCutTree {
    std::vector<std::vector<int>> blocks;
    std::vector<int> cut_vertices;                  // sorted
    std::vector<std::vector<int>> block_cut_edges;  // per block: incident cut vertices
};
BlockCutTree block_cut_tree(const Graph& g);

/// Checks symmetry/simplicity/edge-count bookkeeping; throws on violation.
void validate(const Graph& g);

}  // namespace ternary

#endif
