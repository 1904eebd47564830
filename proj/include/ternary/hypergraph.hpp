#ifndef TERNARY_HYPERGRAPH_HPP
#define TERNARY_HYPERGRAPH_HPP

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "ternary/graph.hpp"

namespace ternary {

/// Hypergraph: vertex count plus distinct nonempty sorted edges.
struct Hypergraph {
    int n = 0;
    std::vector<std::vector<int>> edges;

    Hypergraph() = default;
    Hypergraph(int n_, std::vector<std::vector<int>> edges_);

    static Hypergraph from_graph(const Graph& g);
    int max_edge_size() const;
    bool has_unit_edge() const;
};

/// Berge cycle v_1 e_1 ... v_k e_k with v_i, v_{i+1} in e_i (cyclically);
/// vertices and edges distinct, k >= 2.
struct BergeCycle {
    std::vector<int> vertices;
    std::vector<int> edge_indices;
    int length() const { return static_cast<int>(vertices.size()); }
};

struct BergeSearchResult {
    bool determinate = true;  // false: extension budget exhausted
    std::optional<BergeCycle> witness;
};

/// Backtracking search for a Berge cycle whose length mod 3 lies in
/// `residues`; absent only after exhaustive search.
BergeSearchResult find_berge_cycle_in_residue(const Hypergraph& h,
                                              const std::set<int>& residues,
                                              long long budget = 10'000'000);

/// Exact hypergraph domination number: v is dominated by W when v is in W
/// or some edge e with v in e has e minus v inside W.
std::pair<int, std::vector<int>> hyper_domination_number(const Hypergraph& h);

/// Replace edge e = {v_1..v_k} by hub w, spokes u_i and pendant edges
/// u_i v_i; w gets the first fresh label, then u_1..u_k in e's order.
Hypergraph h_e_transform(const Hypergraph& h, const std::vector<int>& e);

struct GraphReduction {
    Graph graph;
    int transforms_applied = 0;
    int unit_edges_dropped = 0;
};

/// Drop size-1 edges, then transform every edge of size >= 3 in sorted
/// order until only size-2 edges remain.
GraphReduction reduce_to_graph(const Hypergraph& h);

struct HyperTheoremVerdict {
    bool determinate = true;
    int gamma = 0;
    bool d_is_star = false;
    int d = -1;  // valid when !d_is_star and determinate
    bool pass = false;
};

/// d(H) = "*" or d(H) = gamma(H) - 1, for a (0,1)-ternary hypergraph
/// without size-1 edges.
HyperTheoremVerdict check_hyper_theorem(const Hypergraph& h);

}  // namespace ternary

#endif
