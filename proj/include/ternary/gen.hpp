#ifndef TERNARY_GEN_HPP
#define TERNARY_GEN_HPP

#include <cstdint>
#include <vector>

#include "ternary/graph.hpp"
#include "ternary/hypergraph.hpp"

namespace ternary {

/// Path on 3k vertices with every edge replaced by an induced 4-cycle
/// on two fresh vertices; 3k + 2(3k-1) vertices total.
Graph gen_a_k(int k);

/// Path on 9k+8 vertices with the edges at 1-based positions
/// 1, 4, ..., 9k+7 replaced by induced 4-cycles (3k+3 replacements).
Graph gen_b_k(int k);

/// Seeded random 2-connected (0,1)-ternary graph: C_5 or C_8 grown by
/// ears of length 4 or 7 at uniformly random admissible pairs. Stops
/// early when an ear would push past max_vertices. The output is
/// re-classified and asserted (0,1)-ternary.
Graph gen_ear_grown(int max_vertices, int ears, std::uint64_t seed);

/// Rejection-sampled hypergraph with no Berge cycle of length 0 or 1
/// mod 3; n <= 10 and edge sizes in [2, max_edge] with max_edge <= 4.
Hypergraph gen_random_ternary_hypergraph(int n, int m, int max_edge, std::uint64_t seed);

/// Labeled graph on n vertices selected by an edge-set bitmask over the
/// C(n,2) pairs in lexicographic order; used by exhaustive sweeps.
Graph graph_from_edge_mask(int n, std::uint64_t mask);
int pair_count(int n);

}  // namespace ternary

#endif
