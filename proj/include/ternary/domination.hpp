#ifndef TERNARY_DOMINATION_HPP
#define TERNARY_DOMINATION_HPP

#include <optional>
#include <utility>
#include <vector>

#include "ternary/graph.hpp"

namespace ternary {

inline constexpr int kMaxDominationVertices = 30;
inline constexpr int kMaxLineDominationEdges = 40;
inline constexpr long long kDefaultMinSetCap = 100'000;

/// Exact gamma(G) with a witness dominating set.
std::pair<int, std::vector<int>> domination_number(const Graph& g);

/// Exact i(G); the search runs over maximal independent sets.
std::pair<int, std::vector<int>> independent_domination_number(const Graph& g);

struct MinSetEnumeration {
    int i_value = 0;
    std::vector<std::vector<int>> sets;  // sorted vertex sets, lexicographic order
    bool truncated = false;
};

/// All minimum independent dominating sets, capped.
MinSetEnumeration enumerate_min_independent_dominating_sets(
    const Graph& g, long long cap = kDefaultMinSetCap);

/// gamma(L(G)) with the witness mapped back to edges of g.
std::pair<int, std::vector<std::pair<int, int>>> line_domination_number(const Graph& g);

/// Residue classes of path positions, 1-based: L = 1, M = 2, R = 0 (mod 3).
struct PathPartition {
    std::vector<int> L, M, R;
};

/// Partition of a path graph's vertices by position; p must be a path and
/// the order is the one starting at its smaller-labeled endpoint.
PathPartition partition_path(const Graph& p);

/// Some v with i(G - v) >= i(G); pre: g connected (0,1)-ternary.
/// nullopt would contradict the deletion theorem and is a failure artifact.
std::optional<int> check_vertex_monotone(const Graph& g);

/// Per-clause verdicts for the structure theorem on a 2-connected
/// (0,1)-ternary graph with 3m+2 vertices.
struct BiconnectedTheoremReport {
    int m = 0;
    int i_value = 0;
    bool i_equals_m_plus_1 = false;
    bool no_min_set_has_admissible_pair = false;
    bool deletion_monotone = false;     // i(G-x) >= i(G) for all x
    bool every_vertex_in_some_min_set = false;
    bool enumeration_complete = true;   // false: universal clauses indeterminate
    std::vector<int> witness_set;       // populated on a clause failure
    std::pair<int, int> witness_pair{-1, -1};
    int witness_vertex = -1;
    bool all_pass() const {
        return enumeration_complete && i_equals_m_plus_1 && no_min_set_has_admissible_pair &&
               deletion_monotone && every_vertex_in_some_min_set;
    }
};

BiconnectedTheoremReport check_biconnected_theorem(const Graph& g,
                                                   long long cap = kDefaultMinSetCap);

}  // namespace ternary

#endif
