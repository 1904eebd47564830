#ifndef TERNARY_EARS_HPP
#define TERNARY_EARS_HPP

#include <optional>
#include <vector>

#include "ternary/cycles.hpp"
#include "ternary/graph.hpp"

namespace ternary {

struct Ear {
    int u, v;                   // endpoints, already in the built graph
    std::vector<int> internal;  // fresh internal vertices, in path order u -> v
    int length() const { return static_cast<int>(internal.size()) + 1; }
};

struct EarDecomposition {
    std::vector<int> initial_cycle;  // P_0 as a vertex sequence
    std::vector<Ear> ears;           // attachment order
    ResidueSpec spec;
};

/// Ear decomposition of a 2-connected graph with all cycles k (mod m),
/// starting from a shortest cycle. Deterministic: smallest-index choices.
EarDecomposition ear_decompose(const Graph& g, const ResidueSpec& spec);

/// Structural invariants of a decomposition against its host graph:
/// endpoints in the built graph, internal vertices fresh, union = g,
/// initial cycle length = k and every ear length = k' (mod m).
void validate_decomposition(const Graph& g, const EarDecomposition& d);

/// True iff every ear's endpoints both lie on a single earlier ear
/// (endpoints of that ear included; the initial cycle counts as an ear).
bool check_same_ear_property(const EarDecomposition& d);

struct NiceCycle {
    Cycle cycle;
    int hub_u, hub_v;  // the two vertices of degree > 2
    std::vector<int> arc_plus, arc_minus;  // u..v vertex sequences
};

/// All nice cycles of a 2-connected non-cycle graph whose cycles are all
/// k (mod m): exactly two hubs of degree > 2, both arcs of length k' (mod m).
std::vector<NiceCycle> find_nice_cycles(const Graph& g, const ResidueSpec& spec,
                                        long long max_count = kDefaultCycleCap);

/// Attach a fresh ear of the given length (>= 2) between u and v.
Graph attach_ear(const Graph& g, int u, int v, int length);

/// Definitional admissibility test for a 2-connected (0,1)-ternary g:
/// attaching a length-4 ear at {u,v} must leave the graph 2-connected
/// and (0,1)-ternary.
bool is_admissible_pair(const Graph& g, int u, int v);

}  // namespace ternary

#endif
