#ifndef TERNARY_CYCLES_HPP
#define TERNARY_CYCLES_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "ternary/graph.hpp"

namespace ternary {

/// Cycle as a canonical vertex sequence: smallest vertex first, then the
/// smaller of its two cycle neighbors. Length = number of vertices = edges.
using Cycle = std::vector<int>;

struct CycleList {
    std::vector<Cycle> cycles;
    bool truncated = false;  // hit max_count; classification must not pass
};

inline constexpr long long kDefaultCycleCap = 1'000'000;

/// All simple cycles, canonical form, deterministic order.
CycleList enumerate_cycles(const Graph& g, long long max_count = kDefaultCycleCap);

/// Chordless subset of enumerate_cycles.
CycleList enumerate_induced_cycles(const Graph& g, long long max_count = kDefaultCycleCap);

/// Residue restriction "every cycle has length k mod m" with m odd;
/// k_prime is the unique solution of 2x = k (mod m).
struct ResidueSpec {
    int m;
    int k;
    int k_prime;
    ResidueSpec(int k_, int m_);
};

enum class TernaryTag { NotTernary, TernaryOnly, ZeroOneTernary };

struct TernaryClass {
    TernaryTag tag;
    std::optional<Cycle> witness;  // induced cycle violating the stricter class
};

/// Classifies via induced cycles (the definitional form).
/// nullopt = enumeration truncated, classification indeterminate.
std::optional<TernaryClass> classify_ternary(const Graph& g,
                                             long long max_count = kDefaultCycleCap);

/// True iff every simple cycle has length k (mod m); vacuously true on forests.
/// nullopt on truncation.
std::optional<bool> all_cycles_in_residue(const Graph& g, const ResidueSpec& spec,
                                          long long max_count = kDefaultCycleCap);

/// All simple u-v paths as vertex sequences (u first), budget-bounded.
struct PathList {
    std::vector<std::vector<int>> paths;
    bool truncated = false;
};
PathList enumerate_paths(const Graph& g, int u, int v, long long max_count = kDefaultCycleCap);

/// Witness of the forbidden configuration: three internally disjoint u-v
/// paths plus a path joining internal vertices of two of them.
struct ThetaViolation {
    int u, v;
    std::vector<int> p1, p2, p3;  // the disjoint u-v paths
    std::vector<int> bridge;      // connecting path, internally avoiding them
};

struct ThetaSearchResult {
    bool determinate = true;  // false: combinatorial budget exceeded
    std::optional<ThetaViolation> violation;
};

/// Exhaustive search for the configuration excluded when all cycles are
/// k mod m. Any witness signals a bug or a precondition breach upstream.
ThetaSearchResult find_theta_violation(const Graph& g, const ResidueSpec& spec,
                                       long long budget = 50'000'000);

/// Canonicalize a cyclic vertex sequence (helper shared with tests).
Cycle canonical_cycle(const std::vector<int>& cyc);

}  // namespace ternary

#endif
