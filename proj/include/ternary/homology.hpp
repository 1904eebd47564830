#ifndef TERNARY_HOMOLOGY_HPP
#define TERNARY_HOMOLOGY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ternary/graph.hpp"
#include "ternary/hypergraph.hpp"

namespace ternary {

inline constexpr long long kDefaultFaceBudget = 2'000'000;

/// Abstract simplicial complex; faces_by_dim[d] holds the sorted
/// (d+1)-vertex faces in lexicographic order.
struct SimplicialComplex {
    int vertex_count = 0;
    std::vector<std::vector<std::vector<int>>> faces_by_dim;

    int dim() const { return static_cast<int>(faces_by_dim.size()) - 1; }
    long long total_faces() const;
};

/// Faces = independent sets of g.
SimplicialComplex independence_complex(const Graph& g, long long face_budget = kDefaultFaceBudget);

/// Faces = vertex subsets containing no edge of h. Every edge must have size >= 2.
SimplicialComplex independence_complex_hyper(const Hypergraph& h,
                                             long long face_budget = kDefaultFaceBudget);

struct DValue {
    enum Kind { Sphere, HomologyTrivial, Other } kind = Other;
    int d = -1;  // valid for Sphere
    std::string str() const;
    bool operator==(const DValue& o) const { return kind == o.kind && (kind != Sphere || d == o.d); }
};

/// Reduced integer homology of the complex: Betti numbers, torsion
/// invariant factors per dimension, and the derived sphere/trivial tag.
struct HomologyProfile {
    std::vector<long long> betti;                        // b~_0 .. b~_D
    std::vector<std::vector<std::int64_t>> torsion;      // invariant factors > 1, per dim
    DValue d_value;

    bool torsion_free() const;
    long long total_betti() const;
};

/// Exact reduced homology via Smith normal form over the integers.
/// Every call verifies boundary-of-boundary = 0 and the Euler
/// characteristic identity; violations throw and are counted.
HomologyProfile reduced_homology(const SimplicialComplex& c);

/// Counters for the built-in consistency checks (process-wide).
long long homology_checks_run();
long long homology_check_failures();

struct FoldStep {
    int removed;  // label at the time of the fold
    int witness;  // non-adjacent vertex with N(witness) subseteq N(removed)
};

/// Repeated neighborhood folds: delete u when a non-adjacent v has
/// N(v) subseteq N(u); on equal neighborhoods the larger label goes.
/// Preserves the homology profile of the independence complex.
std::pair<Graph, std::vector<FoldStep>> fold_reduce(const Graph& g);

/// d(G): Sphere(d) -> d, trivial -> "*", anything else reported as Other.
DValue d_of_graph(const Graph& g, bool use_fold = true,
                  long long face_budget = kDefaultFaceBudget);

}  // namespace ternary

#endif
