#include <doctest.h>

#include "oracles.hpp"
#include "ternary/domination.hpp"
#include "ternary/gen.hpp"
#include "ternary/graph.hpp"
#include "ternary/homology.hpp"
#include "ternary/hypergraph.hpp"

using namespace ternary;

TEST_CASE("independence complexes of tiny graphs") {
    SimplicialComplex k2 = independence_complex(path_graph(2));
    CHECK(k2.dim() == 0);
    CHECK(k2.faces_by_dim[0].size() == 2);

    SimplicialComplex c4 = independence_complex(cycle_graph(4));
    CHECK(c4.dim() == 1);
    CHECK(c4.faces_by_dim[1].size() == 2);  // the two diagonals

    SimplicialComplex full = independence_complex(Graph(3, {}));
    CHECK(full.dim() == 2);
    CHECK(full.total_faces() == 7);
}

TEST_CASE("face budget throws instead of silently truncating") {
    CHECK_THROWS(independence_complex(Graph(25, {}), 1000));
}

TEST_CASE("homology of canonical complexes") {
    // full simplex: cone, trivial reduced homology
    HomologyProfile full = reduced_homology(independence_complex(Graph(3, {})));
    CHECK(full.d_value.kind == DValue::HomologyTrivial);
    CHECK(full.total_betti() == 0);

    // boundary of the 2-simplex = S^1, realized as I of the 3-edge hypergraph
    Hypergraph tri(3, {{0, 1, 2}});
    HomologyProfile s1 = reduced_homology(independence_complex_hyper(tri));
    CHECK(s1.d_value == DValue{DValue::Sphere, 1});

    HomologyProfile c5 = reduced_homology(independence_complex(cycle_graph(5)));
    CHECK(c5.d_value == DValue{DValue::Sphere, 1});
    CHECK(c5.torsion_free());
}

TEST_CASE("d-values of cycles follow the three-residue pattern") {
    // I(C_n): a single sphere unless n is divisible by 3, in which case
    // it is a wedge of two spheres (total Betti 2 -> Other)
    for (int n = 3; n <= 12; ++n) {
        HomologyProfile p = reduced_homology(independence_complex(cycle_graph(n)));
        CHECK(p.torsion_free());
        if (n % 3 == 0) {
            CHECK(p.d_value.kind == DValue::Other);
            CHECK(p.total_betti() == 2);
        } else {
            int k = (n + 1) / 3;  // n = 3k-1 or 3k+1
            CHECK(p.d_value == DValue{DValue::Sphere, k - 1});
        }
    }
}

TEST_CASE("betti numbers agree with the dense GF(2) oracle on random graphs") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        std::uint64_t mask = seed * 2654435761u;
        Graph g = graph_from_edge_mask(6, mask % (1u << 15));
        SimplicialComplex c = independence_complex(g);
        HomologyProfile p = reduced_homology(c);
        if (!p.torsion_free()) continue;
        CHECK(p.betti == oracles::betti_mod2_oracle(c));
    }
    for (int n = 3; n <= 10; ++n) {
        SimplicialComplex c = independence_complex(cycle_graph(n));
        CHECK(reduced_homology(c).betti == oracles::betti_mod2_oracle(c));
    }
}

TEST_CASE("torsion is computed, not just pattern-matched: RP^2") {
    // minimal 6-vertex triangulation of the real projective plane
    SimplicialComplex rp2;
    rp2.vertex_count = 6;
    std::vector<std::vector<int>> tris = {{0, 1, 2}, {0, 1, 5}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5},
                                          {1, 2, 4}, {1, 3, 4}, {1, 3, 5}, {2, 3, 5}, {2, 4, 5}};
    std::set<std::vector<int>> edges, verts;
    for (auto& t : tris) {
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) edges.insert({t[i], t[j]});
        for (int v : t) verts.insert({v});
    }
    rp2.faces_by_dim = {{verts.begin(), verts.end()},
                        {edges.begin(), edges.end()},
                        tris};
    HomologyProfile p = reduced_homology(rp2);
    CHECK(p.betti == std::vector<long long>{0, 0, 0});
    REQUIRE(p.torsion.size() == 3);
    CHECK(p.torsion[1] == std::vector<std::int64_t>{2});
    CHECK(p.d_value.kind == DValue::Other);
}

TEST_CASE("fold_reduce preserves the homology profile") {
    auto trim = [](HomologyProfile p) {
        while (!p.betti.empty() && p.betti.back() == 0) p.betti.pop_back();
        while (!p.torsion.empty() && p.torsion.back().empty()) p.torsion.pop_back();
        return p;
    };
    for (const Graph& g : {gen_a_k(1), path_graph(9), cycle_graph(7), gen_ear_grown(14, 2, 5)}) {
        auto [h, log] = fold_reduce(g);
        HomologyProfile before = trim(reduced_homology(independence_complex(g)));
        HomologyProfile after = trim(reduced_homology(independence_complex(h)));
        CHECK(before.betti == after.betti);
        CHECK(before.torsion == after.torsion);
        // replay the log: each removal must be justified at its step
        CHECK(h.n() == g.n() - static_cast<int>(log.size()));
    }
}

TEST_CASE("fold_reduce base cases") {
    // C_5: all neighborhoods incomparable, nothing folds
    auto [c5, log5] = fold_reduce(cycle_graph(5));
    CHECK(log5.empty());
    CHECK(c5.n() == 5);

    // star K_{1,3}: the leaves share a neighborhood and fold onto each other
    Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    auto [s, logs] = fold_reduce(star);
    CHECK(logs.size() == 2);
    CHECK(d_of_graph(star) == DValue{DValue::Sphere, 0});
}

TEST_CASE("d_of_graph on named instances") {
    CHECK(d_of_graph(cycle_graph(4)) == DValue{DValue::Sphere, 0});
    CHECK(d_of_graph(path_graph(4)).kind == DValue::HomologyTrivial);
    CHECK(d_of_graph(gen_a_k(1)) == DValue{DValue::Sphere, 1});
    CHECK(d_of_graph(gen_a_k(1), false) == DValue{DValue::Sphere, 1});
    CHECK(d_of_graph(path_graph(5)) == DValue{DValue::Sphere, 1});  // I(A_1) ~ I(P_5)
}

TEST_CASE("self-check counters advance and stay clean") {
    long long before = homology_checks_run();
    reduced_homology(independence_complex(cycle_graph(6)));
    CHECK(homology_checks_run() > before);
    CHECK(homology_check_failures() == 0);
}

TEST_CASE("euler characteristic identity holds on the exhaustive n=5 sweep") {
    for (std::uint64_t mask = 0; mask < (1u << 10); ++mask) {
        Graph g = graph_from_edge_mask(5, mask);
        SimplicialComplex c = independence_complex(g);
        HomologyProfile p = reduced_homology(c);
        long long chi = 0;
        for (int d = 0; d <= c.dim(); ++d)
            chi += (d % 2 ? -1 : 1) * static_cast<long long>(c.faces_by_dim[d].size());
        long long chi_h = 1;  // reduced homology: chi = 1 + sum (-1)^d b~_d
        for (std::size_t d = 0; d < p.betti.size(); ++d)
            chi_h += (d % 2 ? -1 : 1) * p.betti[d];
        CHECK(chi == chi_h);
    }
}
