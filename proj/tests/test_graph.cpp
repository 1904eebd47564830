#include <doctest.h>

#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "ternary/gen.hpp"
#include "ternary/graph.hpp"

using namespace ternary;

TEST_CASE("path_graph degenerate and small cases") {
    Graph p1 = path_graph(1);
    CHECK(p1.n() == 1);
    CHECK(p1.edge_count() == 0);

    Graph p4 = path_graph(4);
    CHECK(p4.n() == 4);
    CHECK(p4.edge_count() == 3);
    CHECK(p4.degree(0) == 1);
    CHECK(p4.degree(1) == 2);
    CHECK(p4.degree(2) == 2);
    CHECK(p4.degree(3) == 1);

    CHECK_THROWS_AS(path_graph(0), std::invalid_argument);
}

TEST_CASE("cycle_graph small cases") {
    Graph c3 = cycle_graph(3);
    CHECK(c3.n() == 3);
    CHECK(c3.edge_count() == 3);
    Graph c5 = cycle_graph(5);
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);
    CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
}

TEST_CASE("graph construction rejects bad edges") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    validate(Graph(3, {{0, 1}, {1, 2}}));
}

TEST_CASE("adjacency and bit rows agree") {
    Graph g = gen_a_k(2);
    validate(g);
    for (int u = 0; u < g.n(); ++u)
        for (int v = 0; v < g.n(); ++v) {
            bool bit = (g.bit_row(u)[v / 64] >> (v % 64)) & 1;
            CHECK(bit == g.adjacent(u, v));
        }
}

TEST_CASE("line graph of a path is a shorter path") {
    auto [l, emap] = line_graph(path_graph(4));
    CHECK(l.n() == 3);
    CHECK(l.edge_count() == 2);
    CHECK(emap.size() == 3);
    CHECK(emap[0] == std::pair<int, int>{0, 1});
}

TEST_CASE("line graph of C_4 is C_4") {
    auto [l, emap] = line_graph(cycle_graph(4));
    CHECK(l.n() == 4);
    CHECK(l.edge_count() == 4);
    for (int v = 0; v < 4; ++v) CHECK(l.degree(v) == 2);
}

TEST_CASE("line graph edge count identity sum deg choose 2") {
    for (const Graph& g : {gen_a_k(1), gen_b_k(0), cycle_graph(7)}) {
        auto [l, emap] = line_graph(g);
        long long expect = 0;
        for (int v = 0; v < g.n(); ++v)
            expect += static_cast<long long>(g.degree(v)) * (g.degree(v) - 1) / 2;
        CHECK(l.edge_count() == expect);
        CHECK(l.n() == g.edge_count());
    }
}

TEST_CASE("delete_vertices relabels densely") {
    Graph c5 = cycle_graph(5);
    auto [p4, relabel] = delete_vertices(c5, {0});
    CHECK(p4.n() == 4);
    CHECK(p4.edge_count() == 3);
    CHECK(relabel[0] == -1);
    CHECK(relabel[1] == 0);
    CHECK(relabel[4] == 3);

    auto [empty, r2] = delete_vertices(c5, {0, 1, 2, 3, 4});
    CHECK(empty.n() == 0);

    // C_4 minus a closed neighborhood leaves a single vertex
    Graph c4 = cycle_graph(4);
    std::vector<int> closed = {0};
    for (int u : c4.neighbors(0)) closed.push_back(u);
    auto [one, r3] = delete_vertices(c4, closed);
    CHECK(one.n() == 1);
    CHECK(one.edge_count() == 0);
}

TEST_CASE("biconnectivity uses the at-least-3-vertices convention") {
    CHECK_FALSE(is_biconnected(path_graph(2)));  // K_2
    CHECK(is_biconnected(cycle_graph(5)));
    CHECK_FALSE(is_biconnected(path_graph(4)));
    CHECK_FALSE(is_biconnected(Graph(0, {})));
}

TEST_CASE("block-cut tree of simple shapes") {
    BlockCutTree t1 = block_cut_tree(cycle_graph(5));
    CHECK(t1.blocks.size() == 1);
    CHECK(t1.cut_vertices.empty());

    BlockCutTree t2 = block_cut_tree(path_graph(4));
    CHECK(t2.blocks.size() == 3);
    CHECK(t2.cut_vertices == std::vector<int>{1, 2});
}

TEST_CASE("block-cut tree of two 4-cycles glued at one vertex") {
    // A_1 shape: path 0-1-2 with both edges replaced by induced C_4
    Graph a1 = gen_a_k(1);
    CHECK(a1.n() == 7);
    BlockCutTree t = block_cut_tree(a1);
    CHECK(t.blocks.size() == 2);
    CHECK(t.cut_vertices.size() == 1);
    CHECK(t.cut_vertices[0] == 1);  // the middle path vertex
    for (const auto& b : t.blocks) CHECK(b.size() == 4);
    CHECK_THROWS_AS(block_cut_tree(Graph(2, {})), std::invalid_argument);
}

TEST_CASE("connectivity on exhaustive n<=5 agrees with a reachability oracle") {
    for (int n = 1; n <= 5; ++n) {
        std::uint64_t total = std::uint64_t{1} << pair_count(n);
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            Graph g = graph_from_edge_mask(n, mask);
            // oracle: transitive closure over subsets
            std::set<int> reach = {0};
            for (int round = 0; round < n; ++round)
                for (auto [u, v] : g.edges()) {
                    if (reach.count(u)) reach.insert(v);
                    if (reach.count(v)) reach.insert(u);
                }
            bool conn = static_cast<int>(reach.size()) == n;
            CHECK(is_connected(g) == conn);
        }
    }
}
