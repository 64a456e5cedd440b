#include "mis/brute_force.hpp"
#include "mis/generate.hpp"
#include "mis/graph.hpp"
#include "mis/graph_io.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace mis;

TEST_CASE("edge-list parsing") {
    Graph g = parse_graph("0 1\n1 2", GraphFormat::edge_list);
    CHECK(g.num_vertices() == 3);
    CHECK(g.num_edges() == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));
    CHECK(!g.has_edge(0, 2));

    SUBCASE("duplicates and symmetric repeats collapse") {
        Graph k2 = parse_graph("0 1\n0 1\n1 0", GraphFormat::edge_list);
        CHECK(k2.num_vertices() == 2);
        CHECK(k2.num_edges() == 1);
    }
    SUBCASE("comments and blank lines") {
        Graph k2 = parse_graph("# a comment\n% another\n\n0 1\n", GraphFormat::edge_list);
        CHECK(k2.num_edges() == 1);
    }
    SUBCASE("nodes directive preserves isolated tail vertices") {
        Graph iso = parse_graph("# nodes 5\n0 1\n", GraphFormat::edge_list);
        CHECK(iso.num_vertices() == 5);
        CHECK(iso.num_edges() == 1);
    }
    SUBCASE("malformed line reports its number") {
        CHECK_THROWS_WITH_AS(parse_graph("0 1\nbogus", GraphFormat::edge_list),
                             doctest::Contains("line 2"), ParseError);
        CHECK_THROWS_AS(parse_graph("0 1 2", GraphFormat::edge_list), ParseError);
        CHECK_THROWS_AS(parse_graph("-1 0", GraphFormat::edge_list), ParseError);
    }
}

TEST_CASE("metis parsing") {
    Graph g = parse_graph("3 2\n2\n1 3\n2\n", GraphFormat::metis);
    CHECK(g.num_vertices() == 3);
    CHECK(g.num_edges() == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));

    CHECK_THROWS_AS(parse_graph("2 1\n2\n", GraphFormat::metis), ParseError);       // missing line
    CHECK_THROWS_AS(parse_graph("2 1\n2 3\n1\n", GraphFormat::metis), ParseError);  // out of range
    CHECK_THROWS_AS(parse_graph("2 1\n1\n1\n", GraphFormat::metis), ParseError);    // strict self-loop
    CHECK_NOTHROW(parse_graph("2 1\n1 2\n1\n", GraphFormat::metis, false));
    CHECK_THROWS_AS(parse_graph("3 2 1\nlines\n", GraphFormat::metis), ParseError); // weighted fmt
}

TEST_CASE("dimacs parsing") {
    Graph g = parse_graph("c comment\np edge 3 2\ne 1 2\ne 2 3\n", GraphFormat::dimacs);
    CHECK(g.num_vertices() == 3);
    CHECK(g.num_edges() == 2);
    CHECK(g.has_edge(0, 1));

    CHECK_THROWS_AS(parse_graph("p edge 2 1\ne 1 3\n", GraphFormat::dimacs), ParseError);
    CHECK_THROWS_AS(parse_graph("p edge 2 1\ne 1 1\n", GraphFormat::dimacs), ParseError);
    CHECK_THROWS_AS(parse_graph("e 1 2\n", GraphFormat::dimacs), ParseError);
    CHECK_THROWS_AS(parse_graph("p edge 2 1\nx 1 2\n", GraphFormat::dimacs), ParseError);
}

TEST_CASE("serialization round-trips") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Graph g = generate_gnp(12, 0.1 * (seed % 8), seed);
        Graph back = parse_graph(to_edge_list(g), GraphFormat::edge_list);
        CHECK(back == g);
        CHECK(to_edge_list(back) == to_edge_list(g));
    }

    SUBCASE("other formats normalize through the canonical edge list") {
        // trailing isolated vertex 4 survives via the nodes directive
        Graph m = parse_graph("5 2\n2\n1 3\n2\n\n\n", GraphFormat::metis);
        CHECK(m.num_vertices() == 5);
        Graph back = parse_graph(to_edge_list(m), GraphFormat::edge_list);
        CHECK(back == m);

        Graph d = parse_graph("p edge 4 1\ne 1 4\n", GraphFormat::dimacs);
        CHECK(parse_graph(to_edge_list(d), GraphFormat::edge_list) == d);
    }
}

TEST_CASE("connected components") {
    Graph g = parse_graph("0 1\n2 3\n", GraphFormat::edge_list);
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == VertexSet{0, 1});
    CHECK(comps[1] == VertexSet{2, 3});

    CHECK(connected_components(Graph()).empty());
    CHECK(connected_components(generate_cycle(5)).size() == 1);

    SUBCASE("no edge crosses two components") {
        Graph r = generate_gnp(14, 0.15, 7);
        auto parts = connected_components(r);
        for (size_t a = 0; a < parts.size(); ++a)
            for (size_t b = a + 1; b < parts.size(); ++b)
                for (int u : parts[a])
                    for (int v : parts[b])
                        CHECK(!r.has_edge(u, v));
    }
}

TEST_CASE("induced subgraphs") {
    Graph c4 = generate_cycle(4);
    auto [k2, map1] = induced_subgraph(c4, {0, 1});
    CHECK(k2.num_vertices() == 2);
    CHECK(k2.num_edges() == 1);
    CHECK(map1 == std::vector<int>{0, 1});

    auto [iso, map2] = induced_subgraph(c4, {0, 2});
    CHECK(iso.num_edges() == 0);
    CHECK(map2 == std::vector<int>{0, 2});

    Graph p3 = generate_path(3);
    auto [same, map3] = induced_subgraph(p3, {0, 1, 2});
    CHECK(same == p3);
    CHECK(map3 == std::vector<int>{0, 1, 2});

    CHECK_THROWS_AS(induced_subgraph(p3, {0, 7}), std::invalid_argument);
}

TEST_CASE("generators") {
    Graph c4 = generate_cycle(4);
    CHECK(c4.num_vertices() == 4);
    CHECK(c4.num_edges() == 4);

    Graph star = generate_star(5);
    CHECK(star.degree(0) == 5);
    for (int leaf = 1; leaf <= 5; ++leaf)
        CHECK(star.degree(leaf) == 1);

    for (std::uint64_t s = 0; s < 3; ++s)
        CHECK(generate_gnp(10, 0.0, s).num_edges() == 0);

    SUBCASE("gnp is deterministic per seed") {
        CHECK(generate_gnp(20, 0.3, 11) == generate_gnp(20, 0.3, 11));
        CHECK(!(generate_gnp(20, 0.3, 11) == generate_gnp(20, 0.3, 12)));
    }

    SUBCASE("gnp adjacency is symmetric and loop-free") {
        Graph g = generate_gnp(25, 0.3, 17);
        long degree_sum = 0;
        for (int u : g.live_vertices()) {
            CHECK(!g.has_edge(u, u));
            degree_sum += g.degree(u);
            for (int v : g.neighbors(u))
                CHECK(g.has_edge(v, u));
        }
        CHECK(degree_sum == 2 * g.num_edges());
    }

    SUBCASE("chordal graphs admit a perfect elimination ordering") {
        for (std::uint64_t s = 0; s < 10; ++s) {
            Graph g = generate_chordal(40, s);
            // peel simplicial vertices greedily; chordal iff this empties it
            bool progress = true;
            while (g.num_vertices() > 0 && progress) {
                progress = false;
                for (int v : g.live_vertices()) {
                    bool simplicial = true;
                    const auto& nbrs = g.neighbors(v);
                    for (auto it = nbrs.begin(); it != nbrs.end() && simplicial; ++it)
                        for (auto jt = std::next(it); jt != nbrs.end() && simplicial; ++jt)
                            simplicial = g.has_edge(*it, *jt);
                    if (simplicial) {
                        g.remove_vertex(v);
                        progress = true;
                        break;
                    }
                }
            }
            CHECK(g.num_vertices() == 0);
        }
    }

    CHECK_THROWS_AS(generate_cycle(0), std::invalid_argument);
    CHECK_THROWS_AS(generate_gnp(5, 1.5, 0), std::invalid_argument);
}

TEST_CASE("brute-force oracle") {
    CHECK(brute_force_mis(generate_gnp(3, 1.0, 0)).size() == 1); // K3
    CHECK(brute_force_mis(generate_cycle(5)).size() == 2);
    CHECK(brute_force_mis(generate_path(3)) == VertexSet{0, 2});

    SUBCASE("lexicographically smallest maximum set") {
        Graph g = parse_graph("0 1\n2 3\n", GraphFormat::edge_list);
        CHECK(brute_force_mis(g) == VertexSet{0, 2});
    }

    SUBCASE("independent and maximal on random graphs") {
        for (std::uint64_t s = 0; s < 40; ++s) {
            Graph g = generate_gnp(12, 0.25, s);
            VertexSet best = brute_force_mis(g);
            CHECK(is_independent_set(g, best));
            for (int v : g.live_vertices()) {
                if (std::binary_search(best.begin(), best.end(), v))
                    continue;
                bool extendable = true;
                for (int w : best)
                    if (g.has_edge(v, w))
                        extendable = false;
                CHECK(!extendable);
            }
        }
    }

    CHECK_THROWS_AS(brute_force_mis(Graph(25)), std::invalid_argument);
}

TEST_CASE("graph mutation bookkeeping") {
    Graph g = generate_cycle(4);
    g.remove_vertex(0);
    CHECK(g.num_vertices() == 3);
    CHECK(g.num_edges() == 2);
    CHECK(!g.alive(0));
    for (int v : g.live_vertices())
        for (int w : g.neighbors(v))
            CHECK(g.alive(w));
    CHECK_THROWS_AS(g.neighbors(0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);

    long sum = 0;
    for (int v : g.live_vertices())
        sum += g.degree(v);
    CHECK(sum == 2 * g.num_edges());
}
