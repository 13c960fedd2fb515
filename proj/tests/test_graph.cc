#include "doctest.h"
#include "helpers.hh"

#include <iasl/error.hh>

#include <algorithm>
#include <map>
#include <numeric>

using namespace iasl;

namespace
{
    /// Independent isomorphism test: try every vertex permutation.
    auto brute_isomorphic(const Graph & a, const Graph & b) -> bool
    {
        if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
            return false;
        std::vector<int> p(a.vertex_count());
        std::iota(p.begin(), p.end(), 0);
        do {
            bool ok = true;
            for (auto [u, v] : a.edges())
                if (! b.adjacent(p[u], p[v])) {
                    ok = false;
                    break;
                }
            if (ok)
                return true;
        } while (std::next_permutation(p.begin(), p.end()));
        return false;
    }

    /// Connected labeled graphs on n vertices by direct enumeration of edge subsets.
    auto brute_labeled_connected(int n) -> long
    {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                pairs.emplace_back(i, j);
        long count = 0;
        for (long mask = 0; mask < (1L << pairs.size()); ++mask) {
            std::vector<int> parent(n);
            std::iota(parent.begin(), parent.end(), 0);
            std::function<int (int)> find = [&] (int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
            int components = n;
            for (std::size_t k = 0; k < pairs.size(); ++k)
                if (mask & (1L << k)) {
                    int a = find(pairs[k].first), b = find(pairs[k].second);
                    if (a != b) {
                        parent[a] = b;
                        --components;
                    }
                }
            if (components == 1)
                ++count;
        }
        return count;
    }
}

TEST_SUITE("graph")
{
    TEST_CASE("parse examples")
    {
        auto path = testing::graph("a b\nb c\n");
        CHECK(path.vertex_count() == 3);
        CHECK(path.edge_count() == 2);
        CHECK(path.adjacent(*path.find("a"), *path.find("b")));
        CHECK_FALSE(path.adjacent(*path.find("a"), *path.find("c")));

        auto single = testing::graph("x\n");
        CHECK(single.vertex_count() == 1);
        CHECK(single.edge_count() == 0);

        auto commented = testing::graph("# header\n\na b # trailing\n  c\n");
        CHECK(commented.vertex_count() == 3);
        CHECK(commented.edge_count() == 1);
    }

    TEST_CASE("parse errors carry the line number")
    {
        try {
            parse_graph("u v\nu v\n");
            FAIL("duplicate edge accepted");
        }
        catch (const ParseError & e) {
            CHECK(e.line() == 2);
        }
        try {
            parse_graph("a b\nc c\n");
            FAIL("loop accepted");
        }
        catch (const ParseError & e) {
            CHECK(e.line() == 2);
        }
        CHECK_THROWS_AS(parse_graph("a b c\n"), ParseError);
        CHECK_THROWS_AS(parse_graph("v u\nu v\n"), ParseError);
    }

    TEST_CASE("emit round trip")
    {
        for (const auto & g : {path_graph(4), cycle_graph(5), star_graph(6), complete_bipartite_graph(3, 3), testing::graph("z\na b\nq\nb c\n")}) {
            auto text = emit_graph(g);
            auto back = parse_graph(text);
            CHECK(back == g);
            CHECK(emit_graph(back) == text);
        }
    }

    TEST_CASE("structure examples")
    {
        auto c4 = structure(cycle_graph(4));
        CHECK(c4.is_regular(2));
        CHECK(c4.pendant_vertices.empty());
        CHECK_FALSE(c4.is_tree);

        auto star = structure(star_graph(6));
        CHECK(star.is_star);
        CHECK(star.pendant_vertices.size() == 6);
        CHECK(is_star_with_leaves(star_graph(6), 6));
        CHECK_FALSE(is_star_with_leaves(star_graph(6), 5));

        auto p4 = structure(path_graph(4));
        CHECK(p4.is_tree);
        CHECK_FALSE(p4.is_star);
        CHECK(p4.pendant_vertices.size() == 2);

        CHECK(is_connected(testing::graph("a\n")));
        CHECK_FALSE(is_connected(testing::graph("a b\nc d\n")));
    }

    TEST_CASE("connected isomorphism classes")
    {
        const long expected[] = {1, 1, 2, 6, 21, 112, 853};
        for (int n = 1; n <= 7; ++n)
            CHECK(connected_graphs(n, true).size() == static_cast<std::size_t>(expected[n - 1]));
        CHECK_THROWS_AS(connected_graphs(8, true), InfeasibleError);
    }

    TEST_CASE("labeled connected graphs match direct enumeration")
    {
        for (int n = 1; n <= 5; ++n)
            CHECK(static_cast<long>(connected_graphs(n, false).size()) == brute_labeled_connected(n));
        CHECK(connected_graphs(6, false).size() == 26704);
    }

    TEST_CASE("classes are pairwise non-isomorphic and connected")
    {
        for (int n = 1; n <= 5; ++n) {
            auto all = connected_graphs(n, true);
            for (std::size_t i = 0; i < all.size(); ++i) {
                CHECK(is_connected(all[i]));
                for (std::size_t j = i + 1; j < all.size(); ++j)
                    CHECK_FALSE(brute_isomorphic(all[i], all[j]));
            }
        }
    }

    TEST_CASE("canonical code is a complete invariant on 5 vertices")
    {
        auto labeled = connected_graphs(5, false);
        std::map<std::uint32_t, Graph> representatives;
        for (const auto & g : labeled) {
            auto [it, fresh] = representatives.try_emplace(canonical_code(g), g);
            if (! fresh)
                CHECK(brute_isomorphic(it->second, g));
        }
        CHECK(representatives.size() == 21);
        CHECK(are_isomorphic(cycle_graph(5), testing::graph("a c\nc e\ne b\nb d\nd a\n")));
        CHECK_FALSE(are_isomorphic(cycle_graph(5), path_graph(5)));
    }

    TEST_CASE("eleven trees on seven vertices")
    {
        int trees = 0;
        for_each_connected_graph(7, true, [&] (const Graph & g) {
            if (g.edge_count() == 6)
                ++trees;
            return true;
        });
        CHECK(trees == 11);
    }
}
