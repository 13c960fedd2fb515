#include "doctest.h"
#include "helpers.hh"

#include <iasl/error.hh>

using namespace iasl;
using testing::graph;
using testing::labeling;

namespace
{
    auto k12() -> Graph { return graph("c a\nc b\n"); }

    auto k12_graceful() -> Labeling { return labeling("{0,1}", {{"c", {0}}, {"a", {1}}, {"b", {0, 1}}}); }

    auto k16_graceful() -> std::pair<Graph, Labeling>
    {
        Graph g = star_graph(6);
        Labeling f{testing::ground("{0,1,2}")};
        auto subsets = all_nonempty_subsets(f.ground());
        for (int v = 0; v < 7; ++v)
            f.assign(g.name(v), subsets[v]);
        return {g, f};
    }
}

TEST_SUITE("labeling")
{
    TEST_CASE("induced edge labels")
    {
        auto g = graph("c l\n");
        auto one = induced_edge_labels(g, labeling("{0,1}", {{"c", {0}}, {"l", {1}}}));
        REQUIRE(one.size() == 1);
        CHECK(one[0].second == IntSet{1});

        auto two = induced_edge_labels(g, labeling("{0,1,2}", {{"c", {1}}, {"l", {0, 1}}}));
        CHECK(two[0].second == IntSet{1, 2});

        CHECK_THROWS_AS(induced_edge_labels(g, labeling("{0,1}", {{"c", {0}}})), IncompleteLabelingError);
    }

    TEST_CASE("verify_iasl")
    {
        CHECK(verify_iasl(k12(), k12_graceful()).verdict);

        auto twice = verify_iasl(k12(), labeling("{0,1}", {{"c", {0}}, {"a", {1}}, {"b", {1}}}));
        CHECK_FALSE(twice.verdict);
        CHECK(twice.has(ViolationKind::injectivity));

        auto outside = verify_iasl(k12(), labeling("{0,1}", {{"c", {0}}, {"a", {3}}, {"b", {1}}}));
        CHECK_FALSE(outside.verdict);
        CHECK(outside.has(ViolationKind::not_a_subset));

        auto empty = verify_iasl(k12(), labeling("{0,1}", {{"c", {0}}, {"a", {}}, {"b", {1}}}));
        CHECK(empty.has(ViolationKind::empty_label));

        auto missing = verify_iasl(k12(), labeling("{0,1}", {{"c", {0}}, {"a", {1}}}));
        CHECK(missing.has(ViolationKind::unlabeled_vertex));

        auto stray = verify_iasl(k12(), labeling("{0,1}", {{"c", {0}}, {"a", {1}}, {"b", {0, 1}}, {"z", {0, 1}}}));
        CHECK(stray.has(ViolationKind::unknown_vertex));

        for (const auto & r : {twice, outside, empty, missing, stray})
            CHECK(r.verdict == r.violations.empty());
    }

    TEST_CASE("verify_iasi")
    {
        CHECK(verify_iasi(k12(), k12_graceful()).verdict);
        CHECK(verify_iasi(graph("a b\nb c\n"), labeling("{0,1}", {{"a", {1}}, {"b", {0}}, {"c", {0, 1}}})).verdict);
        CHECK(verify_iasi(graph("a b\nb c\nc a\n"), labeling("{0,1,2}", {{"a", {0}}, {"b", {1}}, {"c", {0, 1}}})).verdict);

        // {0,1} + {1} = {1,2} = {1,2} + {0}
        auto clash = verify_iasi(graph("a b\nc d\n"), labeling("{0,1,2}", {{"a", {0, 1}}, {"b", {1}}, {"c", {1, 2}}, {"d", {0}}}));
        CHECK_FALSE(clash.verdict);
        CHECK(clash.has(ViolationKind::injectivity));
    }

    TEST_CASE("verify_uniform")
    {
        auto path = graph("a b\nb c\nc d\n");
        auto singles = labeling("{0,1,2,3}", {{"a", {0}}, {"b", {1}}, {"c", {2}}, {"d", {3}}});
        CHECK(verify_uniform(path, singles, 1).verdict);
        CHECK_FALSE(verify_uniform(path, singles, 2).verdict);

        auto star = graph("c a\nc b\n");
        CHECK(verify_uniform(star, labeling("{0,1,2,3,4}", {{"c", {0, 1}}, {"a", {2}}, {"b", {3}}}), 2).verdict);
        for (int k = 1; k <= 4; ++k) {
            auto r = verify_uniform(k12(), k12_graceful(), k);
            CHECK_FALSE(r.verdict);
            CHECK(r.has(ViolationKind::non_uniform));
        }
    }

    TEST_CASE("set indexing numbers")
    {
        auto g = graph("a b\nc d\n");
        auto f = labeling("{0,1,2,5}", {{"a", {0, 2}}, {"b", {0, 1}}, {"c", {0}}, {"d", {5}}});
        auto numbers = set_indexing_numbers(g, f);
        REQUIRE(numbers.vertices.size() == 4);
        CHECK(numbers.vertices[0].number == 2);
        CHECK_FALSE(numbers.vertices[0].mono_indexed);
        CHECK(numbers.vertices[2].mono_indexed);
        REQUIRE(numbers.edges.size() == 2);
        CHECK(numbers.edges[0].number == 4);
        CHECK(numbers.edges[1].number == 1);
        CHECK(numbers.edges[1].mono_indexed);
    }

    TEST_CASE("verify_iasgl")
    {
        CHECK(verify_iasgl(k12(), k12_graceful()).verdict);

        auto [g, f] = k16_graceful();
        CHECK(verify_iasgl(g, f).verdict);

        // C_4 has 4 edges; 2^|X| - 2 is never 4
        auto c4 = cycle_graph(4);
        for (const char * x : {"{0,1}", "{0,1,2}"}) {
            Labeling h{testing::ground(x)};
            auto subsets = all_nonempty_subsets(h.ground());
            for (int v = 0; v < 4 && v < static_cast<int>(subsets.size()); ++v)
                h.assign(c4.name(v), subsets[v]);
            CHECK_FALSE(verify_iasgl(c4, h).verdict);
        }

        auto swapped = labeling("{0,1}", {{"c", {1}}, {"a", {0}}, {"b", {0, 1}}});
        auto r = verify_iasgl(k12(), swapped);
        CHECK_FALSE(r.verdict);
        CHECK(r.has(ViolationKind::extra_edge_image));
        CHECK(r.has(ViolationKind::missing_edge_image));
    }

    TEST_CASE("an odd edge count never passes even when the image is complete")
    {
        // K_{1,6} plus {1}-{0,1}: every required image appears but {1,2} twice
        auto [g, f] = k16_graceful();
        auto one = *g.find("1");
        auto zero_one = *g.find("3");
        REQUIRE(f.of(g, one) == IntSet{1});
        REQUIRE(f.of(g, zero_one) == IntSet{0, 1});
        g.add_edge(one, zero_one);
        auto r = verify_iasgl(g, f);
        CHECK_FALSE(r.verdict);
        CHECK(r.has(ViolationKind::bad_edge_count));
    }

    TEST_CASE("verdicts agree with the reference on every labeling of small graphs")
    {
        auto x = testing::ground("{0,1,2}");
        auto rx = testing::to_ref(x.base());
        for (int n = 2; n <= 4; ++n)
            for (const auto & g : connected_graphs(n, true))
                reference::for_each_injective(g, rx, [&] (const reference::Assignment & a) {
                    Labeling f{x};
                    for (int v = 0; v < n; ++v)
                        f.assign(g.name(v), testing::from_ref(a[v]));
                    CHECK(verify_iasgl(g, f).verdict == reference::is_graceful(g, a, rx));
                    auto labels = reference::edge_labels(g, a);
                    std::set<reference::Set> distinct(labels.begin(), labels.end());
                    CHECK(verify_iasi(g, f).verdict == (distinct.size() == labels.size()));
                    return true;
                });
    }

    TEST_CASE("labeling files")
    {
        auto text = "# K_{1,2}\nX {0,1}\nc {0}\na {1}\nb {0,1}\n";
        auto f = parse_labeling(text);
        CHECK(f == k12_graceful());
        CHECK(parse_labeling(emit_labeling(f)) == f);
        CHECK(parse_labeling(emit_labeling(f, k12())) == f);

        CHECK_THROWS_AS(parse_labeling("c {0}\n"), ParseError);
        try {
            parse_labeling("X {0,1}\nc {0}\nc {1}\n");
            FAIL("duplicate vertex accepted");
        }
        catch (const ParseError & e) {
            CHECK(e.line() == 3);
        }
        CHECK_THROWS_AS(parse_labeling("X {0,1}\nc {0\n"), ParseError);
        CHECK_THROWS_AS(parse_labeling("X {1,2}\n"), ParseError);
    }

    TEST_CASE("edge closure")
    {
        CHECK(verify_edge_closure(k12(), k12_graceful()).verdict);
        auto r = verify_edge_closure(graph("a b\n"), labeling("{0,1}", {{"a", {1}}, {"b", {0, 1}}}));
        CHECK_FALSE(r.verdict);
        CHECK(r.has(ViolationKind::edge_outside_ground));
    }
}
