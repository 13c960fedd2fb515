#include "doctest.h"
#include "helpers.hh"

#include <iasl/error.hh>

using namespace iasl;

TEST_SUITE("core-sets")
{
    TEST_CASE("sumset examples")
    {
        CHECK(sumset(IntSet{0}, IntSet{1, 3}) == IntSet{1, 3});
        CHECK(sumset(IntSet{2}, IntSet{3}) == IntSet{5});
        CHECK(sumset(IntSet{1, 2}, IntSet{0, 1}) == IntSet{1, 2, 3});
        CHECK_THROWS_AS(sumset(IntSet{}, IntSet{1}), DomainError);
        CHECK_THROWS_AS(sumset(IntSet{100}, IntSet{30}), DomainError);
        CHECK(sumset(IntSet{64}, IntSet{63}) == IntSet{127});
    }

    TEST_CASE("sumset agrees with the reference on subsets of {0..5}")
    {
        auto all = reference::subsets({0, 1, 2, 3, 4, 5});
        for (const auto & a : all)
            for (const auto & b : all)
                REQUIRE(testing::to_ref(sumset(testing::from_ref(a), testing::from_ref(b))) == reference::sumset(a, b));
    }

    TEST_CASE("parse and print")
    {
        CHECK(parse_int_set("{0,1,3}") == IntSet{0, 1, 3});
        CHECK(parse_int_set(" { 3 , 1,0 } ") == IntSet{0, 1, 3});
        CHECK(parse_int_set("0,1,3") == IntSet{0, 1, 3});
        CHECK(parse_int_set("{}").empty());
        CHECK(to_string(IntSet{3, 0, 1}) == "{0,1,3}");
        CHECK(to_string(IntSet{}) == "{}");
        CHECK_THROWS_AS(parse_int_set("{1,1}"), ParseError);
        CHECK_THROWS_AS(parse_int_set("{-1}"), ParseError);
        CHECK_THROWS_AS(parse_int_set("{64}"), ParseError);
        CHECK_THROWS_AS(parse_int_set("{1,x}"), ParseError);
        CHECK_THROWS_AS(parse_int_set("{1,2"), ParseError);
        CHECK(parse_int_set("{64}", 100) == IntSet{64});
    }

    TEST_CASE("canonical order is cardinality then lexicographic")
    {
        CHECK(canonical_less(IntSet{2}, IntSet{0, 1}));
        CHECK(canonical_less(IntSet{0, 2}, IntSet{1, 2}));
        CHECK(canonical_less(IntSet{0, 1, 5}, IntSet{0, 2, 3}));
        CHECK_FALSE(canonical_less(IntSet{1}, IntSet{1}));
        CHECK(canonical_less(IntSet{}, IntSet{0}));
    }

    TEST_CASE("ground sets")
    {
        CHECK(testing::ground("{0,1,2}").size() == 3);
        CHECK_THROWS_AS(parse_ground_set("{1,2}"), DomainError);
        CHECK_THROWS_AS(parse_ground_set("{0,1,2,3,4,5}"), InfeasibleError);
        CHECK(parse_ground_set("{0,1,2,3,4,5}", 6).size() == 6);
        CHECK_THROWS_AS(parse_ground_set("{0,1}", 7), DomainError);
    }

    TEST_CASE("all_nonempty_subsets in canonical order")
    {
        auto one = all_nonempty_subsets(testing::ground("{0}"));
        CHECK(one == std::vector<IntSet>{IntSet{0}});
        CHECK(all_nonempty_subsets(testing::ground("{0,1}")) == std::vector<IntSet>{IntSet{0}, IntSet{1}, IntSet{0, 1}});
        auto three = all_nonempty_subsets(testing::ground("{0,1,2}"));
        REQUIRE(three.size() == 7);
        CHECK(three[0] == IntSet{0});
        CHECK(three[1] == IntSet{1});
        CHECK(three[2] == IntSet{2});
        CHECK(three[3] == IntSet{0, 1});
        CHECK(three[6] == IntSet{0, 1, 2});
    }

    TEST_CASE("power set ranks and sum table")
    {
        PowerSet p{testing::ground("{0,1,3}")};
        REQUIRE(p.count() == 7);
        for (int i = 0; i < p.count(); ++i) {
            CHECK(p.rank_of(p.subset(i)) == i);
            for (int j = 0; j < p.count(); ++j) {
                auto s = sumset(p.subset(i), p.subset(j));
                auto r = p.sum_rank(i, j);
                if (s.is_subset_of(p.ground().base()))
                    CHECK(p.subset(r) == s);
                else
                    CHECK(r == -1);
            }
        }
        CHECK_FALSE(p.rank_of(IntSet{2}).has_value());
    }

    TEST_CASE("summand decompositions")
    {
        auto x = testing::ground("{0,1,2}");
        auto two = summand_decompositions(IntSet{2}, x);
        REQUIRE(two.size() == 2);
        CHECK(two[0].first == IntSet{0});
        CHECK(two[0].second == IntSet{2});
        CHECK(two[1].first == IntSet{1});
        CHECK(two[1].second == IntSet{1});
        auto one = summand_decompositions(IntSet{1}, x);
        REQUIRE(one.size() == 1);
        CHECK(one[0].first == IntSet{0});
        CHECK(one[0].second == IntSet{1});
        auto zero = summand_decompositions(IntSet{0}, x);
        REQUIRE(zero.size() == 1);
        CHECK(zero[0].first == IntSet{0});
        CHECK_THROWS_AS(summand_decompositions(IntSet{3}, x), DomainError);
        CHECK_THROWS_AS(summand_decompositions(IntSet{}, x), DomainError);
    }

    TEST_CASE("decompositions agree with the reference")
    {
        for (const char * text : {"{0,1,2}", "{0,1,3}", "{0,2,3,4}"}) {
            auto x = testing::ground(text);
            auto rx = testing::to_ref(x.base());
            for (const auto & c : reference::subsets(rx)) {
                std::set<std::pair<reference::Set, reference::Set>> expected;
                for (const auto & a : reference::subsets(rx))
                    for (const auto & b : reference::subsets(rx))
                        if (reference::sumset(a, b) == c)
                            expected.insert(std::minmax(a, b));
                std::set<std::pair<reference::Set, reference::Set>> got;
                for (const auto & d : summand_decompositions(testing::from_ref(c), x))
                    got.insert(std::minmax(testing::to_ref(d.first), testing::to_ref(d.second)));
                CHECK(got == expected);
            }
        }
    }

    TEST_CASE("classification examples")
    {
        auto c = classify(testing::ground("{0,1,2}"));
        CHECK(c.rho == 3);
        CHECK(c.rho_prime == 1);
        CHECK(c.rho_double_prime == 1);
        CHECK(c.x_is_sumset);
        CHECK(c.of(IntSet{2}).is_nontrivial_sumset);
        CHECK(c.of(IntSet{1, 2}).is_nontrivial_sumset);
        CHECK(c.of(IntSet{0, 1, 2}).is_nontrivial_sumset);
        CHECK(c.of(IntSet{1}).is_nontrivial_summand);
        CHECK(c.of(IntSet{0, 1}).is_nontrivial_summand);
        CHECK_FALSE(c.of(IntSet{0, 2}).is_nontrivial_sumset);
        CHECK_FALSE(c.of(IntSet{0, 2}).is_nontrivial_summand);

        auto trivial = classify(testing::ground("{0}"));
        CHECK(trivial.rho == 0);
        CHECK(trivial.rho_prime == 0);
        CHECK_FALSE(trivial.x_is_sumset);

        auto pair = classify(testing::ground("{0,1}"));
        CHECK(pair.rho == 0);
        CHECK(pair.rho_prime == 2);
        CHECK_FALSE(pair.x_is_sumset);
    }

    TEST_CASE("classification agrees with the reference for |X| <= 4 inside {0..6}")
    {
        int checked = 0;
        for (const auto & s : reference::subsets({1, 2, 3, 4, 5, 6})) {
            if (s.size() > 3)
                continue;
            auto rx = s;
            rx.insert(0);
            auto x = GroundSet{testing::from_ref(rx)};
            auto got = classify(x);
            auto want = reference::classify(rx);
            CHECK(got.rho == want.rho);
            CHECK(got.rho_prime == want.rho_prime);
            CHECK(got.x_is_sumset == want.x_is_sumset);
            for (const auto & entry : got.per_subset) {
                auto r = testing::to_ref(entry.subset);
                CHECK(entry.is_nontrivial_sumset == want.sumsets.contains(r));
                CHECK(entry.is_nontrivial_summand == want.summands.contains(r));
            }
            ++checked;
        }
        CHECK(checked == 41);
    }
}
