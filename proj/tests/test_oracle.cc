#include "doctest.h"
#include "helpers.hh"

#include <iasl/error.hh>
#include <iasl/json.hh>
#include <iasl/oracle.hh>

using namespace iasl;

namespace
{
    auto default_grounds() -> std::vector<GroundSet> { return {testing::ground("{0,1}"), testing::ground("{0,1,2}")}; }

    auto find_claim(const TheoremReport & r, const std::string & name) -> const ClaimResult &
    {
        for (const auto & c : r.claims)
            if (c.name == name)
                return c;
        FAIL("no claim " << name);
        throw;
    }

    auto find_report(const std::vector<TheoremReport> & reports, const std::string & id) -> const TheoremReport &
    {
        for (const auto & r : reports)
            if (r.theorem_id == id)
                return r;
        FAIL("no report " << id);
        throw;
    }
}

TEST_SUITE("oracle")
{
    TEST_CASE("registered ids")
    {
        auto ids = theorem_ids();
        CHECK(ids.size() == 16);
        CHECK(ids.front() == "P1");
        CHECK(ids.back() == "T-discgl");
        auto grounds = default_grounds();
        CHECK_THROWS_AS(run_oracle("T-none", 3, grounds), DomainError);
        CHECK_THROWS_AS(run_oracle("P1", 8, grounds), InfeasibleError);
        auto big = std::vector<GroundSet>{testing::ground("{0,1,2,3}")};
        CHECK_THROWS_AS(run_oracle("P1", 3, big), InfeasibleError);
    }

    TEST_CASE("full suite at six vertices")
    {
        auto grounds = default_grounds();
        auto reports = run_all(6, grounds);
        REQUIRE(reports.size() == 16);
        CHECK(suite_clean(reports));
        for (const auto & r : reports) {
            CAPTURE(r.theorem_id);
            CHECK(r.undocumented_counterexamples() == 0);
            if (r.holds != Verdict::confirmed)
                CHECK_FALSE(r.witnesses.empty());
            for (const auto & w : r.witnesses)
                CHECK(reverify(w));
        }

        CHECK(find_report(reports, "T-tree").holds == Verdict::confirmed);
        CHECK(find_report(reports, "T-reg").holds == Verdict::confirmed);
        CHECK(find_report(reports, "T-real").holds == Verdict::confirmed);
        CHECK(find_report(reports, "T-discgl").holds == Verdict::confirmed);

        auto & p3 = find_report(reports, "P3");
        CHECK(p3.holds == Verdict::counterexample);
        bool k12_witness = false;
        for (const auto & w : p3.witnesses)
            if (w.ground.base() == IntSet{0, 1} && is_star_with_leaves(w.graph, 2))
                k12_witness = true;
        CHECK(k12_witness);

        auto & t_char = find_report(reports, "T-char");
        CHECK_FALSE(find_claim(t_char, "b-pendant-count").holds());
        CHECK_FALSE(find_claim(t_char, "c-zero-vertex-degree").holds());
        CHECK(find_claim(t_char, "d-pendants-at-zero-vertex").holds());

        auto & t_nsc = find_report(reports, "T-nsc");
        CHECK(find_claim(t_nsc, "c-pendants-statement").holds());
        CHECK_FALSE(find_claim(t_nsc, "c-pendants-proof").holds());
    }

    TEST_CASE("graceful stars at three elements")
    {
        // only K_{1,6} and K_{1,5} plus one edge are graceful over {0,1,2} up to 7 vertices
        auto grounds = std::vector<GroundSet>{testing::ground("{0,1,2}")};
        auto r = run_oracle("T-even", 7, grounds);
        CHECK(find_claim(r, "even-edge-count").instances == 2);
    }

    TEST_CASE("literal maximal-element readings fail on K_{1,6}")
    {
        auto grounds = std::vector<GroundSet>{testing::ground("{0,1,2}")};
        auto r = run_oracle("P4", 7, grounds);
        CHECK(r.holds == Verdict::mixed);
        CHECK(find_claim(r, "max-element-on-zero-pendant").holds());
        CHECK(find_claim(r, "adjacent-maxima-bound").holds());
        CHECK_FALSE(find_claim(r, "zero-pendant-holds-max-element").holds());
        CHECK_FALSE(find_claim(r, "adjacent-maxima-converse").holds());
        CHECK(r.undocumented_counterexamples() == 0);
        for (const auto & w : r.witnesses) {
            CHECK(is_star_with_leaves(w.graph, 6));
            CHECK(reverify(w));
        }
    }

    TEST_CASE("single vertex scope")
    {
        auto grounds = std::vector<GroundSet>{testing::ground("{0,1}")};
        for (const auto & r : run_all(1, grounds)) {
            CAPTURE(r.theorem_id);
            if (r.theorem_id != "T-real")
                CHECK(r.instances_checked == 1);
            CHECK(r.holds == Verdict::confirmed);
        }
    }

    TEST_CASE("empty ground set list")
    {
        CHECK(run_all(5, {}).empty());
    }

    TEST_CASE("reports are deterministic")
    {
        auto grounds = default_grounds();
        auto a = to_json(std::span<const TheoremReport>{run_all(5, grounds)}).dump();
        auto b = to_json(std::span<const TheoremReport>{run_all(5, grounds)}).dump();
        CHECK(a == b);
    }

    TEST_CASE("selected ids keep the requested order")
    {
        auto grounds = default_grounds();
        std::vector<std::string> ids{"T-reg", "P1"};
        auto reports = run_selected(ids, 4, grounds);
        REQUIRE(reports.size() == 2);
        CHECK(reports[0].theorem_id == "T-reg");
        CHECK(reports[1].theorem_id == "P1");
        CHECK(reports[1].max_vertices == 4);
    }
}
