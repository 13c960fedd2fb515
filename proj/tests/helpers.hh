#ifndef IASL_GUARD_TESTS_HELPERS_HH
#define IASL_GUARD_TESTS_HELPERS_HH 1

#include "reference_oracles.hh"

#include <iasl/graph.hh>
#include <iasl/int_set.hh>
#include <iasl/labeling.hh>
#include <iasl/power_set.hh>

#include <string>
#include <utility>
#include <vector>

namespace testing
{
    inline auto to_ref(const iasl::IntSet & s) -> reference::Set
    {
        auto e = s.elements();
        return reference::Set(e.begin(), e.end());
    }

    inline auto from_ref(const reference::Set & s) -> iasl::IntSet
    {
        return iasl::IntSet{std::vector<int>(s.begin(), s.end())};
    }

    inline auto ground(const char * text) -> iasl::GroundSet
    {
        return iasl::parse_ground_set(text);
    }

    inline auto graph(const char * text) -> iasl::Graph
    {
        return iasl::parse_graph(text);
    }

    inline auto labeling(const char * x, std::vector<std::pair<std::string, iasl::IntSet>> labels) -> iasl::Labeling
    {
        iasl::Labeling f{ground(x)};
        for (const auto & [v, s] : labels)
            f.assign(v, s);
        return f;
    }
}

#endif
