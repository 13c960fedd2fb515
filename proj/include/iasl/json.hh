#ifndef IASL_GUARD_IASL_JSON_HH
#define IASL_GUARD_IASL_JSON_HH 1

#include <iasl/graph.hh>
#include <iasl/int_set.hh>
#include <iasl/labeling.hh>
#include <iasl/oracle.hh>
#include <iasl/power_set.hh>
#include <iasl/search.hh>
#include <iasl/topology.hh>

#include "json.hpp"

#include <span>

namespace iasl
{
    using Json = nlohmann::ordered_json;

    inline constexpr const char * json_schema = "iasl-lab/1";

    /// Set literals are emitted as sorted integer arrays.
    auto to_json(const IntSet & s) -> Json;
    auto to_json(const Graph & g) -> Json;
    auto to_json(const Labeling & f) -> Json;
    auto to_json(const VerificationReport & r) -> Json;
    auto to_json(const SumsetClassification & c) -> Json;
    auto to_json(const Topology & t) -> Json;
    auto to_json(const StructuralScreen & s) -> Json;
    auto to_json(const SearchOutcome & o) -> Json;
    auto to_json(const Witness & w) -> Json;
    auto to_json(const TheoremReport & r) -> Json;
    auto to_json(std::span<const TheoremReport> reports) -> Json;
}

#endif
