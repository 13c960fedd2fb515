#ifndef IASL_GUARD_IASL_ORACLE_HH
#define IASL_GUARD_IASL_ORACLE_HH 1

#include <iasl/graph.hh>
#include <iasl/labeling.hh>
#include <iasl/power_set.hh>
#include <iasl/search.hh>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace iasl
{
    inline constexpr int max_oracle_vertices = 7;
    inline constexpr int max_oracle_ground_size = 3;

    enum class Verdict
    {
        confirmed,
        counterexample,
        mixed
    };

    auto to_string(Verdict v) -> std::string;

    enum class WitnessExpectation
    {
        labeling_verifies,  ///< the labeling passes the verifier for `mode`
        labeling_fails,     ///< the labeling fails the verifier for `mode`
        no_labeling         ///< exhaustive search for `mode` finds nothing
    };

    auto to_string(WitnessExpectation e) -> std::string;

    struct Witness
    {
        std::string claim;
        GroundSet ground;
        Graph graph;
        std::optional<Labeling> labeling;
        SearchMode mode = SearchMode::iasgl;
        bool discrete_family = false;
        WitnessExpectation expectation = WitnessExpectation::labeling_verifies;
        std::string detail;
    };

    /// Re-checks a witness through the verifiers or the search, independently of the report.
    auto reverify(const Witness & w) -> bool;

    /**
     * One testable reading of a result. A documented claim is one whose counterexamples are
     * known and explained (ambiguous or inconsistent statements); they do not fail the suite.
     */
    struct ClaimResult
    {
        std::string name;
        std::string reading;
        bool documented = false;
        std::string note;
        std::uint64_t instances = 0;
        std::uint64_t counterexamples = 0;

        auto holds() const -> bool { return counterexamples == 0; }
    };

    struct TheoremReport
    {
        std::string theorem_id;
        std::string statement;
        int max_vertices = 0;
        std::vector<GroundSet> ground_sets;
        std::uint64_t instances_checked = 0;
        Verdict holds = Verdict::confirmed;
        std::vector<ClaimResult> claims;
        std::vector<Witness> witnesses;

        auto undocumented_counterexamples() const -> int;
        auto documented_findings() const -> std::vector<std::string>;
    };

    /// Registration order.
    auto theorem_ids() -> std::vector<std::string>;

    /**
     * Evaluates one registered result over every connected graph with at most max_vertices
     * vertices (one per isomorphism class) and every listed ground set. Throws DomainError for
     * an unknown id and InfeasibleError beyond 7 vertices or |X| > 3.
     */
    auto run_oracle(std::string_view theorem_id, int max_vertices, std::span<const GroundSet> ground_sets) -> TheoremReport;

    /// Every registered result, sharing enumeration and search work. Empty when no ground sets are given.
    auto run_all(int max_vertices, std::span<const GroundSet> ground_sets) -> std::vector<TheoremReport>;

    /// Runs the listed ids (registration order is not imposed), sharing work between them.
    auto run_selected(std::span<const std::string> ids, int max_vertices, std::span<const GroundSet> ground_sets) -> std::vector<TheoremReport>;

    /// No undocumented counterexample in any report.
    auto suite_clean(std::span<const TheoremReport> reports) -> bool;
}

#endif
