#ifndef IASL_GUARD_IASL_SEARCH_HH
#define IASL_GUARD_IASL_SEARCH_HH 1

#include <iasl/graph.hh>
#include <iasl/labeling.hh>
#include <iasl/power_set.hh>
#include <iasl/topology.hh>

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace iasl
{
    enum class SearchMode
    {
        iasgl,
        top_iasl,
        top_iasgl
    };

    auto to_string(SearchMode mode) -> std::string;

    /// Accepts "iasgl", "top-iasl", "top-iasgl" (underscores also accepted).
    auto parse_search_mode(std::string_view text) -> SearchMode;

    /**
     * Necessary conditions checked before searching. Only conditions that hold for every
     * labeling of the requested kind feed rejects(); the rest are reported for comparison.
     */
    struct StructuralScreen
    {
        SearchMode mode = SearchMode::iasgl;

        int required_edges = 0;       ///< 2^|X| - 2
        int min_vertices = 0;         ///< 2^|X| - (rho + 1)
        int label_capacity = 0;       ///< 2^|X| - 1
        int pendant_count = 0;
        int pendant_lower_bound = 0;  ///< |X| - 1
        int pendants_required_reading_a = 0;
        int pendants_required_reading_b = 0;
        int degree_condition = 0;     ///< rho''
        int proof_degree = 0;         ///< 1 + 2^(|X|-1)

        bool edge_count_ok = false;
        bool vertex_count_ok = false;
        bool label_capacity_ok = false;
        bool pendant_lower_bound_ok = false;
        bool pendant_count_ok_reading_a = false;
        bool pendant_count_ok_reading_b = false;
        bool max_degree_ok = false;   ///< max degree >= rho''
        bool proof_degree_ok = false; ///< max degree >= 1 + 2^(|X|-1)

        SumsetClassification classification;

        auto rejects() const -> bool;
    };

    auto screen(const Graph & g, const GroundSet & x, SearchMode mode) -> StructuralScreen;

    struct SearchOutcome
    {
        bool found = false;
        std::optional<Labeling> labeling;
        std::uint64_t nodes_explored = 0;
        StructuralScreen screen;
    };

    /// Returns false to stop the enumeration.
    using LabelingVisitor = std::function<auto (const Labeling &)->bool>;

    /// Optional restriction on the vertex-label family (as a set of non-empty opens).
    using FamilyFilter = std::function<auto (const Topology &)->bool>;

    /**
     * Backtracking over injective labelings, vertices in descending degree order with name
     * tie-break, labels in canonical subset order. Every edge label must be a distinct member
     * of P(X) - {∅, {0}}. Visits every IASGL; returns nodes explored.
     */
    auto for_each_iasgl(const Graph & g, const GroundSet & x, const LabelingVisitor & visit) -> std::uint64_t;

    /**
     * For each topology (canonical order) with |V| + 1 opens that passes the filter, every
     * bijection from vertices to non-empty opens whose edge sumsets stay inside X.
     */
    auto for_each_top_iasl(const Graph & g, const GroundSet & x, std::span<const Topology> topologies,
        const LabelingVisitor & visit, const FamilyFilter & filter = {}) -> std::uint64_t;

    /// IASGLs (in for_each_iasgl order) whose vertex family plus ∅ is a topology passing the filter.
    auto for_each_top_iasgl(const Graph & g, const GroundSet & x, const LabelingVisitor & visit,
        const FamilyFilter & filter = {}) -> std::uint64_t;

    auto search_iasgl(const Graph & g, const GroundSet & x) -> SearchOutcome;
    auto search_top_iasl(const Graph & g, const GroundSet & x) -> SearchOutcome;
    auto search_top_iasl(const Graph & g, const GroundSet & x, std::span<const Topology> topologies,
        const FamilyFilter & filter = {}) -> SearchOutcome;
    auto search_top_iasgl(const Graph & g, const GroundSet & x, const FamilyFilter & filter = {}) -> SearchOutcome;
    auto search(const Graph & g, const GroundSet & x, SearchMode mode) -> SearchOutcome;

    /// The verifier matching a search mode. Top-IASL results are also required to keep every
    /// edge label inside X.
    auto verify_for_mode(const Graph & g, const Labeling & f, SearchMode mode) -> VerificationReport;

    inline constexpr int max_search_element_bound = 10;

    /**
     * First ground set containing 0, ordered by cardinality, then largest element, then
     * lexicographically, with elements at most element_bound, for which the search succeeds.
     * Throws InfeasibleError if element_bound exceeds 10.
     */
    auto minimal_ground_set(const Graph & g, SearchMode mode, int element_bound) -> std::optional<GroundSet>;
}

#endif
