#ifndef IASL_GUARD_IASL_LABELING_HH
#define IASL_GUARD_IASL_LABELING_HH 1

#include <iasl/graph.hh>
#include <iasl/int_set.hh>
#include <iasl/power_set.hh>

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace iasl
{
    /**
     * A vertex -> subset-of-X assignment. Deliberately permissive: duplicate labels, empty
     * labels or labels outside X can be stored so the verifiers can report them.
     */
    class Labeling
    {
    private:
        GroundSet _ground;
        std::vector<std::pair<std::string, IntSet>> _entries;
        std::map<std::string, std::size_t, std::less<>> _index;

    public:
        explicit Labeling(GroundSet ground);

        /// Sets or replaces the label of a vertex. Assignment order is kept.
        auto assign(std::string_view vertex, const IntSet & label) -> void;

        auto ground() const -> const GroundSet & { return _ground; }
        auto find(std::string_view vertex) const -> const IntSet *;
        auto entries() const -> const std::vector<std::pair<std::string, IntSet>> & { return _entries; }
        auto size() const -> std::size_t { return _entries.size(); }

        /// Label of a graph vertex; throws IncompleteLabelingError when it has none.
        auto of(const Graph & g, int v) const -> const IntSet &;

        friend auto operator== (const Labeling & a, const Labeling & b) -> bool
        {
            return a._ground == b._ground && a._entries == b._entries;
        }
    };

    /// "X {..}" header line, then "vertex {..}" lines. '#' starts a comment.
    auto parse_labeling(std::string_view text) -> Labeling;

    /// Emits in graph vertex order when a graph is given, assignment order otherwise.
    auto emit_labeling(const Labeling & f) -> std::string;
    auto emit_labeling(const Labeling & f, const Graph & g) -> std::string;

    enum class ViolationKind
    {
        injectivity,
        empty_label,
        not_a_subset,
        unlabeled_vertex,
        unknown_vertex,
        missing_edge_image,
        extra_edge_image,
        bad_edge_count,
        non_uniform,
        not_a_topology,
        edge_outside_ground
    };

    auto to_string(ViolationKind kind) -> std::string;

    struct Violation
    {
        ViolationKind kind;
        std::string where;
        std::string detail;
    };

    struct VerificationReport
    {
        bool verdict = true;
        std::vector<Violation> violations;

        auto add(ViolationKind kind, std::string where, std::string detail) -> void;
        auto has(ViolationKind kind) const -> bool;
    };

    /// f^+(uv) = f(u) + f(v) for every edge, in edge order.
    auto induced_edge_labels(const Graph & g, const Labeling & f) -> std::vector<std::pair<Edge, IntSet>>;

    auto edge_name(const Graph & g, const Edge & e) -> std::string;

    auto verify_iasl(const Graph & g, const Labeling & f) -> VerificationReport;
    auto verify_iasi(const Graph & g, const Labeling & f) -> VerificationReport;

    /// Every edge label has exactly k elements.
    auto verify_uniform(const Graph & g, const Labeling & f, int k) -> VerificationReport;

    /**
     * The edge-label image equals P(X) - {∅, {0}}, and |E| = 2^|X| - 2 so that every
     * required subset is produced by exactly one edge.
     */
    auto verify_iasgl(const Graph & g, const Labeling & f) -> VerificationReport;

    /// Every edge label lies inside X.
    auto verify_edge_closure(const Graph & g, const Labeling & f) -> VerificationReport;

    struct SetIndexingNumbers
    {
        struct Entry
        {
            std::string element;
            int number;
            bool mono_indexed;
        };

        std::vector<Entry> vertices;
        std::vector<Entry> edges;
    };

    auto set_indexing_numbers(const Graph & g, const Labeling & f) -> SetIndexingNumbers;
}

#endif
