#ifndef IASL_GUARD_IASL_GRAPH_HH
#define IASL_GUARD_IASL_GRAPH_HH 1

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace iasl
{
    /// Endpoint indices, always first < second.
    using Edge = std::pair<int, int>;

    /**
     * Finite simple undirected graph with string-named vertices. Vertices keep insertion
     * order; edges are kept sorted by endpoint indices.
     */
    class Graph
    {
    private:
        std::vector<std::string> _names;
        std::map<std::string, int, std::less<>> _index;
        std::vector<std::vector<int>> _adjacency;
        std::vector<Edge> _edges;

    public:
        /// Returns the index of the vertex, adding it if it is new.
        auto add_vertex(std::string_view name) -> int;

        /// Throws DomainError on a loop, a duplicate edge or an unknown index.
        auto add_edge(int u, int v) -> void;
        auto add_edge(std::string_view u, std::string_view v) -> void;

        auto vertex_count() const -> int { return static_cast<int>(_names.size()); }
        auto edge_count() const -> int { return static_cast<int>(_edges.size()); }
        auto name(int v) const -> const std::string & { return _names[v]; }
        auto names() const -> const std::vector<std::string> & { return _names; }
        auto find(std::string_view name) const -> std::optional<int>;
        auto neighbours(int v) const -> const std::vector<int> & { return _adjacency[v]; }
        auto degree(int v) const -> int { return static_cast<int>(_adjacency[v].size()); }
        auto adjacent(int u, int v) const -> bool;
        auto edges() const -> const std::vector<Edge> & { return _edges; }

        friend auto operator== (const Graph & a, const Graph & b) -> bool
        {
            return a._names == b._names && a._edges == b._edges;
        }
    };

    /// Edge-list text: "u v" per edge, a lone token declares a vertex, '#' starts a comment.
    auto parse_graph(std::string_view text) -> Graph;

    /// Emits text that parse_graph reads back to an identical graph, vertex order included.
    auto emit_graph(const Graph & g) -> std::string;

    auto path_graph(int n) -> Graph;
    auto cycle_graph(int n) -> Graph;
    auto complete_graph(int n) -> Graph;
    auto star_graph(int leaves) -> Graph;
    auto complete_bipartite_graph(int a, int b) -> Graph;

    struct StructureReport
    {
        std::vector<int> degrees;
        std::vector<int> pendant_vertices;
        bool is_connected = false;
        std::optional<int> regular_degree;
        bool is_tree = false;
        bool is_star = false;
        std::optional<int> star_center;

        auto is_regular(int r) const -> bool { return regular_degree == r; }
    };

    auto structure(const Graph & g) -> StructureReport;

    auto is_connected(const Graph & g) -> bool;

    /// True for K_{1, leaves}. K_1 counts as the star with no leaves.
    auto is_star_with_leaves(const Graph & g, int leaves) -> bool;

    inline constexpr int max_enumeration_vertices = 7;

    /// Adjacency bits over pairs (i, j), i < j, in lexicographic pair order, minimised over all
    /// vertex permutations. Only for graphs with at most max_enumeration_vertices vertices.
    auto canonical_code(const Graph & g) -> std::uint32_t;

    auto are_isomorphic(const Graph & a, const Graph & b) -> bool;

    /**
     * Visits every connected simple graph on n vertices named "0" .. "n-1". With dedup, one
     * representative per isomorphism class (the canonical-code graph, ascending code order).
     * The visitor returns false to stop early. Throws InfeasibleError for n > 7.
     */
    auto for_each_connected_graph(int n, bool dedup, const std::function<auto (const Graph &)->bool> & visit) -> void;

    auto connected_graphs(int n, bool dedup) -> std::vector<Graph>;
}

#endif
