#include <iasl/error.hh>
#include <iasl/graph.hh>

#include <algorithm>
#include <array>
#include <memory>
#include <bit>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

using namespace iasl;

using std::optional;
using std::string;
using std::string_view;
using std::uint32_t;
using std::vector;

auto Graph::add_vertex(string_view name) -> int
{
    if (auto it = _index.find(name); it != _index.end())
        return it->second;
    if (name.empty())
        throw DomainError("vertex names must be non-empty");
    int v = vertex_count();
    _names.emplace_back(name);
    _index.emplace(string{name}, v);
    _adjacency.emplace_back();
    return v;
}

auto Graph::add_edge(int u, int v) -> void
{
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        throw DomainError("edge endpoint out of range");
    if (u == v)
        throw DomainError("loop at vertex '" + _names[u] + "'");
    if (adjacent(u, v))
        throw DomainError("duplicate edge '" + _names[u] + "' '" + _names[v] + "'");

    Edge e{std::min(u, v), std::max(u, v)};
    _edges.insert(std::lower_bound(_edges.begin(), _edges.end(), e), e);
    auto & au = _adjacency[u];
    au.insert(std::lower_bound(au.begin(), au.end(), v), v);
    auto & av = _adjacency[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
}

auto Graph::add_edge(string_view u, string_view v) -> void
{
    int a = add_vertex(u);
    int b = add_vertex(v);
    add_edge(a, b);
}

auto Graph::find(string_view name) const -> optional<int>
{
    if (auto it = _index.find(name); it != _index.end())
        return it->second;
    return std::nullopt;
}

auto Graph::adjacent(int u, int v) const -> bool
{
    const auto & au = _adjacency[u];
    return std::binary_search(au.begin(), au.end(), v);
}

auto iasl::parse_graph(string_view text) -> Graph
{
    Graph g;
    std::istringstream in{string{text}};
    string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (auto hash = line.find('#'); hash != string::npos)
            line.erase(hash);

        std::istringstream tokens{line};
        vector<string> words;
        for (string w; tokens >> w;)
            words.push_back(w);

        if (words.empty())
            continue;
        if (words.size() == 1)
            g.add_vertex(words[0]);
        else if (words.size() == 2) {
            if (words[0] == words[1])
                throw ParseError("loop at vertex '" + words[0] + "'", line_number);
            int u = g.add_vertex(words[0]);
            int v = g.add_vertex(words[1]);
            if (g.adjacent(u, v))
                throw ParseError("duplicate edge '" + words[0] + " " + words[1] + "'", line_number);
            g.add_edge(u, v);
        }
        else
            throw ParseError("expected 'u v' or a single vertex, got " + std::to_string(words.size()) + " tokens", line_number);
    }
    return g;
}

auto iasl::emit_graph(const Graph & g) -> string
{
    // edges alone introduce vertices in first-appearance order; if that differs from the
    // stored order, declare every vertex up front
    vector<int> implied;
    vector<bool> seen(g.vertex_count(), false);
    for (auto [u, v] : g.edges())
        for (int w : {u, v})
            if (! seen[w]) {
                seen[w] = true;
                implied.push_back(w);
            }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (! seen[v])
            implied.push_back(v);

    vector<int> identity(g.vertex_count());
    std::iota(identity.begin(), identity.end(), 0);
    bool declare_all = implied != identity;

    string out;
    if (declare_all)
        for (int v = 0; v < g.vertex_count(); ++v)
            out += g.name(v) + "\n";
    for (auto [u, v] : g.edges())
        out += g.name(u) + " " + g.name(v) + "\n";
    if (! declare_all)
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) == 0)
                out += g.name(v) + "\n";
    return out;
}

namespace
{
    auto numbered(int n) -> Graph
    {
        Graph g;
        for (int i = 0; i < n; ++i)
            g.add_vertex(std::to_string(i));
        return g;
    }
}

auto iasl::path_graph(int n) -> Graph
{
    auto g = numbered(n);
    for (int i = 0; i + 1 < n; ++i)
        g.add_edge(i, i + 1);
    return g;
}

auto iasl::cycle_graph(int n) -> Graph
{
    if (n < 3)
        throw DomainError("a cycle needs at least 3 vertices");
    auto g = path_graph(n);
    g.add_edge(0, n - 1);
    return g;
}

auto iasl::complete_graph(int n) -> Graph
{
    auto g = numbered(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            g.add_edge(i, j);
    return g;
}

auto iasl::star_graph(int leaves) -> Graph
{
    auto g = numbered(leaves + 1);
    for (int i = 1; i <= leaves; ++i)
        g.add_edge(0, i);
    return g;
}

auto iasl::complete_bipartite_graph(int a, int b) -> Graph
{
    auto g = numbered(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            g.add_edge(i, a + j);
    return g;
}

auto iasl::is_connected(const Graph & g) -> bool
{
    if (g.vertex_count() == 0)
        return false;
    vector<bool> reached(g.vertex_count(), false);
    vector<int> stack{0};
    reached[0] = true;
    int count = 1;
    while (! stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbours(v))
            if (! reached[w]) {
                reached[w] = true;
                ++count;
                stack.push_back(w);
            }
    }
    return count == g.vertex_count();
}

auto iasl::structure(const Graph & g) -> StructureReport
{
    StructureReport r;
    for (int v = 0; v < g.vertex_count(); ++v) {
        r.degrees.push_back(g.degree(v));
        if (g.degree(v) == 1)
            r.pendant_vertices.push_back(v);
    }

    r.is_connected = is_connected(g);
    if (! r.degrees.empty() && std::all_of(r.degrees.begin(), r.degrees.end(), [&] (int d) { return d == r.degrees[0]; }))
        r.regular_degree = r.degrees[0];

    r.is_tree = r.is_connected && g.edge_count() == g.vertex_count() - 1;
    if (r.is_tree)
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) == g.vertex_count() - 1) {
                r.is_star = true;
                r.star_center = v;
                break;
            }
    return r;
}

auto iasl::is_star_with_leaves(const Graph & g, int leaves) -> bool
{
    if (g.vertex_count() != leaves + 1)
        return false;
    return structure(g).is_star;
}

namespace
{
    using Rows = std::array<std::uint8_t, max_enumeration_vertices>;

    auto pair_bit(int n, int i, int j) -> int
    {
        // (i, j), i < j, in lexicographic order
        return i * n - i * (i + 1) / 2 + (j - i - 1);
    }

    auto pair_count(int n) -> int { return n * (n - 1) / 2; }

    /// For each permutation of n vertices, where each pair bit lands.
    struct PermutationTable
    {
        int n = 0;
        vector<vector<std::uint8_t>> pair_maps;

        explicit PermutationTable(int vertices) :
            n(vertices)
        {
            vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            do {
                vector<std::uint8_t> map(pair_count(n));
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j) {
                        int a = perm[i], b = perm[j];
                        map[pair_bit(n, i, j)] = pair_bit(n, std::min(a, b), std::max(a, b));
                    }
                pair_maps.push_back(std::move(map));
            } while (std::next_permutation(perm.begin(), perm.end()));
        }

        auto canonical(uint32_t code) const -> uint32_t
        {
            uint32_t best = code;
            for (const auto & map : pair_maps) {
                uint32_t image = 0;
                for (uint32_t w = code; w != 0; w &= w - 1)
                    image |= uint32_t{1} << map[std::countr_zero(w)];
                best = std::min(best, image);
            }
            return best;
        }
    };

    auto permutation_table(int n) -> const PermutationTable &
    {
        static std::mutex mutex;
        static std::map<int, std::unique_ptr<PermutationTable>> tables;
        std::lock_guard lock{mutex};
        auto & slot = tables[n];
        if (! slot)
            slot = std::make_unique<PermutationTable>(n);
        return *slot;
    }

    auto code_of(const Graph & g) -> uint32_t
    {
        int n = g.vertex_count();
        uint32_t code = 0;
        for (auto [u, v] : g.edges())
            code |= uint32_t{1} << pair_bit(n, u, v);
        return code;
    }

    auto graph_of(int n, uint32_t code) -> Graph
    {
        Graph g;
        for (int i = 0; i < n; ++i)
            g.add_vertex(std::to_string(i));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (code & (uint32_t{1} << pair_bit(n, i, j)))
                    g.add_edge(i, j);
        return g;
    }

    auto code_connected(int n, uint32_t code) -> bool
    {
        Rows rows{};
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (code & (uint32_t{1} << pair_bit(n, i, j))) {
                    rows[i] |= 1u << j;
                    rows[j] |= 1u << i;
                }
        unsigned reached = 1, frontier = 1;
        while (frontier) {
            unsigned next = 0;
            for (unsigned f = frontier; f; f &= f - 1)
                next |= rows[std::countr_zero(f)];
            frontier = next & ~reached;
            reached |= next;
        }
        return reached == (1u << n) - 1;
    }

    /// Canonical codes of all graphs (connected or not) on n vertices, one per class.
    auto all_canonical_codes(int n) -> const vector<uint32_t> &
    {
        static std::mutex mutex;
        static std::map<int, vector<uint32_t>> cache;
        {
            std::lock_guard lock{mutex};
            if (auto it = cache.find(n); it != cache.end())
                return it->second;
        }

        vector<uint32_t> result;
        if (n <= 1)
            result.push_back(0);
        else {
            // every graph on n vertices is some graph on n - 1 vertices plus a last vertex
            const auto & smaller = all_canonical_codes(n - 1);
            const auto & table = permutation_table(n);
            std::set<uint32_t> seen;
            for (uint32_t base : smaller)
                for (uint32_t nbrs = 0; nbrs < (1u << (n - 1)); ++nbrs) {
                    uint32_t code = 0;
                    for (int i = 0; i < n - 1; ++i)
                        for (int j = i + 1; j < n - 1; ++j)
                            if (base & (uint32_t{1} << pair_bit(n - 1, i, j)))
                                code |= uint32_t{1} << pair_bit(n, i, j);
                    for (int i = 0; i < n - 1; ++i)
                        if (nbrs & (1u << i))
                            code |= uint32_t{1} << pair_bit(n, i, n - 1);
                    seen.insert(table.canonical(code));
                }
            result.assign(seen.begin(), seen.end());
        }

        std::lock_guard lock{mutex};
        return cache.emplace(n, std::move(result)).first->second;
    }
}

auto iasl::canonical_code(const Graph & g) -> uint32_t
{
    int n = g.vertex_count();
    if (n > max_enumeration_vertices)
        throw InfeasibleError("canonical form limited to " + std::to_string(max_enumeration_vertices) + " vertices");
    if (n <= 1)
        return 0;
    return permutation_table(n).canonical(code_of(g));
}

auto iasl::are_isomorphic(const Graph & a, const Graph & b) -> bool
{
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    return canonical_code(a) == canonical_code(b);
}

auto iasl::for_each_connected_graph(int n, bool dedup, const std::function<auto (const Graph &)->bool> & visit) -> void
{
    if (n < 1)
        throw DomainError("graphs need at least one vertex");
    if (n > max_enumeration_vertices)
        throw InfeasibleError("graph enumeration limited to " + std::to_string(max_enumeration_vertices) + " vertices");

    if (dedup) {
        for (uint32_t code : all_canonical_codes(n))
            if (code_connected(n, code))
                if (! visit(graph_of(n, code)))
                    return;
    }
    else {
        uint32_t limit = uint32_t{1} << pair_count(n);
        for (uint32_t code = 0; code < limit; ++code)
            if (code_connected(n, code))
                if (! visit(graph_of(n, code)))
                    return;
    }
}

auto iasl::connected_graphs(int n, bool dedup) -> vector<Graph>
{
    vector<Graph> result;
    for_each_connected_graph(n, dedup, [&] (const Graph & g) {
        result.push_back(g);
        return true;
    });
    return result;
}
