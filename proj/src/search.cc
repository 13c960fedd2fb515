#include <iasl/error.hh>
#include <iasl/search.hh>

#include <algorithm>
#include <bit>
#include <numeric>

using namespace iasl;

using std::optional;
using std::span;
using std::string;
using std::string_view;
using std::uint64_t;
using std::vector;

auto iasl::to_string(SearchMode mode) -> string
{
    switch (mode) {
        case SearchMode::iasgl: return "iasgl";
        case SearchMode::top_iasl: return "top-iasl";
        case SearchMode::top_iasgl: return "top-iasgl";
    }
    return "unknown";
}

auto iasl::parse_search_mode(string_view text) -> SearchMode
{
    string s{text};
    std::replace(s.begin(), s.end(), '_', '-');
    if (s == "iasgl")
        return SearchMode::iasgl;
    if (s == "top-iasl")
        return SearchMode::top_iasl;
    if (s == "top-iasgl")
        return SearchMode::top_iasgl;
    throw ParseError("unknown search mode '" + string{text} + "'");
}

auto StructuralScreen::rejects() const -> bool
{
    if (! label_capacity_ok)
        return true;
    if (mode == SearchMode::top_iasl)
        return false;
    return ! edge_count_ok || ! vertex_count_ok;
}

auto iasl::screen(const Graph & g, const GroundSet & x, SearchMode mode) -> StructuralScreen
{
    StructuralScreen s;
    s.mode = mode;
    s.classification = classify(x);
    const auto & c = s.classification;
    int n = x.size();

    s.required_edges = (1 << n) - 2;
    s.label_capacity = (1 << n) - 1;
    s.min_vertices = (1 << n) - (c.rho + 1);
    s.pendant_lower_bound = n - 1;
    s.pendants_required_reading_a = c.x_is_sumset ? 1 + c.rho_prime : c.rho_prime;
    s.pendants_required_reading_b = c.x_is_sumset ? c.rho_prime : 1 + c.rho_prime;
    s.degree_condition = c.rho_double_prime;
    s.proof_degree = 1 + (1 << (n - 1));

    int max_degree = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        max_degree = std::max(max_degree, g.degree(v));
        if (g.degree(v) == 1)
            ++s.pendant_count;
    }

    s.edge_count_ok = g.edge_count() == s.required_edges;
    s.vertex_count_ok = g.vertex_count() >= s.min_vertices;
    s.label_capacity_ok = g.vertex_count() <= s.label_capacity;
    s.pendant_lower_bound_ok = s.pendant_count >= s.pendant_lower_bound;
    s.pendant_count_ok_reading_a = s.pendant_count >= s.pendants_required_reading_a;
    s.pendant_count_ok_reading_b = s.pendant_count >= s.pendants_required_reading_b;
    s.max_degree_ok = max_degree >= s.degree_condition;
    s.proof_degree_ok = max_degree >= s.proof_degree;
    return s;
}

namespace
{
    /// Descending degree, ties by vertex name.
    auto vertex_order(const Graph & g) -> vector<int>
    {
        vector<int> order(g.vertex_count());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&] (int a, int b) {
            if (g.degree(a) != g.degree(b))
                return g.degree(a) > g.degree(b);
            return g.name(a) < g.name(b);
        });
        return order;
    }

    enum class EdgeRule
    {
        graceful,    // distinct, inside X, not {0}
        inside_ground
    };

    class Backtracker
    {
    private:
        const Graph & _graph;
        const PowerSet & _power;
        EdgeRule _rule;
        vector<int> _candidates;
        const LabelingVisitor & _visit;

        vector<int> _order;
        vector<vector<int>> _earlier;
        vector<int> _label;
        uint64_t _used_labels = 0;
        uint64_t _used_edge_labels = 0;
        int _decided_edges = 0;
        int _required_images = 0;
        bool _stopped = false;

    public:
        uint64_t nodes = 0;

        Backtracker(const Graph & g, const PowerSet & p, EdgeRule rule, vector<int> candidates, const LabelingVisitor & visit) :
            _graph(g),
            _power(p),
            _rule(rule),
            _candidates(std::move(candidates)),
            _visit(visit),
            _order(vertex_order(g)),
            _earlier(g.vertex_count()),
            _label(g.vertex_count(), -1)
        {
            vector<int> position(g.vertex_count());
            for (int i = 0; i < g.vertex_count(); ++i)
                position[_order[i]] = i;
            for (int i = 0; i < g.vertex_count(); ++i)
                for (int w : g.neighbours(_order[i]))
                    if (position[w] < i)
                        _earlier[i].push_back(w);
            _required_images = p.count() - 1;
        }

        auto run() -> bool
        {
            expand(0);
            return ! _stopped;
        }

    private:
        auto expand(int depth) -> void
        {
            if (depth == _graph.vertex_count()) {
                Labeling f{_power.ground()};
                for (int v = 0; v < _graph.vertex_count(); ++v)
                    f.assign(_graph.name(v), _power.subset(_label[v]));
                if (! _visit(f))
                    _stopped = true;
                return;
            }

            int v = _order[depth];
            for (int rank : _candidates) {
                uint64_t bit = uint64_t{1} << rank;
                if (_used_labels & bit)
                    continue;

                uint64_t new_edges = 0;
                bool ok = true;
                for (int u : _earlier[depth]) {
                    int s = _power.sum_rank(rank, _label[u]);
                    if (_rule == EdgeRule::graceful) {
                        if (s <= 0) {
                            ok = false;
                            break;
                        }
                        uint64_t sbit = uint64_t{1} << s;
                        if ((_used_edge_labels & sbit) || (new_edges & sbit)) {
                            ok = false;
                            break;
                        }
                        new_edges |= sbit;
                    }
                    else if (s < 0) {
                        ok = false;
                        break;
                    }
                }
                if (! ok)
                    continue;

                int decided = static_cast<int>(_earlier[depth].size());
                if (_rule == EdgeRule::graceful) {
                    // every edge still undecided can contribute at most one missing image
                    int undecided = _graph.edge_count() - _decided_edges - decided;
                    int missing = _required_images - std::popcount(_used_edge_labels | new_edges);
                    if (undecided < missing)
                        continue;
                }

                ++nodes;
                _label[v] = rank;
                _used_labels |= bit;
                _used_edge_labels |= new_edges;
                _decided_edges += decided;

                expand(depth + 1);

                _decided_edges -= decided;
                _used_edge_labels &= ~new_edges;
                _used_labels &= ~bit;
                _label[v] = -1;

                if (_stopped)
                    return;
            }
        }
    };

    auto family_topology(const Labeling & f) -> optional<Topology>
    {
        vector<IntSet> family{IntSet{}};
        for (const auto & [vertex, label] : f.entries())
            family.push_back(label);
        if (! is_topology(family, f.ground()).ok)
            return std::nullopt;
        return Topology::make(f.ground(), std::move(family));
    }

    auto check_topology_cap(const GroundSet & x) -> void
    {
        if (x.size() > max_topology_ground_size)
            throw InfeasibleError("topological searches are limited to ground sets of at most " +
                std::to_string(max_topology_ground_size) + " elements");
    }
}

auto iasl::for_each_iasgl(const Graph & g, const GroundSet & x, const LabelingVisitor & visit) -> uint64_t
{
    if (g.edge_count() != x.subset_count() - 1 || g.vertex_count() > x.subset_count() || g.vertex_count() == 0)
        return 0;

    PowerSet p{x};
    vector<int> candidates(p.count());
    std::iota(candidates.begin(), candidates.end(), 0);
    Backtracker b{g, p, EdgeRule::graceful, std::move(candidates), visit};
    b.run();
    return b.nodes;
}

auto iasl::for_each_top_iasl(const Graph & g, const GroundSet & x, span<const Topology> topologies,
    const LabelingVisitor & visit, const FamilyFilter & filter) -> uint64_t
{
    if (g.vertex_count() == 0)
        return 0;

    PowerSet p{x};
    uint64_t nodes = 0;
    bool stopped = false;
    LabelingVisitor inner = [&] (const Labeling & f) {
        if (! visit(f))
            stopped = true;
        return ! stopped;
    };
    for (const auto & t : topologies) {
        if (! (t.ground() == x))
            throw DomainError("topology is over a different ground set");
        if (t.size() - 1 != g.vertex_count())
            continue;
        if (filter && ! filter(t))
            continue;

        vector<int> candidates;
        for (const auto & open : t.opens())
            if (! open.empty())
                candidates.push_back(*p.rank_of(open));

        Backtracker b{g, p, EdgeRule::inside_ground, std::move(candidates), inner};
        b.run();
        nodes += b.nodes;
        if (stopped)
            break;
    }
    return nodes;
}

auto iasl::for_each_top_iasgl(const Graph & g, const GroundSet & x, const LabelingVisitor & visit,
    const FamilyFilter & filter) -> uint64_t
{
    return for_each_iasgl(g, x, [&] (const Labeling & f) {
        auto t = family_topology(f);
        if (! t || (filter && ! filter(*t)))
            return true;
        return visit(f);
    });
}

namespace
{
    auto first_of(const std::function<auto (const LabelingVisitor &)->uint64_t> & enumerate, SearchOutcome & outcome) -> void
    {
        outcome.nodes_explored = enumerate([&] (const Labeling & f) {
            outcome.found = true;
            outcome.labeling = f;
            return false;
        });
    }
}

auto iasl::search_iasgl(const Graph & g, const GroundSet & x) -> SearchOutcome
{
    SearchOutcome outcome;
    outcome.screen = screen(g, x, SearchMode::iasgl);
    if (outcome.screen.rejects())
        return outcome;
    first_of([&] (const LabelingVisitor & v) { return for_each_iasgl(g, x, v); }, outcome);
    return outcome;
}

auto iasl::search_top_iasl(const Graph & g, const GroundSet & x) -> SearchOutcome
{
    check_topology_cap(x);
    auto topologies = enumerate_topologies(x, false);
    return search_top_iasl(g, x, topologies);
}

auto iasl::search_top_iasl(const Graph & g, const GroundSet & x, span<const Topology> topologies,
    const FamilyFilter & filter) -> SearchOutcome
{
    check_topology_cap(x);
    SearchOutcome outcome;
    outcome.screen = screen(g, x, SearchMode::top_iasl);
    if (outcome.screen.rejects())
        return outcome;
    first_of([&] (const LabelingVisitor & v) { return for_each_top_iasl(g, x, topologies, v, filter); }, outcome);
    return outcome;
}

auto iasl::search_top_iasgl(const Graph & g, const GroundSet & x, const FamilyFilter & filter) -> SearchOutcome
{
    check_topology_cap(x);
    SearchOutcome outcome;
    outcome.screen = screen(g, x, SearchMode::top_iasgl);
    if (outcome.screen.rejects())
        return outcome;
    first_of([&] (const LabelingVisitor & v) { return for_each_top_iasgl(g, x, v, filter); }, outcome);
    return outcome;
}

auto iasl::search(const Graph & g, const GroundSet & x, SearchMode mode) -> SearchOutcome
{
    switch (mode) {
        case SearchMode::iasgl: return search_iasgl(g, x);
        case SearchMode::top_iasl: return search_top_iasl(g, x);
        case SearchMode::top_iasgl: return search_top_iasgl(g, x);
    }
    throw DomainError("unknown search mode");
}

auto iasl::verify_for_mode(const Graph & g, const Labeling & f, SearchMode mode) -> VerificationReport
{
    switch (mode) {
        case SearchMode::iasgl: return verify_iasgl(g, f);
        case SearchMode::top_iasgl: return verify_top_iasgl(g, f);
        case SearchMode::top_iasl: {
            auto report = verify_top_iasl(g, f);
            for (auto & v : verify_edge_closure(g, f).violations)
                if (v.kind == ViolationKind::edge_outside_ground)
                    report.add(v.kind, v.where, v.detail);
            return report;
        }
    }
    throw DomainError("unknown search mode");
}

auto iasl::minimal_ground_set(const Graph & g, SearchMode mode, int element_bound) -> optional<GroundSet>
{
    if (element_bound > max_search_element_bound)
        throw InfeasibleError("element bound " + std::to_string(element_bound) + " exceeds " + std::to_string(max_search_element_bound));
    if (element_bound < 0)
        throw DomainError("element bound must be non-negative");

    int cap = mode == SearchMode::iasgl ? default_ground_cap : max_topology_ground_size;
    for (int k = 1; k <= cap && k - 1 <= element_bound; ++k) {
        // cheap gates that depend on |X| only
        int labels = (1 << k) - 1;
        if (g.vertex_count() > labels)
            continue;
        if (mode != SearchMode::top_iasl && g.edge_count() != labels - 1)
            continue;

        // (k-1)-subsets of {1..bound}, by largest element then lexicographically
        vector<vector<int>> candidates;
        vector<int> pick;
        std::function<void (int)> choose = [&] (int next) {
            if (static_cast<int>(pick.size()) == k - 1) {
                candidates.push_back(pick);
                return;
            }
            for (int e = next; e <= element_bound; ++e) {
                pick.push_back(e);
                choose(e + 1);
                pick.pop_back();
            }
        };
        choose(1);
        std::stable_sort(candidates.begin(), candidates.end(), [] (const vector<int> & a, const vector<int> & b) {
            int ma = a.empty() ? 0 : a.back(), mb = b.empty() ? 0 : b.back();
            if (ma != mb)
                return ma < mb;
            return a < b;
        });

        for (const auto & rest : candidates) {
            IntSet base{0};
            for (int e : rest)
                base.insert(e);
            GroundSet x{base, cap};
            if (search(g, x, mode).found)
                return x;
        }
    }
    return std::nullopt;
}
