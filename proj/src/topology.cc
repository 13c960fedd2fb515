#include <iasl/error.hh>
#include <iasl/topology.hh>

#include <algorithm>
#include <sstream>
#include <unordered_set>

using namespace iasl;

using std::span;
using std::string;
using std::string_view;
using std::uint32_t;
using std::vector;

auto iasl::is_topology(span<const IntSet> family, const GroundSet & x) -> TopologyCheck
{
    std::unordered_set<IntSet, IntSetHash> members;
    for (const auto & s : family) {
        if (! x.contains(s))
            throw DomainError(to_string(s) + " is not a subset of " + to_string(x.base()));
        members.insert(s);
    }

    if (! members.contains(IntSet{}))
        return TopologyCheck{false, "the empty set is not open", std::nullopt};
    if (! members.contains(x.base()))
        return TopologyCheck{false, "the ground set " + to_string(x.base()) + " is not open", std::nullopt};

    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            const auto & a = family[i];
            const auto & b = family[j];
            if (! members.contains(a | b))
                return TopologyCheck{false, "union " + to_string(a | b) + " is not open", std::pair{a, b}};
            if (! members.contains(a & b))
                return TopologyCheck{false, "intersection " + to_string(a & b) + " is not open", std::pair{a, b}};
        }
    return TopologyCheck{};
}

Topology::Topology(GroundSet ground, vector<IntSet> opens) :
    _ground(std::move(ground)),
    _opens(std::move(opens))
{
}

auto Topology::make(const GroundSet & x, vector<IntSet> family) -> Topology
{
    std::sort(family.begin(), family.end(), CanonicalLess{});
    family.erase(std::unique(family.begin(), family.end()), family.end());
    auto check = is_topology(family, x);
    if (! check.ok)
        throw DomainError("not a topology on " + to_string(x.base()) + ": " + check.reason);
    return Topology{x, std::move(family)};
}

auto Topology::contains(const IntSet & s) const -> bool
{
    return std::binary_search(_opens.begin(), _opens.end(), s, CanonicalLess{});
}

auto iasl::enumerate_topologies(const GroundSet & x, bool require_zero_singleton) -> vector<Topology>
{
    if (x.size() > max_topology_ground_size)
        throw InfeasibleError("topology enumeration limited to ground sets of at most " +
            std::to_string(max_topology_ground_size) + " elements");

    auto elements = x.base().elements();
    int n = x.size();
    uint32_t full = (1u << n) - 1;
    auto to_set = [&] (uint32_t mask) {
        IntSet s;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i))
                s.insert(elements[i]);
        return s;
    };

    // free members: the non-empty proper subsets, identified by position mask
    vector<uint32_t> free_masks;
    for (uint32_t m = 1; m < full; ++m)
        free_masks.push_back(m);

    vector<Topology> result;
    uint32_t zero_mask = 1u; // 0 is the smallest element, so position 0
    uint64_t candidates = uint64_t{1} << free_masks.size();
    for (uint64_t choice = 0; choice < candidates; ++choice) {
        // membership over all 2^n position masks
        uint32_t open_bits = 1u | (1u << full);
        for (std::size_t k = 0; k < free_masks.size(); ++k)
            if (choice & (uint64_t{1} << k))
                open_bits |= 1u << free_masks[k];

        if (require_zero_singleton && ! (open_bits & (1u << zero_mask)) && n > 1)
            continue;

        bool closed = true;
        for (uint32_t a = 0; a <= full && closed; ++a) {
            if (! (open_bits & (1u << a)))
                continue;
            for (uint32_t b = a + 1; b <= full; ++b)
                if ((open_bits & (1u << b)) && (! (open_bits & (1u << (a | b))) || ! (open_bits & (1u << (a & b))))) {
                    closed = false;
                    break;
                }
        }
        if (! closed)
            continue;

        vector<IntSet> opens;
        for (uint32_t m = 0; m <= full; ++m)
            if (open_bits & (1u << m))
                opens.push_back(to_set(m));
        result.push_back(Topology::make(x, std::move(opens)));
    }

    std::sort(result.begin(), result.end(), [] (const Topology & a, const Topology & b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return std::lexicographical_compare(a.opens().begin(), a.opens().end(), b.opens().begin(), b.opens().end(), CanonicalLess{});
    });
    return result;
}

auto iasl::realize_topology(const Topology & t) -> Realization
{
    if (! t.contains(IntSet{0}))
        throw NotRealizableError("{0} is not open, so the star construction does not apply");
    if (t.size() < 3)
        throw NotRealizableError("a topology with " + std::to_string(t.size()) + " opens gives no edge to label");

    Graph g;
    Labeling f{t.ground()};
    int centre = g.add_vertex("c");
    f.assign("c", IntSet{0});
    int leaf = 0;
    for (const auto & open : t.opens()) {
        if (open.empty() || open == IntSet{0})
            continue;
        auto name = "v" + std::to_string(++leaf);
        g.add_edge(centre, g.add_vertex(name));
        f.assign(name, open);
    }
    return Realization{std::move(g), std::move(f)};
}

auto iasl::verify_top_iasl(const Graph & g, const Labeling & f) -> VerificationReport
{
    auto report = verify_iasl(g, f);
    if (! report.verdict)
        return report;

    vector<IntSet> family{IntSet{}};
    for (int v = 0; v < g.vertex_count(); ++v)
        family.push_back(f.of(g, v));
    auto check = is_topology(family, f.ground());
    if (! check.ok) {
        string where = check.witness ? to_string(check.witness->first) + " " + to_string(check.witness->second) : "family";
        report.add(ViolationKind::not_a_topology, where, check.reason);
    }
    return report;
}

auto iasl::verify_top_iasgl(const Graph & g, const Labeling & f) -> VerificationReport
{
    auto report = verify_top_iasl(g, f);
    auto graceful = verify_iasgl(g, f);
    for (auto & v : graceful.violations) {
        bool duplicate = std::any_of(report.violations.begin(), report.violations.end(), [&] (const Violation & w) {
            return w.kind == v.kind && w.where == v.where;
        });
        if (! duplicate)
            report.add(v.kind, v.where, v.detail);
    }
    return report;
}

auto iasl::parse_topology(string_view text) -> Topology
{
    std::istringstream in{string{text}};
    string line;
    int line_number = 0;
    std::optional<GroundSet> ground;
    vector<IntSet> family;
    IntSet all;
    bool seen_open = false;
    while (std::getline(in, line)) {
        ++line_number;
        if (auto hash = line.find('#'); hash != string::npos)
            line.erase(hash);
        if (line.find_first_not_of(" \t\r") == string::npos)
            continue;

        try {
            auto first = line.find_first_not_of(" \t");
            if (line.compare(first, 1, "X") == 0) {
                if (ground || seen_open)
                    throw ParseError("ground set header must come first and only once");
                ground = parse_ground_set(line.substr(first + 1), max_topology_ground_size);
                continue;
            }
            auto s = parse_int_set(line);
            family.push_back(s);
            all = all | s;
            seen_open = true;
        }
        catch (const ParseError & e) {
            if (e.line() > 0)
                throw;
            throw ParseError(e.what(), line_number);
        }
        catch (const Error & e) {
            throw ParseError(e.what(), line_number);
        }
    }

    try {
        if (! ground) {
            if (all.empty())
                throw ParseError("topology has no non-empty open set");
            ground.emplace(all, max_topology_ground_size);
        }
        return Topology::make(*ground, std::move(family));
    }
    catch (const ParseError &) {
        throw;
    }
    catch (const Error & e) {
        throw ParseError(e.what());
    }
}

auto iasl::emit_topology(const Topology & t) -> string
{
    string out = "X " + to_string(t.ground().base()) + "\n";
    for (const auto & open : t.opens())
        out += to_string(open) + "\n";
    return out;
}
