#include <iasl/error.hh>
#include <iasl/labeling.hh>

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

using namespace iasl;

using std::string;
using std::string_view;
using std::vector;

Labeling::Labeling(GroundSet ground) :
    _ground(std::move(ground))
{
}

auto Labeling::assign(string_view vertex, const IntSet & label) -> void
{
    if (auto it = _index.find(vertex); it != _index.end()) {
        _entries[it->second].second = label;
        return;
    }
    _index.emplace(string{vertex}, _entries.size());
    _entries.emplace_back(string{vertex}, label);
}

auto Labeling::find(string_view vertex) const -> const IntSet *
{
    if (auto it = _index.find(vertex); it != _index.end())
        return &_entries[it->second].second;
    return nullptr;
}

auto Labeling::of(const Graph & g, int v) const -> const IntSet &
{
    auto label = find(g.name(v));
    if (! label)
        throw IncompleteLabelingError("vertex '" + g.name(v) + "' has no label");
    return *label;
}

auto iasl::parse_labeling(string_view text) -> Labeling
{
    std::istringstream in{string{text}};
    string line;
    int line_number = 0;
    std::optional<Labeling> result;
    while (std::getline(in, line)) {
        ++line_number;
        if (auto hash = line.find('#'); hash != string::npos)
            line.erase(hash);

        std::istringstream tokens{line};
        string head;
        if (! (tokens >> head))
            continue;
        string rest;
        std::getline(tokens, rest);

        try {
            if (! result) {
                if (head != "X")
                    throw ParseError("first entry must be the ground set header 'X {..}'", line_number);
                result.emplace(parse_ground_set(rest));
                continue;
            }
            if (rest.find_first_not_of(" \t\r") == string::npos)
                throw ParseError("vertex '" + head + "' has no label", line_number);
            if (result->find(head))
                throw ParseError("vertex '" + head + "' labeled twice", line_number);
            result->assign(head, parse_int_set(rest));
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
    if (! result)
        throw ParseError("missing ground set header 'X {..}'");
    return *result;
}

auto iasl::emit_labeling(const Labeling & f) -> string
{
    string out = "X " + to_string(f.ground().base()) + "\n";
    for (const auto & [vertex, label] : f.entries())
        out += vertex + " " + to_string(label) + "\n";
    return out;
}

auto iasl::emit_labeling(const Labeling & f, const Graph & g) -> string
{
    string out = "X " + to_string(f.ground().base()) + "\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        if (auto label = f.find(g.name(v)))
            out += g.name(v) + " " + to_string(*label) + "\n";
    for (const auto & [vertex, label] : f.entries())
        if (! g.find(vertex))
            out += vertex + " " + to_string(label) + "\n";
    return out;
}

auto iasl::to_string(ViolationKind kind) -> string
{
    switch (kind) {
        case ViolationKind::injectivity: return "injectivity";
        case ViolationKind::empty_label: return "empty-label";
        case ViolationKind::not_a_subset: return "not-a-subset";
        case ViolationKind::unlabeled_vertex: return "unlabeled-vertex";
        case ViolationKind::unknown_vertex: return "unknown-vertex";
        case ViolationKind::missing_edge_image: return "missing-edge-image";
        case ViolationKind::extra_edge_image: return "extra-edge-image";
        case ViolationKind::bad_edge_count: return "bad-edge-count";
        case ViolationKind::non_uniform: return "non-uniform";
        case ViolationKind::not_a_topology: return "not-a-topology";
        case ViolationKind::edge_outside_ground: return "edge-outside-ground";
    }
    return "unknown";
}

auto VerificationReport::add(ViolationKind kind, string where, string detail) -> void
{
    verdict = false;
    violations.push_back(Violation{kind, std::move(where), std::move(detail)});
}

auto VerificationReport::has(ViolationKind kind) const -> bool
{
    return std::any_of(violations.begin(), violations.end(), [&] (const Violation & v) { return v.kind == kind; });
}

auto iasl::edge_name(const Graph & g, const Edge & e) -> string
{
    return g.name(e.first) + " " + g.name(e.second);
}

auto iasl::induced_edge_labels(const Graph & g, const Labeling & f) -> vector<std::pair<Edge, IntSet>>
{
    vector<std::pair<Edge, IntSet>> result;
    result.reserve(g.edge_count());
    for (const auto & e : g.edges())
        result.emplace_back(e, sumset(f.of(g, e.first), f.of(g, e.second)));
    return result;
}

auto iasl::verify_iasl(const Graph & g, const Labeling & f) -> VerificationReport
{
    VerificationReport report;
    const auto & x = f.ground();

    for (int v = 0; v < g.vertex_count(); ++v)
        if (! f.find(g.name(v)))
            report.add(ViolationKind::unlabeled_vertex, g.name(v), "vertex has no label");

    std::unordered_map<IntSet, string, IntSetHash> first_holder;
    for (const auto & [vertex, label] : f.entries()) {
        if (! g.find(vertex)) {
            report.add(ViolationKind::unknown_vertex, vertex, "labeled vertex is not in the graph");
            continue;
        }
        if (label.empty()) {
            report.add(ViolationKind::empty_label, vertex, "the empty set is never a label");
            continue;
        }
        if (! x.contains(label))
            report.add(ViolationKind::not_a_subset, vertex, to_string(label) + " is not a subset of " + to_string(x.base()));

        auto [it, fresh] = first_holder.emplace(label, vertex);
        if (! fresh)
            report.add(ViolationKind::injectivity, vertex, "shares label " + to_string(label) + " with '" + it->second + "'");
    }
    return report;
}

namespace
{
    /// Edge labels are only computable when every endpoint has a non-empty label.
    auto edge_labels_computable(const VerificationReport & r) -> bool
    {
        return ! r.has(ViolationKind::unlabeled_vertex) && ! r.has(ViolationKind::empty_label);
    }
}

auto iasl::verify_iasi(const Graph & g, const Labeling & f) -> VerificationReport
{
    auto report = verify_iasl(g, f);
    if (! edge_labels_computable(report))
        return report;

    std::unordered_map<IntSet, Edge, IntSetHash> first_edge;
    for (const auto & [e, label] : induced_edge_labels(g, f)) {
        auto [it, fresh] = first_edge.emplace(label, e);
        if (! fresh)
            report.add(ViolationKind::injectivity, edge_name(g, e),
                "edge label " + to_string(label) + " repeats edge '" + edge_name(g, it->second) + "'");
    }
    return report;
}

auto iasl::verify_uniform(const Graph & g, const Labeling & f, int k) -> VerificationReport
{
    auto report = verify_iasl(g, f);
    if (! edge_labels_computable(report))
        return report;

    for (const auto & [e, label] : induced_edge_labels(g, f))
        if (label.size() != k)
            report.add(ViolationKind::non_uniform, edge_name(g, e),
                "edge label " + to_string(label) + " has " + std::to_string(label.size()) + " elements, expected " + std::to_string(k));
    return report;
}

auto iasl::verify_iasgl(const Graph & g, const Labeling & f) -> VerificationReport
{
    auto report = verify_iasl(g, f);
    const auto & x = f.ground();
    int required_count = x.subset_count() - 1;

    if (g.edge_count() != required_count)
        report.add(ViolationKind::bad_edge_count, "graph",
            std::to_string(g.edge_count()) + " edges, a graceful labeling over " + to_string(x.base()) + " needs " + std::to_string(required_count));

    if (! edge_labels_computable(report))
        return report;

    std::unordered_set<IntSet, IntSetHash> image;
    for (const auto & [e, label] : induced_edge_labels(g, f)) {
        if (! x.contains(label) || label == IntSet{0})
            report.add(ViolationKind::extra_edge_image, edge_name(g, e),
                "edge label " + to_string(label) + " is not in P(X) - {∅, {0}}");
        image.insert(label);
    }

    for (const auto & s : all_nonempty_subsets(x))
        if (s != IntSet{0} && ! image.contains(s))
            report.add(ViolationKind::missing_edge_image, to_string(s), "no edge carries this label");

    return report;
}

auto iasl::verify_edge_closure(const Graph & g, const Labeling & f) -> VerificationReport
{
    auto report = verify_iasl(g, f);
    if (! edge_labels_computable(report))
        return report;

    for (const auto & [e, label] : induced_edge_labels(g, f))
        if (! f.ground().contains(label))
            report.add(ViolationKind::edge_outside_ground, edge_name(g, e),
                "edge label " + to_string(label) + " is not a subset of " + to_string(f.ground().base()));
    return report;
}

auto iasl::set_indexing_numbers(const Graph & g, const Labeling & f) -> SetIndexingNumbers
{
    SetIndexingNumbers result;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int n = f.of(g, v).size();
        result.vertices.push_back({g.name(v), n, n == 1});
    }
    for (const auto & [e, label] : induced_edge_labels(g, f))
        result.edges.push_back({edge_name(g, e), label.size(), label.size() == 1});
    return result;
}
