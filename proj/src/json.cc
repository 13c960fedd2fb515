#include <iasl/json.hh>

using namespace iasl;

auto iasl::to_json(const IntSet & s) -> Json
{
    Json out = Json::array();
    for (int e : s.elements())
        out.push_back(e);
    return out;
}

auto iasl::to_json(const Graph & g) -> Json
{
    Json edges = Json::array();
    for (auto [u, v] : g.edges())
        edges.push_back(Json::array({g.name(u), g.name(v)}));
    return Json{{"vertices", g.names()}, {"edges", edges}};
}

auto iasl::to_json(const Labeling & f) -> Json
{
    Json labels = Json::object();
    for (const auto & [v, label] : f.entries())
        labels[v] = to_json(label);
    return Json{{"ground_set", to_json(f.ground().base())}, {"labels", labels}};
}

auto iasl::to_json(const VerificationReport & r) -> Json
{
    Json violations = Json::array();
    for (const auto & v : r.violations)
        violations.push_back(Json{{"kind", to_string(v.kind)}, {"where", v.where}, {"detail", v.detail}});
    return Json{{"verdict", r.verdict}, {"violations", violations}};
}

auto iasl::to_json(const SumsetClassification & c) -> Json
{
    Json subsets = Json::array();
    for (const auto & s : c.per_subset) {
        Json entry{{"subset", to_json(s.subset)}, {"nontrivial_sumset", s.is_nontrivial_sumset},
            {"nontrivial_summand", s.is_nontrivial_summand}};
        if (s.witness)
            entry["witness"] = Json::array({to_json(s.witness->first), to_json(s.witness->second)});
        subsets.push_back(entry);
    }
    return Json{{"ground_set", to_json(c.ground.base())}, {"rho", c.rho}, {"rho_prime", c.rho_prime},
        {"rho_double_prime", c.rho_double_prime}, {"x_is_sumset", c.x_is_sumset}, {"subsets", subsets}};
}

auto iasl::to_json(const Topology & t) -> Json
{
    Json opens = Json::array();
    for (const auto & o : t.opens())
        opens.push_back(to_json(o));
    return Json{{"ground_set", to_json(t.ground().base())}, {"opens", opens}, {"is_topology", true}};
}

auto iasl::to_json(const StructuralScreen & s) -> Json
{
    return Json{
        {"mode", to_string(s.mode)},
        {"rejects", s.rejects()},
        {"required_edges", s.required_edges},
        {"edge_count_ok", s.edge_count_ok},
        {"min_vertices", s.min_vertices},
        {"vertex_count_ok", s.vertex_count_ok},
        {"label_capacity", s.label_capacity},
        {"label_capacity_ok", s.label_capacity_ok},
        {"pendant_count", s.pendant_count},
        {"pendant_lower_bound", s.pendant_lower_bound},
        {"pendant_lower_bound_ok", s.pendant_lower_bound_ok},
        {"pendants_required_reading_a", s.pendants_required_reading_a},
        {"pendant_count_ok_reading_a", s.pendant_count_ok_reading_a},
        {"pendants_required_reading_b", s.pendants_required_reading_b},
        {"pendant_count_ok_reading_b", s.pendant_count_ok_reading_b},
        {"degree_condition", s.degree_condition},
        {"max_degree_ok", s.max_degree_ok},
        {"proof_degree", s.proof_degree},
        {"proof_degree_ok", s.proof_degree_ok},
        {"rho", s.classification.rho},
        {"rho_prime", s.classification.rho_prime},
        {"rho_double_prime", s.classification.rho_double_prime},
        {"x_is_sumset", s.classification.x_is_sumset}};
}

auto iasl::to_json(const SearchOutcome & o) -> Json
{
    Json out{{"found", o.found}};
    if (o.labeling)
        out["labeling"] = to_json(*o.labeling);
    out["nodes_explored"] = o.nodes_explored;
    out["screen"] = to_json(o.screen);
    return out;
}

auto iasl::to_json(const Witness & w) -> Json
{
    Json out{{"claim", w.claim}, {"ground_set", to_json(w.ground.base())}, {"graph", to_json(w.graph)}};
    if (w.labeling)
        out["labeling"] = to_json(*w.labeling);
    out["mode"] = to_string(w.mode);
    out["discrete_family"] = w.discrete_family;
    out["expectation"] = to_string(w.expectation);
    out["detail"] = w.detail;
    return out;
}

auto iasl::to_json(const TheoremReport & r) -> Json
{
    Json grounds = Json::array();
    for (const auto & x : r.ground_sets)
        grounds.push_back(to_json(x.base()));
    Json claims = Json::array();
    for (const auto & c : r.claims) {
        Json entry{{"name", c.name}, {"reading", c.reading}, {"documented", c.documented}, {"holds", c.holds()},
            {"instances", c.instances}, {"counterexamples", c.counterexamples}};
        if (! c.note.empty())
            entry["note"] = c.note;
        claims.push_back(entry);
    }
    Json witnesses = Json::array();
    for (const auto & w : r.witnesses)
        witnesses.push_back(to_json(w));
    return Json{
        {"theorem_id", r.theorem_id},
        {"statement", r.statement},
        {"scope", Json{{"max_vertices", r.max_vertices}, {"ground_sets", grounds}}},
        {"instances_checked", r.instances_checked},
        {"holds", to_string(r.holds)},
        {"undocumented_counterexamples", r.undocumented_counterexamples()},
        {"documented_findings", r.documented_findings()},
        {"claims", claims},
        {"witnesses", witnesses}};
}

auto iasl::to_json(std::span<const TheoremReport> reports) -> Json
{
    Json out = Json::array();
    for (const auto & r : reports)
        out.push_back(to_json(r));
    return out;
}
