#include "cli.hh"

#include <iasl/error.hh>
#include <iasl/json.hh>

#include "CLI11.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

using namespace iasl;

using std::ostream;
using std::string;
using std::vector;

namespace
{
    auto read_file(const string & path) -> string
    {
        std::ifstream in{path, std::ios::binary};
        if (! in)
            throw Error("cannot read '" + path + "'");
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }

    auto write_file(const string & path, const string & text) -> void
    {
        std::ofstream out{path, std::ios::binary};
        if (! out || ! (out << text))
            throw Error("cannot write '" + path + "'");
    }

    auto with_context(const string & path, const std::function<auto ()->void> & parse) -> void
    {
        try {
            parse();
        }
        catch (const Error & e) {
            throw Error(path + ": " + e.what());
        }
    }

    auto document(Json body) -> Json
    {
        Json out{{"schema", json_schema}};
        for (auto & [k, v] : body.items())
            out[k] = std::move(v);
        return out;
    }

    auto print_json(ostream & out, const Json & j) -> void
    {
        out << j.dump(2) << '\n';
    }

    auto print_violations(ostream & out, const VerificationReport & r) -> void
    {
        out << "verdict: " << (r.verdict ? "true" : "false") << '\n';
        for (const auto & v : r.violations)
            out << "  " << std::left << std::setw(20) << to_string(v.kind) << std::setw(16) << v.where << v.detail << '\n';
    }

    auto print_labeling(ostream & out, const Labeling & f) -> void
    {
        std::size_t width = 0;
        for (const auto & [v, label] : f.entries())
            width = std::max(width, v.size());
        for (const auto & [v, label] : f.entries())
            out << "  " << std::left << std::setw(static_cast<int>(width) + 2) << v << to_string(label) << '\n';
    }

    auto print_screen(ostream & out, const StructuralScreen & s) -> void
    {
        auto row = [&] (const string & name, int value, bool ok) {
            out << "  " << std::left << std::setw(30) << name << std::setw(6) << value << (ok ? "ok" : "fails") << '\n';
        };
        out << "screen (" << to_string(s.mode) << "): " << (s.rejects() ? "rejects" : "passes") << '\n';
        row("edges required", s.required_edges, s.edge_count_ok);
        row("min vertices", s.min_vertices, s.vertex_count_ok);
        row("label capacity", s.label_capacity, s.label_capacity_ok);
        row("pendant lower bound", s.pendant_lower_bound, s.pendant_lower_bound_ok);
        row("pendants (statement reading)", s.pendants_required_reading_a, s.pendant_count_ok_reading_a);
        row("pendants (proof reading)", s.pendants_required_reading_b, s.pendant_count_ok_reading_b);
        row("degree rho''", s.degree_condition, s.max_degree_ok);
        row("degree 1 + 2^(|X|-1)", s.proof_degree, s.proof_degree_ok);
    }

    struct VerifyClass
    {
        string name;
        int k = 0;
    };

    auto parse_verify_class(const string & text) -> VerifyClass
    {
        static const vector<string> plain{"iasl", "iasi", "iasgl", "top-iasl", "top-iasgl"};
        if (std::find(plain.begin(), plain.end(), text) != plain.end())
            return VerifyClass{text};
        if (text.starts_with("uniform:")) {
            auto digits = text.substr(8);
            if (! digits.empty() && digits.find_first_not_of("0123456789") == string::npos && digits.size() < 4)
                return VerifyClass{"uniform", std::stoi(digits)};
        }
        throw Error("unknown class '" + text + "'");
    }

    auto run_verify(const string & class_text, const string & graph_path, const string & labeling_path, bool json,
        ostream & out) -> int
    {
        auto kind = parse_verify_class(class_text);
        std::optional<Graph> g;
        std::optional<Labeling> f;
        with_context(graph_path, [&] { g = parse_graph(read_file(graph_path)); });
        with_context(labeling_path, [&] { f = parse_labeling(read_file(labeling_path)); });

        VerificationReport report;
        if (kind.name == "iasl")
            report = verify_iasl(*g, *f);
        else if (kind.name == "iasi")
            report = verify_iasi(*g, *f);
        else if (kind.name == "uniform")
            report = verify_uniform(*g, *f, kind.k);
        else if (kind.name == "iasgl")
            report = verify_iasgl(*g, *f);
        else if (kind.name == "top-iasl")
            report = verify_top_iasl(*g, *f);
        else
            report = verify_top_iasgl(*g, *f);

        if (json) {
            auto body = to_json(report);
            body["class"] = class_text;
            print_json(out, document(body));
        }
        else
            print_violations(out, report);
        return report.verdict ? 0 : 1;
    }

    auto run_classify(const string & x_text, bool json, ostream & out) -> int
    {
        auto c = classify(parse_ground_set(x_text));
        if (json) {
            print_json(out, document(to_json(c)));
            return 0;
        }
        out << "X = " << to_string(c.ground.base()) << '\n'
            << "rho = " << c.rho << ", rho' = " << c.rho_prime << ", rho'' = " << c.rho_double_prime
            << ", X is a sumset: " << (c.x_is_sumset ? "yes" : "no") << '\n';
        std::size_t width = 0;
        for (const auto & s : c.per_subset)
            width = std::max(width, to_string(s.subset).size());
        for (const auto & s : c.per_subset) {
            out << "  " << std::left << std::setw(static_cast<int>(width) + 2) << to_string(s.subset)
                << std::setw(8) << (s.is_nontrivial_sumset ? "sumset" : "-")
                << std::setw(9) << (s.is_nontrivial_summand ? "summand" : "-");
            if (s.witness)
                out << to_string(s.witness->first) << " + " << to_string(s.witness->second);
            out << '\n';
        }
        return 0;
    }

    auto run_search(const string & mode_text, const string & graph_path, const string & x_text, bool json, ostream & out) -> int
    {
        auto mode = parse_search_mode(mode_text);
        std::optional<Graph> g;
        with_context(graph_path, [&] { g = parse_graph(read_file(graph_path)); });
        auto x = parse_ground_set(x_text);
        auto outcome = search(*g, x, mode);
        if (json)
            print_json(out, document(to_json(outcome)));
        else {
            out << "found: " << (outcome.found ? "true" : "false") << '\n';
            if (outcome.labeling)
                print_labeling(out, *outcome.labeling);
            out << "nodes explored: " << outcome.nodes_explored << '\n';
            print_screen(out, outcome.screen);
        }
        return outcome.found ? 0 : 1;
    }

    auto run_realize(const string & path, const string & graph_out, const string & labeling_out, bool json, ostream & out) -> int
    {
        std::optional<Topology> t;
        with_context(path, [&] { t = parse_topology(read_file(path)); });
        auto r = realize_topology(*t);
        auto report = verify_top_iasl(r.graph, r.labeling);
        auto graph_text = emit_graph(r.graph);
        auto labeling_text = emit_labeling(r.labeling, r.graph);
        if (! graph_out.empty())
            write_file(graph_out, graph_text);
        if (! labeling_out.empty())
            write_file(labeling_out, labeling_text);

        if (json)
            print_json(out, document(Json{{"graph", to_json(r.graph)}, {"labeling", to_json(r.labeling)},
                {"verification", to_json(report)}}));
        else {
            if (graph_out.empty())
                out << "# graph\n" << graph_text;
            if (labeling_out.empty())
                out << "# labeling\n" << labeling_text;
            out << "# top-iasl " << (report.verdict ? "verified" : "fails") << '\n';
        }
        return report.verdict ? 0 : 1;
    }

    auto run_enum_topologies(const string & x_text, bool with_zero, bool count_only, bool json, ostream & out) -> int
    {
        auto x = parse_ground_set(x_text, max_topology_ground_size);
        auto all = enumerate_topologies(x, with_zero);
        if (json) {
            Json body{{"ground_set", to_json(x.base())}, {"with_zero", with_zero}, {"count", all.size()}};
            if (! count_only) {
                Json list = Json::array();
                for (const auto & t : all)
                    list.push_back(to_json(t));
                body["topologies"] = list;
            }
            print_json(out, document(body));
        }
        else if (count_only)
            out << all.size() << '\n';
        else
            for (const auto & t : all) {
                for (std::size_t i = 0; i < t.opens().size(); ++i)
                    out << (i ? " " : "") << to_string(t.opens()[i]);
                out << '\n';
            }
        return 0;
    }

    auto run_min_ground_set(const string & mode_text, const string & graph_path, int max_element, bool json, ostream & out) -> int
    {
        auto mode = parse_search_mode(mode_text);
        std::optional<Graph> g;
        with_context(graph_path, [&] { g = parse_graph(read_file(graph_path)); });
        auto x = minimal_ground_set(*g, mode, max_element);
        if (json) {
            Json body{{"mode", to_string(mode)}, {"max_element", max_element}, {"found", x.has_value()}};
            if (x) {
                body["ground_set"] = to_json(x->base());
                body["labeling"] = to_json(*search(*g, *x, mode).labeling);
            }
            print_json(out, document(body));
        }
        else if (x) {
            out << "ground set: " << to_string(x->base()) << '\n';
            print_labeling(out, *search(*g, *x, mode).labeling);
        }
        else
            out << "no ground set with elements up to " << max_element << '\n';
        return x ? 0 : 1;
    }

    auto run_oracle_command(vector<string> ids, int max_vertices, const vector<string> & ground_texts, bool json, ostream & out) -> int
    {
        if (ids.empty() || (ids.size() == 1 && ids.front() == "all"))
            ids = theorem_ids();
        vector<GroundSet> grounds;
        if (ground_texts.empty()) {
            grounds.push_back(parse_ground_set("{0,1}"));
            grounds.push_back(parse_ground_set("{0,1,2}"));
        }
        for (const auto & text : ground_texts)
            grounds.push_back(parse_ground_set(text));

        auto reports = run_selected(ids, max_vertices, grounds);
        bool clean = suite_clean(reports);
        if (json) {
            print_json(out, document(Json{{"suite_clean", clean}, {"reports", to_json(std::span<const TheoremReport>{reports})}}));
            return clean ? 0 : 1;
        }

        out << std::left << std::setw(11) << "id" << std::setw(16) << "holds" << std::right << std::setw(10) << "instances"
            << std::setw(14) << "undocumented" << "  documented findings\n";
        for (const auto & r : reports) {
            string findings;
            for (const auto & name : r.documented_findings())
                findings += (findings.empty() ? "" : ", ") + name;
            out << std::left << std::setw(11) << r.theorem_id << std::setw(16) << to_string(r.holds) << std::right
                << std::setw(10) << r.instances_checked << std::setw(14) << r.undocumented_counterexamples() << "  "
                << (findings.empty() ? "-" : findings) << '\n';
        }
        out << "suite " << (clean ? "clean" : "has undocumented counterexamples") << '\n';
        return clean ? 0 : 1;
    }
}

auto iasl::run_cli(int argc, const char * const * argv, ostream & out, ostream & err) -> int
{
    CLI::App app{"Integer additive set-labelings: verify, classify, search, realise, enumerate and check.", "iasl-lab"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    app.add_flag("--json", json, "emit JSON");

    string class_text, graph_path, labeling_path, x_text, mode_text = "iasgl", topology_path, graph_out, labeling_out;
    bool with_zero = false, count_only = false;
    int max_element = 6, max_vertices = 6;
    vector<string> ids, ground_texts;

    auto verify = app.add_subcommand("verify", "check a labeling against a class");
    verify->add_option("--class", class_text, "iasl|iasi|uniform:k|iasgl|top-iasl|top-iasgl")->required();
    verify->add_option("graph", graph_path)->required();
    verify->add_option("labeling", labeling_path)->required();

    auto classify_cmd = app.add_subcommand("classify", "sumset classification of a ground set");
    classify_cmd->add_option("ground-set", x_text)->required();

    auto search_cmd = app.add_subcommand("search", "exhaustive labeling search");
    search_cmd->add_option("--mode", mode_text, "iasgl|top-iasl|top-iasgl")->capture_default_str();
    search_cmd->add_option("graph", graph_path)->required();
    search_cmd->add_option("ground-set", x_text)->required();

    auto realize = app.add_subcommand("realize", "star realisation of a topology");
    realize->add_option("topology", topology_path)->required();
    realize->add_option("--graph-out", graph_out);
    realize->add_option("--labeling-out", labeling_out);

    auto enum_cmd = app.add_subcommand("enum-topologies", "all topologies on a ground set");
    enum_cmd->add_option("ground-set", x_text)->required();
    enum_cmd->add_flag("--with-zero", with_zero, "only topologies with {0} open");
    enum_cmd->add_flag("--count", count_only, "print the count only");

    auto min_cmd = app.add_subcommand("min-ground-set", "smallest ground set admitting a labeling");
    min_cmd->add_option("--mode", mode_text, "iasgl|top-iasl|top-iasgl")->capture_default_str();
    min_cmd->add_option("graph", graph_path)->required();
    min_cmd->add_option("--max-element", max_element)->capture_default_str();

    auto oracle_cmd = app.add_subcommand("oracle", "exhaustive checks of the labeling results");
    oracle_cmd->add_option("ids", ids, "result ids or 'all'");
    oracle_cmd->add_option("--max-vertices", max_vertices)->capture_default_str();
    oracle_cmd->add_option("--ground-set", ground_texts, "repeatable; default {0,1} and {0,1,2}");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed())
            return run_verify(class_text, graph_path, labeling_path, json, out);
        if (classify_cmd->parsed())
            return run_classify(x_text, json, out);
        if (search_cmd->parsed())
            return run_search(mode_text, graph_path, x_text, json, out);
        if (realize->parsed())
            return run_realize(topology_path, graph_out, labeling_out, json, out);
        if (enum_cmd->parsed())
            return run_enum_topologies(x_text, with_zero, count_only, json, out);
        if (min_cmd->parsed())
            return run_min_ground_set(mode_text, graph_path, max_element, json, out);
        if (oracle_cmd->parsed())
            return run_oracle_command(ids, max_vertices, ground_texts, json, out);
    }
    catch (const std::exception & e) {
        err << "iasl-lab: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
