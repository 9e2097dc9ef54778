// Command-line front end: feasibility tables, constructions, verification,
// isomorphism, search, exploration, format conversion and fixture checks.

#include "neumaier/affine_polar.hpp"
#include "neumaier/cliques.hpp"
#include "neumaier/fixtures.hpp"
#include "neumaier/graph_io.hpp"
#include "neumaier/iso.hpp"
#include "neumaier/params.hpp"
#include "neumaier/report.hpp"
#include "neumaier/search.hpp"
#include "neumaier/switching.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace neumaier;

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<Graph> read_graphs(const std::string& path)
{
    std::vector<Graph> graphs;
    if (path == "-") {
        graphs = read_graph6(std::cin);
    } else {
        std::ifstream in(path);
        if (!in)
            throw UsageError("cannot open " + path);
        graphs = read_graph6(in);
    }
    if (graphs.empty())
        throw UsageError("no graph in " + path);
    return graphs;
}

NeumaierParams parse_params(const std::string& text)
{
    std::vector<std::int64_t> xs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            xs.push_back(std::stoll(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw UsageError("--params expects v,k,lambda,m,s");
        }
    }
    if (xs.size() != 5)
        throw UsageError("--params expects v,k,lambda,m,s");
    return {xs[0], xs[1], xs[2], xs[3], xs[4]};
}

void write_graph(std::ostream& out, const Graph& g, const std::string& format)
{
    if (format == "graph6")
        out << to_graph6(g) << '\n';
    else if (format == "dot")
        out << to_dot(g);
    else
        out << graph_json(g).dump() << '\n';
}

void apply_vertex_cap_override()
{
    const char* env = std::getenv("NEUMAIER_MAX_V");
    if (!env)
        return;
    char* end = nullptr;
    auto cap = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || cap == 0)
        throw UsageError("NEUMAIER_MAX_V must be a positive integer");
    set_max_vertices(cap);
}

Construction build_construction(const std::string& family, int e, const std::string& variant)
{
    if (family == "gamma1")
        return construct_gamma1(e);
    return construct_gamma2(e, variant == "ppp" ? Gamma2Variant::PrimePrimePrime : Gamma2Variant::PrimePrime);
}

int run(int argc, char** argv)
{
    CLI::App app{"Neumaier graph toolkit"};
    app.require_subcommand(1);

    auto* feasible = app.add_subcommand("feasible", "List feasible parameter tuples with their verdicts");
    std::int64_t max_v = 24;
    bool feasible_json = false;
    feasible->add_option("--max-v", max_v, "Largest vertex count")->check(CLI::Range(4, 100000));
    feasible->add_flag("--json", feasible_json, "Emit JSON lines");

    auto* construct = app.add_subcommand("construct", "Build VO+(2e,2) or a switched construction");
    std::string family, variant = "pp", construct_format = "graph6";
    int e = 2;
    construct->add_option("family", family)->required()->check(CLI::IsMember({"voplus", "gamma1", "gamma2"}));
    construct->add_option("--e", e, "Half-dimension")->check(CLI::Range(2, 6));
    construct->add_option("--variant", variant, "gamma2 variant")->check(CLI::IsMember({"pp", "ppp"}));
    construct->add_option("--format", construct_format)->check(CLI::IsMember({"graph6", "dot", "json"}));

    auto* verify_cmd = app.add_subcommand("verify", "Classify graphs read as graph6");
    std::string verify_file;
    int theorem_e = 0;
    bool with_aut = false;
    verify_cmd->add_option("file", verify_file, "graph6 file, - for stdin")->required();
    verify_cmd->add_option("--theorem", theorem_e, "Also check the construction theorem at this e")
        ->check(CLI::Range(2, 6));
    verify_cmd->add_flag("--aut", with_aut, "Include automorphism group order and orbits");

    auto* iso_cmd = app.add_subcommand("iso", "Test two graphs for isomorphism");
    std::string iso_a, iso_b;
    iso_cmd->add_option("first", iso_a)->required();
    iso_cmd->add_option("second", iso_b)->required();

    auto* search_cmd = app.add_subcommand("search", "Search NG(v,k,lambda;m,s) up to isomorphism");
    std::string params_text;
    bool exhaustive = false, first_found = false, include_srg = false, no_symmetry = false;
    std::uint64_t budget_nodes = SearchSpec{}.budget_nodes;
    double budget_secs = SearchSpec{}.budget_seconds;
    search_cmd->add_option("--params", params_text, "v,k,lambda,m,s")->required();
    auto* exhaustive_flag = search_cmd->add_flag("--exhaustive", exhaustive, "Explore the whole space (default)");
    search_cmd->add_flag("--first", first_found, "Stop at the first graph found")->excludes(exhaustive_flag);
    search_cmd->add_flag("--all", include_srg, "Also keep strongly regular graphs");
    search_cmd->add_flag("--no-symmetry", no_symmetry, "Disable row-order symmetry breaking");
    search_cmd->add_option("--budget-nodes", budget_nodes);
    search_cmd->add_option("--budget-secs", budget_secs);

    auto* explore_cmd = app.add_subcommand("explore", "Switch VO+(2e,2) along regular cliques");
    int explore_e = 3, depth = 2;
    unsigned threads = 0;
    explore_cmd->add_option("--e", explore_e)->check(CLI::Range(2, 4));
    explore_cmd->add_option("--depth", depth)->check(CLI::Range(1, 4));
    explore_cmd->add_option("--threads", threads);

    auto* export_cmd = app.add_subcommand("export", "Convert graph6 input");
    std::string export_format = "graph6", export_file = "-";
    export_cmd->add_option("--format", export_format)->required()->check(CLI::IsMember({"graph6", "dot", "json"}));
    export_cmd->add_option("file", export_file, "graph6 file, - for stdin");

    auto* fixtures_cmd = app.add_subcommand("fixtures", "Transcribed 16-vertex adjacency matrices");
    fixtures_cmd->require_subcommand(1);
    auto* fixtures_check = fixtures_cmd->add_subcommand("check", "Compare fixtures with the constructions");
    auto* fixtures_show = fixtures_cmd->add_subcommand("show", "Print a fixture as graph6 in matrix order");
    std::string fixture_name;
    fixtures_show->add_option("name", fixture_name)->required()->check(CLI::IsMember(fixture_names()));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int code = app.exit(err);
        return code == 0 ? exit_ok : exit_usage;
    }

    apply_vertex_cap_override();

    if (*feasible) {
        auto records = enumerate_feasible(max_v);
        if (feasible_json)
            for (const auto& r : records)
                std::cout << to_json_line(r) << '\n';
        else
            std::cout << format_table(records);
        return exit_ok;
    }

    if (*construct) {
        Graph g = family == "voplus" ? build_vo_plus(e) : build_construction(family, e, variant).graph;
        write_graph(std::cout, g, construct_format);
        return exit_ok;
    }

    if (*verify_cmd) {
        int status = exit_ok;
        for (const auto& g : read_graphs(verify_file)) {
            auto report = verify(g);
            auto j = to_json(report);
            if (report.kind == NeumaierKind::NotNeumaier)
                status = exit_negative;
            if (theorem_e) {
                auto check = check_construction_theorem(g, theorem_e);
                j["theorem"] = to_json(check);
                if (!check.passed())
                    status = exit_negative;
            }
            if (with_aut) {
                auto group = automorphism_group(g);
                j["automorphisms"] = {{"order", group.order.str()},
                                      {"orbits", group.orbit_count()},
                                      {"vertex_transitive", group.orbit_count() == 1}};
            }
            std::cout << j.dump() << '\n';
        }
        return status;
    }

    if (*iso_cmd) {
        auto g1 = read_graphs(iso_a).front();
        auto g2 = read_graphs(iso_b).front();
        auto witness = isomorphism(g1, g2);
        if (!witness) {
            std::cout << "not isomorphic\n";
            return exit_negative;
        }
        std::cout << "isomorphic\n";
        for (std::size_t u = 0; u < witness->size(); ++u)
            std::cout << (u ? " " : "") << (*witness)[u];
        std::cout << '\n';
        return exit_ok;
    }

    if (*search_cmd) {
        SearchSpec spec;
        spec.params = parse_params(params_text);
        spec.mode = first_found ? SearchMode::FirstFound : SearchMode::Exhaustive;
        spec.strict = !include_srg;
        spec.symmetry_breaking = !no_symmetry;
        spec.budget_nodes = budget_nodes;
        spec.budget_seconds = budget_secs;
        SearchResult res;
        try {
            res = search_ng(spec);
        } catch (const std::invalid_argument& err) {
            throw UsageError(err.what());
        }
        for (const auto& g : res.representatives)
            std::cout << to_graph6(g) << '\n';
        std::cout << search_trailer(res).dump() << '\n';
        bool complete = res.exhaustive || (first_found && !res.representatives.empty());
        return complete ? exit_ok : exit_negative;
    }

    if (*explore_cmd) {
        auto gamma1 = construct_gamma1(explore_e).graph;
        auto gamma2 = construct_gamma2(explore_e).graph;
        auto res = explore_switchings(build_vo_plus(explore_e), depth, threads);
        Json summary;
        summary["schema"] = report_schema;
        summary["e"] = explore_e;
        summary["depth"] = depth;
        summary["classes"] = res.strictly_neumaier.size();
        Json matches = Json::array();
        for (const auto& g : res.strictly_neumaier) {
            std::cout << to_graph6(g) << '\n';
            Json names = Json::array();
            if (is_isomorphic(g, gamma1))
                names.push_back("gamma1");
            if (is_isomorphic(g, gamma2))
                names.push_back("gamma2");
            matches.push_back(std::move(names));
        }
        summary["matches"] = std::move(matches);
        summary["graphs_expanded"] = res.stats.graphs_expanded;
        summary["candidate_pairs"] = res.stats.candidate_pairs;
        summary["edge_regular_results"] = res.stats.edge_regular_results;
        std::cout << summary.dump() << '\n';
        return exit_ok;
    }

    if (*export_cmd) {
        for (const auto& g : read_graphs(export_file))
            write_graph(std::cout, g, export_format);
        return exit_ok;
    }

    if (*fixtures_check) {
        bool all = true;
        for (const auto& c : check_fixtures()) {
            std::cout << to_json(c).dump() << '\n';
            all = all && c.matches;
        }
        return all ? exit_ok : exit_negative;
    }

    if (*fixtures_show) {
        auto f = load_fixture(fixture_name);
        std::cout << to_graph6(f.graph) << '\n';
        for (std::size_t i = 0; i < f.fixture.labels.size(); ++i)
            std::cout << (i ? " " : "") << f.fixture.labels[i];
        std::cout << '\n';
        return exit_ok;
    }
    return exit_usage;
}

} // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const Graph6Error& err) {
        std::cerr << "error: malformed graph6: " << err.what() << '\n';
        return exit_usage;
    } catch (const UsageError& err) {
        std::cerr << "error: " << err.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << '\n';
        return exit_usage;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return exit_negative;
    }
}
