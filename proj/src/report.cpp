#include "neumaier/report.hpp"

namespace neumaier {

Json to_json(const NeumaierParams& p)
{
    return Json{{"v", p.v}, {"k", p.k}, {"lambda", p.lambda}, {"m", p.m}, {"s", p.s}};
}

Json to_json(const VerificationReport& r)
{
    Json j;
    j["schema"] = report_schema;
    j["order"] = r.regularity.v;
    j["regularity"] = to_string(r.regularity.kind);
    auto field = [](std::int64_t x) { return x < 0 ? Json(nullptr) : Json(x); };
    j["k"] = field(r.regularity.k);
    j["lambda"] = field(r.regularity.lambda);
    j["mu"] = field(r.regularity.mu);
    j["mu_support"] = r.mu_support;
    j["kind"] = to_string(r.kind);
    j["params"] = r.params ? to_json(*r.params) : Json(nullptr);
    j["regular_clique_count"] = r.regular_cliques.size();
    j["regular_clique"] = r.regular_cliques.empty() ? Json(nullptr) : Json(r.regular_cliques.front().members);
    return j;
}

Json to_json(const TheoremCheck& c)
{
    Json j;
    j["schema"] = report_schema;
    j["passed"] = c.passed();
    j["expected"] = to_json(c.expected);
    j["regularity"] = to_string(c.regularity.kind);
    j["mu_support"] = c.mu_support;
    j["failures"] = c.failures;
    return j;
}

Json to_json(const SearchStats& s)
{
    Json j;
    j["nodes"] = s.nodes;
    j["designs"] = s.designs;
    j["completions"] = s.completions;
    j["prunes"] = s.prunes;
    j["seconds"] = s.seconds;
    return j;
}

Json to_json(const FixtureComparison& c)
{
    return Json{{"fixture", c.name}, {"construction", c.construction}, {"matches", c.matches},
                {"differing_pairs", c.differing_pairs}};
}

Json search_trailer(const SearchResult& r)
{
    Json j;
    j["schema"] = report_schema;
    j["params"] = to_json(r.spec.params);
    j["mode"] = r.spec.mode == SearchMode::Exhaustive ? "Exhaustive" : "FirstFound";
    j["strict"] = r.spec.strict;
    j["symmetry_breaking"] = r.spec.symmetry_breaking;
    j["budget_nodes"] = r.spec.budget_nodes;
    j["budget_seconds"] = r.spec.budget_seconds;
    j["classes"] = r.representatives.size();
    j["exhaustive"] = r.exhaustive;
    j["stats"] = to_json(r.stats);
    return j;
}

Json graph_json(const Graph& g)
{
    Json j;
    j["schema"] = report_schema;
    j["order"] = g.order();
    Json edges = Json::array();
    for (auto [u, w] : g.edges())
        edges.push_back({u, w});
    j["edges"] = std::move(edges);
    return j;
}

} // namespace neumaier
