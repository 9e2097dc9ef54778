#pragma once

#include "neumaier/cliques.hpp"
#include "neumaier/fixtures.hpp"
#include "neumaier/params.hpp"
#include "neumaier/search.hpp"
#include "neumaier/switching.hpp"

#include "json.hpp"

namespace neumaier {

/// Version of every JSON document produced below, stored under "schema".
inline constexpr int report_schema = 1;

using Json = nlohmann::ordered_json;

Json to_json(const NeumaierParams& p);
Json to_json(const VerificationReport& r);
Json to_json(const TheoremCheck& c);
Json to_json(const SearchStats& s);
Json to_json(const FixtureComparison& c);

/// Summary trailer of a search: spec, exhaustiveness and statistics.
Json search_trailer(const SearchResult& r);

/// {"schema":1,"order":n,"edges":[[u,w],...]}.
Json graph_json(const Graph& g);

} // namespace neumaier
