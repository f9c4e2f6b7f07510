#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "sandlab/bigint.hpp"
#include "sandlab/fan.hpp"
#include "sandlab/graph.hpp"
#include "sandlab/polynomial.hpp"
#include "sandlab/sandpile.hpp"
#include "sandlab/verifier.hpp"
#include "sandlab/wheel.hpp"

namespace sandlab {

using Json = nlohmann::ordered_json;

/// Number when it fits in 64 bits, decimal string otherwise.
Json bigint_to_json(const BigInt& v);

/// {"kind":..., "n":...} plus "edges" for custom graphs. A custom graph has a
/// sink exactly when vertex 0 occurs in its edges.
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json configuration_to_json(const Configuration& c, const Graph& g);
/// Reads {"graph":..., "config":[...]}.
std::pair<Graph, Configuration> configuration_from_json(const Json& j);

struct StabilizationMeta {
    Model model = Model::ASM;
    std::optional<std::uint64_t> seed;  // SSM only
    double p = 0.5;
};
Json stabilization_to_json(const StabilizationResult& r, const StabilizationMeta& meta);

/// {"n":..., "ccw_edges":[...], "marks":[...]}
Json pmo_to_json(const MarkedCycleOrientation& mo);
MarkedCycleOrientation pmo_from_json(const Json& j);

/// {"vertices":[...], "edges":[[u,v],...]}
Json subgraph_to_json(const Subgraph& s);
Subgraph subgraph_from_json(const Json& j, const Graph& parent);

Json pmword_to_json(const PMWord& w);
PMWord pmword_from_json(const Json& j);

/// "level,count" header then one row per level.
std::string polynomial_to_csv(const Polynomial& p);
Json polynomial_to_json(const Polynomial& p);

Json report_to_json(const Report& r);

/// Parses JSON text, mapping syntax errors to MalformedInput.
Json parse_json(const std::string& text);

}  // namespace sandlab
