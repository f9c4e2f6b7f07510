#include "sandlab/json_io.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "sandlab/rng.hpp"

namespace sandlab {

namespace {

template <typename T>
T field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw MalformedInput(std::string("missing field \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw MalformedInput(std::string("bad field \"") + key + "\": " + e.what());
    }
}

Json vertex_pairs(const std::vector<Edge>& edges) {
    Json out = Json::array();
    for (const auto& e : edges) out.push_back({e.u, e.v});
    return out;
}

std::vector<Edge> edges_from_json(const Json& j) {
    if (!j.is_array()) throw MalformedInput("edges must be an array of pairs");
    std::vector<Edge> edges;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer())
            throw MalformedInput("edge must be a pair of integers");
        const int a = pair[0].get<int>(), b = pair[1].get<int>();
        if (a == b) throw MalformedInput("loops are not allowed");
        edges.push_back(make_edge(a, b));
    }
    return edges;
}

}  // namespace

Json bigint_to_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

Json graph_to_json(const Graph& g) {
    Json j;
    j["kind"] = to_string(g.kind());
    j["n"] = g.n_nonsink();
    if (g.kind() == GraphKind::Custom) j["edges"] = vertex_pairs(g.edges());
    return j;
}

Graph graph_from_json(const Json& j) {
    const auto kind = graph_kind_from_string(field<std::string>(j, "kind"));
    const int n = field<int>(j, "n");
    switch (kind) {
        case GraphKind::Cycle: return make_cycle(n);
        case GraphKind::Path: return make_path(n);
        case GraphKind::Wheel: return make_wheel(n);
        case GraphKind::Fan: return make_fan(n);
        case GraphKind::Custom: break;
    }
    if (!j.contains("edges")) throw MalformedInput("custom graph needs \"edges\"");
    auto edges = edges_from_json(j.at("edges"));
    const bool has_sink = std::any_of(edges.begin(), edges.end(), [](const Edge& e) { return e.u == 0; });
    return Graph(GraphKind::Custom, n, has_sink, std::move(edges));
}

Json configuration_to_json(const Configuration& c, const Graph& g) {
    Json j;
    j["graph"] = graph_to_json(g);
    j["config"] = c.grains();
    return j;
}

std::pair<Graph, Configuration> configuration_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("graph")) throw MalformedInput("missing field \"graph\"");
    Graph g = graph_from_json(j.at("graph"));
    auto grains = field<std::vector<int>>(j, "config");
    if (static_cast<int>(grains.size()) != g.n_nonsink())
        throw MalformedInput("config length does not match the graph");
    for (int x : grains)
        if (x < 0) throw MalformedInput("grain counts must be non-negative");
    return {std::move(g), Configuration(std::move(grains))};
}

Json stabilization_to_json(const StabilizationResult& r, const StabilizationMeta& meta) {
    Json j;
    j["stable_config"] = r.stable_config.grains();
    j["topplings"] = r.topplings;
    j["grains_to_sink"] = r.grains_to_sink;
    j["model"] = to_string(meta.model);
    j["schedule"] = "lowest-index-first";
    if (meta.model == Model::SSM) {
        j["p"] = meta.p;
        j["seed"] = meta.seed ? Json(*meta.seed) : Json(nullptr);
        j["rng"] = std::string(SplittableRng::kAlgorithm);
    }
    return j;
}

Json pmo_to_json(const MarkedCycleOrientation& mo) {
    Json j;
    j["n"] = mo.n();
    j["ccw_edges"] = mo.ccw_edges();
    j["marks"] = mo.marks;
    return j;
}

MarkedCycleOrientation pmo_from_json(const Json& j) {
    return make_marked_cycle_orientation(field<int>(j, "n"), field<std::vector<int>>(j, "ccw_edges"),
                                         field<std::vector<int>>(j, "marks"));
}

Json subgraph_to_json(const Subgraph& s) {
    Json j;
    j["vertices"] = s.vertices();
    j["edges"] = vertex_pairs(s.edges());
    return j;
}

Subgraph subgraph_from_json(const Json& j, const Graph& parent) {
    if (!j.is_object() || !j.contains("edges")) throw MalformedInput("missing field \"edges\"");
    return Subgraph(parent, field<std::vector<int>>(j, "vertices"), edges_from_json(j.at("edges")));
}

Json pmword_to_json(const PMWord& w) {
    Json j = Json::array();
    for (Letter l : w.letters()) j.push_back(to_string(l));
    return j;
}

PMWord pmword_from_json(const Json& j) {
    if (!j.is_array()) throw MalformedInput("word must be an array of letters");
    std::vector<Letter> letters;
    for (const auto& token : j) {
        if (!token.is_string()) throw MalformedInput("letters must be strings");
        letters.push_back(letter_from_string(token.get<std::string>()));
    }
    return PMWord(std::move(letters));
}

std::string polynomial_to_csv(const Polynomial& p) {
    std::ostringstream out;
    out << "level,count\n";
    for (const auto& [level, count] : p.coefficients()) out << level << "," << count.str() << "\n";
    return out.str();
}

Json polynomial_to_json(const Polynomial& p) {
    Json rows = Json::array();
    for (const auto& [level, count] : p.coefficients()) rows.push_back({{"level", level}, {"count", bigint_to_json(count)}});
    return rows;
}

Json report_to_json(const Report& r) {
    Json j;
    j["theorem"] = r.theorem;
    j["n_max"] = r.n_max;
    j["status"] = r.passed ? "pass" : "fail";
    Json cells = Json::array();
    for (const auto& cell : r.cells) {
        Json params = Json::object();
        for (const auto& [key, value] : cell.params) params[key] = value;
        // numeric sides are emitted as numbers, polynomials as strings
        const auto side = [](const std::string& s) -> Json {
            if (!s.empty() && s.find_first_not_of("-0123456789") == std::string::npos)
                return bigint_to_json(BigInt(s));
            return s;
        };
        cells.push_back({{"check", cell.check},
                         {"params", params},
                         {"lhs", side(cell.lhs)},
                         {"rhs", side(cell.rhs)},
                         {"ok", cell.ok}});
    }
    j["cells"] = cells;
    if (r.counterexample) j["counterexample"] = *r.counterexample;
    return j;
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw MalformedInput(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace sandlab
