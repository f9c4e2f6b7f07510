#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "sandlab/fan.hpp"
#include "sandlab/json_io.hpp"
#include "sandlab/lattice_paths.hpp"
#include "sandlab/rng.hpp"
#include "sandlab/sandpile.hpp"
#include "sandlab/verifier.hpp"
#include "sandlab/wheel.hpp"

namespace sandlab::cli {

namespace {

enum class Format { Json, Csv };

struct GlobalOptions {
    std::string format;  // empty: command default
    std::string output;
    std::uint64_t cap = BruteForceCaps{}.max_states;

    Format resolve(Format fallback) const {
        if (format.empty()) return fallback;
        return format == "json" ? Format::Json : Format::Csv;
    }
    BruteForceCaps caps() const {
        BruteForceCaps c;
        c.max_states = cap;
        return c;
    }
};

/// Result of a subcommand: text to emit plus exit code.
struct Outcome {
    std::string text;
    int code = kExitOk;
};

std::string dump(const Json& j) { return j.dump() + "\n"; }

Graph family_graph(const std::string& family, int n, const std::string& graph_json) {
    if (family == "wheel") return make_wheel(n);
    if (family == "fan") return make_fan(n);
    if (graph_json.empty()) throw InvalidArgument("--family custom needs --graph");
    return graph_from_json(parse_json(graph_json));
}

// ---- enumerate -------------------------------------------------------------

struct EnumerateOptions {
    std::string family;
    int n = 0;
    std::string model = "asm";
    std::string graph;
};

std::string space_joined(const Configuration& c) {
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? " " : "") + std::to_string(c.grains()[i]);
    return out;
}

Outcome run_enumerate(const EnumerateOptions& o, const GlobalOptions& g) {
    const Model model = model_from_string(o.model);
    const Graph graph = family_graph(o.family, o.n, o.graph);
    const bool wheel = o.family == "wheel";
    std::vector<Configuration> rows;
    if (wheel || o.family == "fan") {
        for_each_stable(
            graph,
            [&](const Configuration& c) {
                if (wheel ? wheel_is_recurrent(c, model) : fan_is_recurrent(c)) rows.push_back(c);
            },
            g.caps());
    } else {
        rows = enumerate_recurrent(graph, model, g.caps());
    }
    if (g.resolve(Format::Csv) == Format::Csv) {
        std::ostringstream out;
        out << (wheel ? "config,level,weight\n" : "config,level\n");
        for (const auto& c : rows) {
            out << space_joined(c) << "," << level(c, graph);
            if (wheel) out << "," << weight01star(c);
            out << "\n";
        }
        return {out.str()};
    }
    Json j;
    j["graph"] = graph_to_json(graph);
    j["model"] = to_string(model);
    j["count"] = rows.size();
    Json list = Json::array();
    for (const auto& c : rows) {
        Json row;
        row["config"] = c.grains();
        row["level"] = level(c, graph);
        if (wheel) row["weight"] = weight01star(c);
        list.push_back(row);
    }
    j["rows"] = list;
    return {dump(j)};
}

// ---- biject ----------------------------------------------------------------

struct BijectOptions {
    std::string map;
    std::string config;
    std::string word;
    std::string subgraph;
    std::string pmo;
    int n = 0;
    bool check = false;
};

// Values flowing through the bijections; exactly one alternative is active.
struct Payload {
    enum class Kind { WheelConfig, FanConfig, Pmo, DualSubgraph, Word, PathSubgraph, MinimalConfig, Orientation } kind;
    std::optional<Configuration> config;
    std::optional<MarkedCycleOrientation> pmo;
    std::optional<Subgraph> subgraph;
    std::optional<PMWord> word;
    int n = 0;
    std::optional<Orientation> orientation = std::nullopt;
};

bool same(const Payload& a, const Payload& b) {
    return a.kind == b.kind && a.config == b.config && a.pmo == b.pmo && a.subgraph == b.subgraph &&
           a.word == b.word;
}

std::string render(const Payload& p, bool word_as_json) {
    switch (p.kind) {
        case Payload::Kind::WheelConfig:
        case Payload::Kind::FanConfig:
        case Payload::Kind::MinimalConfig: return p.config->to_string() + "\n";
        case Payload::Kind::Orientation: {
            const Orientation& o = *p.orientation;
            Json arcs = Json::array();
            for (std::size_t e = 0; e < o.graph().edges().size(); ++e) arcs.push_back({o.tail(e), o.head(e)});
            Json in = Json::array();
            for (Vertex v = 1; v <= o.graph().n_nonsink(); ++v) in.push_back(o.in_degree(v));
            Json j;
            j["n"] = o.graph().n_nonsink();
            j["arcs"] = arcs;
            j["in_degrees"] = in;
            return dump(j);
        }
        case Payload::Kind::Pmo: return dump(pmo_to_json(*p.pmo));
        case Payload::Kind::DualSubgraph:
        case Payload::Kind::PathSubgraph: return dump(subgraph_to_json(*p.subgraph));
        case Payload::Kind::Word: return word_as_json ? dump(pmword_to_json(*p.word)) : p.word->to_string() + "\n";
    }
    return {};
}

Payload wheel_config(Configuration c) { return {Payload::Kind::WheelConfig, std::move(c), {}, {}, {}, 0}; }
Payload fan_config(Configuration c) { return {Payload::Kind::FanConfig, std::move(c), {}, {}, {}, 0}; }
Payload pmo_payload(MarkedCycleOrientation mo) {
    const int n = mo.n();
    return {Payload::Kind::Pmo, {}, std::move(mo), {}, {}, n};
}
Payload dual_payload(const DualSubgraph& s) { return {Payload::Kind::DualSubgraph, {}, {}, s.subgraph, {}, s.n}; }
Payload word_payload(PMWord w) {
    const int n = static_cast<int>(w.size()) + 1;
    return {Payload::Kind::Word, {}, {}, {}, std::move(w), n};
}
Payload path_payload(Subgraph s, int n) { return {Payload::Kind::PathSubgraph, {}, {}, std::move(s), {}, n}; }

Payload apply(const Payload& p, Payload::Kind to) {
    using K = Payload::Kind;
    const auto dual = [&] { return DualSubgraph{p.n, *p.subgraph}; };
    switch (p.kind) {
        case K::WheelConfig:
            if (to == K::Pmo) return pmo_payload(phi_wheel(*p.config));
            if (to == K::DualSubgraph) return dual_payload(wheel_to_subgraph(*p.config));
            if (to == K::MinimalConfig) return {K::MinimalConfig, canonical_minimal(*p.config), {}, {}, {}, 0};
            if (to == K::Orientation) {
                Payload out{K::Orientation, {}, {}, {}, {}, 0};
                out.orientation = orientation_of_minimal(*p.config);
                return out;
            }
            break;
        case K::Pmo:
            if (to == K::WheelConfig) return wheel_config(psi_wheel(*p.pmo));
            if (to == K::DualSubgraph) return dual_payload(pmo_to_subgraph(*p.pmo));
            break;
        case K::DualSubgraph:
            if (to == K::Pmo) return pmo_payload(subgraph_to_pmo(dual()));
            if (to == K::WheelConfig) return wheel_config(subgraph_to_wheel(dual()));
            break;
        case K::FanConfig:
            if (to == K::Word) return word_payload(phi_fan(*p.config));
            if (to == K::PathSubgraph) return path_payload(word_to_subgraph(phi_fan(*p.config)), p.n);
            break;
        case K::Word:
            if (to == K::FanConfig) return fan_config(psi_fan(*p.word));
            if (to == K::PathSubgraph) return path_payload(word_to_subgraph(*p.word), p.n);
            break;
        case K::PathSubgraph:
            if (to == K::Word) return word_payload(subgraph_to_word(*p.subgraph, p.n));
            if (to == K::FanConfig) return fan_config(psi_fan(subgraph_to_word(*p.subgraph, p.n)));
            break;
        case K::MinimalConfig:
        case K::Orientation: break;
    }
    throw InvalidArgument("unsupported mapping");
}

const std::map<std::string, std::pair<Payload::Kind, Payload::Kind>>& bijection_table() {
    using K = Payload::Kind;
    static const std::map<std::string, std::pair<K, K>> table = {
        {"wheel-to-pmo", {K::WheelConfig, K::Pmo}},
        {"pmo-to-wheel", {K::Pmo, K::WheelConfig}},
        {"pmo-to-subgraph", {K::Pmo, K::DualSubgraph}},
        {"subgraph-to-pmo", {K::DualSubgraph, K::Pmo}},
        {"wheel-to-subgraph", {K::WheelConfig, K::DualSubgraph}},
        {"subgraph-to-wheel", {K::DualSubgraph, K::WheelConfig}},
        {"fan-to-word", {K::FanConfig, K::Word}},
        {"word-to-fan", {K::Word, K::FanConfig}},
        {"word-to-subgraph", {K::Word, K::PathSubgraph}},
        {"subgraph-to-word", {K::PathSubgraph, K::Word}},
        {"fan-to-subgraph", {K::FanConfig, K::PathSubgraph}},
        {"subgraph-to-fan", {K::PathSubgraph, K::FanConfig}},
        // one-way maps
        {"wheel-to-minimal", {K::WheelConfig, K::MinimalConfig}},
        {"wheel-to-orientation", {K::WheelConfig, K::Orientation}},
    };
    return table;
}

const std::string& require(const std::string& value, const char* flag) {
    if (value.empty()) throw InvalidArgument(std::string("this mapping needs ") + flag);
    return value;
}

PMWord parse_word(const std::string& text) {
    if (!text.empty() && text.front() == '[') return pmword_from_json(parse_json(text));
    return PMWord::parse(text);
}

Payload read_input(Payload::Kind kind, const BijectOptions& o) {
    using K = Payload::Kind;
    switch (kind) {
        case K::WheelConfig: return wheel_config(Configuration::parse(require(o.config, "--config")));
        case K::FanConfig: {
            auto c = Configuration::parse(require(o.config, "--config"));
            Payload p = fan_config(std::move(c));
            p.n = static_cast<int>(p.config->size());
            return p;
        }
        case K::Pmo: return pmo_payload(pmo_from_json(parse_json(require(o.pmo, "--pmo"))));
        case K::DualSubgraph: {
            if (o.n < 3) throw InvalidArgument("a dual subgraph of C_n needs --n >= 3");
            const Graph cycle = make_cycle(o.n);
            return dual_payload({o.n, subgraph_from_json(parse_json(require(o.subgraph, "--subgraph")), cycle)});
        }
        case K::Word: return word_payload(parse_word(require(o.word, "--word")));
        case K::MinimalConfig:
        case K::Orientation: break;
        case K::PathSubgraph: {
            if (o.n < 2) throw InvalidArgument("a subgraph of P_n needs --n >= 2");
            const Graph path = make_path(o.n);
            return path_payload(subgraph_from_json(parse_json(require(o.subgraph, "--subgraph")), path), o.n);
        }
    }
    throw InvalidArgument("unsupported input");
}

Outcome run_biject(const BijectOptions& o, const GlobalOptions& g) {
    const auto& table = bijection_table();
    const auto it = table.find(o.map);
    if (it == table.end()) throw InvalidArgument("unknown --map '" + o.map + "'");
    const auto [from, to] = it->second;
    const bool one_way = to == Payload::Kind::MinimalConfig || to == Payload::Kind::Orientation;
    if (o.check && one_way) throw InvalidArgument("--check needs an invertible map");
    const Payload input = read_input(from, o);
    Payload output = apply(input, to);
    if (output.n == 0) output.n = input.n;
    Outcome outcome{render(output, g.resolve(Format::Csv) == Format::Json)};
    if (o.check && !same(apply(output, from), input)) {
        outcome.code = kExitFailure;
        outcome.text += "round trip mismatch\n";
    }
    return outcome;
}

// ---- table -----------------------------------------------------------------

struct TableOptions {
    std::string which;
    int n_max = 6;
    std::string level_order = "desc";
    std::string method = "formula";
};

struct TableRow {
    int a;
    int b;
    BigInt count;
};

std::vector<TableRow> build_table(const TableOptions& o, const BruteForceCaps& caps) {
    const bool enumerate = o.method == "enumerate";
    std::vector<TableRow> rows;
    if (o.n_max < 1) throw InvalidArgument("--n-max must be positive");
    if (o.which == "differed-delannoy") {
        for (int n = 1; n <= o.n_max; ++n)
            for (int k = 1; k <= n; ++k)
                rows.push_back({n, k, enumerate ? BigInt(enumerate_differed_delannoy(n, k).size())
                                                : count_differed_delannoy(n, k)});
    } else if (o.which == "fan-levels") {
        for (int n = 1; n <= o.n_max; ++n) {
            Polynomial levels;
            if (enumerate) {
                // F_1 degenerates to a single vertex joined to the sink
                const Graph g = n == 1 ? Graph(GraphKind::Custom, 1, true, {Edge{0, 1}}) : make_fan(n);
                levels = level_polynomial(g, Model::ASM, caps);
            }
            for (int i = 0; i < n; ++i) {
                const int k = o.level_order == "desc" ? n - 1 - i : i;
                rows.push_back({n, k, enumerate ? levels.coefficient(k) : count_rec_fan(n, k)});
            }
        }
    } else if (o.which == "kimberling") {
        for (int i = 1; i <= o.n_max; ++i)
            for (int j = 0; j <= o.n_max; ++j)
                rows.push_back({i, j, enumerate ? BigInt(enumerate_kimberling(i, j).size())
                                                : count_kimberling_total(i, j)});
    } else if (o.which == "wheel-subgraph-counts") {
        if (o.n_max < 3) throw InvalidArgument("wheel-subgraph-counts needs --n-max >= 3");
        for (int n = 3; n <= o.n_max; ++n) {
            std::map<int, long long> by_edges;
            if (enumerate)
                for_each_subgraph(make_cycle(n), [&](const Subgraph& s) { ++by_edges[static_cast<int>(s.edges().size())]; });
            for (int k = 0; k <= n; ++k)
                rows.push_back({n, k, enumerate ? BigInt(by_edges[k]) : count_cycle_subgraphs(n, k)});
        }
    } else {
        throw InvalidArgument("unknown table '" + o.which + "'");
    }
    return rows;
}

Outcome run_table(const TableOptions& o, const GlobalOptions& g) {
    const auto rows = build_table(o, g.caps());
    const bool ij = o.which == "kimberling";
    if (g.resolve(Format::Csv) == Format::Csv) {
        std::ostringstream out;
        out << (ij ? "i,j,count\n" : "n,k,count\n");
        for (const auto& r : rows) out << r.a << "," << r.b << "," << r.count.str() << "\n";
        return {out.str()};
    }
    Json j;
    j["table"] = o.which;
    Json list = Json::array();
    for (const auto& r : rows)
        list.push_back({{ij ? "i" : "n", r.a}, {ij ? "j" : "k", r.b}, {"count", bigint_to_json(r.count)}});
    j["rows"] = list;
    return {dump(j)};
}

// ---- simulate --------------------------------------------------------------

struct SimulateOptions {
    std::string family;
    int n = 0;
    std::string graph;
    std::string model = "asm";
    double p = 0.5;
    std::string mu;
    std::uint64_t steps = 0;
    std::uint64_t seed = 0;
    std::uint64_t burn_in = 0;
};

std::vector<double> parse_mu(const std::string& text, int n) {
    if (text.empty()) return std::vector<double>(static_cast<std::size_t>(n), 1.0 / n);
    std::vector<double> mu;
    std::stringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        try {
            std::size_t used = 0;
            mu.push_back(std::stod(token, &used));
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw MalformedInput("bad --mu entry '" + token + "'");
        }
    }
    if (static_cast<int>(mu.size()) != n) throw InvalidArgument("--mu needs one weight per non-sink vertex");
    return mu;
}

Outcome run_simulate(const SimulateOptions& o, const GlobalOptions& g) {
    const Model model = model_from_string(o.model);
    const Graph graph = family_graph(o.family, o.n, o.graph);
    const auto mu = parse_mu(o.mu, graph.n_nonsink());
    MarkovOptions options;
    options.p = o.p;
    options.steps = o.steps;
    options.burn_in = o.burn_in;
    options.seed = o.seed;
    const auto visits = simulate_markov(graph, model, mu, options);
    if (g.resolve(Format::Json) == Format::Csv) {
        std::ostringstream out;
        out << "config,count\n";
        for (const auto& [c, count] : visits) out << space_joined(c) << "," << count << "\n";
        return {out.str()};
    }
    Json j;
    j["graph"] = graph_to_json(graph);
    j["model"] = to_string(model);
    if (model == Model::SSM) j["p"] = o.p;
    j["steps"] = o.steps;
    j["burn_in"] = o.burn_in;
    j["seed"] = o.seed;
    j["rng"] = std::string(SplittableRng::kAlgorithm);
    Json list = Json::array();
    for (const auto& [c, count] : visits) list.push_back({{"config", c.grains()}, {"count", count}});
    j["visits"] = list;
    return {dump(j)};
}

// ---- verify ----------------------------------------------------------------

struct VerifyOptions {
    std::string theorem;
    int n_max = 5;
};

Outcome run_verify(const VerifyOptions& o, const GlobalOptions& g) {
    const auto report = verify_theorem(o.theorem, o.n_max, g.caps());
    Outcome outcome;
    if (g.resolve(Format::Json) == Format::Csv) {
        std::ostringstream out;
        out << "check,params,lhs,rhs,ok\n";
        for (const auto& cell : report.cells) {
            std::string params;
            for (const auto& [key, value] : cell.params)
                params += (params.empty() ? "" : " ") + key + "=" + std::to_string(value);
            out << '"' << cell.check << "\"," << params << ",\"" << cell.lhs << "\",\"" << cell.rhs << "\","
                << (cell.ok ? "true" : "false") << "\n";
        }
        outcome.text = out.str();
    } else {
        outcome.text = dump(report_to_json(report));
    }
    outcome.code = report.passed ? kExitOk : kExitFailure;
    return outcome;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sandpile recurrence, bijection and lattice-path toolkit", "sandlab"};
    app.require_subcommand(1);
    GlobalOptions global;
    app.add_option("--format", global.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--output", global.output, "Write output to this path instead of stdout");
    app.add_option("--cap", global.cap, "Cap on brute-force state spaces")->check(CLI::PositiveNumber);

    const auto families = CLI::IsMember({"wheel", "fan", "custom"});
    const auto models = CLI::IsMember({"asm", "ssm"});

    std::function<Outcome()> action;

    EnumerateOptions enumerate;
    auto* cmd_enumerate = app.add_subcommand("enumerate", "List recurrent configurations with their level");
    cmd_enumerate->add_option("--family", enumerate.family)->required()->check(families);
    cmd_enumerate->add_option("--n", enumerate.n, "Number of non-sink vertices");
    cmd_enumerate->add_option("--model", enumerate.model)->check(models);
    cmd_enumerate->add_option("--graph", enumerate.graph, "Graph literal JSON for --family custom");
    cmd_enumerate->callback([&] { action = [&] { return run_enumerate(enumerate, global); }; });

    BijectOptions biject;
    auto* cmd_biject = app.add_subcommand("biject", "Apply one of the bijections");
    std::vector<std::string> map_names;
    for (const auto& [name, kinds] : bijection_table()) map_names.push_back(name);
    cmd_biject->add_option("--map", biject.map)->required()->check(CLI::IsMember(map_names));
    cmd_biject->add_option("--config", biject.config, "Configuration, e.g. 1,2,0,1");
    cmd_biject->add_option("--word", biject.word, "Word, e.g. \"Lu Lm R\" or a JSON array");
    cmd_biject->add_option("--subgraph", biject.subgraph, "Subgraph JSON");
    cmd_biject->add_option("--pmo", biject.pmo, "Marked orientation JSON");
    cmd_biject->add_option("--n", biject.n, "Size of the carrier cycle or path for subgraph input");
    cmd_biject->add_flag("--check", biject.check, "Apply the inverse and fail on mismatch");
    cmd_biject->callback([&] { action = [&] { return run_biject(biject, global); }; });

    TableOptions table;
    auto* cmd_table = app.add_subcommand("table", "Print a counting table");
    cmd_table->add_option("--which", table.which)
        ->required()
        ->check(CLI::IsMember({"differed-delannoy", "fan-levels", "kimberling", "wheel-subgraph-counts"}));
    cmd_table->add_option("--n-max", table.n_max)->capture_default_str();
    cmd_table->add_option("--level-order", table.level_order)
        ->check(CLI::IsMember({"asc", "desc"}))
        ->capture_default_str();
    cmd_table->add_option("--method", table.method)
        ->check(CLI::IsMember({"formula", "enumerate"}))
        ->capture_default_str();
    cmd_table->callback([&] { action = [&] { return run_table(table, global); }; });

    SimulateOptions simulate;
    auto* cmd_simulate = app.add_subcommand("simulate", "Run the add-and-stabilise Markov chain");
    cmd_simulate->add_option("--family", simulate.family)->required()->check(families);
    cmd_simulate->add_option("--n", simulate.n);
    cmd_simulate->add_option("--graph", simulate.graph);
    cmd_simulate->add_option("--model", simulate.model)->check(models);
    cmd_simulate->add_option("--p", simulate.p)->capture_default_str();
    cmd_simulate->add_option("--mu", simulate.mu, "Comma-separated vertex weights (default uniform)");
    cmd_simulate->add_option("--steps", simulate.steps)->required();
    cmd_simulate->add_option("--seed", simulate.seed)->capture_default_str();
    cmd_simulate->add_option("--burn-in", simulate.burn_in)->capture_default_str();
    cmd_simulate->callback([&] { action = [&] { return run_simulate(simulate, global); }; });

    VerifyOptions verify;
    auto* cmd_verify = app.add_subcommand("verify", "Cross-check a result exhaustively");
    cmd_verify->add_option("--theorem", verify.theorem)->required()->check(CLI::IsMember(theorem_tags()));
    cmd_verify->add_option("--n-max", verify.n_max)->capture_default_str();
    cmd_verify->callback([&] { action = [&] { return run_verify(verify, global); }; });

    std::vector<std::string> storage{"sandlab"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : storage) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    Outcome outcome;
    try {
        outcome = action();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    if (global.output.empty()) {
        out << outcome.text;
    } else {
        std::ofstream file(global.output);
        if (!file) {
            err << "error: cannot write " << global.output << "\n";
            return kExitUsage;
        }
        file << outcome.text;
    }
    return outcome.code;
}

}  // namespace sandlab::cli
