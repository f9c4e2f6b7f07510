#include "sandlab/sandpile.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "sandlab/parallel.hpp"
#include "sandlab/rng.hpp"

namespace sandlab {

std::string to_string(Model model) { return model == Model::ASM ? "asm" : "ssm"; }

Model model_from_string(const std::string& name) {
    if (name == "asm" || name == "ASM") return Model::ASM;
    if (name == "ssm" || name == "SSM") return Model::SSM;
    throw InvalidArgument("unknown model '" + name + "' (expected asm or ssm)");
}

Configuration::Configuration(std::vector<int> grains) : grains_(std::move(grains)) {
    for (int g : grains_)
        if (g < 0) throw InvalidArgument("configuration entries must be non-negative");
}

Configuration::Configuration(std::initializer_list<int> grains) : Configuration(std::vector<int>(grains)) {}

int Configuration::at(Vertex v) const {
    if (v < 1 || static_cast<std::size_t>(v) > grains_.size())
        throw InvalidArgument("vertex " + std::to_string(v) + " outside configuration");
    return grains_[static_cast<std::size_t>(v - 1)];
}

long long Configuration::total() const { return std::accumulate(grains_.begin(), grains_.end(), 0LL); }

std::string Configuration::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < grains_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(grains_[i]);
    }
    return out;
}

Configuration Configuration::parse(const std::string& text) {
    std::vector<int> grains;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        const auto first = item.find_first_not_of(" \t");
        const auto last = item.find_last_not_of(" \t");
        if (first == std::string::npos) throw MalformedInput("empty entry in configuration '" + text + "'");
        item = item.substr(first, last - first + 1);
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw MalformedInput("bad configuration entry '" + item + "'");
        }
        if (used != item.size()) throw MalformedInput("bad configuration entry '" + item + "'");
        if (value < 0) throw MalformedInput("negative configuration entry '" + item + "'");
        grains.push_back(value);
    }
    if (grains.empty()) throw MalformedInput("empty configuration");
    return Configuration(std::move(grains));
}

namespace {

void require_sandpile_graph(const Configuration& c, const Graph& g) {
    if (!g.has_sink()) throw InvalidArgument("sandpile graph must have a sink vertex 0");
    if (c.size() != static_cast<std::size_t>(g.n_nonsink()))
        throw InvalidArgument("configuration length " + std::to_string(c.size()) + " does not match " +
                              std::to_string(g.n_nonsink()) + " non-sink vertices");
}

void require_stable(const Configuration& c, const Graph& g) {
    if (!is_stable(c, g)) throw UnstableInput("configuration " + c.to_string() + " is not stable");
}

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v - 1); }

/// Mutable state shared by the stabilisation loops.
struct Pile {
    const Graph& g;
    std::vector<int> grains;
    std::vector<long long> topplings;
    long long to_sink = 0;

    Pile(const Graph& graph, const Configuration& c)
        : g(graph), grains(c.grains()), topplings(c.size(), 0) {}

    bool unstable(Vertex v) const { return grains[idx(v)] >= g.degree(v); }

    std::optional<Vertex> next_unstable(ToppleOrder order) const {
        const int n = g.n_nonsink();
        if (order == ToppleOrder::LowestFirst) {
            for (Vertex v = 1; v <= n; ++v)
                if (unstable(v)) return v;
        } else {
            for (Vertex v = n; v >= 1; --v)
                if (unstable(v)) return v;
        }
        return std::nullopt;
    }

    void send(Vertex from, Vertex to) {
        --grains[idx(from)];
        if (to == 0)
            ++to_sink;
        else
            ++grains[idx(to)];
    }

    StabilizationResult result() && {
        return {Configuration(std::move(grains)), std::move(topplings), to_sink};
    }
};

void stabilize_asm_in_place(Pile& pile, ToppleOrder order) {
    while (const auto v = pile.next_unstable(order)) {
        for (Vertex w : pile.g.neighbors(*v)) pile.send(*v, w);
        ++pile.topplings[idx(*v)];
    }
}

void stabilize_ssm_in_place(Pile& pile, const CoinSource& coin, std::uint64_t max_topplings) {
    std::uint64_t events = 0;
    while (const auto v = pile.next_unstable(ToppleOrder::LowestFirst)) {
        if (++events > max_topplings)
            throw IterationGuardExceeded("SSM stabilisation exceeded " + std::to_string(max_topplings) +
                                         " topplings");
        for (Vertex w : pile.g.neighbors(*v))
            if (coin()) pile.send(*v, w);
        ++pile.topplings[idx(*v)];
    }
}

}  // namespace

bool is_stable(const Configuration& c, const Graph& g) {
    require_sandpile_graph(c, g);
    for (Vertex v = 1; v <= g.n_nonsink(); ++v)
        if (c.at(v) >= g.degree(v)) return false;
    return true;
}

Configuration topple_asm(const Configuration& c, const Graph& g, Vertex i) {
    require_sandpile_graph(c, g);
    if (i < 1 || i > g.n_nonsink()) throw InvalidArgument("cannot topple vertex " + std::to_string(i));
    Pile pile(g, c);
    if (!pile.unstable(i)) throw InvalidArgument("vertex " + std::to_string(i) + " is stable");
    for (Vertex w : g.neighbors(i)) pile.send(i, w);
    return Configuration(std::move(pile.grains));
}

StabilizationResult stabilize_asm(const Configuration& c, const Graph& g, ToppleOrder order) {
    require_sandpile_graph(c, g);
    Pile pile(g, c);
    stabilize_asm_in_place(pile, order);
    return std::move(pile).result();
}

StabilizationResult stabilize_ssm(const Configuration& c, const Graph& g, double p, std::uint64_t seed,
                                  std::uint64_t max_topplings) {
    if (!(p > 0.0 && p < 1.0)) throw InvalidArgument("SSM coin bias p must lie in (0,1)");
    SplittableRng rng(seed);
    return stabilize_ssm(c, g, [&] { return rng.coin(p); }, max_topplings);
}

StabilizationResult stabilize_ssm(const Configuration& c, const Graph& g, const CoinSource& coin,
                                  std::uint64_t max_topplings) {
    require_sandpile_graph(c, g);
    Pile pile(g, c);
    stabilize_ssm_in_place(pile, coin, max_topplings);
    return std::move(pile).result();
}

long long level(const Configuration& c, const Graph& g) {
    require_sandpile_graph(c, g);
    return c.total() + g.degree(0) - static_cast<long long>(g.edge_count());
}

bool is_recurrent_burning(const Configuration& c, const Graph& g) {
    require_sandpile_graph(c, g);
    require_stable(c, g);
    const int n = g.n_nonsink();
    std::vector<bool> burnt(static_cast<std::size_t>(n) + 1, false);
    burnt[0] = true;
    int remaining = n;
    bool progress = true;
    while (remaining > 0 && progress) {
        progress = false;
        for (Vertex v = 1; v <= n; ++v) {
            if (burnt[static_cast<std::size_t>(v)]) continue;
            int unburnt = 0;
            for (Vertex w : g.neighbors(v))
                if (!burnt[static_cast<std::size_t>(w)]) ++unburnt;
            if (c.at(v) >= unburnt) {
                burnt[static_cast<std::size_t>(v)] = true;
                --remaining;
                progress = true;
            }
        }
    }
    return remaining == 0;
}

namespace {

/// Depth-first search over directions of the non-sink edges; sink edges are
/// forced towards 0 since 0 must be a target.
class OrientationSearch {
public:
    OrientationSearch(const Configuration& c, const Graph& g, bool acyclic, bool exact)
        : c_(c), g_(g), acyclic_(acyclic), exact_(exact) {
        const auto slots = static_cast<std::size_t>(g.n_nonsink()) + 1;
        in_.assign(slots, 0);
        out_.assign(slots, 0);
        remaining_.assign(slots, 0);
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            const Edge& edge = g.edges()[e];
            if (edge.u == 0) {
                ++out_[static_cast<std::size_t>(edge.v)];
            } else {
                free_edges_.push_back(e);
                ++remaining_[static_cast<std::size_t>(edge.u)];
                ++remaining_[static_cast<std::size_t>(edge.v)];
            }
        }
        toward_high_.assign(g.edge_count(), false);
    }

    std::optional<std::vector<bool>> run() {
        if (descend(0)) return toward_high_;
        return std::nullopt;
    }

private:
    bool descend(std::size_t k) {
        if (k == free_edges_.size()) return accept();
        const std::size_t e = free_edges_[k];
        const Edge& edge = g_.edges()[e];
        for (bool high : {true, false}) {
            const Vertex tail = high ? edge.u : edge.v;
            const Vertex head = high ? edge.v : edge.u;
            const auto t = static_cast<std::size_t>(tail);
            const auto h = static_cast<std::size_t>(head);
            if (in_[h] + 1 > c_.at(head)) continue;
            ++in_[h];
            ++out_[t];
            --remaining_[t];
            --remaining_[h];
            toward_high_[e] = high;
            const bool ok = feasible(tail) && feasible(head) && descend(k + 1);
            ++remaining_[t];
            ++remaining_[h];
            --out_[t];
            --in_[h];
            if (ok) return true;
        }
        return false;
    }

    // Prune vertices whose fate is sealed: no outgoing edge left to make them
    // a non-target, or (exact) not enough edges left to reach c_v.
    bool feasible(Vertex v) const {
        const auto s = static_cast<std::size_t>(v);
        if (remaining_[s] > 0) return exact_ ? in_[s] + remaining_[s] >= c_.at(v) : true;
        if (out_[s] == 0) return false;
        return !exact_ || in_[s] == c_.at(v);
    }

    bool accept() const {
        for (Vertex v = 1; v <= g_.n_nonsink(); ++v) {
            const auto s = static_cast<std::size_t>(v);
            if (out_[s] == 0) return false;
            if (exact_ ? in_[s] != c_.at(v) : in_[s] > c_.at(v)) return false;
        }
        return !acyclic_ || is_acyclic();
    }

    bool is_acyclic() const {
        const auto slots = static_cast<std::size_t>(g_.n_nonsink()) + 1;
        std::vector<int> indegree(slots, 0);
        for (std::size_t e : free_edges_) {
            const Edge& edge = g_.edges()[e];
            ++indegree[static_cast<std::size_t>(toward_high_[e] ? edge.v : edge.u)];
        }
        std::vector<Vertex> ready;
        for (Vertex v = 1; v <= g_.n_nonsink(); ++v)
            if (indegree[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
        int removed = 0;
        while (!ready.empty()) {
            const Vertex v = ready.back();
            ready.pop_back();
            ++removed;
            for (std::size_t e : g_.incident_edges(v)) {
                const Edge& edge = g_.edges()[e];
                if (edge.u == 0) continue;
                const Vertex tail = toward_high_[e] ? edge.u : edge.v;
                const Vertex head = toward_high_[e] ? edge.v : edge.u;
                if (tail != v) continue;
                if (--indegree[static_cast<std::size_t>(head)] == 0) ready.push_back(head);
            }
        }
        return removed == g_.n_nonsink();
    }

    const Configuration& c_;
    const Graph& g_;
    bool acyclic_;
    bool exact_;
    std::vector<std::size_t> free_edges_;
    std::vector<int> in_;
    std::vector<int> out_;
    std::vector<int> remaining_;
    std::vector<bool> toward_high_;
};

std::optional<std::vector<bool>> search_orientation(const Configuration& c, const Graph& g, bool acyclic,
                                                    bool exact, const BruteForceCaps& caps) {
    require_sandpile_graph(c, g);
    require_stable(c, g);
    if (static_cast<int>(g.edge_count()) > caps.max_edges)
        throw CapExceeded("orientation oracle over " + std::to_string(g.edge_count()) +
                          " edges exceeds cap " + std::to_string(caps.max_edges));
    OrientationSearch search(c, g, acyclic, exact);
    return search.run();
}

}  // namespace

std::optional<Orientation> find_compatible_orientation(const Configuration& c, const GraphPtr& g,
                                                       bool require_acyclic, bool exact,
                                                       const BruteForceCaps& caps) {
    auto found = search_orientation(c, *g, require_acyclic, exact, caps);
    if (!found) return std::nullopt;
    // sink edges: 0 is always the lower endpoint, so they point "low".
    return Orientation(g, std::move(*found));
}

bool is_recurrent_oracle(const Configuration& c, const Graph& g, bool require_acyclic,
                         const BruteForceCaps& caps) {
    return search_orientation(c, g, require_acyclic, false, caps).has_value();
}

bool is_recurrent(const Configuration& c, const Graph& g, Model model, const BruteForceCaps& caps) {
    return model == Model::ASM ? is_recurrent_burning(c, g) : is_recurrent_oracle(c, g, false, caps);
}

bool is_minimal_recurrent(const Configuration& c, const Graph& g, Model model, const BruteForceCaps& caps) {
    return search_orientation(c, g, model == Model::ASM, true, caps).has_value();
}

std::uint64_t stable_space_size(const Graph& g) {
    if (!g.has_sink()) throw InvalidArgument("sandpile graph must have a sink vertex 0");
    std::uint64_t size = 1;
    for (Vertex v = 1; v <= g.n_nonsink(); ++v) {
        const auto d = static_cast<std::uint64_t>(g.degree(v));
        if (size > UINT64_MAX / d) return UINT64_MAX;
        size *= d;
    }
    return size;
}

namespace {

void check_state_cap(const Graph& g, const BruteForceCaps& caps) {
    const auto size = stable_space_size(g);
    if (size > caps.max_states)
        throw CapExceeded("stable space of size " + std::to_string(size) + " exceeds cap " +
                          std::to_string(caps.max_states));
}

/// Decodes index (mixed radix, vertex 1 most significant) into grains.
std::vector<int> decode_stable(const Graph& g, std::uint64_t index) {
    const int n = g.n_nonsink();
    std::vector<int> grains(static_cast<std::size_t>(n), 0);
    for (Vertex v = n; v >= 1; --v) {
        const auto d = static_cast<std::uint64_t>(g.degree(v));
        grains[idx(v)] = static_cast<int>(index % d);
        index /= d;
    }
    return grains;
}

/// Lexicographic successor within the stable box; false on wrap-around.
bool advance_stable(const Graph& g, std::vector<int>& grains) {
    for (Vertex v = g.n_nonsink(); v >= 1; --v) {
        if (++grains[idx(v)] < g.degree(v)) return true;
        grains[idx(v)] = 0;
    }
    return false;
}

}  // namespace

void for_each_stable(const Graph& g, const std::function<void(const Configuration&)>& visit,
                     const BruteForceCaps& caps) {
    check_state_cap(g, caps);
    std::vector<int> grains(static_cast<std::size_t>(g.n_nonsink()), 0);
    do {
        visit(Configuration(grains));
    } while (advance_stable(g, grains));
}

std::vector<Configuration> enumerate_recurrent(const Graph& g, Model model, const BruteForceCaps& caps) {
    check_state_cap(g, caps);
    if (model == Model::SSM && static_cast<int>(g.edge_count()) > caps.max_edges)
        throw CapExceeded("orientation oracle over " + std::to_string(g.edge_count()) +
                          " edges exceeds cap " + std::to_string(caps.max_edges));
    const auto total = stable_space_size(g);
    auto chunks = map_chunks(total, [&](std::size_t begin, std::size_t end) {
        std::vector<Configuration> found;
        if (begin >= end) return found;
        auto grains = decode_stable(g, begin);
        for (std::size_t i = begin; i < end; ++i) {
            Configuration c(grains);
            if (is_recurrent(c, g, model, caps)) found.push_back(std::move(c));
            advance_stable(g, grains);
        }
        return found;
    });
    std::vector<Configuration> all;
    for (auto& chunk : chunks) std::move(chunk.begin(), chunk.end(), std::back_inserter(all));
    return all;
}

Polynomial level_polynomial(const Graph& g, Model model, const BruteForceCaps& caps) {
    Polynomial poly;
    for (const auto& c : enumerate_recurrent(g, model, caps)) poly.add_term(static_cast<int>(level(c, g)), 1);
    return poly;
}

VisitCounts simulate_markov(const Graph& g, Model model, std::span<const double> mu,
                            const MarkovOptions& options) {
    if (!g.has_sink()) throw InvalidArgument("sandpile graph must have a sink vertex 0");
    if (mu.size() != static_cast<std::size_t>(g.n_nonsink()))
        throw InvalidArgument("mu must have one entry per non-sink vertex");
    double sum = 0.0;
    for (double m : mu) {
        if (!(m > 0.0)) throw InvalidArgument("mu entries must be positive");
        sum += m;
    }
    if (std::abs(sum - 1.0) > 1e-9) throw InvalidArgument("mu must sum to 1");
    if (model == Model::SSM && !(options.p > 0.0 && options.p < 1.0))
        throw InvalidArgument("SSM coin bias p must lie in (0,1)");

    SplittableRng root(options.seed);
    SplittableRng vertex_stream = root.split(0);
    SplittableRng coin_stream = root.split(1);
    const CoinSource coin = [&] { return coin_stream.coin(options.p); };

    VisitCounts visits;
    Pile pile(g, Configuration(std::vector<int>(mu.size(), 0)));
    for (std::uint64_t step = 0; step < options.steps; ++step) {
        const auto v = static_cast<Vertex>(vertex_stream.pick(mu)) + 1;
        ++pile.grains[idx(v)];
        if (model == Model::ASM)
            stabilize_asm_in_place(pile, ToppleOrder::LowestFirst);
        else
            stabilize_ssm_in_place(pile, coin, kDefaultSsmGuard);
        if (step >= options.burn_in) ++visits[Configuration(pile.grains)];
    }
    return visits;
}

}  // namespace sandlab
