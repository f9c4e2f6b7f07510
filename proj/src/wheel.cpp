#include "sandlab/wheel.hpp"

#include <algorithm>

namespace sandlab {

namespace {

int next(int i, int n) { return i % n + 1; }
int prev(int i, int n) { return (i + n - 2) % n + 1; }

void require_word(const Configuration& c) {
    if (c.size() < 3) throw InvalidArgument("wheel words need length >= 3");
    for (int g : c.grains())
        if (g > 2) throw UnstableInput("wheel configuration " + c.to_string() + " is not stable");
}

std::vector<Vertex> zeros_of(const Configuration& c) {
    std::vector<Vertex> zeros;
    for (Vertex v = 1; v <= static_cast<int>(c.size()); ++v)
        if (c.at(v) == 0) zeros.push_back(v);
    return zeros;
}

/// Number of 2s strictly between zero z and the next zero clockwise (the whole
/// rest of the cycle when z is the only zero).
int twos_after(const Configuration& c, Vertex z) {
    const int n = static_cast<int>(c.size());
    int twos = 0;
    for (Vertex v = next(z, n); c.at(v) != 0; v = next(v, n)) {
        if (c.at(v) == 2) ++twos;
        if (v == z) break;
    }
    return twos;
}

void require_ssm_recurrent(const Configuration& c) {
    if (!wheel_is_recurrent(c, Model::SSM))
        throw NonRecurrentInput("configuration " + c.to_string() + " is not recurrent on W_" +
                                std::to_string(c.size()));
}

/// in_chain[v-1]: v belongs to a maximal 01*-chain.
std::vector<bool> chain_membership(const Configuration& c) {
    const int n = static_cast<int>(c.size());
    std::vector<bool> in_chain(c.size(), false);
    for (Vertex z : zeros_of(c)) {
        in_chain[static_cast<std::size_t>(z - 1)] = true;
        for (Vertex v = next(z, n); c.at(v) == 1; v = next(v, n)) in_chain[static_cast<std::size_t>(v - 1)] = true;
    }
    return in_chain;
}

Orientation orientation_from_ccw(int n, const std::vector<bool>& ccw) {
    std::vector<std::pair<Vertex, Vertex>> arcs;
    for (int i = 1; i <= n; ++i) {
        if (ccw[static_cast<std::size_t>(i - 1)])
            arcs.emplace_back(next(i, n), i);
        else
            arcs.emplace_back(i, next(i, n));
    }
    return Orientation::from_arcs(cycle_graph(n), arcs);
}

}  // namespace

GraphPtr cycle_graph(int n) { return std::make_shared<const Graph>(make_cycle(n)); }

bool wheel_is_recurrent(const Configuration& c, Model model) {
    require_word(c);
    for (Vertex z : zeros_of(c))
        if (twos_after(c, z) == 0) return false;
    if (model == Model::ASM) {
        const auto& g = c.grains();
        return std::find(g.begin(), g.end(), 2) != g.end();
    }
    return true;
}

bool wheel_is_minimal_recurrent(const Configuration& c, Model model) {
    require_word(c);
    const auto zeros = zeros_of(c);
    if (zeros.empty()) {
        const auto& g = c.grains();
        return model == Model::SSM && std::all_of(g.begin(), g.end(), [](int x) { return x == 1; });
    }
    for (Vertex z : zeros)
        if (twos_after(c, z) != 1) return false;
    return true;
}

std::vector<Vertex> cyclically_first_maximal(const Configuration& c) {
    require_word(c);
    require_ssm_recurrent(c);
    const int n = static_cast<int>(c.size());
    std::vector<Vertex> result;
    for (Vertex z : zeros_of(c)) {
        Vertex v = next(z, n);
        while (c.at(v) == 1) v = next(v, n);
        result.push_back(v);
    }
    std::sort(result.begin(), result.end());
    return result;
}

int weight01star(const Configuration& c) {
    require_word(c);
    require_ssm_recurrent(c);
    const auto in_chain = chain_membership(c);
    return static_cast<int>(std::count(in_chain.begin(), in_chain.end(), true));
}

Configuration canonical_minimal(const Configuration& c) {
    const auto first_max = cyclically_first_maximal(c);
    std::vector<int> m(c.size(), 1);
    for (Vertex v = 1; v <= static_cast<int>(c.size()); ++v) {
        if (c.at(v) == 0) m[static_cast<std::size_t>(v - 1)] = 0;
    }
    for (Vertex v : first_max) m[static_cast<std::size_t>(v - 1)] = 2;
    return Configuration(std::move(m));
}

Orientation orientation_of_minimal(const Configuration& c) {
    if (!wheel_is_minimal_recurrent(c, Model::SSM))
        throw InvalidArgument("configuration " + c.to_string() + " is not minimal recurrent");
    const auto in_chain = chain_membership(c);
    std::vector<bool> ccw(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) ccw[i] = !in_chain[i];
    return orientation_from_ccw(static_cast<int>(c.size()), ccw);
}

bool MarkedCycleOrientation::is_counter_clockwise(int i) const {
    const int size = n();
    return orientation.directs(next(i, size), i);
}

std::vector<int> MarkedCycleOrientation::ccw_edges() const {
    std::vector<int> out;
    for (int i = 1; i <= n(); ++i)
        if (is_counter_clockwise(i)) out.push_back(i);
    return out;
}

MarkedCycleOrientation make_marked_cycle_orientation(int n, const std::vector<int>& ccw_edges,
                                                     std::vector<Vertex> marks) {
    if (n < 3) throw InvalidArgument("cycle orientations need n >= 3");
    std::vector<bool> ccw(static_cast<std::size_t>(n), false);
    for (int i : ccw_edges) {
        if (i < 1 || i > n) throw MalformedInput("edge index " + std::to_string(i) + " outside 1.." + std::to_string(n));
        ccw[static_cast<std::size_t>(i - 1)] = true;
    }
    for (Vertex v : marks)
        if (v < 1 || v > n) throw MalformedInput("mark " + std::to_string(v) + " outside 1.." + std::to_string(n));
    std::sort(marks.begin(), marks.end());
    if (std::adjacent_find(marks.begin(), marks.end()) != marks.end()) throw MalformedInput("duplicate mark");
    return {orientation_from_ccw(n, ccw), std::move(marks)};
}

bool is_properly_marked(const MarkedCycleOrientation& mo) {
    if (mo.orientation.graph().kind() != GraphKind::Cycle) return false;
    const int n = mo.n();
    if (mo.ccw_edges().empty()) return false;
    if (!std::is_sorted(mo.marks.begin(), mo.marks.end()) ||
        std::adjacent_find(mo.marks.begin(), mo.marks.end()) != mo.marks.end())
        return false;
    for (Vertex v : mo.marks) {
        if (v < 1 || v > n) return false;
        if (!mo.is_counter_clockwise(v) || !mo.is_counter_clockwise(prev(v, n))) return false;
    }
    return true;
}

MarkedCycleOrientation phi_wheel(const Configuration& c) {
    require_word(c);
    require_ssm_recurrent(c);
    const auto first_max = cyclically_first_maximal(c);
    std::vector<Vertex> marks;
    for (Vertex v = 1; v <= static_cast<int>(c.size()); ++v)
        if (c.at(v) == 2 && !std::binary_search(first_max.begin(), first_max.end(), v)) marks.push_back(v);
    return {orientation_of_minimal(canonical_minimal(c)), std::move(marks)};
}

Configuration psi_wheel(const MarkedCycleOrientation& mo) {
    if (!is_properly_marked(mo)) throw MalformedInput("marked orientation is not properly marked");
    std::vector<int> grains(static_cast<std::size_t>(mo.n()));
    for (Vertex v = 1; v <= mo.n(); ++v) grains[static_cast<std::size_t>(v - 1)] = mo.orientation.in_degree(v);
    for (Vertex v : mo.marks) ++grains[static_cast<std::size_t>(v - 1)];
    return Configuration(std::move(grains));
}

DualSubgraph pmo_to_subgraph(const MarkedCycleOrientation& mo) {
    if (!is_properly_marked(mo)) throw MalformedInput("marked orientation is not properly marked");
    const int n = mo.n();
    std::vector<Edge> edges;
    for (Vertex v : mo.marks) edges.push_back(make_edge(prev(v, n), v));
    return {n, Subgraph(mo.orientation.graph(), mo.ccw_edges(), std::move(edges))};
}

MarkedCycleOrientation subgraph_to_pmo(const DualSubgraph& s) {
    const int n = s.n;
    std::vector<Vertex> marks;
    for (const auto& e : s.subgraph.edges()) {
        if (e.v == e.u + 1)
            marks.push_back(e.v);
        else if (e.u == 1 && e.v == n)
            marks.push_back(1);
        else
            throw MalformedInput("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} is not on C_" +
                                 std::to_string(n));
    }
    for (Vertex v : s.subgraph.vertices())
        if (v < 1 || v > n) throw MalformedInput("dual vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
    auto mo = make_marked_cycle_orientation(n, s.subgraph.vertices(), std::move(marks));
    if (!is_properly_marked(mo)) throw MalformedInput("subgraph does not describe a properly-marked orientation");
    return mo;
}

DualSubgraph wheel_to_subgraph(const Configuration& c) { return pmo_to_subgraph(phi_wheel(c)); }

Configuration subgraph_to_wheel(const DualSubgraph& s) { return psi_wheel(subgraph_to_pmo(s)); }

void for_each_properly_marked(int n, const std::function<void(const MarkedCycleOrientation&)>& visit) {
    if (n < 3 || n > 24) throw InvalidArgument("properly-marked enumeration needs 3 <= n <= 24");
    const auto graph = cycle_graph(n);
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
        std::vector<bool> ccw(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) ccw[static_cast<std::size_t>(i)] = (mask >> i) & 1U;
        std::vector<Vertex> eligible;
        for (Vertex v = 1; v <= n; ++v)
            if (ccw[static_cast<std::size_t>(v - 1)] && ccw[static_cast<std::size_t>(prev(v, n) - 1)])
                eligible.push_back(v);
        const auto orientation = orientation_from_ccw(n, ccw);
        for (std::uint32_t marks = 0; marks < (1U << eligible.size()); ++marks) {
            std::vector<Vertex> chosen;
            for (std::size_t j = 0; j < eligible.size(); ++j)
                if ((marks >> j) & 1U) chosen.push_back(eligible[j]);
            visit({orientation, std::move(chosen)});
        }
    }
}

}  // namespace sandlab
