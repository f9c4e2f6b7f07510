#include "sandlab/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace sandlab {

Edge make_edge(Vertex a, Vertex b) {
    if (a == b) throw InvalidArgument("loop edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
    return a < b ? Edge{a, b} : Edge{b, a};
}

std::string to_string(GraphKind kind) {
    switch (kind) {
        case GraphKind::Cycle: return "cycle";
        case GraphKind::Path: return "path";
        case GraphKind::Wheel: return "wheel";
        case GraphKind::Fan: return "fan";
        case GraphKind::Custom: return "custom";
    }
    return "custom";
}

GraphKind graph_kind_from_string(const std::string& name) {
    if (name == "cycle") return GraphKind::Cycle;
    if (name == "path") return GraphKind::Path;
    if (name == "wheel") return GraphKind::Wheel;
    if (name == "fan") return GraphKind::Fan;
    if (name == "custom") return GraphKind::Custom;
    throw InvalidArgument("unknown graph kind '" + name + "'");
}

Graph::Graph(GraphKind kind, int n_nonsink, bool has_sink, std::vector<Edge> edges)
    : kind_(kind), n_(n_nonsink), has_sink_(has_sink), edges_(std::move(edges)) {
    if (n_ < 1) throw InvalidArgument("graph needs at least one non-sink vertex");
    for (auto& e : edges_) {
        e = make_edge(e.u, e.v);
        if (!contains(e.u) || !contains(e.v))
            throw InvalidArgument("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  "} uses a vertex outside the graph");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw InvalidArgument("multi-edge in simple graph");

    adjacency_.resize(static_cast<std::size_t>(n_) + 1);
    incidence_.resize(static_cast<std::size_t>(n_) + 1);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const auto [u, v] = edges_[i];
        adjacency_[slot(u)].push_back(v);
        adjacency_[slot(v)].push_back(u);
        incidence_[slot(u)].push_back(i);
        incidence_[slot(v)].push_back(i);
    }
    for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());

    // connectivity
    const Vertex start = has_sink_ ? 0 : 1;
    std::vector<bool> seen(adjacency_.size(), false);
    std::queue<Vertex> queue;
    queue.push(start);
    seen[slot(start)] = true;
    int reached = 1;
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop();
        for (Vertex w : adjacency_[slot(v)]) {
            if (!seen[slot(w)]) {
                seen[slot(w)] = true;
                ++reached;
                queue.push(w);
            }
        }
    }
    if (reached != n_ + (has_sink_ ? 1 : 0)) throw InvalidArgument("graph is not connected");
}

std::size_t Graph::slot(Vertex v) const { return static_cast<std::size_t>(v); }

bool Graph::contains(Vertex v) const { return (v >= 1 && v <= n_) || (v == 0 && has_sink_); }

int Graph::degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
    if (!contains(v)) throw InvalidArgument("unknown vertex " + std::to_string(v));
    return adjacency_[slot(v)];
}

const std::vector<std::size_t>& Graph::incident_edges(Vertex v) const {
    if (!contains(v)) throw InvalidArgument("unknown vertex " + std::to_string(v));
    return incidence_[slot(v)];
}

std::optional<std::size_t> Graph::edge_index(Vertex a, Vertex b) const {
    if (a == b || !contains(a) || !contains(b)) return std::nullopt;
    const Edge e = make_edge(a, b);
    const auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
}

namespace {

std::vector<Edge> path_edges(int n) {
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
    return edges;
}

void require_at_least(int n, int bound, const char* what) {
    if (n < bound)
        throw InvalidArgument(std::string(what) + " needs n >= " + std::to_string(bound) +
                              ", got " + std::to_string(n));
}

}  // namespace

Graph make_cycle(int n) {
    require_at_least(n, 3, "cycle");
    auto edges = path_edges(n);
    edges.push_back({1, n});
    return Graph(GraphKind::Cycle, n, false, std::move(edges));
}

Graph make_path(int n) {
    require_at_least(n, 1, "path");
    return Graph(GraphKind::Path, n, false, path_edges(n));
}

Graph make_wheel(int n) {
    require_at_least(n, 3, "wheel");
    auto edges = path_edges(n);
    edges.push_back({1, n});
    for (int i = 1; i <= n; ++i) edges.push_back({0, i});
    return Graph(GraphKind::Wheel, n, true, std::move(edges));
}

Graph make_fan(int n) {
    require_at_least(n, 2, "fan");
    auto edges = path_edges(n);
    for (int i = 1; i <= n; ++i) edges.push_back({0, i});
    return Graph(GraphKind::Fan, n, true, std::move(edges));
}

// ---------------------------------------------------------------------------

Orientation::Orientation(GraphPtr graph, std::vector<bool> toward_high)
    : graph_(std::move(graph)), toward_high_(std::move(toward_high)) {
    if (!graph_) throw InvalidArgument("orientation needs a graph");
    if (toward_high_.size() != graph_->edge_count())
        throw InvalidArgument("orientation must direct every edge exactly once");
}

Orientation Orientation::from_arcs(GraphPtr graph,
                                   const std::vector<std::pair<Vertex, Vertex>>& arcs) {
    if (!graph) throw InvalidArgument("orientation needs a graph");
    std::vector<bool> toward_high(graph->edge_count(), false);
    std::vector<bool> assigned(graph->edge_count(), false);
    for (const auto& [tail, head] : arcs) {
        const auto e = graph->edge_index(tail, head);
        if (!e) throw InvalidArgument("arc (" + std::to_string(tail) + "," + std::to_string(head) +
                                      ") is not an edge");
        if (assigned[*e]) throw InvalidArgument("edge directed twice");
        assigned[*e] = true;
        toward_high[*e] = tail < head;
    }
    if (std::find(assigned.begin(), assigned.end(), false) != assigned.end())
        throw InvalidArgument("orientation leaves an edge undirected");
    return Orientation(std::move(graph), std::move(toward_high));
}

Vertex Orientation::tail(std::size_t e) const {
    const Edge& edge = graph_->edges().at(e);
    return toward_high_[e] ? edge.u : edge.v;
}

Vertex Orientation::head(std::size_t e) const {
    const Edge& edge = graph_->edges().at(e);
    return toward_high_[e] ? edge.v : edge.u;
}

bool Orientation::directs(Vertex a, Vertex b) const {
    const auto e = graph_->edge_index(a, b);
    return e && tail(*e) == a;
}

int Orientation::in_degree(Vertex v) const {
    int count = 0;
    for (std::size_t e : graph_->incident_edges(v))
        if (head(e) == v) ++count;
    return count;
}

int Orientation::out_degree(Vertex v) const { return graph_->degree(v) - in_degree(v); }

bool Orientation::is_acyclic() const {
    const Graph& g = *graph_;
    const int slots = g.n_nonsink() + 1;
    std::vector<int> indegree(static_cast<std::size_t>(slots), 0);
    for (std::size_t e = 0; e < g.edge_count(); ++e) ++indegree[static_cast<std::size_t>(head(e))];
    std::vector<Vertex> ready;
    for (Vertex v = 0; v < slots; ++v)
        if (g.contains(v) && indegree[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
    std::size_t removed = 0;
    while (!ready.empty()) {
        const Vertex v = ready.back();
        ready.pop_back();
        ++removed;
        for (std::size_t e : g.incident_edges(v)) {
            if (tail(e) != v) continue;
            if (--indegree[static_cast<std::size_t>(head(e))] == 0) ready.push_back(head(e));
        }
    }
    return removed == static_cast<std::size_t>(g.n_nonsink() + (g.has_sink() ? 1 : 0));
}

std::vector<Vertex> Orientation::targets() const {
    std::vector<Vertex> result;
    for (Vertex v = 0; v <= graph_->n_nonsink(); ++v)
        if (graph_->contains(v) && out_degree(v) == 0) result.push_back(v);
    return result;
}

std::vector<Vertex> Orientation::sources() const {
    std::vector<Vertex> result;
    for (Vertex v = 0; v <= graph_->n_nonsink(); ++v)
        if (graph_->contains(v) && in_degree(v) == 0) result.push_back(v);
    return result;
}

bool Orientation::is_zero_rooted() const {
    return graph_->has_sink() && targets() == std::vector<Vertex>{0};
}

// ---------------------------------------------------------------------------

Subgraph::Subgraph(const Graph& parent, std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    if (vertices_.empty()) throw InvalidArgument("subgraph vertex set must be non-empty");
    for (Vertex v : vertices_)
        if (!parent.contains(v)) throw InvalidArgument("subgraph vertex " + std::to_string(v) + " not in graph");
    for (auto& e : edges_) {
        e = make_edge(e.u, e.v);
        if (!parent.edge_index(e.u, e.v))
            throw InvalidArgument("subgraph edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  "} not in graph");
        if (!contains(e.u) || !contains(e.v))
            throw InvalidArgument("subgraph edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  "} has an endpoint outside the vertex set");
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Subgraph::contains(Vertex v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Subgraph::contains(Edge e) const {
    return std::binary_search(edges_.begin(), edges_.end(), make_edge(e.u, e.v));
}

std::vector<std::vector<Vertex>> connected_components(const Subgraph& s) {
    const auto& vs = s.vertices();
    std::vector<std::size_t> parent(vs.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    const auto index_of = [&](Vertex v) {
        return static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
    };
    const std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : s.edges()) {
        const auto a = find(index_of(e.u));
        const auto b = find(index_of(e.v));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<std::vector<Vertex>> components;
    std::vector<std::size_t> component_of_root(vs.size(), SIZE_MAX);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const auto root = find(i);
        if (component_of_root[root] == SIZE_MAX) {
            component_of_root[root] = components.size();
            components.emplace_back();
        }
        components[component_of_root[root]].push_back(vs[i]);
    }
    return components;
}

void for_each_orientation(const GraphPtr& g, const std::function<void(const Orientation&)>& visit,
                          const BruteForceCaps& caps) {
    const std::size_t m = g->edge_count();
    if (static_cast<int>(m) > caps.max_edges || m >= 63)
        throw CapExceeded("orientation enumeration over " + std::to_string(m) +
                          " edges exceeds cap " + std::to_string(caps.max_edges));
    const std::uint64_t total = std::uint64_t{1} << m;
    std::vector<bool> bits(m, false);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        for (std::size_t e = 0; e < m; ++e) bits[e] = (mask >> e) & 1U;
        visit(Orientation(g, bits));
    }
}

std::vector<Orientation> enumerate_orientations(const GraphPtr& g, const BruteForceCaps& caps) {
    std::vector<Orientation> out;
    for_each_orientation(g, [&](const Orientation& o) { out.push_back(o); }, caps);
    return out;
}

void for_each_subgraph(const Graph& g, const std::function<void(const Subgraph&)>& visit,
                       const BruteForceCaps& caps) {
    std::vector<Vertex> all;
    for (Vertex v = 0; v <= g.n_nonsink(); ++v)
        if (g.contains(v)) all.push_back(v);
    if (static_cast<int>(g.edge_count()) > caps.max_edges || all.size() >= 63)
        throw CapExceeded("subgraph enumeration over " + std::to_string(g.edge_count()) +
                          " edges exceeds cap " + std::to_string(caps.max_edges));
    const std::uint64_t vertex_masks = std::uint64_t{1} << all.size();
    for (std::uint64_t vmask = 1; vmask < vertex_masks; ++vmask) {
        std::vector<Vertex> chosen;
        std::vector<bool> present(static_cast<std::size_t>(g.n_nonsink()) + 1, false);
        for (std::size_t i = 0; i < all.size(); ++i)
            if ((vmask >> i) & 1U) {
                chosen.push_back(all[i]);
                present[static_cast<std::size_t>(all[i])] = true;
            }
        std::vector<Edge> induced;
        for (const auto& e : g.edges())
            if (present[static_cast<std::size_t>(e.u)] && present[static_cast<std::size_t>(e.v)])
                induced.push_back(e);
        const std::uint64_t edge_masks = std::uint64_t{1} << induced.size();
        for (std::uint64_t emask = 0; emask < edge_masks; ++emask) {
            std::vector<Edge> picked;
            for (std::size_t i = 0; i < induced.size(); ++i)
                if ((emask >> i) & 1U) picked.push_back(induced[i]);
            visit(Subgraph(g, chosen, std::move(picked)));
        }
    }
}

std::vector<Subgraph> enumerate_subgraphs(const Graph& g, const BruteForceCaps& caps) {
    std::vector<Subgraph> out;
    for_each_subgraph(g, [&](const Subgraph& s) { out.push_back(s); }, caps);
    return out;
}

}  // namespace sandlab
