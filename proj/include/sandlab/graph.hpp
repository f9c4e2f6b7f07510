#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sandlab/error.hpp"

namespace sandlab {

using Vertex = int;

/// Undirected edge stored with u < v.
struct Edge {
    Vertex u;
    Vertex v;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

Edge make_edge(Vertex a, Vertex b);

enum class GraphKind { Cycle, Path, Wheel, Fan, Custom };

std::string to_string(GraphKind kind);
GraphKind graph_kind_from_string(const std::string& name);

/// Labelled simple connected graph on {1..n}, plus the sink 0 when present.
///
/// Edges are kept sorted; an edge's position in `edges()` is its index for
/// orientations.
class Graph {
public:
    /// Validates simplicity, labels and connectivity.
    Graph(GraphKind kind, int n_nonsink, bool has_sink, std::vector<Edge> edges);

    GraphKind kind() const { return kind_; }
    int n_nonsink() const { return n_; }
    bool has_sink() const { return has_sink_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    bool contains(Vertex v) const;
    int degree(Vertex v) const;
    /// Neighbours in ascending order.
    const std::vector<Vertex>& neighbors(Vertex v) const;
    /// Indices of edges incident to v, ascending.
    const std::vector<std::size_t>& incident_edges(Vertex v) const;
    std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.kind_ == b.kind_ && a.n_ == b.n_ && a.has_sink_ == b.has_sink_ &&
               a.edges_ == b.edges_;
    }

private:
    std::size_t slot(Vertex v) const;

    GraphKind kind_;
    int n_;
    bool has_sink_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<std::vector<std::size_t>> incidence_;
};

using GraphPtr = std::shared_ptr<const Graph>;

Graph make_cycle(int n);
Graph make_path(int n);
Graph make_wheel(int n);
Graph make_fan(int n);

/// Assignment of a direction to every edge of a graph.
class Orientation {
public:
    /// toward_high[e] is true when edge e = {u<v} is directed u -> v.
    Orientation(GraphPtr graph, std::vector<bool> toward_high);

    /// Builds an orientation from explicit arcs (tail, head); every edge must
    /// appear exactly once.
    static Orientation from_arcs(GraphPtr graph,
                                 const std::vector<std::pair<Vertex, Vertex>>& arcs);

    const Graph& graph() const { return *graph_; }
    const GraphPtr& graph_ptr() const { return graph_; }

    Vertex tail(std::size_t e) const;
    Vertex head(std::size_t e) const;
    /// True when the edge {a,b} exists and is directed a -> b.
    bool directs(Vertex a, Vertex b) const;

    int in_degree(Vertex v) const;
    int out_degree(Vertex v) const;

    bool is_acyclic() const;
    std::vector<Vertex> targets() const;
    std::vector<Vertex> sources() const;
    bool is_zero_rooted() const;

    const std::vector<bool>& toward_high() const { return toward_high_; }

    friend bool operator==(const Orientation& a, const Orientation& b) {
        return *a.graph_ == *b.graph_ && a.toward_high_ == b.toward_high_;
    }

private:
    GraphPtr graph_;
    std::vector<bool> toward_high_;
};

/// Pair (A, E_A): non-empty vertex subset with a subset of its induced edges.
class Subgraph {
public:
    /// Validates against the parent graph; vertices and edges are normalised
    /// (sorted, deduplicated).
    Subgraph(const Graph& parent, std::vector<Vertex> vertices, std::vector<Edge> edges);

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    bool contains(Vertex v) const;
    bool contains(Edge e) const;

    friend auto operator<=>(const Subgraph&, const Subgraph&) = default;

private:
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
};

/// Components as sorted vertex lists, ordered by smallest member. Isolated
/// vertices are singleton components.
std::vector<std::vector<Vertex>> connected_components(const Subgraph& s);

/// Visits all 2^|E| orientations, in binary counting order of toward_high.
void for_each_orientation(const GraphPtr& g, const std::function<void(const Orientation&)>& visit,
                          const BruteForceCaps& caps = {});
std::vector<Orientation> enumerate_orientations(const GraphPtr& g, const BruteForceCaps& caps = {});

/// Visits every subgraph (A, E_A) with A non-empty.
void for_each_subgraph(const Graph& g, const std::function<void(const Subgraph&)>& visit,
                       const BruteForceCaps& caps = {});
std::vector<Subgraph> enumerate_subgraphs(const Graph& g, const BruteForceCaps& caps = {});

}  // namespace sandlab
