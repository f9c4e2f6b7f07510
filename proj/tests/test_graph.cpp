#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "sandlab/graph.hpp"

using namespace sandlab;

namespace {

GraphPtr share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

// 1->2, 3->2, 3->4, 4->5, 6->5, 7->6, 8->7, 8->1 on C_8
Orientation figure_orientation() {
    return Orientation::from_arcs(share(make_cycle(8)),
                                  {{1, 2}, {3, 2}, {3, 4}, {4, 5}, {6, 5}, {7, 6}, {8, 7}, {8, 1}});
}

}  // namespace

TEST_CASE("builders produce the expected sizes") {
    const Graph w6 = make_wheel(6);
    CHECK(w6.n_nonsink() == 6);
    CHECK(w6.has_sink());
    CHECK(w6.edge_count() == 12);
    CHECK(w6.degree(0) == 6);
    for (Vertex v = 1; v <= 6; ++v) CHECK(w6.degree(v) == 3);

    const Graph f6 = make_fan(6);
    CHECK(f6.edge_count() == 11);
    CHECK(f6.degree(1) == 2);
    CHECK(f6.degree(6) == 2);
    CHECK(f6.degree(3) == 3);
    CHECK_FALSE(f6.edge_index(1, 6).has_value());

    CHECK(make_cycle(5).edge_count() == 5);
    CHECK_FALSE(make_cycle(5).has_sink());
    CHECK(make_path(4).edge_count() == 3);
}

TEST_CASE("builders reject degenerate sizes") {
    CHECK_THROWS_AS(make_cycle(2), InvalidArgument);
    CHECK_THROWS_AS(make_wheel(2), InvalidArgument);
    CHECK_THROWS_AS(make_fan(1), InvalidArgument);
    CHECK_THROWS_AS(make_path(0), InvalidArgument);
}

TEST_CASE("graph validation") {
    CHECK_THROWS_AS(Graph(GraphKind::Custom, 2, false, {Edge{1, 1}}), InvalidArgument);
    CHECK_THROWS_AS(Graph(GraphKind::Custom, 2, false, {Edge{1, 2}, Edge{1, 2}}), InvalidArgument);
    CHECK_THROWS_AS(Graph(GraphKind::Custom, 3, false, {Edge{1, 2}}), InvalidArgument);  // disconnected
    CHECK_THROWS_AS(Graph(GraphKind::Custom, 2, false, {Edge{1, 5}}), InvalidArgument);
    CHECK_THROWS(make_wheel(4).degree(9));
}

TEST_CASE("degrees of a directed cycle and a rooted star") {
    const auto c4 = share(make_cycle(4));
    const auto cw = Orientation::from_arcs(c4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
    for (Vertex v = 1; v <= 4; ++v) {
        CHECK(cw.in_degree(v) == 1);
        CHECK(cw.out_degree(v) == 1);
    }
    CHECK_FALSE(cw.is_acyclic());

    const auto w3 = share(make_wheel(3));
    const auto star = Orientation::from_arcs(w3, {{1, 0}, {2, 0}, {3, 0}, {1, 2}, {2, 3}, {1, 3}});
    CHECK(star.in_degree(0) == 3);
    CHECK(star.is_acyclic());
    CHECK(star.is_zero_rooted());
}

TEST_CASE("figure orientation of C_8") {
    const auto o = figure_orientation();
    CHECK(o.in_degree(5) == 2);
    const std::vector<int> expected_in{1, 2, 0, 1, 2, 1, 1, 0};
    for (Vertex v = 1; v <= 8; ++v) CHECK(o.in_degree(v) == expected_in[static_cast<std::size_t>(v - 1)]);
    CHECK(o.targets() == std::vector<Vertex>{2, 5});
    CHECK(o.sources() == std::vector<Vertex>{3, 8});
    CHECK(o.is_acyclic());
    CHECK_FALSE(o.is_zero_rooted());
}

TEST_CASE("from_arcs rejects missing or unknown arcs") {
    const auto c4 = share(make_cycle(4));
    CHECK_THROWS_AS(Orientation::from_arcs(c4, {{1, 2}, {2, 3}, {3, 4}}), InvalidArgument);
    CHECK_THROWS_AS(Orientation::from_arcs(c4, {{1, 2}, {2, 3}, {3, 4}, {1, 3}}), InvalidArgument);
}

TEST_CASE("orientation enumeration invariants") {
    const auto p2 = share(make_path(2));
    CHECK(enumerate_orientations(p2).size() == 2);

    const auto w4 = share(make_wheel(4));
    const auto all = enumerate_orientations(w4);
    CHECK(all.size() == 256);
    std::set<std::vector<bool>> distinct;
    for (const auto& o : all) {
        distinct.insert(o.toward_high());
        int in_sum = 0;
        for (Vertex v = 0; v <= 4; ++v) {
            CHECK(o.in_degree(v) + o.out_degree(v) == w4->degree(v));
            in_sum += o.in_degree(v);
        }
        CHECK(in_sum == 8);
        if (o.is_acyclic()) {
            CHECK_FALSE(o.targets().empty());
            CHECK_FALSE(o.sources().empty());
        }
    }
    CHECK(distinct.size() == 256);
}

TEST_CASE("enumeration caps are explicit") {
    BruteForceCaps caps;
    caps.max_edges = 5;
    CHECK_THROWS_AS(enumerate_orientations(share(make_wheel(3)), caps), CapExceeded);
    CHECK_THROWS_AS(enumerate_subgraphs(make_wheel(3), caps), CapExceeded);
}

TEST_CASE("subgraph validation") {
    const Graph c8 = make_cycle(8);
    CHECK_THROWS_AS(Subgraph(c8, {1, 2, 3, 5, 6, 8}, {Edge{1, 2}, Edge{2, 3}, Edge{3, 4}}), InvalidArgument);
    CHECK_THROWS_AS(Subgraph(c8, {}, {}), InvalidArgument);
    CHECK_THROWS_AS(Subgraph(c8, {1, 3}, {Edge{1, 3}}), InvalidArgument);
    const Subgraph ok(c8, {3, 2, 1, 2}, {Edge{2, 3}});
    CHECK(ok.vertices() == std::vector<Vertex>{1, 2, 3});
}

TEST_CASE("components of the boxes figure subgraph") {
    const Subgraph s(make_cycle(8), {1, 2, 3, 4, 5, 6, 8}, {Edge{1, 2}, Edge{3, 4}, Edge{4, 5}, Edge{5, 6}});
    const auto comps = connected_components(s);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<Vertex>{1, 2});
    CHECK(comps[1] == std::vector<Vertex>{3, 4, 5, 6});
    CHECK(comps[2] == std::vector<Vertex>{8});
}

TEST_CASE("subgraph enumeration matches a nested-loop recount") {
    for (int n = 3; n <= 7; ++n) {
        const auto expected = oracle::cycle_subgraphs_by_edges(n);
        std::vector<long long> got(static_cast<std::size_t>(n) + 1, 0);
        std::set<Subgraph> distinct;
        for_each_subgraph(make_cycle(n), [&](const Subgraph& s) {
            ++got[s.edges().size()];
            distinct.insert(s);
        });
        CHECK(got == expected);
        long long total = 0;
        for (auto x : expected) total += x;
        CHECK(static_cast<long long>(distinct.size()) == total);
    }
}
