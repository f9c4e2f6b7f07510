#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "sandlab/json_io.hpp"
#include "sandlab/lattice_paths.hpp"
#include "sandlab/tutte.hpp"
#include "sandlab/verifier.hpp"

using namespace sandlab;

namespace {

const Subgraph& boxes_figure() {
    static const Subgraph s(make_cycle(8), {1, 2, 3, 4, 5, 6, 8}, {Edge{1, 2}, Edge{3, 4}, Edge{4, 5}, Edge{5, 6}});
    return s;
}

}  // namespace

TEST_CASE("gamma counts") {
    CHECK(count_gamma(4, 3) == 120);
    CHECK(count_gamma_bar(4, 3) == 45);
    CHECK(8 * count_gamma_bar(4, 3) == 3 * count_gamma(4, 3));
    CHECK(enumerate_gamma(4, 3).size() == 120);
    CHECK(enumerate_gamma(3, 3).size() == 20);
    CHECK_THROWS_AS(count_gamma(3, 4), InvalidArgument);
    CHECK_THROWS_AS(enumerate_gamma(1, 1), InvalidArgument);
    for (int n = 2; n <= 5; ++n)
        for (int k = 1; k <= n; ++k) {
            const auto gamma = enumerate_gamma(n, k);
            const auto bar = enumerate_gamma_bar(n, k);
            CHECK(BigInt(gamma.size()) == count_gamma(n, k));
            CHECK(BigInt(bar.size()) == count_gamma_bar(n, k));
            for (const auto& s : gamma) {
                CHECK(static_cast<int>(s.edges().size()) == n);
                CHECK(static_cast<int>(connected_components(s).size()) == k);
                CHECK(static_cast<int>(s.vertices().size()) == n + k);
            }
        }
}

TEST_CASE("boxes figure") {
    const auto& s = boxes_figure();
    const auto members = enumerate_gamma_bar(4, 3);
    CHECK(std::find(members.begin(), members.end(), s) != members.end());
    CHECK(gamma_bar_boxes(s, 8) == std::vector<std::pair<int, int>>{{1, 0}, {3, 1}, {0, 0}});
    // boxes biject with placements of n black and n-k white balls
    std::set<std::vector<std::pair<int, int>>> seen;
    for (const auto& m : members) seen.insert(gamma_bar_boxes(m, 8));
    CHECK(seen.size() == members.size());
    CHECK(BigInt(seen.size()) == balls_in_boxes_count(3, 4) * balls_in_boxes_count(3, 1));
}

TEST_CASE("rotation of doubly rooted subgraphs") {
    // component {1,2,3} with edges {1,2},{2,3}; also {5,6} and vertex 8
    const Subgraph s(make_cycle(8), {1, 2, 3, 5, 6, 8}, {Edge{1, 2}, Edge{2, 3}, Edge{5, 6}});
    const DoublyRootedSubgraph g{8, s, 7, {1, 2, 3}};
    const auto r = rotate_doubly_rooted(g);
    CHECK(r.root_vertex == 1);
    CHECK(r.root_component == std::vector<Vertex>{3, 4, 5});
    CHECK(component_start(r.subgraph, 8, r.root_component) == 3);
    CHECK(r.subgraph.edges() == std::vector<Edge>{{3, 4}, {4, 5}, {7, 8}});
    CHECK(unrotate_doubly_rooted(r) == g);

    const DoublyRootedSubgraph identity{8, s, 1, {1, 2, 3}};
    CHECK(rotate_doubly_rooted(identity) == identity);

    CHECK_THROWS_AS(rotate_doubly_rooted({8, s, 2, {5, 6}}), InvalidArgument);
    CHECK_THROWS_AS(rotate_doubly_rooted({8, s, 2, {5}}), InvalidArgument);
    CHECK_THROWS_AS(unrotate_doubly_rooted({8, s, 2, {1, 2, 3}}), InvalidArgument);
}

TEST_CASE("rotation is a bijection for n = 3") {
    for (int k = 1; k <= 3; ++k) {
        std::set<DoublyRootedSubgraph> images;
        for (const auto& s : enumerate_gamma_bar(3, k)) {
            std::vector<Vertex> first;
            for (const auto& comp : connected_components(s))
                if (comp.front() == 1) first = comp;
            for (Vertex i = 1; i <= 6; ++i) {
                const DoublyRootedSubgraph g{6, s, i, first};
                const auto r = rotate_doubly_rooted(g);
                CHECK(unrotate_doubly_rooted(r) == g);
                images.insert(r);
            }
        }
        std::set<DoublyRootedSubgraph> targets;
        for (const auto& s : enumerate_gamma(3, k))
            for (const auto& comp : connected_components(s)) targets.insert({6, s, 1, comp});
        CHECK(images == targets);
    }
}

TEST_CASE("binomial identity") {
    CHECK(verify_binomial_identity(4, 3));
    CHECK(verify_binomial_identity(1, 1));
    for (int n = 1; n <= 30; ++n)
        for (int k = 1; k <= n; ++k) {
            CHECK(verify_binomial_identity(n, k));
            CHECK(count_differed_delannoy(n, k) * k == count_gamma_bar(n, k) * (2 * n));
        }
}

TEST_CASE("cycle subgraph counts") {
    for (int n = 3; n <= 9; ++n) {
        const auto expected = oracle::cycle_subgraphs_by_edges(n);
        for (int k = 0; k <= n; ++k) CHECK(count_cycle_subgraphs(n, k) == expected[static_cast<std::size_t>(k)]);
    }
}

TEST_CASE("Tutte oracle") {
    const Graph w4 = make_wheel(4);
    CHECK(tutte_T1x(w4).evaluate(1) == 45);
    CHECK(tutte_T1x(w4).evaluate(1) == oracle::spanning_trees(w4));
    CHECK(tutte_polynomial(w4).evaluate(1, 1) == 45);
    // T(2,2) = 2^|E|
    CHECK(tutte_polynomial(w4).evaluate(2, 2) == 256);

    const Graph triangle = make_cycle(3);
    BivariatePolynomial t;
    t.add_term(2, 0, 1).add_term(1, 0, 1).add_term(0, 1, 1);
    CHECK(tutte_polynomial(triangle) == t);

    for (int n = 3; n <= 6; ++n) {
        const Graph w = make_wheel(n);
        CHECK(tutte_polynomial(w, EdgeOrder::Lowest) == tutte_polynomial(w, EdgeOrder::Highest));
        CHECK(tutte_T1x(w) == level_polynomial(w, Model::ASM));
        CHECK(tutte_T1x(w).evaluate(1) == oracle::spanning_trees(w));
    }
    for (int n = 2; n <= 7; ++n) {
        const Graph f = make_fan(n);
        CHECK(tutte_polynomial(f, EdgeOrder::Lowest) == tutte_polynomial(f, EdgeOrder::Highest));
        const auto p = tutte_T1x(f);
        for (int k = 0; k <= n - 1; ++k) CHECK(p.coefficient(k) == count_kimberling_total(n - k, k));
    }
    CHECK_THROWS_AS(tutte_T1x(make_wheel(11)), CapExceeded);
}

TEST_CASE("every tag passes at small sizes") {
    for (const auto& tag : theorem_tags()) {
        CAPTURE(tag);
        const auto report = verify_theorem(tag, 4);
        CHECK(report.passed);
        CHECK_FALSE(report.counterexample.has_value());
        CHECK_FALSE(report.cells.empty());
        for (const auto& cell : report.cells) CHECK(cell.ok);
    }
    CHECK_THROWS_AS(verify_theorem("no-such-tag", 4), InvalidArgument);
    CHECK_THROWS_AS(verify_theorem("thm-3.2", 2), InvalidArgument);
}

TEST_CASE("report json shape") {
    const auto j = report_to_json(verify_theorem("thm-4.4", 3));
    CHECK(j["theorem"] == "thm-4.4");
    CHECK(j["n_max"] == 3);
    CHECK(j["status"] == "pass");
    REQUIRE(j["cells"].is_array());
    const auto& first = j["cells"][0];
    CHECK(first["params"]["n"] == 1);
    CHECK(first["lhs"].is_number_integer());
    CHECK(first["lhs"] == first["rhs"]);
    CHECK_FALSE(j.contains("counterexample"));
}

TEST_CASE("json round trips") {
    const Graph custom(GraphKind::Custom, 3, true, {Edge{0, 1}, Edge{1, 2}, Edge{2, 3}, Edge{0, 3}});
    CHECK(graph_from_json(graph_to_json(custom)) == custom);
    CHECK(graph_from_json(parse_json(R"({"kind":"wheel","n":5})")) == make_wheel(5));
    CHECK(graph_to_json(make_fan(4)).dump() == R"({"kind":"fan","n":4})");
    CHECK_THROWS_AS(graph_from_json(parse_json(R"({"kind":"star","n":5})")), InvalidArgument);
    CHECK_THROWS_AS(parse_json("{"), MalformedInput);

    const auto [g, c] = configuration_from_json(parse_json(R"({"graph":{"kind":"wheel","n":4},"config":[2,1,1,1]})"));
    CHECK(g == make_wheel(4));
    CHECK(c == Configuration{2, 1, 1, 1});
    CHECK_THROWS_AS(configuration_from_json(parse_json(R"({"graph":{"kind":"wheel","n":4},"config":[2,1]})")),
                    MalformedInput);

    CHECK(bigint_to_json(BigInt(5)) == 5);
    CHECK(bigint_to_json(BigInt(1) << 70) == "1180591620717411303424");

    StabilizationMeta meta;
    meta.model = Model::SSM;
    meta.seed = 9;
    const auto sj = stabilization_to_json(stabilize_ssm({3, 2, 2, 2}, make_wheel(4), 0.5, 9), meta);
    CHECK(sj["seed"] == 9);
    CHECK(sj["schedule"] == "lowest-index-first");
    CHECK(sj.contains("topplings"));
    CHECK(sj.contains("grains_to_sink"));

    Polynomial p;
    p.add_term(0, 8).add_term(1, 8);
    CHECK(polynomial_to_csv(p) == "level,count\n0,8\n1,8\n");
}
