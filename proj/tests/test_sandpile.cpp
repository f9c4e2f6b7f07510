#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "sandlab/rng.hpp"
#include "sandlab/sandpile.hpp"

using namespace sandlab;

namespace {

Configuration random_unstable(const Graph& g, std::mt19937_64& rng) {
    std::vector<int> grains(static_cast<std::size_t>(g.n_nonsink()));
    for (;;) {
        for (auto& x : grains) x = std::uniform_int_distribution<int>(0, 8)(rng);
        Configuration c(grains);
        if (!is_stable(c, g)) return c;
    }
}

}  // namespace

TEST_CASE("configuration text form") {
    CHECK(Configuration::parse("1,2,0").grains() == std::vector<int>{1, 2, 0});
    CHECK(Configuration{1, 2, 0}.to_string() == "1,2,0");
    CHECK_THROWS_AS(Configuration::parse("1,x"), MalformedInput);
    CHECK_THROWS_AS(Configuration::parse("1,-2"), MalformedInput);
    CHECK_THROWS_AS(Configuration::parse(""), MalformedInput);
}

TEST_CASE("stability on W_4") {
    const Graph w4 = make_wheel(4);
    CHECK(is_stable({2, 1, 1, 1}, w4));
    CHECK_FALSE(is_stable({3, 2, 2, 2}, w4));
    CHECK_THROWS(is_stable({1, 1, 1}, w4));
    int stable = 0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 4; ++d) {
                    const bool in_box = a <= 2 && b <= 2 && c <= 2 && d <= 2;
                    CHECK(is_stable({a, b, c, d}, w4) == in_box);
                    stable += in_box;
                }
    CHECK(stable == 81);
}

TEST_CASE("single topplings") {
    const Graph w4 = make_wheel(4);
    CHECK(topple_asm({3, 2, 2, 2}, w4, 1) == Configuration{0, 3, 2, 3});
    CHECK(topple_asm({0, 3, 2, 3}, w4, 2) == Configuration{1, 0, 3, 3});
    CHECK_THROWS_AS(topple_asm({2, 1, 1, 1}, w4, 1), InvalidArgument);
}

TEST_CASE("ASM stabilisation examples") {
    const Graph w4 = make_wheel(4);
    const auto r = stabilize_asm({3, 2, 2, 2}, w4);
    CHECK(r.stable_config == Configuration{2, 1, 1, 1});
    CHECK(r.topplings == std::vector<long long>{1, 1, 1, 1});
    CHECK(r.grains_to_sink == 4);

    const auto same = stabilize_asm({2, 1, 0, 1}, w4);
    CHECK(same.stable_config == Configuration{2, 1, 0, 1});
    CHECK(same.grains_to_sink == 0);
    CHECK(same.topplings == std::vector<long long>{0, 0, 0, 0});
}

TEST_CASE("abelian property against two fixed orders and a random order") {
    std::mt19937_64 rng(20240601);
    for (const Graph& g : {make_wheel(6), make_fan(6)}) {
        for (int trial = 0; trial < 200; ++trial) {
            const auto c = random_unstable(g, rng);
            const auto low = stabilize_asm(c, g, ToppleOrder::LowestFirst);
            const auto high = stabilize_asm(c, g, ToppleOrder::HighestFirst);
            const auto [random_config, random_sink] = oracle::stabilize_random_order(c.grains(), g, rng);
            CHECK(low.stable_config == high.stable_config);
            CHECK(low.grains_to_sink == high.grains_to_sink);
            CHECK(low.topplings == high.topplings);
            CHECK(low.stable_config.grains() == random_config);
            CHECK(low.grains_to_sink == random_sink);
            CHECK(c.total() == low.stable_config.total() + low.grains_to_sink);
        }
    }
}

TEST_CASE("SSM stabilisation") {
    const Graph w5 = make_wheel(5);
    SUBCASE("stable input is untouched") {
        const auto r = stabilize_ssm({2, 1, 0, 2, 1}, w5, 0.3, 99);
        CHECK(r.stable_config == Configuration{2, 1, 0, 2, 1});
        CHECK(r.grains_to_sink == 0);
    }
    SUBCASE("conservation and determinism over seeds") {
        std::mt19937_64 rng(5);
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const auto c = random_unstable(w5, rng);
            const auto a = stabilize_ssm(c, w5, 0.4, seed);
            const auto b = stabilize_ssm(c, w5, 0.4, seed);
            CHECK(is_stable(a.stable_config, w5));
            CHECK(c.total() == a.stable_config.total() + a.grains_to_sink);
            CHECK(a.stable_config == b.stable_config);
            CHECK(a.topplings == b.topplings);
            CHECK(a.grains_to_sink == b.grains_to_sink);
        }
    }
    SUBCASE("always-send coins reproduce the ASM") {
        std::mt19937_64 rng(6);
        for (const Graph& g : {make_wheel(6), make_fan(6)}) {
            for (int trial = 0; trial < 100; ++trial) {
                const auto c = random_unstable(g, rng);
                const auto ssm = stabilize_ssm(c, g, CoinSource([] { return true; }));
                const auto asm_result = stabilize_asm(c, g);
                CHECK(ssm.stable_config == asm_result.stable_config);
                CHECK(ssm.grains_to_sink == asm_result.grains_to_sink);
                CHECK(ssm.topplings == asm_result.topplings);
            }
        }
    }
    SUBCASE("bad probability and iteration guard") {
        CHECK_THROWS_AS(stabilize_ssm({3, 3, 3, 3, 3}, w5, 0.0, 1), InvalidArgument);
        CHECK_THROWS_AS(stabilize_ssm({3, 3, 3, 3, 3}, w5, 1.0, 1), InvalidArgument);
        CHECK_THROWS_AS(stabilize_ssm({3, 3, 3, 3, 3}, w5, CoinSource([] { return false; }), 1000),
                        IterationGuardExceeded);
    }
}

TEST_CASE("level statistic") {
    CHECK(level({1, 1, 1, 1, 1}, make_wheel(5)) == 0);
    CHECK(level({1, 1, 0, 1, 2, 2, 0, 2, 1}, make_fan(9)) == 2);
    CHECK(level({2, 1, 1, 1}, make_wheel(4)) == 1);
    CHECK(level({0, 0, 0, 0}, make_wheel(4)) == -4);
}

TEST_CASE("burning and orientation oracles on W_4") {
    const Graph w4 = make_wheel(4);
    CHECK(is_recurrent_burning({2, 1, 1, 1}, w4));
    CHECK_FALSE(is_recurrent_burning({1, 1, 1, 1}, w4));
    CHECK(is_recurrent_oracle({1, 1, 1, 1}, w4, false));
    CHECK_FALSE(is_recurrent_oracle({1, 1, 1, 1}, w4, true));
    CHECK_FALSE(is_recurrent_oracle({0, 0, 0, 0}, w4, false));
    CHECK_THROWS_AS(is_recurrent_burning({3, 1, 1, 1}, w4), UnstableInput);
}

TEST_CASE("compatible orientation witness") {
    const auto w4 = std::make_shared<const Graph>(make_wheel(4));
    const auto o = find_compatible_orientation({2, 1, 1, 1}, w4, true, false);
    REQUIRE(o.has_value());
    CHECK(o->is_zero_rooted());
    CHECK(o->is_acyclic());
    const std::vector<int> c{2, 1, 1, 1};
    for (Vertex v = 1; v <= 4; ++v) CHECK(o->in_degree(v) <= c[static_cast<std::size_t>(v - 1)]);
}

TEST_CASE("burning agrees with the acyclic oracle") {
    for (const Graph& g : {make_wheel(5), make_fan(6), make_wheel(3)}) {
        for_each_stable(g, [&](const Configuration& c) {
            CHECK(is_recurrent_burning(c, g) == is_recurrent_oracle(c, g, true));
        });
    }
}

TEST_CASE("minimal recurrent examples") {
    const Graph w8 = make_wheel(8);
    CHECK(is_minimal_recurrent({1, 2, 0, 1, 2, 1, 1, 0}, w8, Model::SSM));
    CHECK_FALSE(is_minimal_recurrent({1, 2, 0, 1, 2, 1, 2, 0}, w8, Model::SSM));
    CHECK(is_minimal_recurrent({1, 1, 1, 1}, make_wheel(4), Model::SSM));
    CHECK_FALSE(is_minimal_recurrent({1, 1, 1, 1}, make_wheel(4), Model::ASM));
}

TEST_CASE("removing a grain from a minimal recurrent breaks recurrence") {
    const Graph w5 = make_wheel(5);
    for (Model model : {Model::ASM, Model::SSM}) {
        for_each_stable(w5, [&](const Configuration& c) {
            if (!is_minimal_recurrent(c, w5, model)) return;
            CHECK(is_recurrent(c, w5, model));
            CHECK(level(c, w5) == 0);
            for (Vertex v = 1; v <= 5; ++v) {
                if (c.at(v) == 0) continue;
                auto g = c.grains();
                --g[static_cast<std::size_t>(v - 1)];
                CHECK_FALSE(is_recurrent(Configuration(g), w5, model));
            }
        });
    }
}

TEST_CASE("recurrence is closed upwards and levels are non-negative") {
    for (const Graph& g : {make_wheel(5), make_fan(5)}) {
        for (Model model : {Model::ASM, Model::SSM}) {
            const auto rec = enumerate_recurrent(g, model);
            const std::set<Configuration> members(rec.begin(), rec.end());
            for (const auto& c : rec) {
                CHECK(level(c, g) >= 0);
                for (Vertex v = 1; v <= g.n_nonsink(); ++v) {
                    if (c.at(v) + 1 >= g.degree(v)) continue;
                    auto up = c.grains();
                    ++up[static_cast<std::size_t>(v - 1)];
                    CHECK(members.count(Configuration(up)) == 1);
                }
            }
        }
    }
}

TEST_CASE("recurrent counts") {
    const Graph w4 = make_wheel(4);
    CHECK(BigInt(enumerate_recurrent(w4, Model::ASM).size()) == oracle::spanning_trees(w4));
    CHECK(enumerate_recurrent(w4, Model::ASM).size() == 45);
    CHECK(enumerate_recurrent(w4, Model::SSM).size() == 46);
    for (int n = 3; n <= 7; ++n) {
        const Graph w = make_wheel(n);
        const Graph f = make_fan(n);
        CHECK(BigInt(enumerate_recurrent(w, Model::ASM).size()) == oracle::spanning_trees(w));
        CHECK(BigInt(enumerate_recurrent(f, Model::ASM).size()) == oracle::spanning_trees(f));
    }
    const auto rec = enumerate_recurrent(w4, Model::ASM);
    CHECK(std::is_sorted(rec.begin(), rec.end()));
}

TEST_CASE("level polynomial of F_4") {
    Polynomial expected;
    expected.add_term(0, 8).add_term(1, 8).add_term(2, 4).add_term(3, 1);
    CHECK(level_polynomial(make_fan(4), Model::ASM) == expected);
    CHECK(expected.to_string() == "8 + 8x + 4x^2 + x^3");
}

TEST_CASE("enumeration cap") {
    BruteForceCaps caps;
    caps.max_states = 100;
    CHECK_THROWS_AS(enumerate_recurrent(make_wheel(5), Model::ASM, caps), CapExceeded);
}

TEST_CASE("markov chain") {
    const Graph w4 = make_wheel(4);
    const std::vector<double> mu(4, 0.25);
    MarkovOptions options;
    options.seed = 7;

    options.steps = 0;
    CHECK(simulate_markov(w4, Model::ASM, mu, options).empty());

    options.steps = 5000;
    options.burn_in = 100;
    const auto a = simulate_markov(w4, Model::ASM, mu, options);
    const auto b = simulate_markov(w4, Model::ASM, mu, options);
    CHECK(a == b);
    std::uint64_t counted = 0;
    for (const auto& [c, k] : a) {
        CHECK(is_stable(c, w4));
        counted += k;
    }
    CHECK(counted == 4900);

    options.seed = 8;
    CHECK(simulate_markov(w4, Model::ASM, mu, options) != a);

    const auto ssm = simulate_markov(w4, Model::SSM, mu, options);
    for (const auto& [c, k] : ssm) CHECK(is_recurrent(c, w4, Model::SSM));

    CHECK_THROWS_AS(simulate_markov(w4, Model::ASM, std::vector<double>{0.5, 0.5, 0.0, 0.0}, options),
                    InvalidArgument);
    CHECK_THROWS_AS(simulate_markov(w4, Model::ASM, std::vector<double>{0.5, 0.5, 0.5, 0.5}, options),
                    InvalidArgument);
    CHECK_THROWS_AS(simulate_markov(w4, Model::ASM, std::vector<double>{1.0}, options), InvalidArgument);
}

TEST_CASE("rng streams") {
    SplittableRng a(42), b(42);
    for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
    SplittableRng base(42);
    CHECK(base.split(0).next() != base.split(1).next());
    SplittableRng u(3);
    for (int i = 0; i < 1000; ++i) {
        const double x = u.uniform();
        CHECK(x >= 0.0);
        CHECK(x < 1.0);
    }
    const std::vector<double> weights{0.0, 1.0, 0.0};
    for (int i = 0; i < 50; ++i) CHECK(u.pick(weights) == 1);
}
