#include <doctest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "sandlab/fan.hpp"

using namespace sandlab;

namespace {

const Configuration kFig8{1, 1, 0, 1, 2, 2, 0, 2, 1};
const char* kFig8Word = "Lu Lu R R Lm Lu R Lm";

}  // namespace

TEST_CASE("fan recurrence") {
    CHECK(fan_is_recurrent(kFig8));
    CHECK_FALSE(fan_is_recurrent({0, 1, 1, 0, 1}));
    CHECK(fan_is_recurrent({0, 2, 0}));
    CHECK_THROWS_AS(fan_is_recurrent({2, 1, 1}), UnstableInput);  // end vertex has degree 2
    CHECK_THROWS_AS(fan_is_recurrent({1, 3, 1}), UnstableInput);
    for (int n = 2; n <= 7; ++n) {
        const Graph f = make_fan(n);
        for_each_stable(f, [&](const Configuration& c) {
            const bool word = fan_is_recurrent(c);
            CHECK(word == oracle::fan_all_pairs(c.grains()));
            CHECK(word == is_recurrent_burning(c, f));
            if (n <= 6) CHECK(word == is_recurrent_oracle(c, f, false));
        });
    }
}

TEST_CASE("word text form") {
    const auto w = PMWord::parse(kFig8Word);
    CHECK(w.to_string() == kFig8Word);
    CHECK(w.size() == 8);
    CHECK(w.marked_count() == 2);
    CHECK(w.unmarked_count() == 3);
    CHECK_THROWS_AS(PMWord::parse("Lu X"), MalformedInput);
    CHECK_THROWS_AS(PMWord::parse("Lm R"), MalformedInput);
    CHECK(PMWord::parse("").size() == 0);
}

TEST_CASE("figure configuration and its word") {
    const auto w = phi_fan(kFig8);
    CHECK(w.to_string() == kFig8Word);
    CHECK(w.marked_count() == level(kFig8, make_fan(9)));
    CHECK(psi_fan(w) == kFig8);
    CHECK_THROWS_AS(phi_fan({0, 1, 1, 0, 1}), NonRecurrentInput);
}

TEST_CASE("level zero maps to unmarked words") {
    for (int n = 2; n <= 7; ++n) {
        const Graph f = make_fan(n);
        for_each_stable(f, [&](const Configuration& c) {
            if (!fan_is_recurrent(c)) return;
            const auto w = phi_fan(c);
            CHECK(is_properly_marked(w.letters()));
            CHECK(w.marked_count() == level(c, f));
            CHECK(psi_fan(w) == c);
        });
    }
}

TEST_CASE("inverse round trip over all words") {
    for (int n = 2; n <= 7; ++n) {
        int words = 0;
        for_each_pm_word(n - 1, [&](const PMWord& w) {
            ++words;
            CHECK(phi_fan(psi_fan(w)) == w);
            const auto c = psi_fan(w);
            CHECK(fan_is_recurrent(c));
        });
        int rec = 0;
        for_each_stable(make_fan(n), [&](const Configuration& c) { rec += fan_is_recurrent(c); });
        CHECK(words == rec);
    }
    // all-R word: the path points right, every interior vertex takes one grain
    std::vector<Letter> rs(5, Letter::R);
    const auto c = psi_fan(PMWord(rs));
    CHECK(phi_fan(c) == PMWord(rs));
}

TEST_CASE("path subgraphs") {
    const auto s = word_to_subgraph(PMWord::parse(kFig8Word));
    CHECK(s.vertices() == std::vector<Vertex>{1, 2, 5, 6, 8, 9});
    CHECK(s.edges() == std::vector<Edge>{{5, 6}, {8, 9}});
    CHECK(subgraph_to_word(s, 9).to_string() == kFig8Word);

    const auto all_lu = word_to_subgraph(PMWord::parse("Lu Lu Lu Lu"));
    CHECK(all_lu.vertices() == std::vector<Vertex>{1, 2, 3, 4, 5});
    CHECK(all_lu.edges().empty());
    CHECK(connected_components(all_lu).size() == 5);

    const Subgraph missing_end(make_path(4), {1, 2}, {Edge{1, 2}});
    CHECK_THROWS_AS(subgraph_to_word(missing_end, 4), InvalidArgument);

    for (int len = 1; len <= 6; ++len) {
        std::set<Subgraph> images;
        for_each_pm_word(len, [&](const PMWord& w) {
            const auto t = word_to_subgraph(w);
            CHECK(subgraph_to_word(t, len + 1) == w);
            CHECK(static_cast<int>(t.edges().size()) == w.marked_count());
            CHECK(static_cast<int>(connected_components(t).size()) == w.unmarked_count() + 1);
            images.insert(t);
        });
        long long with_end = 0;
        for_each_subgraph(make_path(len + 1), [&](const Subgraph& t) { with_end += t.contains(len + 1); });
        CHECK(static_cast<long long>(images.size()) == with_end);
    }
}

TEST_CASE("counting formulas") {
    CHECK(count_pm_words(4, 2, 1) == 3);
    CHECK(count_rec_fan(7, 1) == 112);
    for (int n = 1; n <= 10; ++n) CHECK(count_rec_fan(n, n - 1) == 1);
    CHECK_THROWS_AS(count_pm_words(4, 3, 1), InvalidArgument);
    CHECK_THROWS_AS(count_rec_fan(4, 4), InvalidArgument);

    for (int n = 2; n <= 7; ++n) {
        std::map<std::pair<int, int>, long long> by_kr;
        for_each_pm_word(n - 1, [&](const PMWord& w) { ++by_kr[{w.marked_count(), w.unmarked_count()}]; });
        for (int k = 0; k <= n - 1; ++k)
            for (int r = 0; k + r <= n - 1; ++r) CHECK(count_pm_words(n, k, r) == by_kr[{k, r}]);

        const auto levels = level_polynomial(make_fan(n), Model::ASM);
        for (int k = 0; k <= n - 1; ++k) CHECK(levels.coefficient(k) == count_rec_fan(n, k));
    }
}

TEST_CASE("enumeration order") {
    std::vector<std::string> words;
    for_each_pm_word(2, [&](const PMWord& w) { words.push_back(w.to_string()); });
    CHECK(words == std::vector<std::string>{"Lu Lu", "Lu Lm", "Lu R", "Lm Lu", "Lm Lm", "R Lu", "R Lm", "R R"});
}
