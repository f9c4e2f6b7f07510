#include "sandlab/fan.hpp"

#include <algorithm>
#include <sstream>

namespace sandlab {

std::string to_string(Letter letter) {
    switch (letter) {
        case Letter::Lu: return "Lu";
        case Letter::Lm: return "Lm";
        case Letter::R: return "R";
    }
    return "?";
}

Letter letter_from_string(const std::string& token) {
    if (token == "Lu") return Letter::Lu;
    if (token == "Lm") return Letter::Lm;
    if (token == "R") return Letter::R;
    throw MalformedInput("unknown letter '" + token + "' (expected Lu, Lm or R)");
}

bool is_properly_marked(const std::vector<Letter>& letters) {
    for (std::size_t i = 0; i + 1 < letters.size(); ++i)
        if (letters[i] == Letter::Lm && letters[i + 1] == Letter::R) return false;
    return true;
}

PMWord::PMWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
    if (!is_properly_marked(letters_)) throw MalformedInput("word has a marked L followed by R");
}

int PMWord::marked_count() const {
    return static_cast<int>(std::count(letters_.begin(), letters_.end(), Letter::Lm));
}

int PMWord::unmarked_count() const {
    return static_cast<int>(std::count(letters_.begin(), letters_.end(), Letter::Lu));
}

std::string PMWord::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) out += ' ';
        out += sandlab::to_string(letters_[i]);
    }
    return out;
}

PMWord PMWord::parse(const std::string& text) {
    std::vector<Letter> letters;
    std::istringstream stream(text);
    std::string token;
    while (stream >> token) letters.push_back(letter_from_string(token));
    return PMWord(std::move(letters));
}

namespace {

void require_fan_word(const Configuration& c) {
    const auto n = c.size();
    if (n < 2) throw InvalidArgument("fan words need length >= 2");
    for (std::size_t i = 0; i < n; ++i) {
        const int cap = (i == 0 || i + 1 == n) ? 1 : 2;
        if (c.grains()[i] > cap) throw UnstableInput("fan configuration " + c.to_string() + " is not stable");
    }
}

}  // namespace

bool fan_is_recurrent(const Configuration& c) {
    require_fan_word(c);
    bool seen_zero = false;
    bool two_since_zero = false;
    for (int g : c.grains()) {
        if (g == 0) {
            if (seen_zero && !two_since_zero) return false;
            seen_zero = true;
            two_since_zero = false;
        } else if (g == 2) {
            two_since_zero = true;
        }
    }
    return true;
}

PMWord phi_fan(const Configuration& c) {
    require_fan_word(c);
    if (!fan_is_recurrent(c)) throw NonRecurrentInput("configuration " + c.to_string() + " is not recurrent on F_" + std::to_string(c.size()));
    const int n = static_cast<int>(c.size());
    std::vector<bool> leftward(static_cast<std::size_t>(n), false);  // leftward[i]: edge {i, i+1} is i <- i+1
    std::vector<bool> marked(static_cast<std::size_t>(n) + 1, false);
    bool incoming_left = false;  // edge {i-1, i} directed i-1 -> i; edge {0,1} is 0 <- 1
    for (Vertex i = 1; i < n; ++i) {
        const int ci = c.at(i);
        bool left = false;
        if (!incoming_left) {
            left = ci != 0;
            if (ci == 2) marked[static_cast<std::size_t>(i)] = true;
        } else {
            // recurrence rules out c_i = 0 here
            left = ci == 2;
        }
        leftward[static_cast<std::size_t>(i)] = left;
        incoming_left = !left;
    }
    if (n >= 2 && leftward[static_cast<std::size_t>(n - 1)] && c.at(n) == 1) marked[static_cast<std::size_t>(n)] = true;

    std::vector<Letter> letters;
    for (Vertex i = 1; i < n; ++i) {
        if (!leftward[static_cast<std::size_t>(i)])
            letters.push_back(Letter::R);
        else
            letters.push_back(marked[static_cast<std::size_t>(i + 1)] ? Letter::Lm : Letter::Lu);
    }
    return PMWord(std::move(letters));
}

Orientation path_orientation(const PMWord& w) {
    const int n = static_cast<int>(w.size()) + 1;
    auto graph = std::make_shared<const Graph>(make_path(n));
    std::vector<std::pair<Vertex, Vertex>> arcs;
    for (int i = 1; i < n; ++i) {
        if (w.letters()[static_cast<std::size_t>(i - 1)] == Letter::R)
            arcs.emplace_back(i, i + 1);
        else
            arcs.emplace_back(i + 1, i);
    }
    return Orientation::from_arcs(std::move(graph), arcs);
}

Configuration psi_fan(const PMWord& w) {
    if (w.size() < 1) throw InvalidArgument("fan words need length >= 1");
    if (!is_properly_marked(w.letters())) throw MalformedInput("word is not properly marked");
    const auto orientation = path_orientation(w);
    const int n = static_cast<int>(w.size()) + 1;
    std::vector<int> grains(static_cast<std::size_t>(n));
    for (Vertex v = 1; v <= n; ++v) grains[static_cast<std::size_t>(v - 1)] = orientation.in_degree(v);
    for (int j = 1; j < n; ++j)
        if (w.letters()[static_cast<std::size_t>(j - 1)] == Letter::Lm) ++grains[static_cast<std::size_t>(j)];
    return Configuration(std::move(grains));
}

Subgraph word_to_subgraph(const PMWord& w) {
    const int n = static_cast<int>(w.size()) + 1;
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) {
        const Letter letter = w.letters()[static_cast<std::size_t>(i - 1)];
        if (letter != Letter::R) vertices.push_back(i);
        if (letter == Letter::Lm) edges.push_back({i, i + 1});
    }
    vertices.push_back(n);
    return Subgraph(make_path(n), std::move(vertices), std::move(edges));
}

PMWord subgraph_to_word(const Subgraph& s, int n) {
    if (n < 1) throw InvalidArgument("path needs n >= 1");
    if (!s.contains(n)) throw InvalidArgument("subgraph must contain the right-most vertex " + std::to_string(n));
    if (s.vertices().front() < 1 || s.vertices().back() > n)
        throw InvalidArgument("subgraph vertices outside 1.." + std::to_string(n));
    std::vector<Letter> letters;
    for (int i = 1; i < n; ++i) {
        if (s.contains(Edge{i, i + 1}))
            letters.push_back(Letter::Lm);
        else if (s.contains(i))
            letters.push_back(Letter::Lu);
        else
            letters.push_back(Letter::R);
    }
    for (const auto& e : s.edges())
        if (e.v != e.u + 1 || e.v > n) throw InvalidArgument("subgraph edge is not on the path");
    return PMWord(std::move(letters));
}

BigInt count_pm_words(int n, int k, int r) {
    if (n < 1 || k < 0 || r < 0 || k + r > n - 1)
        throw InvalidArgument("count_pm_words needs n >= 1, k, r >= 0, k + r <= n - 1");
    return binomial(n - k - 1, r) * binomial(r + k, r);
}

BigInt count_rec_fan(int n, int k) {
    if (n < 1 || k < 0 || k > n - 1) throw InvalidArgument("count_rec_fan needs n >= 1 and 0 <= k <= n - 1");
    BigInt total = 0;
    for (int r = 0; r <= n - k - 1; ++r) total += count_pm_words(n, k, r);
    return total;
}

void for_each_pm_word(int length, const std::function<void(const PMWord&)>& visit) {
    if (length < 0 || length > 20) throw InvalidArgument("word length must lie in 0..20");
    std::vector<Letter> letters;
    const std::function<void()> extend = [&] {
        if (static_cast<int>(letters.size()) == length) {
            visit(PMWord(letters));
            return;
        }
        for (Letter next : {Letter::Lu, Letter::Lm, Letter::R}) {
            if (next == Letter::R && !letters.empty() && letters.back() == Letter::Lm) continue;
            letters.push_back(next);
            extend();
            letters.pop_back();
        }
    };
    extend();
}

}  // namespace sandlab
