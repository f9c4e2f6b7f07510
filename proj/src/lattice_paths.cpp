#include "sandlab/lattice_paths.hpp"

#include <algorithm>
#include <cstdio>

#include "sandlab/error.hpp"

namespace sandlab {

std::pair<int, int> DelannoyPath::end_point() const {
    int x = 0, y = 0;
    for (auto s : steps_) {
        if (s != DelannoyStep::U) ++x;
        if (s != DelannoyStep::R) ++y;
    }
    return {x, y};
}

int DelannoyPath::count(DelannoyStep step) const {
    return static_cast<int>(std::count(steps_.begin(), steps_.end(), step));
}

bool DelannoyPath::is_symmetric() const { return count(DelannoyStep::R) == count(DelannoyStep::U); }

bool DelannoyPath::is_differed() const {
    return is_symmetric() && (steps_.empty() || steps_.front() != DelannoyStep::D);
}

std::string DelannoyPath::to_string() const {
    std::string out;
    for (auto s : steps_) out += s == DelannoyStep::R ? 'R' : s == DelannoyStep::U ? 'U' : 'D';
    return out;
}

DelannoyPath DelannoyPath::parse(const std::string& text) {
    std::vector<DelannoyStep> steps;
    for (char ch : text) {
        switch (ch) {
            case 'R': steps.push_back(DelannoyStep::R); break;
            case 'U': steps.push_back(DelannoyStep::U); break;
            case 'D': steps.push_back(DelannoyStep::D); break;
            default: throw MalformedInput(std::string("bad Delannoy step '") + ch + "'");
        }
    }
    return DelannoyPath(std::move(steps));
}

KimberlingPath::KimberlingPath(std::vector<KimberlingStep> steps) : steps_(std::move(steps)) {
    for (const auto& s : steps_)
        if (s.dx < 1 || s.dy < 0) throw MalformedInput("Kimberling steps need dx >= 1 and dy >= 0");
}

std::pair<int, int> KimberlingPath::end_point() const {
    int x = 0, y = 0;
    for (const auto& s : steps_) {
        x += s.dx;
        y += s.dy;
    }
    return {x, y};
}

std::string KimberlingPath::to_string() const {
    std::string out;
    for (const auto& s : steps_) out += "(" + std::to_string(s.dx) + "," + std::to_string(s.dy) + ")";
    return out;
}

KimberlingPath KimberlingPath::parse(const std::string& text) {
    std::vector<KimberlingStep> steps;
    std::size_t pos = 0;
    while (pos < text.size()) {
        int dx = 0, dy = 0, used = 0;
        if (std::sscanf(text.c_str() + pos, "(%d,%d)%n", &dx, &dy, &used) != 2 || used == 0)
            throw MalformedInput("bad Kimberling path '" + text + "'");
        steps.push_back({dx, dy});
        pos += static_cast<std::size_t>(used);
    }
    return KimberlingPath(std::move(steps));
}

namespace {

void walk_delannoy(int x_left, int y_left, int r_left, bool differed, std::vector<DelannoyStep>& steps,
                   const std::function<void(const DelannoyPath&)>& visit) {
    if (x_left == 0 && y_left == 0) {
        visit(DelannoyPath(steps));
        return;
    }
    // r_left < 0 means the R count is unconstrained
    const auto try_step = [&](DelannoyStep s, int dx, int dy, int dr) {
        if (dx > x_left || dy > y_left) return;
        if (r_left >= 0 && dr > r_left) return;
        if (differed && steps.empty() && s == DelannoyStep::D) return;
        steps.push_back(s);
        walk_delannoy(x_left - dx, y_left - dy, r_left < 0 ? r_left : r_left - dr, differed, steps, visit);
        steps.pop_back();
    };
    try_step(DelannoyStep::R, 1, 0, 1);
    try_step(DelannoyStep::U, 0, 1, 0);
    try_step(DelannoyStep::D, 1, 1, 0);
}

}  // namespace

void for_each_delannoy(int n, const std::function<void(const DelannoyPath&)>& visit) {
    if (n < 0) throw InvalidArgument("Delannoy paths need n >= 0");
    std::vector<DelannoyStep> steps;
    walk_delannoy(n, n, -1, false, steps, visit);
}

std::vector<DelannoyPath> enumerate_delannoy(int n) {
    std::vector<DelannoyPath> out;
    for_each_delannoy(n, [&](const DelannoyPath& p) { out.push_back(p); });
    return out;
}

BigInt count_delannoy(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw InvalidArgument("count_delannoy needs 0 <= k <= n");
    return binomial(n + k, 2 * k) * binomial(2 * k, k);
}

BigInt count_delannoy(int n) {
    if (n < 0) throw InvalidArgument("count_delannoy needs n >= 0");
    BigInt total = 0;
    for (int k = 0; k <= n; ++k) total += count_delannoy(n, k);
    return total;
}

void for_each_differed_delannoy(int n, int k, const std::function<void(const DelannoyPath&)>& visit) {
    if (n < 0 || k < 0 || k > n) throw InvalidArgument("differed Delannoy paths need 0 <= k <= n");
    std::vector<DelannoyStep> steps;
    // paths with exactly k R-steps to (n,n): once R's are spent, U's are fixed too
    walk_delannoy(n, n, k, true, steps, [&](const DelannoyPath& p) {
        if (p.count(DelannoyStep::R) == k) visit(p);
    });
}

std::vector<DelannoyPath> enumerate_differed_delannoy(int n, int k) {
    std::vector<DelannoyPath> out;
    for_each_differed_delannoy(n, k, [&](const DelannoyPath& p) { out.push_back(p); });
    return out;
}

BigInt count_differed_delannoy(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw InvalidArgument("count_differed_delannoy needs 0 <= k <= n");
    if (k == 0) return n == 0 ? 1 : 0;
    return binomial(2 * k, k) * binomial(n + k - 1, n - k);
}

namespace {

void walk_kimberling(int x_left, int y_left, std::vector<KimberlingStep>& steps,
                     const std::function<void(const KimberlingPath&)>& visit) {
    if (x_left == 0) {
        if (y_left == 0) visit(KimberlingPath(steps));
        return;
    }
    for (int dx = 1; dx <= x_left; ++dx) {
        for (int dy = 0; dy <= y_left; ++dy) {
            // the last step must absorb all remaining height
            if (dx == x_left && dy != y_left) continue;
            steps.push_back({dx, dy});
            walk_kimberling(x_left - dx, y_left - dy, steps, visit);
            steps.pop_back();
        }
    }
}

}  // namespace

void for_each_kimberling(int i, int j, const std::function<void(const KimberlingPath&)>& visit) {
    if (i < 1 || j < 0) throw InvalidArgument("Kimberling paths need i >= 1 and j >= 0");
    std::vector<KimberlingStep> steps;
    walk_kimberling(i, j, steps, visit);
}

std::vector<KimberlingPath> enumerate_kimberling(int i, int j) {
    std::vector<KimberlingPath> out;
    for_each_kimberling(i, j, [&](const KimberlingPath& p) { out.push_back(p); });
    return out;
}

BigInt count_kimberling(int i, int j, int r) {
    if (i < 1 || j < 0) throw InvalidArgument("Kimberling counts need i >= 1 and j >= 0");
    if (r < 0 || r > i - 1) throw InvalidArgument("internal vertex count r must lie in 0..i-1");
    return binomial(i - 1, r) * binomial(r + j, r);
}

BigInt count_kimberling_total(int i, int j) {
    BigInt total = 0;
    for (int r = 0; r <= i - 1; ++r) total += count_kimberling(i, j, r);
    return total;
}

BigInt balls_in_boxes_count(int boxes, int balls) {
    if (boxes < 1) throw InvalidArgument("balls in boxes needs at least one box");
    if (balls < 0) throw InvalidArgument("ball count must be non-negative");
    return binomial(boxes + balls - 1, balls);
}

std::string balls_to_word(const std::vector<int>& placement) {
    if (placement.empty()) throw InvalidArgument("balls in boxes needs at least one box");
    std::string word;
    for (std::size_t i = 0; i < placement.size(); ++i) {
        if (placement[i] < 0) throw InvalidArgument("negative ball count");
        if (i) word += '1';
        word.append(static_cast<std::size_t>(placement[i]), '0');
    }
    return word;
}

std::vector<int> word_to_balls(const std::string& word) {
    std::vector<int> placement{0};
    for (char ch : word) {
        if (ch == '0')
            ++placement.back();
        else if (ch == '1')
            placement.push_back(0);
        else
            throw MalformedInput("balls word must be binary");
    }
    return placement;
}

}  // namespace sandlab
