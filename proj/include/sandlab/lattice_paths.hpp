#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "sandlab/bigint.hpp"

namespace sandlab {

enum class DelannoyStep { R, U, D };  // (1,0), (0,1), (1,1); enumeration order R < U < D

class DelannoyPath {
public:
    DelannoyPath() = default;
    explicit DelannoyPath(std::vector<DelannoyStep> steps) : steps_(std::move(steps)) {}

    const std::vector<DelannoyStep>& steps() const { return steps_; }
    std::pair<int, int> end_point() const;
    int count(DelannoyStep step) const;
    bool is_symmetric() const;
    /// Symmetric and not starting with D.
    bool is_differed() const;

    std::string to_string() const;  // "RUUDRRU"
    static DelannoyPath parse(const std::string& text);

    friend auto operator<=>(const DelannoyPath&, const DelannoyPath&) = default;

private:
    std::vector<DelannoyStep> steps_;
};

struct KimberlingStep {
    int dx;  // >= 1
    int dy;  // >= 0

    friend auto operator<=>(const KimberlingStep&, const KimberlingStep&) = default;
};

class KimberlingPath {
public:
    KimberlingPath() = default;
    explicit KimberlingPath(std::vector<KimberlingStep> steps);

    const std::vector<KimberlingStep>& steps() const { return steps_; }
    std::pair<int, int> end_point() const;
    int internal_vertices() const { return steps_.empty() ? 0 : static_cast<int>(steps_.size()) - 1; }

    std::string to_string() const;  // "(1,0)(1,1)"
    static KimberlingPath parse(const std::string& text);

    friend auto operator<=>(const KimberlingPath&, const KimberlingPath&) = default;

private:
    std::vector<KimberlingStep> steps_;
};

/// Symmetric Delannoy paths to (n,n), lexicographic in step codes.
void for_each_delannoy(int n, const std::function<void(const DelannoyPath&)>& visit);
std::vector<DelannoyPath> enumerate_delannoy(int n);
/// |Del[n,k]|: paths to (n,n) with k R-steps.
BigInt count_delannoy(int n, int k);
/// Central Delannoy number |Del[n]|.
BigInt count_delannoy(int n);

/// Differed paths (first step not D) to (n,n) with k R-steps.
void for_each_differed_delannoy(int n, int k, const std::function<void(const DelannoyPath&)>& visit);
std::vector<DelannoyPath> enumerate_differed_delannoy(int n, int k);
/// binom(2k,k) * binom(n+k-1, n-k); 0 when k = 0 < n, 1 at n = k = 0.
BigInt count_differed_delannoy(int n, int k);

/// Kimberling paths to (i,j), lexicographic by (dx,dy) per step.
void for_each_kimberling(int i, int j, const std::function<void(const KimberlingPath&)>& visit);
std::vector<KimberlingPath> enumerate_kimberling(int i, int j);
/// |Kimb[i,j,r]| = binom(i-1, r) * binom(r+j, r).
BigInt count_kimberling(int i, int j, int r);
BigInt count_kimberling_total(int i, int j);

/// Ways to put `balls` identical balls into `boxes` ordered boxes.
BigInt balls_in_boxes_count(int boxes, int balls);
/// 0^{b_1} 1 0^{b_2} 1 ... 1 0^{b_m}
std::string balls_to_word(const std::vector<int>& placement);
std::vector<int> word_to_balls(const std::string& word);

}  // namespace sandlab
