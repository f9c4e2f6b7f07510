#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sandlab/error.hpp"
#include "sandlab/graph.hpp"
#include "sandlab/polynomial.hpp"

namespace sandlab {

enum class Model { ASM, SSM };

std::string to_string(Model model);
Model model_from_string(const std::string& name);

/// Grain counts on the non-sink vertices 1..n. Entries are non-negative.
class Configuration {
public:
    Configuration() = default;
    explicit Configuration(std::vector<int> grains);
    Configuration(std::initializer_list<int> grains);

    std::size_t size() const { return grains_.size(); }
    /// Grain count at vertex v (1-based).
    int at(Vertex v) const;
    const std::vector<int>& grains() const { return grains_; }
    long long total() const;

    /// "1,2,0,1"
    std::string to_string() const;
    static Configuration parse(const std::string& text);

    friend auto operator<=>(const Configuration&, const Configuration&) = default;

private:
    std::vector<int> grains_;
};

struct StabilizationResult {
    Configuration stable_config;
    /// topplings[v - 1] = number of topplings performed at vertex v. For the
    /// SSM every toppling event counts, including ones where no coin succeeds.
    std::vector<long long> topplings;
    long long grains_to_sink = 0;
};

enum class ToppleOrder { LowestFirst, HighestFirst };

/// Source of SSM coin flips; true means "send the grain".
using CoinSource = std::function<bool()>;

inline constexpr std::uint64_t kDefaultSsmGuard = 100'000'000;

bool is_stable(const Configuration& c, const Graph& g);

/// Topples an unstable vertex once (ASM rule).
Configuration topple_asm(const Configuration& c, const Graph& g, Vertex i);

/// Canonical schedule topples the lowest-index unstable vertex first.
StabilizationResult stabilize_asm(const Configuration& c, const Graph& g,
                                  ToppleOrder order = ToppleOrder::LowestFirst);

/// Coin-flipping stabilisation: the lowest-index unstable vertex topples,
/// flipping one coin per neighbour in ascending neighbour order (sink
/// included). Bit-reproducible for a fixed seed.
StabilizationResult stabilize_ssm(const Configuration& c, const Graph& g, double p, std::uint64_t seed,
                                  std::uint64_t max_topplings = kDefaultSsmGuard);

/// Same schedule as stabilize_ssm with an explicit coin source.
StabilizationResult stabilize_ssm(const Configuration& c, const Graph& g, const CoinSource& coin,
                                  std::uint64_t max_topplings = kDefaultSsmGuard);

/// sum(c) + deg(0) - |E|. Defined for any configuration.
long long level(const Configuration& c, const Graph& g);

/// Burning test: sink pre-burnt, v burns once c_v >= #unburnt neighbours.
bool is_recurrent_burning(const Configuration& c, const Graph& g);

/// Exhaustive search for a 0-rooted orientation with in(i) <= c_i (or
/// in(i) == c_i when `exact`), acyclic if requested.
std::optional<Orientation> find_compatible_orientation(const Configuration& c, const GraphPtr& g,
                                                       bool require_acyclic, bool exact,
                                                       const BruteForceCaps& caps = {});

bool is_recurrent_oracle(const Configuration& c, const Graph& g, bool require_acyclic,
                         const BruteForceCaps& caps = {});

/// ASM uses the burning test, SSM the orientation oracle.
bool is_recurrent(const Configuration& c, const Graph& g, Model model, const BruteForceCaps& caps = {});

bool is_minimal_recurrent(const Configuration& c, const Graph& g, Model model,
                          const BruteForceCaps& caps = {});

/// Number of stable configurations, prod_i deg(i).
std::uint64_t stable_space_size(const Graph& g);

/// Visits stable configurations in lexicographic order.
void for_each_stable(const Graph& g, const std::function<void(const Configuration&)>& visit,
                     const BruteForceCaps& caps = {});

/// Recurrent configurations in lexicographic order.
std::vector<Configuration> enumerate_recurrent(const Graph& g, Model model, const BruteForceCaps& caps = {});

/// sum over recurrent c of x^level(c).
Polynomial level_polynomial(const Graph& g, Model model, const BruteForceCaps& caps = {});

struct MarkovOptions {
    double p = 0.5;  // SSM coin bias; ignored for the ASM
    std::uint64_t steps = 0;
    std::uint64_t burn_in = 0;  // steps run but not counted
    std::uint64_t seed = 0;
};

using VisitCounts = std::map<Configuration, std::uint64_t>;

/// Add-a-grain-and-stabilise chain started from the empty configuration.
/// Vertex choice and SSM coins come from independent split streams of one
/// seeded generator.
VisitCounts simulate_markov(const Graph& g, Model model, std::span<const double> mu,
                            const MarkovOptions& options);

}  // namespace sandlab
